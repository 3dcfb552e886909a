import logging
from typing import Any, Callable, List, Optional, Tuple

from ..profiler import ProfileContext

logger = logging.getLogger("retipy.runtime.pipeline")

Step = Callable[[Any], Any]


class Pipeline:
    """
    A linear execution pipeline of named stages. Each stage receives the
    previous stage's output.
    """
    def __init__(self, steps: Optional[List[Tuple[str, Step]]] = None):
        self.steps: List[Tuple[str, Step]] = list(steps or [])

    def add_step(self, name: str, step: Step) -> "Pipeline":
        """
        Appends a stage and returns the pipeline for chaining.
        """
        self.steps.append((name, step))
        return self

    @property
    def names(self) -> List[str]:
        return [name for name, _ in self.steps]

    def run(self, data: Any) -> Any:
        """
        Executes the stages in order on the given data.
        """
        result = data
        for name, step in self.steps:
            logger.debug(f"Running stage '{name}'")
            with ProfileContext(name):
                result = step(result)
        return result

    def __len__(self) -> int:
        return len(self.steps)

    def __repr__(self) -> str:
        return f"Pipeline(steps={self.names})"
