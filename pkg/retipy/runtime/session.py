import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from pydantic import BaseModel, ConfigDict, Field

from ..backend.errors import InvalidInputError
from ..profiler import disable_profiling, enable_profiling
from ..schema import validated

logger = logging.getLogger("retipy.runtime.session")

T = TypeVar("T")
R = TypeVar("R")

def _default_workers() -> int:
    return max(1, min(4, os.cpu_count() or 1))

class RuntimeConfig(BaseModel):
    """
    Process-wide runtime settings.
    """
    model_config = ConfigDict(frozen=True)

    workers: int = Field(default_factory=_default_workers, ge=1)
    profile: bool = False


class Session:
    """
    Holds the runtime configuration shared by the Retinex and sweep stages.
    """
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(Session, cls).__new__(cls)
            cls._instance._initialized = False
        return cls._instance

    def __init__(self):
        if self._initialized:
            return
        self._config = RuntimeConfig()
        self._initialized = True

    @property
    def config(self) -> RuntimeConfig:
        return self._config

    def configure(self, **overrides) -> RuntimeConfig:
        """
        Replaces the configured values given as keyword arguments.
        Unknown keys or invalid values raise InvalidInputError.
        """
        unknown = set(overrides) - set(RuntimeConfig.model_fields)
        if unknown:
            raise InvalidInputError(f"Unknown runtime settings: {sorted(unknown)}")
        merged = {**self._config.model_dump(), **overrides}
        self._config = validated(RuntimeConfig, InvalidInputError, **merged)
        if self._config.profile:
            enable_profiling()
        else:
            disable_profiling()
        logger.debug(f"Runtime configured: {self._config}")
        return self._config

    def reset(self) -> RuntimeConfig:
        self._config = RuntimeConfig()
        disable_profiling()
        return self._config

# Global session instance
_session = Session()

def get_session() -> Session:
    return _session

def configure(**overrides) -> RuntimeConfig:
    return _session.configure(**overrides)


def parallel_map(fn: Callable[[T], R], items: Iterable[T], workers: Optional[int] = None) -> List[R]:
    """
    Applies `fn` to every item and returns the results in input order.

    Work runs on a thread pool sized by the session (or `workers`). Callers
    reduce the returned list themselves, so results do not depend on the
    number of workers.
    """
    items = list(items)
    count = workers if workers is not None else _session.config.workers
    if count <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(count, len(items))) as pool:
        return list(pool.map(fn, items))
