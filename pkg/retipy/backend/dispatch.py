import logging
from typing import Any, Callable, Dict, List, Union

from .errors import UnknownEntropyKindError
from .types import EntropyFamily, EntropyKind

logger = logging.getLogger("retipy.backend.dispatch")

EntropyKernel = Callable[[Any, Any], float]

class EntropyDispatcher:
    """
    Registry of entropy kernels.
    Maps an entropy family -> kernel(distribution, index) -> float.
    """
    _registry: Dict[EntropyFamily, EntropyKernel] = {}

    @classmethod
    def register(cls, family: Union[str, EntropyFamily]):
        """
        Decorator to register the kernel that evaluates one entropy family.

        Usage:
            @EntropyDispatcher.register("tsallis")
            def _tsallis_kernel(p, q): ...
        """
        key = EntropyFamily(family)

        def decorator(func: EntropyKernel) -> EntropyKernel:
            if key in cls._registry:
                logger.warning(f"Overwriting entropy kernel for {key.value}")
            cls._registry[key] = func
            return func
        return decorator

    @classmethod
    def get_kernel(cls, family: Union[str, EntropyFamily]) -> EntropyKernel:
        """
        Retrieves the kernel for the given family.
        Raises UnknownEntropyKindError if nothing is registered.
        """
        try:
            key = EntropyFamily(family)
        except ValueError:
            raise UnknownEntropyKindError(f"Unknown entropy family '{family}'") from None
        kernel = cls._registry.get(key)
        if kernel is None:
            raise UnknownEntropyKindError(f"No kernel registered for '{key.value}'")
        return kernel

    @classmethod
    def dispatch(cls, kind: EntropyKind, distribution: Any) -> float:
        """
        Evaluates `kind` on `distribution` with the registered kernel.
        """
        kernel = cls.get_kernel(kind.family)
        logger.debug(f"Dispatching {kind.label}")
        return kernel(distribution, kind.index)

    @classmethod
    def available(cls) -> List[str]:
        return sorted(family.value for family in cls._registry)

# Alias for easy access
register_entropy = EntropyDispatcher.register
get_entropy = EntropyDispatcher.get_kernel
dispatch_entropy = EntropyDispatcher.dispatch
available_entropies = EntropyDispatcher.available
