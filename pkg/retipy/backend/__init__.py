from .dispatch import (
    EntropyDispatcher,
    available_entropies,
    dispatch_entropy,
    get_entropy,
    register_entropy,
)
from .errors import (
    DegenerateConditionalError,
    ImageIOError,
    InvalidIndexError,
    InvalidInputError,
    InvalidParamsError,
    RetipyError,
    UnknownEntropyKindError,
    UnsupportedDepthError,
    UnsupportedFormatError,
)
from .reference import ReferenceBackend
from .types import EntropyFamily, EntropyKind, RetinexLevel

__all__ = [
    "EntropyDispatcher",
    "available_entropies",
    "dispatch_entropy",
    "get_entropy",
    "register_entropy",
    "RetipyError",
    "InvalidInputError",
    "InvalidIndexError",
    "InvalidParamsError",
    "DegenerateConditionalError",
    "UnknownEntropyKindError",
    "ImageIOError",
    "UnsupportedFormatError",
    "UnsupportedDepthError",
    "ReferenceBackend",
    "EntropyFamily",
    "EntropyKind",
    "RetinexLevel",
]
