from pathlib import Path
from typing import Optional, Union


class RetipyError(Exception):
    """Base class for all retipy exceptions."""
    pass

class InvalidInputError(RetipyError, ValueError):
    """Raised when an image, histogram or grid cannot be processed as given."""
    pass

class InvalidIndexError(RetipyError, ValueError):
    """Raised when an entropic index (q or kappa) is outside its domain."""
    pass

class InvalidParamsError(RetipyError, ValueError):
    """Raised when Retinex parameters violate their invariants."""
    pass

class DegenerateConditionalError(RetipyError, ArithmeticError):
    """Raised when a conditional entropy would divide by a vanishing term."""
    pass

class UnknownEntropyKindError(RetipyError, KeyError):
    """Raised when no entropy kernel is registered under the requested name."""
    pass

class ImageIOError(RetipyError, OSError):
    """
    Raised when an image file cannot be read or written.
    The offending path is kept on `.path` and repeated in the message.
    """
    def __init__(self, path: Union[str, Path, None], reason: str):
        self.path: Optional[Path] = Path(path) if path is not None else None
        self.reason = reason
        super().__init__(f"{self.path}: {reason}")

class UnsupportedFormatError(ImageIOError):
    """Raised for files that are neither PNG nor binary PPM (P6)."""
    pass

class UnsupportedDepthError(ImageIOError):
    """Raised for images with more than 8 bits per channel."""
    pass
