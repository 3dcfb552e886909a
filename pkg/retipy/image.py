import logging
from typing import Any, Tuple

import numpy as np

from .backend.errors import InvalidInputError

logger = logging.getLogger("retipy.image")

class ImageRgb8:
    """
    An 8-bit RGB image stored as a read-only (height, width, 3) uint8 array.

    Rows are stored top to bottom and pixels left to right, so
    `data.tobytes()` is the row-major RGB triple layout of the raw image.
    """
    __slots__ = ("_data",)

    def __init__(self, data: Any):
        array = np.asarray(data)
        if array.ndim == 2:
            # Greyscale input: one code path, luminance of (v, v, v) is v.
            array = np.repeat(array[:, :, np.newaxis], 3, axis=2)
        if array.ndim != 3 or array.shape[2] != 3:
            raise InvalidInputError(f"Expected an (height, width, 3) array, got shape {array.shape}")
        if array.shape[0] < 1 or array.shape[1] < 1:
            raise InvalidInputError(f"Image must be at least 1x1, got {array.shape[1]}x{array.shape[0]}")
        if array.dtype != np.uint8:
            if not np.issubdtype(array.dtype, np.integer) or array.min() < 0 or array.max() > 255:
                raise InvalidInputError(f"Pixel values must be integers in [0, 255], got dtype {array.dtype}")
            array = array.astype(np.uint8)
        array = np.ascontiguousarray(array).copy()
        array.setflags(write=False)
        self._data = array

    @classmethod
    def from_bytes(cls, width: int, height: int, payload: bytes) -> "ImageRgb8":
        """
        Builds an image from row-major RGB triples.
        """
        if width < 1 or height < 1:
            raise InvalidInputError(f"Image must be at least 1x1, got {width}x{height}")
        expected = width * height * 3
        if len(payload) != expected:
            raise InvalidInputError(f"Expected {expected} bytes for a {width}x{height} image, got {len(payload)}")
        array = np.frombuffer(payload, dtype=np.uint8).reshape(height, width, 3)
        return cls(array)

    @classmethod
    def filled(cls, width: int, height: int, rgb: Tuple[int, int, int]) -> "ImageRgb8":
        return cls(np.broadcast_to(np.asarray(rgb, dtype=np.uint8), (height, width, 3)))

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def width(self) -> int:
        return int(self._data.shape[1])

    @property
    def height(self) -> int:
        return int(self._data.shape[0])

    @property
    def pixel_count(self) -> int:
        return self.width * self.height

    def to_bytes(self) -> bytes:
        return self._data.tobytes()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ImageRgb8):
            return NotImplemented
        return self._data.shape == other._data.shape and bool(np.array_equal(self._data, other._data))

    def __hash__(self) -> int:
        return hash((self._data.shape, self._data.tobytes()))

    def __repr__(self) -> str:
        return f"ImageRgb8(width={self.width}, height={self.height})"


class ImageFloat:
    """
    Real-valued RGB working image used by the log-domain Retinex stages.
    Values are float64 and must stay finite.
    """
    __slots__ = ("_data",)

    def __init__(self, data: Any):
        array = np.asarray(data, dtype=np.float64)
        if array.ndim != 3 or array.shape[2] != 3:
            raise InvalidInputError(f"Expected an (height, width, 3) array, got shape {array.shape}")
        if not np.all(np.isfinite(array)):
            raise InvalidInputError("Working image contains NaN or infinite values")
        self._data = array

    @classmethod
    def from_rgb8(cls, image: ImageRgb8) -> "ImageFloat":
        return cls(image.data.astype(np.float64))

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def width(self) -> int:
        return int(self._data.shape[1])

    @property
    def height(self) -> int:
        return int(self._data.shape[0])

    def channel(self, index: int) -> np.ndarray:
        return self._data[:, :, index]

    def __repr__(self) -> str:
        return f"ImageFloat(width={self.width}, height={self.height})"
