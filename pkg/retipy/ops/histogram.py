"""
Grey-tone histograms and probability distributions.

Grey tones use ITU-R BT.601 luminance, round(0.299 R + 0.587 G + 0.114 B),
rounded half away from zero. The weights are applied in integer
thousandths so the rounding is exact on every platform.
"""
import logging
from typing import Any, Optional, Tuple

import numpy as np

from ..backend.errors import InvalidInputError
from ..image import ImageRgb8

logger = logging.getLogger("retipy.ops.histogram")

TONES = 256
SUM_TOLERANCE = 1e-12

# BT.601 weights in thousandths
_LUMA_WEIGHTS = np.array([299, 587, 114], dtype=np.int64)


class Histogram256:
    """
    Counts of the 256 grey tones of an image.
    """
    __slots__ = ("_counts",)

    def __init__(self, counts: Any):
        array = np.asarray(counts)
        if array.shape != (TONES,):
            raise InvalidInputError(f"Histogram needs {TONES} bins, got shape {array.shape}")
        if not np.issubdtype(array.dtype, np.integer):
            raise InvalidInputError(f"Histogram counts must be integers, got {array.dtype}")
        if np.any(array < 0):
            raise InvalidInputError("Histogram counts must be non-negative")
        array = array.astype(np.int64)
        array.setflags(write=False)
        self._counts = array

    @property
    def counts(self) -> np.ndarray:
        return self._counts

    @property
    def total(self) -> int:
        return int(self._counts.sum())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Histogram256):
            return NotImplemented
        return bool(np.array_equal(self._counts, other._counts))

    def __repr__(self) -> str:
        return f"Histogram256(total={self.total})"


class ProbDist:
    """
    A normalized frequency vector; p[i] is the frequency of grey tone i.

    Histogram-derived distributions have 256 bins. Other lengths are
    accepted so the entropy functions also work on flattened joints and
    small hand-made distributions.
    """
    __slots__ = ("_p",)

    def __init__(self, p: Any):
        array = np.array(p, dtype=np.float64)
        if array.ndim != 1 or array.size < 1:
            raise InvalidInputError(f"Distribution must be a non-empty vector, got shape {array.shape}")
        _check_probabilities(array)
        array.setflags(write=False)
        self._p = array

    @classmethod
    def normalized(cls, weights: Any) -> "ProbDist":
        """
        Builds a distribution from non-negative weights with a positive sum.
        """
        array = np.asarray(weights, dtype=np.float64)
        total = array.sum()
        if not total > 0:
            raise InvalidInputError("Weights must have a positive sum")
        return cls(array / total)

    @classmethod
    def uniform(cls, n: int = TONES) -> "ProbDist":
        return cls(np.full(n, 1.0 / n))

    @classmethod
    def delta(cls, index: int, n: int = TONES) -> "ProbDist":
        p = np.zeros(n)
        p[index] = 1.0
        return cls(p)

    @property
    def p(self) -> np.ndarray:
        return self._p

    @property
    def size(self) -> int:
        return int(self._p.size)

    def nonzero(self) -> np.ndarray:
        """The strictly positive entries; zero bins contribute nothing to any entropy."""
        return self._p[self._p > 0]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProbDist):
            return NotImplemented
        return bool(np.array_equal(self._p, other._p))

    def __repr__(self) -> str:
        return f"ProbDist(bins={self.size}, support={int(np.count_nonzero(self._p))})"


class JointDist:
    """
    Joint grey-tone distribution of two images: p[s, t] is the fraction of
    pixel positions where image A has tone s and image B has tone t.

    When built from images the integer counts are kept so the marginals
    follow exactly the same counting path as the single-image histograms.
    """
    __slots__ = ("_p", "_counts")

    def __init__(self, p: Any, counts: Optional[np.ndarray] = None):
        array = np.array(p, dtype=np.float64)
        if array.ndim != 2 or array.size < 1:
            raise InvalidInputError(f"Joint distribution must be a non-empty matrix, got shape {array.shape}")
        _check_probabilities(array)
        array.setflags(write=False)
        self._p = array
        self._counts = counts

    @classmethod
    def from_counts(cls, counts: np.ndarray) -> "JointDist":
        counts = np.asarray(counts, dtype=np.int64)
        total = int(counts.sum())
        if total <= 0:
            raise InvalidInputError("Joint counts must have a positive total")
        frozen = counts.copy()
        frozen.setflags(write=False)
        return cls(counts / total, counts=frozen)

    @classmethod
    def product(cls, a: ProbDist, b: ProbDist) -> "JointDist":
        """The joint distribution of two independent subsystems."""
        return cls(np.outer(a.p, b.p))

    @property
    def p(self) -> np.ndarray:
        return self._p

    @property
    def counts(self) -> Optional[np.ndarray]:
        return self._counts

    @property
    def shape(self) -> Tuple[int, int]:
        return (int(self._p.shape[0]), int(self._p.shape[1]))

    def flatten(self) -> ProbDist:
        """The joint system (A, B) seen as a single distribution."""
        return ProbDist(self._p.ravel())

    def __repr__(self) -> str:
        return f"JointDist(shape={self.shape})"


def _check_probabilities(array: np.ndarray) -> None:
    if not np.all(np.isfinite(array)):
        raise InvalidInputError("Probabilities must be finite")
    if np.any(array < 0):
        raise InvalidInputError("Probabilities must be non-negative")
    total = float(array.sum())
    if abs(total - 1.0) > SUM_TOLERANCE:
        raise InvalidInputError(f"Probabilities must sum to 1, got {total!r}")


def grey_tones(image: ImageRgb8) -> np.ndarray:
    """
    Per-pixel grey tones of an image as a (height, width) uint8 array.
    """
    weighted = image.data.astype(np.int64) @ _LUMA_WEIGHTS
    # (x + 500) // 1000 rounds half away from zero for x >= 0
    tones = np.clip((weighted + 500) // 1000, 0, TONES - 1)
    return tones.astype(np.uint8)


def grey_histogram(image: ImageRgb8) -> Histogram256:
    """
    Counts how many pixels fall on each of the 256 grey tones.
    """
    if image.width < 1 or image.height < 1:
        raise InvalidInputError("Cannot histogram an empty image")
    counts = np.bincount(grey_tones(image).ravel(), minlength=TONES)
    return Histogram256(counts)


def to_distribution(h: Histogram256) -> ProbDist:
    """
    Normalizes tone counts into frequencies p_i = counts_i / total.
    """
    total = h.total
    if total <= 0:
        raise InvalidInputError("Cannot normalize a histogram with zero total")
    return ProbDist(h.counts / total)


def image_distribution(image: ImageRgb8) -> ProbDist:
    """Shorthand for to_distribution(grey_histogram(image))."""
    return to_distribution(grey_histogram(image))


def joint_histogram(a: ImageRgb8, b: ImageRgb8) -> JointDist:
    """
    Joint grey-tone distribution of two images with identical dimensions.
    """
    if (a.width, a.height) != (b.width, b.height):
        raise InvalidInputError(
            f"Joint histogram needs equal dimensions, got {a.width}x{a.height} and {b.width}x{b.height}"
        )
    index = grey_tones(a).astype(np.int64).ravel() * TONES + grey_tones(b).ravel()
    counts = np.bincount(index, minlength=TONES * TONES).reshape(TONES, TONES)
    logger.debug(f"Joint histogram over {a.pixel_count} pixels, {int(np.count_nonzero(counts))} occupied cells")
    return JointDist.from_counts(counts)


def marginals(j: JointDist) -> Tuple[ProbDist, ProbDist]:
    """
    Row sums (image A) and column sums (image B) of a joint distribution.
    """
    if j.counts is not None:
        total = int(j.counts.sum())
        return ProbDist(j.counts.sum(axis=1) / total), ProbDist(j.counts.sum(axis=0) / total)
    return ProbDist(j.p.sum(axis=1)), ProbDist(j.p.sum(axis=0))
