import math
from fractions import Fraction
from typing import List, Sequence

import numpy as np


class ReferenceBackend:
    """
    The 'Gold Standard' reference implementation for retipy kernels.

    Rules:
    1. Correctness is the ONLY goal.
    2. Speed does not matter.
    3. Formulas are written exactly as printed, term by term, with plain
       Python and the `math` module where possible.
    4. Used to validate the vectorized kernels in `retipy.ops`.
    """

    @staticmethod
    def shannon(p: Sequence[float]) -> float:
        total = 0.0
        for pi in p:
            if pi > 0:
                total -= pi * math.log(pi)
        return total

    @staticmethod
    def tsallis(p: Sequence[float], q: float) -> float:
        total = 0.0
        for pi in p:
            if pi > 0:
                total += pi ** q
        return (1.0 - total) / (q - 1.0)

    @staticmethod
    def kaniadakis(p: Sequence[float], kappa: float) -> float:
        total = 0.0
        for pi in p:
            if pi > 0:
                total += (pi ** (1.0 + kappa) - pi ** (1.0 - kappa)) / (2.0 * kappa)
        return -total

    @staticmethod
    def z_functional(p: Sequence[float], kappa: float) -> float:
        total = 0.0
        for pi in p:
            if pi > 0:
                total += (pi ** (1.0 + kappa) + pi ** (1.0 - kappa)) / 2.0
        return total

    @staticmethod
    def _flatten(joint: Sequence[Sequence[float]]) -> List[float]:
        return [float(value) for row in joint for value in row]

    @staticmethod
    def _columns(joint: Sequence[Sequence[float]]) -> List[float]:
        return [sum(float(row[t]) for row in joint) for t in range(len(joint[0]))]

    @staticmethod
    def _rows(joint: Sequence[Sequence[float]]) -> List[float]:
        return [sum(float(value) for value in row) for row in joint]

    @staticmethod
    def tsallis_conditional(joint: Sequence[Sequence[float]], q: float) -> float:
        t_ab = ReferenceBackend.tsallis(ReferenceBackend._flatten(joint), q)
        t_b = ReferenceBackend.tsallis(ReferenceBackend._columns(joint), q)
        return (t_ab - t_b) / (1.0 + (1.0 - q) * t_b)

    @staticmethod
    def kaniadakis_conditional(joint: Sequence[Sequence[float]], kappa: float) -> float:
        a = ReferenceBackend._rows(joint)
        b = ReferenceBackend._columns(joint)
        k_ab = ReferenceBackend.kaniadakis(ReferenceBackend._flatten(joint), kappa)
        k_b = ReferenceBackend.kaniadakis(b, kappa)
        return (k_ab - k_b * ReferenceBackend.z_functional(a, kappa)) / ReferenceBackend.z_functional(b, kappa)

    @staticmethod
    def kaniadakis_mutual(joint: Sequence[Sequence[float]], kappa: float) -> float:
        a = ReferenceBackend._rows(joint)
        return ReferenceBackend.kaniadakis(a, kappa) - ReferenceBackend.kaniadakis_conditional(joint, kappa)

    @staticmethod
    def gaussian_kernel_2d(sigma: float) -> np.ndarray:
        radius = int(math.ceil(3.0 * sigma))
        weights = [math.exp(-(x * x) / (2.0 * sigma * sigma)) for x in range(-radius, radius + 1)]
        total = sum(weights)
        line = np.array([w / total for w in weights])
        return np.outer(line, line)

    @staticmethod
    def convolve_2d(channel: np.ndarray, sigma: float) -> np.ndarray:
        """
        Brute-force 2-D convolution with clamp-to-edge borders: every output
        pixel is the full 2-D kernel applied to the edge-padded image.
        """
        kernel = ReferenceBackend.gaussian_kernel_2d(sigma)
        radius = kernel.shape[0] // 2
        padded = np.pad(np.asarray(channel, dtype=np.float64), radius, mode="edge")
        height, width = np.shape(channel)
        out = np.zeros((height, width))
        for dy in range(kernel.shape[0]):
            for dx in range(kernel.shape[1]):
                out += kernel[dy, dx] * padded[dy:dy + height, dx:dx + width]
        return out

    @staticmethod
    def grey_tone(r: int, g: int, b: int) -> int:
        exact = Fraction(299, 1000) * r + Fraction(587, 1000) * g + Fraction(114, 1000) * b
        value = math.floor(exact + Fraction(1, 2))
        return min(255, max(0, value))
