"""
Multi-Scale Retinex with Colour Restoration (MSRCR) with the GIMP Retinex
parameter surface.

Stages:
    1. per channel, the mean over the surround widths of
       ln(I + 1) - ln(G_sigma * I + 1)
    2. colour restoration ln(alpha I_c + 1) - ln(I_R + I_G + I_B + 3)
    3. product of the two
    4. linear stretch of [mean - D std, mean + D std] onto [0, 255],
       statistics pooled over all three channels
"""
import logging
import math
from typing import List, Union

import numpy as np
from scipy import ndimage as ndi

from ..backend.errors import InvalidParamsError
from ..backend.types import RetinexLevel
from ..image import ImageFloat, ImageRgb8
from ..profiler import profile_operation
from ..runtime import Pipeline, parallel_map
from ..schema import MAX_SCALE_DIVISION, MIN_SCALE, RetinexParams

logger = logging.getLogger("retipy.ops.retinex")

MIN_SIGMA = 0.5
TRUNCATE = 3.0
ALPHA = 128.0
DEGENERATE_STD = 1e-9
DEGENERATE_VALUE = 128


def scale_distribution(level: Union[RetinexLevel, str], scale: int, n: int) -> List[float]:
    """
    Surround widths for the given level.

    uniform: 2 + i * scale / n
    low:     2 + exp(i * ln(scale - 2) / n)
    high:    scale - exp(i * ln(scale - 2) / n)

    One scale gives [scale / 2]; two scales give [scale / 2, scale].
    The uniform widths are not capped: the last one is
    2 + (n - 1) * scale / n, which exceeds scale when scale < 2 * n.
    """
    level = RetinexLevel(level)
    if int(scale) != scale or scale < MIN_SCALE:
        raise InvalidParamsError(f"scale must be an integer >= {MIN_SCALE}, got {scale}")
    if int(n) != n or not 1 <= n <= MAX_SCALE_DIVISION:
        raise InvalidParamsError(f"scale division must be in [1, {MAX_SCALE_DIVISION}], got {n}")
    scale, n = int(scale), int(n)

    if n == 1:
        return [scale / 2.0]
    if n == 2:
        return [scale / 2.0, float(scale)]

    step = math.log(scale - 2.0) / n
    if level is RetinexLevel.UNIFORM:
        sigmas = [2.0 + i * (scale / n) for i in range(n)]
    elif level is RetinexLevel.LOW:
        sigmas = [2.0 + math.exp(i * step) for i in range(n)]
    else:
        sigmas = [scale - math.exp(i * step) for i in range(n)]
    logger.debug(f"Scale distribution {level.value}/{scale}/{n}: {sigmas}")
    return sigmas


def gaussian_kernel(sigma: float) -> np.ndarray:
    """
    1-D Gaussian of standard deviation sigma, truncated at ceil(3 sigma)
    and normalized to sum 1.
    """
    if not math.isfinite(sigma) or sigma < MIN_SIGMA:
        raise InvalidParamsError(f"sigma must be >= {MIN_SIGMA}, got {sigma}")
    radius = int(math.ceil(TRUNCATE * sigma))
    x = np.arange(-radius, radius + 1, dtype=np.float64)
    kernel = np.exp(-(x * x) / (2.0 * sigma * sigma))
    return kernel / kernel.sum()


def gaussian_blur(channel: np.ndarray, sigma: float) -> np.ndarray:
    """
    Separable Gaussian blur of a single-channel image with clamp-to-edge
    borders.
    """
    kernel = gaussian_kernel(sigma)
    data = np.asarray(channel, dtype=np.float64)
    # mode="nearest" replicates edge pixels for any kernel radius
    rows = ndi.correlate1d(data, kernel, axis=0, mode="nearest")
    return ndi.correlate1d(rows, kernel, axis=1, mode="nearest")


def single_scale_retinex(channel: np.ndarray, sigma: float) -> np.ndarray:
    """
    ln(I + 1) - ln(G_sigma * I + 1) for a channel with values in [0, 255].
    """
    data = np.asarray(channel, dtype=np.float64)
    return np.log1p(data) - np.log1p(gaussian_blur(data, sigma))


def multi_scale_retinex(channel: np.ndarray, sigmas: List[float]) -> np.ndarray:
    """
    Equal-weight mean of the single-scale outputs, summed in sigma order.
    """
    total = np.zeros(np.shape(channel), dtype=np.float64)
    for sigma in sigmas:
        total += single_scale_retinex(channel, sigma)
    return total / len(sigmas)


def color_restoration(image: ImageFloat) -> np.ndarray:
    """
    C_c = ln(alpha I_c + 1) - ln(I_R + I_G + I_B + 3), per pixel and channel.
    """
    data = image.data
    return np.log1p(ALPHA * data) - np.log(data.sum(axis=2, keepdims=True) + 3.0)


def dynamic_stretch(working: ImageFloat, dynamic: float) -> ImageRgb8:
    """
    Maps [mean - D std, mean + D std] linearly onto [0, 255], clamps and
    rounds to the nearest integer. A zero-variance input gives mid-grey.
    """
    if not math.isfinite(dynamic) or dynamic <= 0:
        raise InvalidParamsError(f"dynamic must be > 0, got {dynamic}")
    data = working.data
    mean = float(data.mean())
    std = float(data.std())
    if std < DEGENERATE_STD:
        logger.debug("Zero-variance working image, returning mid-grey")
        return ImageRgb8(np.full(data.shape, DEGENERATE_VALUE, dtype=np.uint8))
    lo = mean - dynamic * std
    hi = mean + dynamic * std
    scaled = np.clip(255.0 * (data - lo) / (hi - lo), 0.0, 255.0)
    # values are non-negative, so floor(x + 0.5) rounds half away from zero
    return ImageRgb8(np.floor(scaled + 0.5).astype(np.uint8))


class _MsrcrState:
    """Values passed between the msrcr pipeline stages."""
    __slots__ = ("original", "working")

    def __init__(self, original: ImageFloat, working: ImageFloat):
        self.original = original
        self.working = working


def _build_pipeline(params: RetinexParams, color_restore: bool) -> Pipeline:
    sigmas = scale_distribution(params.level, params.scale, params.scale_division)

    def retinex_stage(state: _MsrcrState) -> _MsrcrState:
        source = state.original
        channels = parallel_map(lambda c: multi_scale_retinex(source.channel(c), sigmas), range(3))
        return _MsrcrState(source, ImageFloat(np.stack(channels, axis=2)))

    def restoration_stage(state: _MsrcrState) -> _MsrcrState:
        restored = state.working.data * color_restoration(state.original)
        return _MsrcrState(state.original, ImageFloat(restored))

    pipeline = Pipeline([("msr", retinex_stage)])
    if color_restore:
        pipeline.add_step("color_restoration", restoration_stage)
    pipeline.add_step("dynamic_stretch", lambda state: dynamic_stretch(state.working, params.dynamic))
    return pipeline


@profile_operation
def msrcr(image: ImageRgb8, params: RetinexParams, color_restore: bool = True) -> ImageRgb8:
    """
    Filters an 8-bit RGB image with MSRCR.

    `color_restore=False` skips stage 2 and is only meant for inspecting
    the intermediate multi-scale output.
    """
    logger.debug(f"msrcr {params.variant_id} on {image!r}")
    original = ImageFloat.from_rgb8(image)
    pipeline = _build_pipeline(params, color_restore)
    return pipeline.run(_MsrcrState(original, original))
