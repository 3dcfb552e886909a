"""
Deterministic synthetic foggy scene.

The scene radiance is a smooth random texture: white noise blurred to a
correlation length of a few pixels, scaled around a mid-grey albedo. Haze
is applied with the usual scattering model I = J t + A (1 - t) at a
uniform transmission, and seeded sensor noise is added before quantizing
to 8 bits. What survives is a flat, washed-out image whose detail sits in
a narrow band of tones.
"""
import logging

import numpy as np
from scipy import ndimage as ndi

from ..backend.errors import InvalidInputError
from ..image import ImageRgb8

logger = logging.getLogger("retipy.data.fixtures")

DEFAULT_WIDTH = 128
DEFAULT_HEIGHT = 96
DEFAULT_SEED = 2015
MIN_SIDE = 16

ALBEDO = 0.5
CONTRAST = 0.2
CORRELATION = 10.0
AIRLIGHT = 0.88
TRANSMISSION = 0.35
SENSOR_NOISE = 1.2 / 255.0


def generate_foggy_image(width: int = DEFAULT_WIDTH, height: int = DEFAULT_HEIGHT, seed: int = DEFAULT_SEED) -> ImageRgb8:
    """
    Renders the foggy fixture. Identical arguments give identical bytes.
    """
    if width < MIN_SIDE or height < MIN_SIDE:
        raise InvalidInputError(f"Fixture must be at least {MIN_SIDE}x{MIN_SIDE}, got {width}x{height}")
    rng = np.random.default_rng(seed)

    texture = ndi.gaussian_filter(rng.standard_normal((height, width)), CORRELATION, mode="nearest")
    texture /= np.sqrt(np.mean(texture ** 2))
    scene = np.clip(ALBEDO * (1.0 + CONTRAST * texture), 0.0, 1.0)

    hazy = (scene * TRANSMISSION + AIRLIGHT * (1.0 - TRANSMISSION))[:, :, np.newaxis]
    hazy = hazy + rng.normal(0.0, SENSOR_NOISE, size=(height, width, 3))
    pixels = np.clip(np.floor(hazy * 255.0 + 0.5), 0, 255).astype(np.uint8)
    logger.debug(f"Generated {width}x{height} foggy fixture (seed={seed})")
    return ImageRgb8(pixels)
