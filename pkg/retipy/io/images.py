"""
Reading and writing 8-bit images: PNG through pypng, binary PPM (P6)
through a small numpy parser.
"""
import logging
import re
import zlib
from pathlib import Path
from typing import Tuple, Union

import numpy as np
import png

from ..backend.errors import ImageIOError, InvalidInputError, UnsupportedDepthError, UnsupportedFormatError
from ..image import ImageRgb8

logger = logging.getLogger("retipy.io.images")

PathLike = Union[str, Path]

PNG_SIGNATURE = b"\x89PNG\r\n\x1a\n"
PPM_MAGIC = b"P6"
PNG_SUFFIXES = (".png",)
PPM_SUFFIXES = (".ppm", ".pnm")

# magic, width, height, maxval, then exactly one whitespace byte
_PPM_TOKEN = re.compile(rb"\s*(?:#[^\n]*\n\s*)*(\S+)")


def load_image(path: PathLike) -> ImageRgb8:
    """
    Decodes a PNG or binary PPM (P6) file into an 8-bit RGB image.
    Greyscale PNGs are expanded to RGB; alpha channels are dropped.
    """
    path = Path(path)
    try:
        payload = path.read_bytes()
    except FileNotFoundError:
        raise ImageIOError(path, "file not found") from None
    except OSError as exc:
        raise ImageIOError(path, exc.strerror or str(exc)) from exc

    if payload.startswith(PNG_SIGNATURE):
        image = _decode_png(path, payload)
    elif payload.startswith(PPM_MAGIC):
        image = _decode_ppm(path, payload)
    else:
        raise UnsupportedFormatError(path, "not a PNG or binary PPM (P6) file")
    logger.debug(f"Loaded {image!r} from {path}")
    return image


def save_image(image: ImageRgb8, path: PathLike) -> None:
    """
    Encodes an image as PNG or PPM depending on the file extension.
    Existing files are overwritten.
    """
    path = Path(path)
    suffix = path.suffix.lower()
    if suffix not in PNG_SUFFIXES + PPM_SUFFIXES:
        raise UnsupportedFormatError(path, f"unsupported extension '{path.suffix}' (use .png or .ppm)")

    try:
        with open(path, "wb") as handle:
            if suffix in PNG_SUFFIXES:
                writer = png.Writer(width=image.width, height=image.height, greyscale=False, alpha=False, bitdepth=8)
                rows = image.data.reshape(image.height, image.width * 3)
                writer.write(handle, (row.tolist() for row in rows))
            else:
                handle.write(f"P6\n{image.width} {image.height}\n255\n".encode("ascii"))
                handle.write(image.to_bytes())
    except OSError as exc:
        raise ImageIOError(path, exc.strerror or str(exc)) from exc
    logger.debug(f"Saved {image!r} to {path}")


def _decode_png(path: Path, payload: bytes) -> ImageRgb8:
    try:
        reader = png.Reader(bytes=payload)
        width, height, rows, info = reader.asDirect()
        bitdepth = info["bitdepth"]
        if bitdepth > 8:
            raise UnsupportedDepthError(path, f"{bitdepth}-bit PNG, only 8-bit images are supported")
        planes = info["planes"]
        # Consuming the rows decompresses the image data, which is where truncation shows up
        data = np.array([np.asarray(row, dtype=np.uint16) for row in rows], dtype=np.uint16)
    except (png.Error, zlib.error, EOFError, ValueError) as exc:
        raise ImageIOError(path, f"corrupt or truncated PNG ({exc})") from exc

    if data.shape != (height, width * planes):
        raise ImageIOError(path, f"truncated PNG: expected {height} rows of {width * planes} values")
    data = data.reshape(height, width, planes)
    if bitdepth < 8:
        data = data * 255 // (2 ** bitdepth - 1)

    if info["alpha"]:
        logger.warning(f"{path}: dropping alpha channel")
        data = data[:, :, :-1]
    if info["greyscale"]:
        data = np.repeat(data[:, :, :1], 3, axis=2)
    return ImageRgb8(data.astype(np.uint8))


def _read_ppm_header(path: Path, payload: bytes) -> Tuple[int, int, int, int]:
    values = []
    position = 0
    for _ in range(4):
        match = _PPM_TOKEN.match(payload, position)
        if match is None:
            raise ImageIOError(path, "truncated PPM header")
        values.append(match.group(1))
        position = match.end()
    if position >= len(payload) or payload[position:position + 1] not in b" \t\r\n":
        raise ImageIOError(path, "truncated PPM header")
    magic, width, height, maxval = values
    if magic != PPM_MAGIC:
        raise UnsupportedFormatError(path, f"unsupported PNM type {magic!r}, only P6 is read")
    try:
        return int(width), int(height), int(maxval), position + 1
    except ValueError:
        raise ImageIOError(path, "malformed PPM header") from None


def _decode_ppm(path: Path, payload: bytes) -> ImageRgb8:
    width, height, maxval, offset = _read_ppm_header(path, payload)
    if maxval > 255:
        raise UnsupportedDepthError(path, f"PPM maxval {maxval}, only 8-bit images are supported")
    if width < 1 or height < 1 or maxval < 1:
        raise ImageIOError(path, f"invalid PPM dimensions {width}x{height} maxval {maxval}")
    expected = width * height * 3
    raster = payload[offset:offset + expected]
    if len(raster) < expected:
        raise ImageIOError(path, f"truncated PPM: expected {expected} bytes of pixel data, found {len(raster)}")
    data = np.frombuffer(raster, dtype=np.uint8).reshape(height, width, 3)
    if maxval != 255:
        data = np.minimum((data.astype(np.uint32) * 255 + maxval // 2) // maxval, 255)
    try:
        return ImageRgb8(data)
    except InvalidInputError as exc:
        raise ImageIOError(path, str(exc)) from exc
