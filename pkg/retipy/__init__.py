"""
Retipy: GIMP-style multi-scale Retinex filtering ranked by image entropy.
"""
from . import backend, data, io, ops, profiler, runtime, schema
from .backend import (
    EntropyKind,
    ImageIOError,
    InvalidIndexError,
    InvalidInputError,
    InvalidParamsError,
    RetinexLevel,
    RetipyError,
)
from .image import ImageFloat, ImageRgb8
from .ops import (
    entropy_curve,
    image_distribution,
    kaniadakis,
    msrcr,
    scale_distribution,
    shannon,
    tsallis,
)
from .profiler import (
    ProfileContext,
    clear_profile,
    disable_profiling,
    enable_profiling,
    profile_operation,
    profile_report,
)
from .runtime import configure, get_session
from .schema import GridSpec, RetinexParams, SweepReport
from .sweep import build_grid, enumerate_grid, rank, run_sweep

__version__ = "0.1.0"

__all__ = [
    "backend", "data", "io", "ops", "profiler", "runtime", "schema",
    "ImageRgb8", "ImageFloat", "RetinexLevel", "EntropyKind",
    "RetipyError", "InvalidInputError", "InvalidIndexError", "InvalidParamsError", "ImageIOError",
    "shannon", "tsallis", "kaniadakis", "entropy_curve", "image_distribution",
    "msrcr", "scale_distribution",
    "RetinexParams", "GridSpec", "SweepReport",
    "build_grid", "enumerate_grid", "rank", "run_sweep",
    "configure", "get_session",
    "enable_profiling", "disable_profiling", "clear_profile", "profile_report",
    "ProfileContext", "profile_operation",
]
