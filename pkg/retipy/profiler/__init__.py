"""
Retipy stage profiler.

Records call counts and wall time for the heavy stages (Retinex filtering,
entropy curves, sweep evaluation).
"""

from .core import (
    ProfileContext,
    clear_profile,
    disable_profiling,
    enable_profiling,
    is_profiling,
    profile_operation,
    profile_report,
)

__all__ = [
    "enable_profiling",
    "disable_profiling",
    "is_profiling",
    "clear_profile",
    "profile_report",
    "ProfileContext",
    "profile_operation",
]
