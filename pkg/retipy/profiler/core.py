"""
Core profiling functionality and API.

Timings are wall-clock seconds collected per named operation. Collection
is off by default; the decorated library functions then cost one flag
check per call.
"""

import functools
import json
import logging
import threading
import time
from typing import Any, Callable, Dict, Optional, TypeVar

logger = logging.getLogger("retipy.profiler")

F = TypeVar("F", bound=Callable[..., Any])

_lock = threading.Lock()
_enabled = False
_stats: Dict[str, Dict[str, float]] = {}


def enable_profiling() -> None:
    """
    Enable the global stage profiler.

    When enabled, msrcr, entropy curves and sweep evaluations record their
    call counts and wall time.
    """
    global _enabled
    _enabled = True


def disable_profiling() -> None:
    """
    Disable the global stage profiler.
    """
    global _enabled
    _enabled = False


def is_profiling() -> bool:
    return _enabled


def clear_profile() -> None:
    """
    Clear all collected profiling data.
    """
    with _lock:
        _stats.clear()


def _record(name: str, elapsed_s: float) -> None:
    with _lock:
        entry = _stats.setdefault(name, {"count": 0, "total_s": 0.0, "max_s": 0.0})
        entry["count"] += 1
        entry["total_s"] += elapsed_s
        entry["max_s"] = max(entry["max_s"], elapsed_s)


def profile_report(format: str = "table") -> Any:
    """
    Get a summary report of profiled operations.

    Args:
        format: Output format ('table', 'json', 'dict').

    Returns:
        String report (table/json) or dictionary (dict).
    """
    with _lock:
        snapshot = {name: dict(entry) for name, entry in _stats.items()}

    total = sum(entry["total_s"] for entry in snapshot.values())
    operations = {}
    for name, entry in snapshot.items():
        operations[name] = {
            "operation": name,
            "count": int(entry["count"]),
            "total_ms": entry["total_s"] * 1e3,
            "avg_ms": entry["total_s"] * 1e3 / entry["count"],
            "max_ms": entry["max_s"] * 1e3,
            "percent_total": 100.0 * entry["total_s"] / total if total > 0 else 0.0,
        }
    data = {"total_ms": total * 1e3, "operations": operations}

    if format == "dict":
        return data
    if format == "json":
        return json.dumps(data, indent=2, sort_keys=True)
    if format != "table":
        raise ValueError(f"Unknown report format '{format}'")

    lines = []
    lines.append("=" * 72)
    lines.append(f"RETIPY PROFILE REPORT (Total: {data['total_ms']:.2f}ms)")
    lines.append("=" * 72)
    lines.append(f"{'Operation':<24} {'Count':<8} {'Total(ms)':<12} {'Avg(ms)':<10} {'%'}")
    lines.append("-" * 72)

    # Sort by total time descending
    for op in sorted(operations.values(), key=lambda x: x["total_ms"], reverse=True):
        lines.append(
            f"{op['operation']:<24} {op['count']:<8} {op['total_ms']:<12.2f} {op['avg_ms']:<10.3f} {op['percent_total']:.1f}"
        )
    lines.append("=" * 72)
    return "\n".join(lines)


class ProfileContext:
    """
    Context manager for profiling specific code blocks.

    Usage:
        with ProfileContext("load"):
            image = load_image(path)
    """
    def __init__(self, name: str):
        self.name = name
        self._start: Optional[float] = None

    def __enter__(self) -> "ProfileContext":
        if _enabled:
            self._start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        if self._start is not None:
            _record(self.name, time.perf_counter() - self._start)
            self._start = None


def profile_operation(func: F) -> F:
    """
    Decorator to profile a Python function under its own name.
    """
    name = func.__name__

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        if not _enabled:
            return func(*args, **kwargs)
        with ProfileContext(name):
            return func(*args, **kwargs)
    return wrapper  # type: ignore[return-value]
