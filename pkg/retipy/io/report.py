"""
Serialization of sweep reports (JSON) and entropy curves (CSV).
"""
import csv
import io
import logging
from pathlib import Path
from typing import Dict, List, Sequence, Tuple, Union

from pydantic import ValidationError

from ..backend.errors import ImageIOError, InvalidInputError
from ..schema import EntropyCurve, SweepReport, TsallisCurve

logger = logging.getLogger("retipy.io.report")

PathLike = Union[str, Path]

SIGNIFICANT_DIGITS = 9


def format_value(value: float) -> str:
    """Nine significant digits, always with a decimal point (never a comma)."""
    text = format(value, f".{SIGNIFICANT_DIGITS}g")
    return "0" if text == "-0" else text


def report_to_json(report: SweepReport) -> str:
    return report.model_dump_json(indent=2) + "\n"


def report_from_json(text: str) -> SweepReport:
    return SweepReport.model_validate_json(text)


def write_report(report: SweepReport, path: PathLike) -> None:
    _write_text(Path(path), report_to_json(report))


def read_report(path: PathLike) -> SweepReport:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ImageIOError(path, exc.strerror or str(exc)) from exc
    try:
        return report_from_json(text)
    except ValidationError as exc:
        raise InvalidInputError(f"{path}: not a valid sweep report ({exc.error_count()} errors)") from exc


def report_curves(report: SweepReport) -> List[Tuple[str, EntropyCurve]]:
    """The original first, then every record in enumeration order."""
    return [(record.variant_id, record.curve) for record in (report.original, *report.records)]


def curves_to_csv(columns: Sequence[Tuple[str, EntropyCurve]]) -> str:
    """
    One row per kappa grid point, one column per curve. All curves must
    share the same kappa grid.
    """
    if not columns:
        raise InvalidInputError("No curves to write")
    kappas = columns[0][1].kappas
    for name, curve in columns:
        if curve.kappas != kappas:
            raise InvalidInputError(f"Curve '{name}' uses a different kappa grid")
    return _table("kappa", kappas, [(name, curve.values) for name, curve in columns])


def tsallis_to_csv(columns: Sequence[Tuple[str, TsallisCurve]]) -> str:
    if not columns:
        raise InvalidInputError("No curves to write")
    qs = columns[0][1].qs
    for name, curve in columns:
        if curve.qs != qs:
            raise InvalidInputError(f"Curve '{name}' uses different q values")
    return _table("q", qs, [(name, curve.values) for name, curve in columns])


def write_curve_csv(columns: Sequence[Tuple[str, EntropyCurve]], path: PathLike) -> None:
    _write_text(Path(path), curves_to_csv(columns))


def write_tsallis_csv(columns: Sequence[Tuple[str, TsallisCurve]], path: PathLike) -> None:
    _write_text(Path(path), tsallis_to_csv(columns))


def read_curve_csv(path: PathLike) -> Dict[str, List[float]]:
    """
    Parses a curve CSV back into {column name: values}, index column included.
    """
    path = Path(path)
    try:
        with open(path, newline="", encoding="utf-8") as handle:
            rows = list(csv.reader(handle))
    except OSError as exc:
        raise ImageIOError(path, exc.strerror or str(exc)) from exc
    if not rows:
        raise InvalidInputError(f"{path}: empty CSV")
    header, body = rows[0], rows[1:]
    return {name: [float(row[i]) for row in body] for i, name in enumerate(header)}


def _table(index_name: str, index: Sequence[float], columns: Sequence[Tuple[str, Sequence[float]]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow([index_name, *(name for name, _ in columns)])
    for row, value in enumerate(index):
        writer.writerow([format_value(value), *(format_value(values[row]) for _, values in columns)])
    return buffer.getvalue()


def _write_text(path: Path, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as exc:
        raise ImageIOError(path, exc.strerror or str(exc)) from exc
    logger.debug(f"Wrote {path}")
