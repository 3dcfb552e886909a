from .images import load_image, save_image
from .report import (
    curves_to_csv,
    format_value,
    read_curve_csv,
    read_report,
    report_curves,
    report_from_json,
    report_to_json,
    tsallis_to_csv,
    write_curve_csv,
    write_report,
    write_tsallis_csv,
)

__all__ = [
    "load_image",
    "save_image",
    "curves_to_csv",
    "format_value",
    "read_curve_csv",
    "read_report",
    "report_curves",
    "report_from_json",
    "report_to_json",
    "tsallis_to_csv",
    "write_curve_csv",
    "write_report",
    "write_tsallis_csv",
]
