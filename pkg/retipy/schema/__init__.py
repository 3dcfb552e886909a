from .base import (
    DEFAULT_DYNAMIC,
    DEFAULT_KAPPA_MAX,
    DEFAULT_KAPPA_STEPS,
    DEFAULT_SCALE,
    DEFAULT_SCALE_DIVISION,
    MAX_SCALE_DIVISION,
    MIN_SCALE,
    ORIGINAL_ID,
    Crossing,
    EntropyCurve,
    GridSpec,
    RetinexParams,
    SweepRecord,
    SweepReport,
    TsallisCurve,
    validated,
)

__all__ = [
    "Crossing",
    "EntropyCurve",
    "GridSpec",
    "RetinexParams",
    "SweepRecord",
    "SweepReport",
    "TsallisCurve",
    "validated",
    "DEFAULT_DYNAMIC",
    "DEFAULT_KAPPA_MAX",
    "DEFAULT_KAPPA_STEPS",
    "DEFAULT_SCALE",
    "DEFAULT_SCALE_DIVISION",
    "MAX_SCALE_DIVISION",
    "MIN_SCALE",
    "ORIGINAL_ID",
]
