"""
Parameter sweeps: filter an image over a Retinex parameter grid, compute
the entropy curve of every output and rank the variants by entropy.
"""
import itertools
import logging
from typing import Callable, List, Optional, Sequence, Tuple

from .backend.errors import InvalidInputError
from .image import ImageRgb8
from .ops.entropy import entropy_curve
from .ops.histogram import image_distribution
from .ops.retinex import msrcr
from .profiler import ProfileContext, profile_operation
from .runtime import parallel_map
from .schema import ORIGINAL_ID, Crossing, GridSpec, RetinexParams, SweepRecord, SweepReport, validated

logger = logging.getLogger("retipy.sweep")


def build_grid(**fields) -> GridSpec:
    """
    Validates grid fields into a GridSpec, raising InvalidInputError for an
    empty list or an out-of-range value.
    """
    return validated(GridSpec, InvalidInputError, **fields)


def enumerate_grid(g: GridSpec) -> List[RetinexParams]:
    """
    Cartesian product levels x scales x scale_divisions x dynamics, in the
    order the field lists are given.
    """
    if not (g.levels and g.scales and g.scale_divisions and g.dynamics):
        raise InvalidInputError("Parameter grid is empty")
    return [
        RetinexParams(level=level, scale=scale, scale_division=division, dynamic=dynamic)
        for level, scale, division, dynamic in itertools.product(
            g.levels, g.scales, g.scale_divisions, g.dynamics
        )
    ]


def _record(variant_id: str, params: Optional[RetinexParams], image: ImageRgb8, g: GridSpec) -> SweepRecord:
    curve = entropy_curve(image_distribution(image), g.kappa_max, g.kappa_steps)
    return SweepRecord(variant_id=variant_id, params=params, curve=curve, shannon=curve.shannon)


def evaluate_original(image: ImageRgb8, g: GridSpec) -> SweepRecord:
    """
    Reference record for the unfiltered image.
    """
    return _record(ORIGINAL_ID, None, image, g)


def _filter_and_record(image: ImageRgb8, params: RetinexParams, g: GridSpec) -> Tuple[SweepRecord, ImageRgb8]:
    filtered = msrcr(image, params)
    record = _record(params.variant_id, params, filtered, g)
    logger.debug(f"{record.variant_id}: shannon={record.shannon:.6f}")
    return record, filtered


@profile_operation
def evaluate(image: ImageRgb8, params: RetinexParams, g: GridSpec) -> SweepRecord:
    """
    Filters `image` with `params` and records the entropy curve of the output.
    """
    return _filter_and_record(image, params, g)[0]


def _order(a: float, b: float) -> int:
    return (a > b) - (a < b)


def find_crossings(curves: Sequence[SweepRecord]) -> List[Crossing]:
    """
    Every kappa interval where two curves swap order. Touching without
    swapping is not a crossing.
    """
    crossings: List[Crossing] = []
    for first, second in itertools.combinations(curves, 2):
        kappas = first.curve.kappas
        diffs = [x - y for x, y in zip(first.curve.values, second.curve.values)]
        last_sign, last_index = 0, 0
        for i, diff in enumerate(diffs):
            sign = _order(diff, 0.0)
            if sign == 0:
                continue
            if last_sign and sign != last_sign:
                lo, hi = kappas[last_index], kappas[i]
                d_lo, d_hi = diffs[last_index], diffs[i]
                kappa = lo + (hi - lo) * d_lo / (d_lo - d_hi)
                crossings.append(Crossing(
                    first=first.variant_id, second=second.variant_id,
                    kappa_lo=lo, kappa_hi=hi, kappa=kappa,
                ))
            last_sign, last_index = sign, i
    return crossings


def rank(
    original: SweepRecord,
    records: Sequence[SweepRecord],
    grid: Optional[GridSpec] = None,
) -> SweepReport:
    """
    Ranks records by descending Shannon entropy, then by descending mean
    curve value, then by enumeration order.
    """
    if not records:
        raise InvalidInputError("Nothing to rank")
    records = list(records)

    def key(index: int) -> Tuple[float, float, int]:
        record = records[index]
        return (-record.shannon, -record.curve.mean, index)

    ranking = sorted(range(len(records)), key=key)
    below = [i for i, record in enumerate(records) if record.shannon < original.shannon]
    crossings = find_crossings([original, *records])
    if below:
        logger.info(f"{len(below)} of {len(records)} variants have less entropy than the original")
    return SweepReport(
        grid=grid,
        original=original,
        records=records,
        ranking=ranking,
        crossings=crossings,
        below_original=below,
    )


@profile_operation
def run_sweep(
    image: ImageRgb8,
    g: GridSpec,
    on_output: Optional[Callable[[RetinexParams, ImageRgb8], None]] = None,
) -> SweepReport:
    """
    Evaluates the original image and every parameter set of the grid, then
    ranks them. Parameter sets are evaluated in parallel; the report keeps
    enumeration order.

    `on_output`, when given, receives each filtered image in enumeration
    order after all variants have been evaluated.
    """
    grid = enumerate_grid(g)
    logger.info(f"Sweeping {len(grid)} parameter sets on {image!r}")
    original = evaluate_original(image, g)

    def run_one(params: RetinexParams) -> Tuple[SweepRecord, Optional[ImageRgb8]]:
        with ProfileContext("evaluate"):
            record, filtered = _filter_and_record(image, params, g)
        return record, filtered if on_output is not None else None

    results = parallel_map(run_one, grid)
    if on_output is not None:
        for params, (_, filtered) in zip(grid, results):
            on_output(params, filtered)
    report = rank(original, [record for record, _ in results], grid=g)
    logger.info(f"Winner: {report.winner.variant_id} (shannon={report.winner.shannon:.6f})")
    return report
