"""
Command-line front end.

    retipy filter   --input IMG --output IMG [--level --scale --scale-div --dynamic]
    retipy entropy  --input IMG [--q Q] [--kappa K]
    retipy curve    --input IMG [IMG ...] [--kappa-max --kappa-steps --out-csv]
    retipy sweep    --input IMG [--levels --scales --scale-divs --dynamics ...]
    retipy fixture  --output IMG [--width --height --seed]

Exit codes: 0 success, 1 runtime or I/O failure, 2 usage error.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, TypeVar

from . import __version__
from .backend.errors import ImageIOError, InvalidIndexError, InvalidInputError, InvalidParamsError, RetipyError
from .backend.types import RetinexLevel
from .data import DEFAULT_HEIGHT, DEFAULT_SEED, DEFAULT_WIDTH, generate_foggy_image
from .image import ImageRgb8
from .io import load_image, save_image, write_curve_csv, write_report, write_tsallis_csv
from .io.report import curves_to_csv, report_curves, tsallis_to_csv
from .ops.entropy import KAPPA_MAX, entropy_curve, kaniadakis, kappa_grid, shannon, tsallis, tsallis_curve
from .ops.histogram import image_distribution
from .ops.retinex import msrcr
from .profiler import clear_profile, profile_report
from .runtime import configure
from .schema import (
    DEFAULT_DYNAMIC,
    DEFAULT_KAPPA_MAX,
    DEFAULT_KAPPA_STEPS,
    DEFAULT_SCALE,
    DEFAULT_SCALE_DIVISION,
    RetinexParams,
    validated,
)
from .sweep import build_grid, run_sweep

logger = logging.getLogger("retipy.cli")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

DEFAULT_QS = "0.5,1,1.5,2,2.5,3"

T = TypeVar("T")


class UsageError(Exception):
    """Invalid flag values detected after argument parsing."""


def _number(value: float) -> str:
    """Result lines use 9 digits after the decimal point."""
    return f"{value + 0.0:.9f}"


def _emit(name: str, value: float) -> None:
    print(f"{name}={_number(value)}")


def _split(text: str, convert: Callable[[str], T], flag: str) -> List[T]:
    items = [item.strip() for item in text.split(",") if item.strip()]
    if not items:
        raise UsageError(f"{flag} needs at least one value")
    try:
        return [convert(item) for item in items]
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}") from None


def _variant_ids(paths: Sequence[str]) -> List[str]:
    seen: Dict[str, int] = {}
    ids = []
    for path in paths:
        stem = Path(path).stem or "image"
        seen[stem] = seen.get(stem, 0) + 1
        if seen[stem] > 1:
            logger.warning(f"Duplicate input name '{stem}', renaming column to '{stem}_{seen[stem]}'")
            stem = f"{stem}_{seen[stem]}"
        ids.append(stem)
    return ids


def cmd_filter(args: argparse.Namespace) -> int:
    try:
        params = validated(
            RetinexParams, InvalidParamsError,
            level=args.level, scale=args.scale, scale_division=args.scale_div, dynamic=args.dynamic,
        )
    except InvalidParamsError as exc:
        raise UsageError(str(exc)) from exc

    image = load_image(args.input)
    filtered = msrcr(image, params)
    save_image(filtered, args.output)
    logger.info(f"Wrote {params.variant_id} output to {args.output}")
    _emit("shannon", shannon(image_distribution(filtered)))
    return EXIT_OK


def cmd_entropy(args: argparse.Namespace) -> int:
    if args.q is not None and not args.q > 0:
        raise UsageError(f"--q must be > 0, got {args.q}")
    if args.kappa is not None and not 0 <= args.kappa <= KAPPA_MAX:
        raise UsageError(f"--kappa must lie in [0, {KAPPA_MAX}], got {args.kappa}")

    dist = image_distribution(load_image(args.input))
    _emit("shannon", shannon(dist))
    if args.q is not None:
        _emit("tsallis", tsallis(dist, args.q))
    if args.kappa is not None:
        _emit("kaniadakis", kaniadakis(dist, args.kappa))
    return EXIT_OK


def cmd_curve(args: argparse.Namespace) -> int:
    ids = _variant_ids(args.input)
    if args.family == "tsallis":
        qs = _split(args.qs, float, "--qs")
        if any(not q > 0 for q in qs):
            raise UsageError("--qs values must be > 0")
        columns = [(name, tsallis_curve(image_distribution(load_image(path)), qs)) for name, path in zip(ids, args.input)]
        if args.out_csv:
            write_tsallis_csv(columns, args.out_csv)
        else:
            sys.stdout.write(tsallis_to_csv(columns))
        return EXIT_OK

    try:
        kappa_grid(args.kappa_max, args.kappa_steps)
    except (InvalidIndexError, InvalidInputError) as exc:
        raise UsageError(str(exc)) from exc
    curves = [
        (name, entropy_curve(image_distribution(load_image(path)), args.kappa_max, args.kappa_steps))
        for name, path in zip(ids, args.input)
    ]
    if args.out_csv:
        write_curve_csv(curves, args.out_csv)
    else:
        sys.stdout.write(curves_to_csv(curves))
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    try:
        grid = build_grid(
            levels=_split(args.levels, RetinexLevel.parse, "--levels"),
            scales=_split(args.scales, int, "--scales"),
            scale_divisions=_split(args.scale_divs, int, "--scale-divs"),
            dynamics=_split(args.dynamics, float, "--dynamics"),
            kappa_max=args.kappa_max,
            kappa_steps=args.kappa_steps,
        )
    except InvalidInputError as exc:
        raise UsageError(str(exc)) from exc

    image = load_image(args.input)
    out_dir = Path(args.out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise ImageIOError(out_dir, exc.strerror or str(exc)) from exc

    def save_variant(params: RetinexParams, filtered: ImageRgb8) -> None:
        save_image(filtered, out_dir / f"{params.variant_id}.png")

    report = run_sweep(image, grid, on_output=save_variant if args.save_images else None)
    write_report(report, Path(args.report) if args.report else out_dir / "report.json")
    write_curve_csv(report_curves(report), Path(args.csv) if args.csv else out_dir / "curves.csv")

    print(f"winner={report.winner.variant_id}")
    _emit("shannon", report.winner.shannon)
    _emit("original", report.original.shannon)
    print(f"below_original={len(report.below_original)}")
    return EXIT_OK


def cmd_fixture(args: argparse.Namespace) -> int:
    try:
        image = generate_foggy_image(args.width, args.height, args.seed)
    except InvalidInputError as exc:
        raise UsageError(str(exc)) from exc
    save_image(image, args.output)
    _emit("shannon", shannon(image_distribution(image)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        help="logging level on standard error")
    common.add_argument("--workers", type=int, default=None, help="worker threads for filtering and sweeps")
    common.add_argument("--profile", action="store_true", help="print a stage timing report on standard error")

    parser = argparse.ArgumentParser(prog="retipy", description="GIMP-style MSRCR filtering ranked by image entropy.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("filter", parents=[common], help="filter an image with MSRCR")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--level", default=RetinexLevel.UNIFORM.value, choices=[level.value for level in RetinexLevel])
    p.add_argument("--scale", type=int, default=DEFAULT_SCALE)
    p.add_argument("--scale-div", type=int, default=DEFAULT_SCALE_DIVISION)
    p.add_argument("--dynamic", type=float, default=DEFAULT_DYNAMIC)
    p.set_defaults(handler=cmd_filter)

    p = commands.add_parser("entropy", parents=[common], help="print image entropies")
    p.add_argument("--input", required=True)
    p.add_argument("--q", type=float, default=None, help="Tsallis index (> 0)")
    p.add_argument("--kappa", type=float, default=None, help=f"Kaniadakis index in [0, {KAPPA_MAX}]")
    p.set_defaults(handler=cmd_entropy)

    p = commands.add_parser("curve", parents=[common], help="entropy as a function of its index, as CSV")
    p.add_argument("--input", required=True, nargs="+")
    p.add_argument("--family", default="kaniadakis", choices=["kaniadakis", "tsallis"])
    p.add_argument("--kappa-max", type=float, default=DEFAULT_KAPPA_MAX)
    p.add_argument("--kappa-steps", type=int, default=DEFAULT_KAPPA_STEPS)
    p.add_argument("--qs", default=DEFAULT_QS, help="comma-separated q values for --family tsallis")
    p.add_argument("--out-csv", default=None, help="CSV path (standard output when omitted)")
    p.set_defaults(handler=cmd_curve)

    p = commands.add_parser("sweep", parents=[common], help="rank MSRCR parameter sets by entropy")
    p.add_argument("--input", required=True)
    p.add_argument("--levels", default="uniform,low,high")
    p.add_argument("--scales", default=str(DEFAULT_SCALE))
    p.add_argument("--scale-divs", default=str(DEFAULT_SCALE_DIVISION))
    p.add_argument("--dynamics", default=str(DEFAULT_DYNAMIC))
    p.add_argument("--kappa-max", type=float, default=DEFAULT_KAPPA_MAX)
    p.add_argument("--kappa-steps", type=int, default=DEFAULT_KAPPA_STEPS)
    p.add_argument("--out-dir", default=".")
    p.add_argument("--report", default=None, help="JSON report path (default OUT_DIR/report.json)")
    p.add_argument("--csv", default=None, help="curve CSV path (default OUT_DIR/curves.csv)")
    p.add_argument("--save-images", action="store_true", help="write every filtered variant as PNG into OUT_DIR")
    p.set_defaults(handler=cmd_sweep)

    p = commands.add_parser("fixture", parents=[common], help="write the synthetic foggy test image")
    p.add_argument("--output", required=True)
    p.add_argument("--width", type=int, default=DEFAULT_WIDTH)
    p.add_argument("--height", type=int, default=DEFAULT_HEIGHT)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(handler=cmd_fixture)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    logging.basicConfig(level=args.log_level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        overrides = {"profile": args.profile}
        if args.workers is not None:
            overrides["workers"] = args.workers
        configure(**overrides)
    except InvalidInputError as exc:
        print(f"retipy: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        code = args.handler(args)
    except UsageError as exc:
        print(f"retipy: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RetipyError as exc:
        logger.debug("Command failed", exc_info=True)
        print(f"retipy: error: {exc}", file=sys.stderr)
        return EXIT_FAILURE

    if args.profile:
        print(profile_report(), file=sys.stderr)
        clear_profile()
    return code


if __name__ == "__main__":
    sys.exit(main())
