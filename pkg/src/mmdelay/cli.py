"""Command-line front end.

    mmdelay delay-sweep      visibility vs delay (z_R units, or ns for several waists)
    mmdelay mode-sweep       visibility vs highest mode order at fixed delays
    mmdelay wavelength-sweep highest mode order vs wavelength for fibers
    mmdelay beam-image       intensity cross-sections of random beams
    mmdelay validate         fast invariant checks

Exit codes: 0 success, 2 configuration error, 3 numerical precondition
failure, 4 I/O error.
"""
from __future__ import annotations

import argparse
import logging
import sys

from . import presets
from .emit import emit, parse_formats
from .errors import ConfigError, GridTooSmallError, InvalidParameterError
from .sweeps import SweepKind, load_config, parse_config, render_beam_images, run_sweep, with_overrides

log = logging.getLogger("mmdelay")

EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC, EXIT_IO = 0, 2, 3, 4

_KINDS = {
    "delay-sweep": (SweepKind.DELAY_RAYLEIGH, SweepKind.DELAY_TIME),
    "mode-sweep": (SweepKind.MODE_ORDER,),
    "wavelength-sweep": (SweepKind.WAVELENGTH_N,),
    "beam-image": (SweepKind.BEAM_IMAGE,),
}
_DEFAULT_PRESET = {
    "delay-sweep": "delay-rayleigh",
    "mode-sweep": "mode-order",
    "wavelength-sweep": "wavelength",
    "beam-image": "beam-image",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mmdelay", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _KINDS:
        p = sub.add_parser(name)
        p.add_argument("--config", help="INI sweep configuration (defaults to a built-in preset)")
        p.add_argument("--preset", choices=sorted(presets.PRESETS), help="use a built-in configuration")
        p.add_argument("--out", default="results", help="output directory")
        p.add_argument("--seed", type=int, help="master seed (u64)")
        p.add_argument("--trials", type=int)
        p.add_argument("--grid", type=int, help="samples per grid axis")
        p.add_argument("--workers", type=int, help="threads running trials in parallel")
        p.add_argument("--formats", default="csv,json,svg")
        p.add_argument("--stem", help="output file name stem")
    sub.add_parser("validate")
    return parser


def _load(args):
    if args.config:
        config = load_config(args.config)
    else:
        config = parse_config(presets.PRESETS[args.preset or _DEFAULT_PRESET[args.command]])
    if config.kind not in _KINDS[args.command]:
        raise ConfigError(f"{args.command} cannot run a {config.kind.value} configuration")
    if args.seed is not None and not 0 <= args.seed < 2**64:
        raise ConfigError("seed must be an unsigned 64-bit integer")
    return with_overrides(config, master_seed=args.seed, trials=args.trials,
                          grid_samples=args.grid, workers=args.workers)


def _validate() -> int:
    from .validation import run_checks

    failed = 0
    for check in run_checks():
        print(f"[{'PASS' if check.passed else 'FAIL'}] {check.name}: {check.detail}")
        failed += not check.passed
    return EXIT_OK if not failed else EXIT_NUMERIC


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.command == "validate":
        return _validate()
    try:
        config = _load(args)
        if args.command == "beam-image":
            paths = render_beam_images(config, args.out)
        else:
            formats = parse_formats(args.formats)
            curves = run_sweep(config)
            paths = emit(curves, formats, args.out, args.stem or config.kind.value)
    except GridTooSmallError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ConfigError, InvalidParameterError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    for p in paths:
        print(p)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
