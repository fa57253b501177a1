"""The `blockstab` command line: one subcommand per computation, JSON files in, reports on standard output."""

import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path

from pydantic import ValidationError

from blockstab.config import StabilityConstants
from blockstab.errors import BaseBlockstabError, InputValidationError
from blockstab.values import parse_nonnegative_rational

from .commands import COMMANDS, Outcome, render
from .config import BottleneckKind, OutputFormat, Subcommand
from .models import RunConfig

logger: logging.Logger = logging.getLogger(__name__)

_INPUT_HELP: dict[Subcommand, str] = {
    Subcommand.DECOMPOSE: "ZigzagModule JSON",
    Subcommand.EXTEND: "JSON with an orientation and a zigzag barcode",
    Subcommand.BOTTLENECK: "Two barcodes (or zigzag modules) of the same --kind",
    Subcommand.LEVELSET: "PLGraph JSON",
    Subcommand.PERTURB: "PLGraph JSON; random graphs are drawn when omitted",
    Subcommand.WITNESS: "JSON with source and target block barcodes and a matching",
    Subcommand.BETTI: "GridModule2D JSON",
    Subcommand.INTERPOLANT: "GridMorphism2D JSON",
    Subcommand.REEB_BOUND: "Two PLGraph JSON files",
}

_FIELD_HELP: str = "Prime characteristic below 32768 (default 2)"


def _point(raw: str) -> tuple[int, int]:
    try:
        x, y = (int(part) for part in raw.split(","))
    except ValueError as exc:
        msg = f"expected x,y integers, got {raw!r}"
        raise argparse.ArgumentTypeError(msg) from exc
    return x, y


def _rational(raw: str) -> Fraction:
    try:
        return parse_nonnegative_rational(raw)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    """Build the parser with every subcommand and its options."""
    parser: argparse.ArgumentParser = argparse.ArgumentParser(
        prog="blockstab",
        description="Barcodes and stability checks for zigzag and block-decomposable persistence modules.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in Subcommand:
        sub: argparse.ArgumentParser = subparsers.add_parser(command.value)
        if command in _INPUT_HELP:
            sub.add_argument("inputs", nargs="*", type=Path, help=_INPUT_HELP[command])
        sub.add_argument("--format", dest="output_format", choices=[f.value for f in OutputFormat], default=None)
        sub.add_argument("--verbose", action="store_true", help="Debug logging on standard error")
        match command:
            case Subcommand.BOTTLENECK:
                sub.add_argument("--kind", choices=[k.value for k in BottleneckKind], default=BottleneckKind.BLOCK.value)
            case Subcommand.LEVELSET:
                sub.add_argument("--degree", type=int, default=0, help="Homology degree, 0 or 1")
                sub.add_argument("--field", type=int, default=None, help=_FIELD_HELP)
            case Subcommand.PERTURB:
                sub.add_argument("--field", type=int, default=None, help=_FIELD_HELP)
                sub.add_argument("--delta", type=_rational, required=True, help="Largest vertex shift")
                sub.add_argument("--trials", type=int, default=1)
                sub.add_argument("--seed", type=int, default=0)
            case Subcommand.WITNESS | Subcommand.INTERPOLANT:
                sub.add_argument("--eps", dest="epsilon", type=_rational, required=True)
            case Subcommand.BETTI:
                sub.add_argument("--point", type=_point, required=True, help="Grid point x,y")
            case Subcommand.REEB_BOUND:
                sub.add_argument("--tight", action="store_true", help="Divide by 2 instead of 5")
    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    values: dict[str, object] = {
        key: value
        for key, value in vars(args).items()
        if value is not None and key not in {"tight"}
    }
    if getattr(args, "tight", False):
        values["constants"] = StabilityConstants.TIGHT
    try:
        return RunConfig.model_validate(values)
    except ValidationError as exc:
        details: list[str] = [
            f"{'/'.join(str(part) for part in error['loc']) or '<root>'}: {error['msg']}" for error in exc.errors()
        ]
        msg = "Invalid command line"
        raise InputValidationError(msg, details=details) from exc


def run(config: RunConfig) -> int:
    """Run one subcommand, print its report and return the exit status.

    Returns
    -------
    - `int`: `0` on success, `1` when a certificate or check fails, `2` on bad input, `3` when perturbation gives up
    """
    try:
        report, status = COMMANDS[config.command](config)
    except BaseBlockstabError as exc:
        logger.error("%s", exc)
        return exc.code
    print(render(report, config.output_format))
    return status


def main(argv: list[str] | None = None) -> int:
    args: argparse.Namespace = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        config: RunConfig = _run_config(args)
    except InputValidationError as exc:
        logger.error("%s", exc)
        return exc.code
    return run(config)


__all__: list[str] = [
    "Outcome",
    "RunConfig",
    "build_parser",
    "main",
    "run",
]
