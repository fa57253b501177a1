"""One function per subcommand; each returns the report to print and the exit status."""

import logging
from collections.abc import Callable
from fractions import Fraction

import numpy as np
from blockstab.base_model import FrozenModel, parse_model
from blockstab.blocks import BlockBarcode, bottleneck_block
from blockstab.errors import InputValidationError
from blockstab.extension import extend_barcode, zz_bottleneck
from blockstab.grid2d import GridModule2D, GridMorphism2D, freeness_certificate, interpolant, koszul_xi1
from blockstab.intervals import Barcode1D, bottleneck_1d
from blockstab.levelset import (
    PerturbedGraph,
    PLGraph,
    interlevel_blocks,
    level_barcode,
    perturb,
    pointwise_mismatches,
    random_pl_graph,
    reeb_lower_bound,
)
from blockstab.values import ExtendedNumber, format_extended, is_finite
from blockstab.witness import InterleavingWitness, witness_from_matching, witness_violations
from blockstab.zigzag import ZigzagBarcode, ZigzagInterval, ZigzagModule, decompose_zz

from .config import BottleneckKind, OutputFormat, Subcommand
from .models import (
    ExtendRequest,
    InterpolantReport,
    LevelsetReport,
    PerturbReport,
    PerturbTrial,
    RunConfig,
    SchemaVersionReport,
    WitnessReport,
    WitnessRequest,
)

logger: logging.Logger = logging.getLogger(__name__)

type Report = FrozenModel | list[FrozenModel] | ExtendedNumber | int | str
type Outcome = tuple[Report, int]


def decompose(config: RunConfig) -> Outcome:
    barcode: ZigzagBarcode = decompose_zz(parse_model(config.inputs[0], ZigzagModule))
    return list(barcode.sorted().intervals), 0


def extend(config: RunConfig) -> Outcome:
    request: ExtendRequest = parse_model(config.inputs[0], ExtendRequest)
    blocks: BlockBarcode = extend_barcode(ZigzagBarcode(intervals=request.intervals), request.orientation)
    return list(blocks.blocks), 0


def bottleneck(config: RunConfig) -> Outcome:
    first, second = config.inputs
    match config.kind:
        case BottleneckKind.LINE:
            return bottleneck_1d(parse_model(first, Barcode1D), parse_model(second, Barcode1D)), 0
        case BottleneckKind.BLOCK:
            return bottleneck_block(parse_model(first, BlockBarcode), parse_model(second, BlockBarcode)), 0
        case BottleneckKind.ZIGZAG:
            return zz_bottleneck(parse_model(first, ZigzagModule), parse_model(second, ZigzagModule)), 0


def levelset(config: RunConfig) -> Outcome:
    graph: PLGraph = parse_model(config.inputs[0], PLGraph)
    blocks: BlockBarcode = interlevel_blocks(graph, config.degree, config.field)
    mismatches: list[str] = pointwise_mismatches(graph, config.degree, blocks)
    report: LevelsetReport = LevelsetReport(
        degree=config.degree,
        blocks=blocks.sorted(),
        level=level_barcode(graph, config.degree, config.field).sorted(),
        certificate=not mismatches,
        mismatches=tuple(mismatches),
    )
    return report, 0 if report.certificate else 1


def _trial(config: RunConfig, base: PLGraph | None, index: int) -> PerturbTrial:
    rng: np.random.Generator = np.random.default_rng(np.random.SeedSequence([config.seed, index]))
    graph: PLGraph = base if base is not None else random_pl_graph(rng)
    perturbed: PerturbedGraph = perturb(graph, config.delta, rng)
    realized: Fraction = perturbed.realized_distance
    block: list[ExtendedNumber] = []
    level: list[ExtendedNumber] = []
    for degree in (0, 1):
        block.append(
            bottleneck_block(
                interlevel_blocks(graph, degree, config.field),
                interlevel_blocks(perturbed.graph, degree, config.field),
            ),
        )
        level.append(
            bottleneck_1d(level_barcode(graph, degree, config.field), level_barcode(perturbed.graph, degree, config.field)),
        )
    return PerturbTrial(
        trial=index,
        seed=f"{config.seed}:{index}",
        realized=realized,
        block=(block[0], block[1]),
        level=(level[0], level[1]),
        passed=all(distance <= realized for distance in block + level),
    )


def perturbation(config: RunConfig) -> Outcome:
    base: PLGraph | None = parse_model(config.inputs[0], PLGraph) if config.inputs else None
    trials: list[PerturbTrial] = [_trial(config, base, index) for index in range(config.trials)]
    ratios: list[Fraction] = [
        max(trial.block + trial.level) / trial.realized
        for trial in trials
        if trial.realized > 0 and all(is_finite(d) for d in trial.block + trial.level)
    ]
    report: PerturbReport = PerturbReport(
        delta=config.delta,
        trials=tuple(trials),
        worst_ratio=max(ratios) if ratios else None,
    )
    for trial in trials:
        if not trial.passed:
            logger.warning("trial %d exceeds the realized distance %s", trial.trial, trial.realized)
    return report, 0 if report.passed else 1


def witness(config: RunConfig) -> Outcome:
    request: WitnessRequest = parse_model(config.inputs[0], WitnessRequest)
    built: InterleavingWitness = witness_from_matching(request.matching, request.source, request.target, config.epsilon)
    violations: list[str] = witness_violations(built)
    report: WitnessReport = WitnessReport(
        epsilon=config.epsilon,
        valid=not violations,
        witness=built,
        violations=tuple(violations),
    )
    return report, 0 if report.valid else 1


def betti(config: RunConfig) -> Outcome:
    module: GridModule2D = parse_model(config.inputs[0], GridModule2D)
    if config.point is None:
        msg = "betti needs --point x,y"
        raise InputValidationError(msg)
    return koszul_xi1(module, config.point), 0


def interpolation(config: RunConfig) -> Outcome:
    if config.epsilon.denominator != 1:
        msg = f"interpolant takes a whole number of lattice steps, got --eps {config.epsilon}"
        raise InputValidationError(msg)
    morphism: GridMorphism2D = parse_model(config.inputs[0], GridMorphism2D)
    layer: GridModule2D = interpolant(morphism, int(config.epsilon))
    failures: list[tuple[int, int]] = freeness_certificate(layer)
    report: InterpolantReport = InterpolantReport(module=layer, free=not failures, failures=tuple(failures))
    return report, 0 if report.free else 1


def reeb_bound(config: RunConfig) -> Outcome:
    first, second = (parse_model(path, PLGraph) for path in config.inputs)
    return reeb_lower_bound(first, second, config.constants), 0


def schema_version(config: RunConfig) -> Outcome:
    report: SchemaVersionReport = SchemaVersionReport()
    if config.output_format is None:
        return report.schema_version, 0
    return report, 0


COMMANDS: dict[Subcommand, Callable[[RunConfig], Outcome]] = {
    Subcommand.DECOMPOSE: decompose,
    Subcommand.EXTEND: extend,
    Subcommand.BOTTLENECK: bottleneck,
    Subcommand.LEVELSET: levelset,
    Subcommand.PERTURB: perturbation,
    Subcommand.WITNESS: witness,
    Subcommand.BETTI: betti,
    Subcommand.INTERPOLANT: interpolation,
    Subcommand.REEB_BOUND: reeb_bound,
    Subcommand.SCHEMA_VERSION: schema_version,
}


def _tsv_of(item: FrozenModel) -> str:
    if isinstance(item, ZigzagInterval):
        return f"{item.first}\t{item.last}"
    return str(item)


def render(report: Report, output_format: OutputFormat | None) -> str:
    """Render a report as bare text, a JSON document or TSV rows.

    Notes
    -----
    - Scalars print bare unless JSON is asked for, then as a JSON string such as `"5/2"` or `"inf"`.
    """
    if isinstance(report, str):
        return report
    if isinstance(report, (int, Fraction, float)):
        text: str = format_extended(Fraction(report)) if isinstance(report, int) else format_extended(report)
        return f'"{text}"' if output_format is OutputFormat.JSON else text
    if isinstance(report, list):
        if output_format is OutputFormat.TSV:
            return "\n".join(_tsv_of(item) for item in report)
        return "[" + ",".join(item.to_json() for item in report) + "]"
    if output_format is OutputFormat.TSV and hasattr(report, "tsv_rows"):
        return "\n".join("\t".join(row) for row in report.tsv_rows())
    return report.to_json()
