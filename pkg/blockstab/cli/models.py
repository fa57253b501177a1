from fractions import Fraction
from pathlib import Path
from typing import Self

from pydantic import NonNegativeInt, PositiveInt, field_validator, model_validator

from blockstab.base_model import FrozenModel
from blockstab.blocks import BlockBarcode
from blockstab.config import DEFAULT_FIELD, SCHEMA_VERSION, StabilityConstants
from blockstab.grid2d import GridModule2D, Point
from blockstab.intervals import Barcode1D
from blockstab.linalg import ensure_prime
from blockstab.matching import Matching
from blockstab.values import ExtendedValue, NonNegativeRational, Rational
from blockstab.witness import InterleavingWitness
from blockstab.zigzag import ArrowDirection, ZigzagInterval

from .config import INPUT_COUNTS, BottleneckKind, OutputFormat, Subcommand


class RunConfig(FrozenModel):
    """Model for one invocation of the command line.

    Attributes
    ----------
    - `command` (`Subcommand`): What to run
    - `inputs` (`tuple[Path, ...]`): Input JSON files, as many as the subcommand takes
    - `field` (`PositiveInt`): Prime characteristic of the modules `levelset` and `perturb` build from graphs (defaults to `2`); other subcommands read it from their input
    - `seed` (`int`): Root seed of every random draw
    - `epsilon` (`NonNegativeRational`): `--eps`
    - `delta` (`NonNegativeRational`): `--delta`
    - `trials` (`PositiveInt`): `--trials`
    - `output_format` (`OutputFormat`, optional): `--format`; bare text when unset
    - `kind` (`BottleneckKind`): `--kind` of `bottleneck`
    - `degree` (`NonNegativeInt`): `--degree` of `levelset`, `0` or `1`
    - `point` (`Point`, optional): `--point` of `betti`
    - `constants` (`StabilityConstants`): Factors used for certified bounds
    - `verbose` (`bool`): Debug logging on standard error
    """

    command: Subcommand
    inputs: tuple[Path, ...] = ()
    field: PositiveInt = DEFAULT_FIELD
    seed: int = 0
    epsilon: NonNegativeRational = Fraction(0)
    delta: NonNegativeRational = Fraction(0)
    trials: PositiveInt = 1
    output_format: OutputFormat | None = None
    kind: BottleneckKind = BottleneckKind.BLOCK
    degree: NonNegativeInt = 0
    point: Point | None = None
    constants: StabilityConstants = StabilityConstants.PUBLISHED
    verbose: bool = False

    @field_validator("field")
    @classmethod
    def _check_field(cls, value: int) -> int:
        return ensure_prime(value)

    @field_validator("degree")
    @classmethod
    def _check_degree(cls, value: int) -> int:
        if value not in (0, 1):
            msg = f"Homology degree must be 0 or 1, got {value}"
            raise ValueError(msg)
        return value

    @model_validator(mode="after")
    def _check_inputs(self) -> Self:
        least, most = INPUT_COUNTS[self.command]
        if not least <= len(self.inputs) <= most:
            expected: str = str(least) if least == most else f"{least} to {most}"
            msg = f"{self.command} takes {expected} input files, got {len(self.inputs)}"
            raise ValueError(msg)
        if self.command is Subcommand.BETTI and self.point is None:
            msg = "betti needs --point x,y"
            raise ValueError(msg)
        return self


class ExtendRequest(FrozenModel):
    """Model for the input of `extend`.

    Attributes
    ----------
    - `orientation` (`tuple[ArrowDirection, ...]`): Alternating arrow directions of the zigzag
    - `intervals` (`tuple[ZigzagInterval, ...]`): Zigzag barcode over that orientation
    """

    orientation: tuple[ArrowDirection, ...] = ()
    intervals: tuple[ZigzagInterval, ...] = ()


class WitnessRequest(FrozenModel):
    """Model for the input of `witness`.

    Attributes
    ----------
    - `source` (`BlockBarcode`): Barcode of `M`
    - `target` (`BlockBarcode`): Barcode of `N`
    - `matching` (`Matching`): Candidate ε-matching
    """

    source: BlockBarcode
    target: BlockBarcode
    matching: Matching


class LevelsetReport(FrozenModel):
    degree: NonNegativeInt
    blocks: BlockBarcode
    level: Barcode1D
    certificate: bool
    mismatches: tuple[str, ...] = ()

    def tsv_rows(self) -> list[list[str]]:
        rows: list[list[str]] = [["block", str(block)] for block in self.blocks.sorted().blocks]
        rows += [["level", str(interval)] for interval in self.level.sorted().intervals]
        rows.append(["certificate", "pass" if self.certificate else "fail"])
        return rows


class PerturbTrial(FrozenModel):
    """Model for one row of the perturbation experiment.

    Attributes
    ----------
    - `trial` (`NonNegativeInt`): Trial index
    - `seed` (`str`): Seed entropy `root:index` the trial drew from
    - `realized` (`Rational`): Realized sup-distance `d_∞(γ, κ)`
    - `block` (`tuple[ExtendedValue, ExtendedValue]`): `d_b(B_i(γ), B_i(κ))` for `i = 0, 1`
    - `level` (`tuple[ExtendedValue, ExtendedValue]`): `d_b(L_i(γ), L_i(κ))` for `i = 0, 1`
    - `passed` (`bool`): Every distance is at most `realized`
    """

    trial: NonNegativeInt
    seed: str
    realized: Rational
    block: tuple[ExtendedValue, ExtendedValue]
    level: tuple[ExtendedValue, ExtendedValue]
    passed: bool


class PerturbReport(FrozenModel):
    delta: NonNegativeRational
    trials: tuple[PerturbTrial, ...]
    worst_ratio: Rational | None = None

    @property
    def passed(self) -> bool:
        return all(trial.passed for trial in self.trials)

    def tsv_rows(self) -> list[list[str]]:
        rows: list[list[str]] = [["trial", "seed", "realized", "block0", "block1", "level0", "level1", "pass"]]
        for trial in self.trials:
            dumped: dict[str, object] = trial.model_dump(mode="json")
            rows.append(
                [
                    str(trial.trial),
                    trial.seed,
                    str(dumped["realized"]),
                    *(str(value) for value in dumped["block"]),
                    *(str(value) for value in dumped["level"]),
                    "pass" if trial.passed else "fail",
                ],
            )
        rows.append(["worst_ratio", "" if self.worst_ratio is None else str(self.worst_ratio)])
        return rows


class WitnessReport(FrozenModel):
    epsilon: NonNegativeRational
    valid: bool
    witness: InterleavingWitness
    violations: tuple[str, ...] = ()

    def tsv_rows(self) -> list[list[str]]:
        rows: list[list[str]] = [["verdict", "pass" if self.valid else "fail"]]
        rows += [["violation", violation] for violation in self.violations]
        return rows


class InterpolantReport(FrozenModel):
    """Model for the output of `interpolant`.

    Attributes
    ----------
    - `module` (`GridModule2D`): The interpolant `L^ε(f)`
    - `free` (`bool`): `ξ₁` vanishes on the window interior
    - `failures` (`tuple[Point, ...]`): Interior points where `ξ₁ ≠ 0`
    - `certificate` (`str`): Names the window-restricted freeness proxy
    """

    module: GridModule2D
    free: bool
    failures: tuple[Point, ...] = ()
    certificate: str = "window-interior xi1"

    def tsv_rows(self) -> list[list[str]]:
        rows: list[list[str]] = [["free", "yes" if self.free else "no", self.certificate]]
        rows += [["failure", f"{x},{y}"] for x, y in self.failures]
        return rows


class SchemaVersionReport(FrozenModel):
    schema_version: str = SCHEMA_VERSION
