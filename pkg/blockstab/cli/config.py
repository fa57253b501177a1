from enum import StrEnum


class Subcommand(StrEnum):
    """Enum for the subcommands of the `blockstab` command line."""

    DECOMPOSE = "decompose"
    EXTEND = "extend"
    BOTTLENECK = "bottleneck"
    LEVELSET = "levelset"
    PERTURB = "perturb"
    WITNESS = "witness"
    BETTI = "betti"
    INTERPOLANT = "interpolant"
    REEB_BOUND = "reeb-bound"
    SCHEMA_VERSION = "schema-version"


class OutputFormat(StrEnum):
    """Enum for report formats.

    Attributes
    ----------
    - `JSON` (`str`): One JSON document on standard output
    - `TSV` (`str`): Tab-separated rows
    """

    JSON = "json"
    TSV = "tsv"


class BottleneckKind(StrEnum):
    """Enum for the barcodes `bottleneck` compares."""

    LINE = "1d"
    BLOCK = "block"
    ZIGZAG = "zigzag"


INPUT_COUNTS: dict[Subcommand, tuple[int, int]] = {
    Subcommand.DECOMPOSE: (1, 1),
    Subcommand.EXTEND: (1, 1),
    Subcommand.BOTTLENECK: (2, 2),
    Subcommand.LEVELSET: (1, 1),
    Subcommand.PERTURB: (0, 1),
    Subcommand.WITNESS: (1, 1),
    Subcommand.BETTI: (1, 1),
    Subcommand.INTERPOLANT: (1, 1),
    Subcommand.REEB_BOUND: (2, 2),
    Subcommand.SCHEMA_VERSION: (0, 0),
}
