from .blocks import Block, BlockBarcode, BlockKind, bottleneck_block
from .config import DEFAULT_FIELD, MAX_FIELD, SCHEMA_VERSION, StabilityConstants
from .errors import BaseBlockstabError, ConsistencyError, InputValidationError
from .extension import extend_barcode, module_blocks, zz_bottleneck
from .grid2d import GridModule2D, GridMorphism2D, interpolant, koszul_xi1
from .intervals import Barcode1D, Interval1D, bottleneck_1d
from .levelset import PLGraph, interlevel_blocks, level_barcode, levelset_zigzag
from .matching import Matching
from .witness import InterleavingWitness, block_stability_check, witness_from_matching
from .zigzag import ZigzagBarcode, ZigzagInterval, ZigzagModule, decompose_zz

__all__: list[str] = [
    "DEFAULT_FIELD",
    "MAX_FIELD",
    "SCHEMA_VERSION",
    "StabilityConstants",
    "BaseBlockstabError",
    "InputValidationError",
    "ConsistencyError",
    "Interval1D",
    "Barcode1D",
    "bottleneck_1d",
    "Block",
    "BlockKind",
    "BlockBarcode",
    "bottleneck_block",
    "Matching",
    "ZigzagModule",
    "ZigzagInterval",
    "ZigzagBarcode",
    "decompose_zz",
    "extend_barcode",
    "module_blocks",
    "zz_bottleneck",
    "PLGraph",
    "levelset_zigzag",
    "interlevel_blocks",
    "level_barcode",
    "GridModule2D",
    "GridMorphism2D",
    "koszul_xi1",
    "interpolant",
    "InterleavingWitness",
    "witness_from_matching",
    "block_stability_check",
]
