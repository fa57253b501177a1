from .config import BlockKind
from .distance import (
    block_contains,
    block_is_interleaved,
    block_is_trivial,
    bottleneck_block,
    bottleneck_candidates_block,
    check_matching_block,
    diag_barcode,
    diag_matching,
    find_matching_block,
    split_by_kind,
)
from .models import Block, BlockBarcode, region_contains

__all__ = [
    "BlockKind",
    "Block",
    "BlockBarcode",
    "region_contains",
    "block_contains",
    "block_is_trivial",
    "block_is_interleaved",
    "split_by_kind",
    "diag_barcode",
    "diag_matching",
    "check_matching_block",
    "find_matching_block",
    "bottleneck_candidates_block",
    "bottleneck_block",
]
