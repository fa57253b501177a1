import logging
from fractions import Fraction
from itertools import combinations

from blockstab.errors import InputValidationError
from blockstab.intervals import Barcode1D, Interval1D
from blockstab.matching import Matching, find_covering_matching, infimum_over_candidates
from blockstab.values import ExtendedNumber, gap, is_finite

from .config import BlockKind
from .models import Block, BlockBarcode

logger: logging.Logger = logging.getLogger(__name__)


def block_contains(block: Block, x: Fraction, y: Fraction) -> bool:
    """Decide whether `(x, y) ∈ 𝕌` lies in the block region.

    Raises
    ------
    - `InputValidationError`: if `x > y`
    """
    if x > y:
        msg = f"Point ({x}, {y}) is not in 𝕌: need x ≤ y"
        raise InputValidationError(msg)
    return block.contains(x, y)


def block_is_trivial(block: Block, t: Fraction) -> bool:
    """Decide whether the block module is killed by its internal shift of size `t/2` in each coordinate.

    Args
    ----
    - `block` (`Block`): Block
    - `t` (`Fraction`): Plays the role of `2ε`

    Returns
    -------
    - `bool`: `b − a ≤ t` for `co`/`oc`, `b − a ≤ 2t` for `o`, never for `c`
    """
    if t < 0:
        msg = f"t must be ≥ 0, got {t}"
        raise InputValidationError(msg)
    match block.kind:
        case BlockKind.CO | BlockKind.OC:
            return block.length <= t
        case BlockKind.O:
            return block.length <= 2 * t
        case _:
            return False


def block_is_interleaved(first: Block, second: Block, epsilon: Fraction) -> bool:
    """Decide whether two block modules are ε-interleaved.

    Returns
    -------
    - `bool`: same kind with both coordinates within `ε`, or both blocks 2ε-trivial
    """
    if epsilon < 0:
        msg = f"ε must be ≥ 0, got {epsilon}"
        raise InputValidationError(msg)
    if first.kind is second.kind and gap(first.a, second.a) <= epsilon and gap(first.b, second.b) <= epsilon:
        return True
    return block_is_trivial(first, 2 * epsilon) and block_is_trivial(second, 2 * epsilon)


def split_by_kind(barcode: BlockBarcode) -> dict[BlockKind, list[int]]:
    """Group block indices by type."""
    groups: dict[BlockKind, list[int]] = {kind: [] for kind in BlockKind}
    for index, block in enumerate(barcode.blocks):
        groups[block.kind].append(index)
    return groups


def _diagonal_interval(block: Block) -> Interval1D | None:
    if block.is_switched:
        return None
    return Interval1D.make(
        block.a,
        block.b,
        left_closed=block.kind.left_closed and is_finite(block.a),
        right_closed=block.kind.right_closed and is_finite(block.b),
    )


def _diagonal_positions(barcode: BlockBarcode) -> dict[int, int]:
    positions: dict[int, int] = {}
    for index, block in enumerate(barcode.blocks):
        if not block.is_switched:
            positions[index] = len(positions)
    return positions


def diag_barcode(barcode: BlockBarcode) -> Barcode1D:
    """Restrict a block barcode to the diagonal.

    Returns
    -------
    - `Barcode1D`: One interval per block meeting the diagonal, in block order; switched blocks contribute nothing
    """
    return Barcode1D(
        intervals=tuple(
            interval for block in barcode.blocks if (interval := _diagonal_interval(block)) is not None
        ),
    )


def diag_matching(matching: Matching, source: BlockBarcode, target: BlockBarcode) -> Matching:
    """Restrict a block matching to the diagonal barcodes (indices refer to `diag_barcode` outputs)."""
    matching.check_indices(len(source.blocks), len(target.blocks))
    source_positions: dict[int, int] = _diagonal_positions(source)
    target_positions: dict[int, int] = _diagonal_positions(target)
    return Matching(
        pairs=tuple(
            (source_positions[i], target_positions[j])
            for i, j in matching.pairs
            if i in source_positions and j in target_positions
        ),
    )


def check_matching_block(matching: Matching, source: BlockBarcode, target: BlockBarcode, epsilon: Fraction) -> bool:
    """Decide whether `matching` is an ε-matching between two block barcodes.

    Raises
    ------
    - `InputValidationError`: if an index is out of range
    """
    matching.check_indices(len(source.blocks), len(target.blocks))
    for i, block in enumerate(source.blocks):
        if i not in matching.coim and not block_is_trivial(block, 2 * epsilon):
            return False
    for j, block in enumerate(target.blocks):
        if j not in matching.im and not block_is_trivial(block, 2 * epsilon):
            return False
    return all(block_is_interleaved(source.blocks[i], target.blocks[j], epsilon) for i, j in matching.pairs)


def find_matching_block(source: BlockBarcode, target: BlockBarcode, epsilon: Fraction) -> Matching | None:
    """Return an ε-matching between two block barcodes, or `None` when none exists."""
    return find_covering_matching(
        len(source.blocks),
        len(target.blocks),
        source_required=lambda i: not block_is_trivial(source.blocks[i], 2 * epsilon),
        target_required=lambda j: not block_is_trivial(target.blocks[j], 2 * epsilon),
        compatible=lambda i, j: block_is_interleaved(source.blocks[i], target.blocks[j], epsilon),
    )


def bottleneck_candidates_block(source: BlockBarcode, target: BlockBarcode) -> set[Fraction]:
    blocks: tuple[Block, ...] = source.blocks + target.blocks
    candidates: set[Fraction] = {Fraction(0)}
    for coordinate in ("a", "b"):
        values: set[Fraction] = {getattr(block, coordinate) for block in blocks if is_finite(getattr(block, coordinate))}
        candidates |= {abs(u - v) for u, v in combinations(sorted(values), 2)}
    for block in blocks:
        if not is_finite(block.length):
            continue
        if block.kind in (BlockKind.CO, BlockKind.OC):
            candidates.add(block.length / 2)
        elif block.kind is BlockKind.O:
            candidates.add(block.length / 4)
    return candidates


def bottleneck_block(source: BlockBarcode, target: BlockBarcode) -> ExtendedNumber:
    """Return the block bottleneck distance, the infimum of ε admitting an ε-matching.

    Returns
    -------
    - `ExtendedNumber`: The infimum, or `+∞` when some closed block can never be matched
    """
    distance: ExtendedNumber = infimum_over_candidates(
        bottleneck_candidates_block(source, target),
        lambda epsilon: find_matching_block(source, target, epsilon) is not None,
    )
    logger.debug("bottleneck_block over %d/%d blocks = %s", len(source), len(target), distance)
    return distance
