"""Interleavings built from matchings, and the typed matching existence check for block barcodes."""

import logging
from fractions import Fraction

from blockstab.blocks import Block, BlockBarcode, BlockKind, block_is_interleaved, block_is_trivial, check_matching_block
from blockstab.errors import InvalidMatchingError
from blockstab.intervals import Barcode1D, Interval1D, check_matching_1d, contains, thicken
from blockstab.matching import Matching, find_covering_matching
from blockstab.values import gap

from .models import InterleavingWitness, LineInterleavingWitness, LineWitnessPair, Overlap, Region, WitnessPair

logger: logging.Logger = logging.getLogger(__name__)


def as_region(block: Block) -> Region:
    return Region(kind=block.kind, a=block.a, b=block.b)


def pullback(block: Block, epsilon: Fraction) -> Region:
    """Return `{(x, y) : (x − ε, y + ε) ∈ block}`, the support of the shifted block module."""
    match block.kind:
        case BlockKind.O:
            return Region(kind=block.kind, a=block.a + epsilon, b=block.b - epsilon)
        case BlockKind.CO:
            return Region(kind=block.kind, a=block.a - epsilon, b=block.b - epsilon)
        case BlockKind.OC:
            return Region(kind=block.kind, a=block.a + epsilon, b=block.b + epsilon)
        case BlockKind.C:
            return Region(kind=block.kind, a=block.a - epsilon, b=block.b + epsilon)


def _close(first: Block, second: Block, epsilon: Fraction) -> bool:
    return first.kind is second.kind and gap(first.a, second.a) <= epsilon and gap(first.b, second.b) <= epsilon


def witness_from_matching(
    matching: Matching,
    source: BlockBarcode,
    target: BlockBarcode,
    epsilon: Fraction,
) -> InterleavingWitness:
    """Build the candidate ε-interleaving of an ε-matching between block barcodes.

    Args
    ----
    - `matching` (`Matching`): ε-matching from `source` to `target`
    - `source`, `target` (`BlockBarcode`): Barcodes of `M` and `N`
    - `epsilon` (`Fraction`): `ε ≥ 0`

    Returns
    -------
    - `InterleavingWitness`: Pairs of same-type blocks within `ε` get unit scalars on `J ∩ K(ε)` and `K ∩ J(ε)`;
      pairs matched only as 2ε-trivial blocks, and unmatched blocks, get zero components

    Raises
    ------
    - `InvalidMatchingError`: if `matching` is not an ε-matching
    """
    if not check_matching_block(matching, source, target, epsilon):
        raise InvalidMatchingError(epsilon)
    pairs: list[WitnessPair] = []
    for i, j in matching.pairs:
        first: Block = source.blocks[i]
        second: Block = target.blocks[j]
        if not _close(first, second, epsilon):
            pairs.append(WitnessPair(source=i, target=j))
            continue
        pairs.append(
            WitnessPair(
                source=i,
                target=j,
                forward=Overlap(first=as_region(first), second=pullback(second, epsilon)),
                backward=Overlap(first=as_region(second), second=pullback(first, epsilon)),
            ),
        )
    return InterleavingWitness(epsilon=epsilon, source=source, target=target, pairs=tuple(pairs))


def shift_down(interval: Interval1D, epsilon: Fraction) -> Interval1D:
    """Return `{t : t + ε ∈ interval}`."""
    return Interval1D.make(
        interval.left.v - epsilon,
        interval.right.v - epsilon,
        left_closed=interval.left.closed,
        right_closed=interval.right.closed,
    )


def witness_from_matching_1d(
    matching: Matching,
    source: Barcode1D,
    target: Barcode1D,
    epsilon: Fraction,
) -> LineInterleavingWitness:
    """Build the candidate ε-interleaving of an ε-matching between interval barcodes.

    Raises
    ------
    - `InvalidMatchingError`: if `matching` is not an ε-matching
    """
    if not check_matching_1d(matching, source, target, epsilon):
        raise InvalidMatchingError(epsilon)
    pairs: list[LineWitnessPair] = []
    for i, j in matching.pairs:
        first: Interval1D = source.intervals[i]
        second: Interval1D = target.intervals[j]
        if not (contains(thicken(second, epsilon), first) and contains(thicken(first, epsilon), second)):
            pairs.append(LineWitnessPair(source=i, target=j))
            continue
        pairs.append(
            LineWitnessPair(
                source=i,
                target=j,
                forward=(first, shift_down(second, epsilon)),
                backward=(second, shift_down(first, epsilon)),
            ),
        )
    return LineInterleavingWitness(epsilon=epsilon, source=source, target=target, pairs=tuple(pairs))


def _must_match(block: Block, epsilon: Fraction) -> bool:
    match block.kind:
        case BlockKind.C:
            return True
        case BlockKind.O:
            return not block_is_trivial(block, 5 * epsilon)
        case _:
            return not block_is_trivial(block, 2 * epsilon)


def typed_stability_matching(source: BlockBarcode, target: BlockBarcode, epsilon: Fraction) -> Matching | None:
    """Find a type-preserving matching of ε-interleaved blocks that covers the blocks stability requires.

    Returns
    -------
    - `Matching | None`: A matching covering every `c` block, every `o` block longer than `10ε` and every
      `co`/`oc` block longer than `2ε` on both sides, or `None`
    """
    return find_covering_matching(
        len(source.blocks),
        len(target.blocks),
        source_required=lambda i: _must_match(source.blocks[i], epsilon),
        target_required=lambda j: _must_match(target.blocks[j], epsilon),
        compatible=lambda i, j: source.blocks[i].kind is target.blocks[j].kind
        and block_is_interleaved(source.blocks[i], target.blocks[j], epsilon),
    )


def block_stability_check(source: BlockBarcode, target: BlockBarcode, epsilon: Fraction) -> bool:
    """Decide whether the typed matching of `typed_stability_matching` exists at `ε`."""
    found: bool = typed_stability_matching(source, target, epsilon) is not None
    logger.debug("typed stability matching at ε=%s: %s", epsilon, found)
    return found
