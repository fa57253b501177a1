from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blockstab.blocks import Block, BlockBarcode, BlockKind, bottleneck_block, find_matching_block
from blockstab.config import StabilityConstants
from blockstab.errors import InvalidMatchingError
from blockstab.intervals import Barcode1D, find_matching_1d
from blockstab.matching import Matching
from blockstab.witness import (
    Region,
    block_stability_check,
    pullback,
    shift_down,
    typed_stability_matching,
    verification_values,
    verify_witness,
    verify_witness_1d,
    witness_from_matching,
    witness_from_matching_1d,
    witness_violations,
)

from .strategies import barcodes_1d, block_barcodes, block_barcodes_of, blocks, epsilons


def test_pullback_shifts_every_kind() -> None:
    epsilon = Fraction(1)
    assert pullback(Block.parse("(0, 10)"), epsilon) == Region(kind=BlockKind.O, a=Fraction(1), b=Fraction(9))
    assert pullback(Block.parse("[0, 10)"), epsilon) == Region(kind=BlockKind.CO, a=Fraction(-1), b=Fraction(9))
    assert pullback(Block.parse("(0, 10]"), epsilon) == Region(kind=BlockKind.OC, a=Fraction(1), b=Fraction(11))
    assert pullback(Block.parse("[0, 10]"), epsilon) == Region(kind=BlockKind.C, a=Fraction(-1), b=Fraction(11))
    assert str(shift_down(Barcode1D.parse("[2, 5)").intervals[0], Fraction(1, 2))) == "[3/2, 9/2)"


def test_verification_values() -> None:
    values = verification_values([Fraction(0), Fraction(2)], Fraction(1))
    assert values[0] == -3
    assert values[-1] == 5
    assert Fraction(1, 2) in values
    assert verification_values([], Fraction(0)) == [-1, 0, 1]


def test_open_blocks_interleave() -> None:
    source, target = BlockBarcode.parse("(0, 10)"), BlockBarcode.parse("(1, 9)")
    witness = witness_from_matching(Matching.identity(1), source, target, Fraction(1))
    assert witness.pairs[0].forward is not None
    assert witness_violations(witness) == []
    with pytest.raises(InvalidMatchingError):
        witness_from_matching(Matching.identity(1), source, target, Fraction(1, 2))


def test_trivial_blocks_get_the_zero_witness() -> None:
    witness = witness_from_matching(Matching(), BlockBarcode.parse("(0, 1)"), BlockBarcode(), Fraction(1, 2))
    assert witness.pairs == ()
    assert verify_witness(witness)
    with pytest.raises(InvalidMatchingError):
        witness_from_matching(Matching(), BlockBarcode.parse("[0, 1]"), BlockBarcode(), Fraction(100))


def test_mixed_barcodes_interleave() -> None:
    source = BlockBarcode.parse("[0, 4]", "[0, 1)", "[3, 1]")
    target = BlockBarcode.parse("[1, 5]", "[7/2, 1/2]")
    matching = Matching(pairs=((0, 0), (2, 1)))
    assert verify_witness(witness_from_matching(matching, source, target, Fraction(1)))


def test_wrong_supports_are_reported() -> None:
    source, target = BlockBarcode.parse("(0, 10)"), BlockBarcode.parse("(1, 9)")
    witness = witness_from_matching(Matching.identity(1), source, target, Fraction(1))
    broken = witness.model_copy(update={"pairs": (witness.pairs[0].model_copy(update={"backward": None}),)})
    violations = witness_violations(broken)
    assert violations
    assert all("source block" in v or "target block" in v or "natural" in v for v in violations)


def test_interval_witnesses() -> None:
    source, target = Barcode1D.parse("[0, 10]"), Barcode1D.parse("[1, 9]")
    assert verify_witness_1d(witness_from_matching_1d(Matching.identity(1), source, target, Fraction(1)))
    with pytest.raises(InvalidMatchingError):
        witness_from_matching_1d(Matching.identity(1), source, target, Fraction(1, 2))
    lonely = witness_from_matching_1d(Matching(), Barcode1D.parse("[0, 1)"), Barcode1D(), Fraction(1, 2))
    assert verify_witness_1d(lonely)


def test_block_stability_check_examples() -> None:
    long_open = BlockBarcode.parse("(0, 10)")
    assert block_stability_check(long_open, BlockBarcode(), Fraction(1))
    assert not block_stability_check(long_open, BlockBarcode(), Fraction(9, 10))
    assert not block_stability_check(BlockBarcode.parse("[0, 1]"), BlockBarcode(), Fraction(50))
    assert not block_stability_check(BlockBarcode.parse("[0, 3)"), BlockBarcode(), Fraction(1))
    assert block_stability_check(BlockBarcode.parse("[0, 3)"), BlockBarcode(), Fraction(3, 2))
    assert not block_stability_check(BlockBarcode.parse("[0, 4)"), BlockBarcode.parse("(0, 4]"), Fraction(1))
    closed = BlockBarcode.parse("[0, 10]")
    assert typed_stability_matching(closed, BlockBarcode.parse("[1, 9]"), Fraction(1)) == Matching.identity(1)
    assert typed_stability_matching(closed, BlockBarcode.parse("[1, 9]"), Fraction(1, 2)) is None


@st.composite
def nudged(draw: st.DrawFn, epsilon: Fraction) -> tuple[Block, Block]:
    block: Block = draw(blocks())
    steps = st.integers(-4, 4)
    return block, Block.make(
        block.kind,
        block.a + epsilon * Fraction(draw(steps), 4),
        block.b + epsilon * Fraction(draw(steps), 4),
    )


@st.composite
def nudged_barcodes(draw: st.DrawFn) -> tuple[BlockBarcode, BlockBarcode, Fraction]:
    epsilon: Fraction = draw(st.sampled_from([Fraction(1, 8), Fraction(3, 16)]))
    pairs: list[tuple[Block, Block]] = draw(st.lists(nudged(epsilon), max_size=3))
    return (
        BlockBarcode(blocks=tuple(first for first, _ in pairs)),
        BlockBarcode(blocks=tuple(second for _, second in pairs)),
        epsilon,
    )


@given(nudged_barcodes())
def test_nudged_barcodes_are_interleaved(case: tuple[BlockBarcode, BlockBarcode, Fraction]) -> None:
    source, target, epsilon = case
    identity = Matching.identity(len(source))
    assert verify_witness(witness_from_matching(identity, source, target, epsilon))
    assert block_stability_check(source, target, epsilon)
    assert bottleneck_block(source, target) <= epsilon


def _check_accepted_matchings(source: BlockBarcode, target: BlockBarcode, epsilon: Fraction) -> None:
    found = find_matching_block(source, target, epsilon)
    if found is not None:
        assert verify_witness(witness_from_matching(found, source, target, epsilon))
    typed = typed_stability_matching(source, target, epsilon)
    if typed is not None:
        # unmatched open blocks may reach 10ε, so the typed matching is a (5/2)ε-matching
        widened = StabilityConstants.PUBLISHED.value.block * epsilon
        assert verify_witness(witness_from_matching(typed, source, target, widened))


@settings(max_examples=40)
@given(block_barcodes, block_barcodes, epsilons)
def test_accepted_matchings_yield_interleavings(source: BlockBarcode, target: BlockBarcode, epsilon: Fraction) -> None:
    _check_accepted_matchings(source, target, epsilon)


@pytest.mark.slow
@settings(max_examples=200)
@given(block_barcodes_of(5), block_barcodes_of(5), epsilons)
def test_accepted_matchings_yield_interleavings_at_scale(
    source: BlockBarcode,
    target: BlockBarcode,
    epsilon: Fraction,
) -> None:
    _check_accepted_matchings(source, target, epsilon)


@given(barcodes_1d, barcodes_1d, epsilons)
def test_accepted_interval_matchings_yield_interleavings(first: Barcode1D, second: Barcode1D, epsilon: Fraction) -> None:
    found = find_matching_1d(first, second, epsilon)
    if found is not None:
        assert verify_witness_1d(witness_from_matching_1d(found, first, second, epsilon))
