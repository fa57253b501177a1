from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from blockstab.blocks import Block, BlockBarcode, BlockKind
from blockstab.config import StabilityConstants
from blockstab.errors import InputValidationError
from blockstab.extension import (
    Grid,
    TaggedZigzagInterval,
    extend_barcode,
    extend_interval,
    module_blocks,
    pointwise_dim_E,
    tag_interval,
    zz_bottleneck,
    zz_interleaving_bounds,
    zz_positions,
)
from blockstab.values import POS_INF
from blockstab.zigzag import ArrowDirection, ZigzagBarcode, ZigzagInterval, ZigzagModule, direct_sum, interval_module_zz, shuffle_basis

from .strategies import alternating, zigzag_barcodes

FWD, BWD = ArrowDirection.FWD, ArrowDirection.BWD


def _interval_module(first: int, last: int, n: int) -> ZigzagModule:
    return interval_module_zz(ZigzagInterval(first=first, last=last), n, alternating(n))


def test_positions_alternate_sinks_and_sources() -> None:
    assert zz_positions(alternating(5)) == [(True, 1), (False, 1), (True, 2), (False, 2), (True, 3)]
    assert zz_positions(alternating(3, FWD)) == [(False, 0), (True, 1), (False, 1)]
    assert zz_positions(()) == [(True, 1)]
    with pytest.raises(InputValidationError, match="alternating"):
        zz_positions((FWD, FWD))


def test_tag_examples() -> None:
    orientation = alternating(11)
    assert str(tag_interval(ZigzagInterval(first=3, last=9), orientation)) == "[2, 5]_ZZ"
    assert str(tag_interval(ZigzagInterval(first=4, last=9), orientation)) == "(2, 5]_ZZ"
    assert str(tag_interval(ZigzagInterval(first=6, last=6), orientation)) == "(3, 4)_ZZ"
    with pytest.raises(InputValidationError):
        tag_interval(ZigzagInterval(first=1, last=12), orientation)


def test_tagged_intervals_are_validated() -> None:
    with pytest.raises(ValueError):
        TaggedZigzagInterval(kind=BlockKind.O, b=Fraction(1, 2), d=Fraction(3))
    with pytest.raises(ValueError):
        TaggedZigzagInterval(kind=BlockKind.CO, b=Fraction(3), d=Fraction(3))


def test_extend_interval_examples() -> None:
    assert extend_interval(TaggedZigzagInterval(kind=BlockKind.O, b=Fraction(2), d=Fraction(5))) == Block.parse("(2, 5)")
    unbounded = extend_interval(TaggedZigzagInterval(kind=BlockKind.CO, b=Fraction(1), d=POS_INF))
    assert str(unbounded) == "[1, inf)_BL"
    assert extend_interval(TaggedZigzagInterval(kind=BlockKind.C, b=Fraction(3), d=Fraction(3))) == Block.parse("[3, 3]")


def test_extend_barcode_examples() -> None:
    orientation = alternating(5)
    assert extend_barcode(ZigzagBarcode(), orientation) == BlockBarcode()
    full = ZigzagInterval(first=1, last=5)
    assert extend_barcode(ZigzagBarcode(intervals=(full,)), orientation) == BlockBarcode.parse("[1, 3]")
    assert len(extend_barcode(ZigzagBarcode(intervals=(full, full)), orientation)) == 2


def test_grid_relabels_blocks() -> None:
    grid = Grid(values=(Fraction(-2), Fraction(-1), Fraction(0)))
    assert grid.relabel(Block.parse("(1, 3]")) == Block.parse("(-2, 0]")
    assert grid.relabel(Block.make("co", 2, "inf")) == Block.make("c", -1, "inf")
    with pytest.raises(InputValidationError):
        grid.value(Fraction(4))
    with pytest.raises(ValueError):
        Grid(values=(Fraction(1), Fraction(1)))


def test_pointwise_dimension_examples() -> None:
    module = _interval_module(1, 5, 5)
    assert pointwise_dim_E(module, Fraction(0), Fraction(5)) == 1
    assert pointwise_dim_E(module, Fraction(2), Fraction(2)) == 1
    assert pointwise_dim_E(module, Fraction(4), Fraction(5)) == 0
    assert pointwise_dim_E(module, Fraction(0), Fraction(1, 2)) == 0
    assert pointwise_dim_E(ZigzagModule.zero(5, alternating(5)), Fraction(1), Fraction(2)) == 0
    with pytest.raises(InputValidationError):
        pointwise_dim_E(module, Fraction(2), Fraction(1))


@given(
    st.integers(1, 7).flatmap(
        lambda n: st.tuples(st.just(n), zigzag_barcodes(n), st.sampled_from([FWD, BWD]), st.integers(0, 2**32 - 1)),
    ),
)
def test_extension_dimension_counts_blocks(case: tuple[int, tuple[ZigzagInterval, ...], ArrowDirection, int]) -> None:
    n, intervals, start, seed = case
    orientation = alternating(n, start)
    module = shuffle_basis(
        direct_sum(
            [interval_module_zz(interval, n, orientation) for interval in intervals],
            n=n,
            orientation=orientation,
        ),
        seed,
    )
    blocks = module_blocks(module)
    assert blocks.same_multiset(extend_barcode(ZigzagBarcode(intervals=intervals), orientation))
    values = [Fraction(k, 2) for k in range(-1, n + 3)]
    for x in values:
        for y in values:
            if x <= y:
                assert pointwise_dim_E(module, x, y) == blocks.count_containing(x, y)


def test_bottleneck_examples() -> None:
    module = _interval_module(2, 6, 7)
    assert zz_bottleneck(module, module) == 0
    assert zz_interleaving_bounds(module, module) == (0, 0)
    wide = _interval_module(2, 20, 21)
    narrow = _interval_module(4, 18, 21)
    assert module_blocks(wide) == BlockBarcode.parse("(1, 11)")
    assert module_blocks(narrow) == BlockBarcode.parse("(2, 10)")
    assert zz_bottleneck(wide, narrow) == 1
    assert zz_interleaving_bounds(wide, narrow) == (Fraction(2, 5), 1)
    assert zz_interleaving_bounds(wide, narrow, StabilityConstants.TIGHT) == (1, 1)
    closed = _interval_module(1, 3, 3)
    assert zz_bottleneck(closed, ZigzagModule.zero(3, alternating(3))) == POS_INF
    assert zz_interleaving_bounds(closed, ZigzagModule.zero(3, alternating(3))) == (POS_INF, POS_INF)
