"""Hypothesis strategies and brute-force oracles shared by the test modules."""

from collections.abc import Callable, Iterator
from fractions import Fraction
from itertools import product

import numpy as np
from hypothesis import strategies as st

from blockstab.blocks import Block, BlockBarcode, BlockKind, block_is_interleaved, block_is_trivial
from blockstab.intervals import Barcode1D, Interval1D, is_interleaved_1d, is_trivial_1d
from blockstab.values import POS_INF, ExtendedNumber
from blockstab.zigzag import ArrowDirection, ZigzagInterval

PRIMES: tuple[int, ...] = (2, 3, 5)

small_fractions = st.builds(Fraction, st.integers(-8, 8), st.sampled_from([1, 2]))
epsilons = st.builds(Fraction, st.integers(0, 12), st.sampled_from([1, 2, 4]))


@st.composite
def matrices(draw: st.DrawFn, p: int, max_rows: int = 4, max_cols: int = 4) -> np.ndarray:
    rows: int = draw(st.integers(0, max_rows))
    cols: int = draw(st.integers(0, max_cols))
    values: list[int] = draw(st.lists(st.integers(0, p - 1), min_size=rows * cols, max_size=rows * cols))
    return np.array(values, dtype=np.int64).reshape(rows, cols)


@st.composite
def intervals_1d(draw: st.DrawFn) -> Interval1D:
    a: Fraction = draw(small_fractions)
    length: Fraction = draw(st.builds(Fraction, st.integers(0, 8), st.sampled_from([1, 2])))
    if length == 0:
        return Interval1D.closed(a, a)
    return Interval1D.make(a, a + length, left_closed=draw(st.booleans()), right_closed=draw(st.booleans()))


def barcodes_1d_of(max_size: int) -> st.SearchStrategy[Barcode1D]:
    return st.lists(intervals_1d(), max_size=max_size).map(lambda ivs: Barcode1D(intervals=tuple(ivs)))


barcodes_1d = barcodes_1d_of(3)


@st.composite
def blocks(draw: st.DrawFn, *, switched: bool = True) -> Block:
    kind: BlockKind = draw(st.sampled_from(list(BlockKind)))
    a: Fraction = draw(small_fractions)
    length: Fraction = draw(st.builds(Fraction, st.integers(1, 8), st.sampled_from([1, 2])))
    if kind is BlockKind.C and switched and draw(st.booleans()):
        return Block.make(kind, a + length, a)
    return Block.make(kind, a, a + length)


def block_barcodes_of(max_size: int) -> st.SearchStrategy[BlockBarcode]:
    return st.lists(blocks(), max_size=max_size).map(lambda bs: BlockBarcode(blocks=tuple(bs)))


block_barcodes = block_barcodes_of(3)


@st.composite
def zigzag_barcodes(draw: st.DrawFn, n: int, max_count: int = 4) -> tuple[ZigzagInterval, ...]:
    count: int = draw(st.integers(0, max_count))
    result: list[ZigzagInterval] = []
    for _ in range(count):
        first: int = draw(st.integers(1, n))
        last: int = draw(st.integers(first, n))
        result.append(ZigzagInterval(first=first, last=last))
    return tuple(result)


def alternating(n: int, start: ArrowDirection = ArrowDirection.BWD) -> tuple[ArrowDirection, ...]:
    """Return the alternating orientation of `n` positions starting with `start`."""
    return tuple(start if k % 2 == 0 else start.flipped for k in range(n - 1))


def brute_force_rank(a: np.ndarray, p: int) -> int:
    """Count the image of GF(p)^cols and take its base-p logarithm."""
    rows, cols = a.shape
    image: set[tuple[int, ...]] = {
        tuple(int(v) for v in np.mod(a @ np.array(x, dtype=np.int64), p)) if rows else ()
        for x in product(range(p), repeat=cols)
    }
    size: int = len(image)
    result: int = 0
    while size > 1:
        size //= p
        result += 1
    return result


def partial_injections(m: int, n: int) -> Iterator[tuple[int | None, ...]]:
    """Yield every partial injection `{0..m-1} → {0..n-1}`, `None` marking an unmatched source."""

    def extend(i: int, used: frozenset[int]) -> Iterator[tuple[int | None, ...]]:
        if i == m:
            yield ()
            return
        for rest in extend(i + 1, used):
            yield (None, *rest)
        for j in range(n):
            if j not in used:
                for rest in extend(i + 1, used | {j}):
                    yield (j, *rest)

    yield from extend(0, frozenset())


def _admits[T](
    left: tuple[T, ...],
    right: tuple[T, ...],
    epsilon: Fraction,
    interleaved: Callable[[T, T, Fraction], bool],
    trivial: Callable[[T, Fraction], bool],
) -> bool:
    pairs = [[interleaved(u, v, epsilon) for v in right] for u in left]
    left_alone = [trivial(u, 2 * epsilon) for u in left]
    right_alone = [trivial(v, 2 * epsilon) for v in right]
    for choice in partial_injections(len(left), len(right)):
        used: set[int] = {j for j in choice if j is not None}
        if all(left_alone[i] if j is None else pairs[i][j] for i, j in enumerate(choice)) and all(
            right_alone[j] for j in range(len(right)) if j not in used
        ):
            return True
    return False


def brute_force_admits_1d(first: Barcode1D, second: Barcode1D, epsilon: Fraction) -> bool:
    """Search every partial injection for an ε-matching."""
    return _admits(first.intervals, second.intervals, epsilon, is_interleaved_1d, is_trivial_1d)


def brute_force_admits_block(first: BlockBarcode, second: BlockBarcode, epsilon: Fraction) -> bool:
    """Search every partial injection for an ε-matching of blocks."""
    return _admits(first.blocks, second.blocks, epsilon, block_is_interleaved, block_is_trivial)


def _threshold(candidates: list[Fraction], holds: Callable[[Fraction], bool]) -> ExtendedNumber:
    """Return the least candidate `c` such that `holds` on the open gap just above `c`."""
    for k, c in enumerate(candidates):
        probe: Fraction = (c + candidates[k + 1]) / 2 if k + 1 < len(candidates) else c + 1
        if holds(probe):
            return c
    return POS_INF


def _minimax[T](
    left: tuple[T, ...],
    right: tuple[T, ...],
    candidates: set[Fraction],
    interleaved: Callable[[T, T, Fraction], bool],
    trivial: Callable[[T, Fraction], bool],
) -> ExtendedNumber:
    ordered: list[Fraction] = sorted(candidates)
    pair_cost = [[_threshold(ordered, lambda e, u=u, v=v: interleaved(u, v, e)) for v in right] for u in left]
    left_cost = [_threshold(ordered, lambda e, u=u: trivial(u, 2 * e)) for u in left]
    right_cost = [_threshold(ordered, lambda e, v=v: trivial(v, 2 * e)) for v in right]
    best: ExtendedNumber = POS_INF
    for choice in partial_injections(len(left), len(right)):
        used: set[int] = {j for j in choice if j is not None}
        costs: list[ExtendedNumber] = [left_cost[i] if j is None else pair_cost[i][j] for i, j in enumerate(choice)]
        costs += [right_cost[j] for j in range(len(right)) if j not in used]
        best = min(best, max(costs, default=Fraction(0)))
    return best


def brute_force_bottleneck_1d(first: Barcode1D, second: Barcode1D, candidates: set[Fraction]) -> ExtendedNumber:
    """Minimax over every partial matching, each pair and lone bar priced by its own threshold."""
    return _minimax(first.intervals, second.intervals, candidates, is_interleaved_1d, is_trivial_1d)


def brute_force_bottleneck_block(first: BlockBarcode, second: BlockBarcode, candidates: set[Fraction]) -> ExtendedNumber:
    return _minimax(first.blocks, second.blocks, candidates, block_is_interleaved, block_is_trivial)
