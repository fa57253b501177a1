"""Grid verification of the interleaving equations for block and interval witnesses."""

import logging
from collections.abc import Iterable
from fractions import Fraction

from blockstab.blocks import Block
from blockstab.intervals import Interval1D
from blockstab.values import ExtendedNumber, is_finite

from .models import InterleavingWitness, LineInterleavingWitness, LineWitnessPair, Overlap, WitnessPair

logger: logging.Logger = logging.getLogger(__name__)


def verification_values(endpoints: Iterable[ExtendedNumber], epsilon: Fraction) -> list[Fraction]:
    """Return the finite endpoints shifted by `0, ±ε, ±2ε`, the midpoints between them and a point beyond each end."""
    base: set[Fraction] = {value for value in endpoints if is_finite(value)} or {Fraction(0)}
    shifted: list[Fraction] = sorted({value + k * epsilon for value in base for k in range(-2, 3)})
    values: set[Fraction] = set(shifted) | {shifted[0] - 1, shifted[-1] + 1}
    values |= {(left + right) / 2 for left, right in zip(shifted, shifted[1:])}
    return sorted(values)


def _forward(pair: WitnessPair, x: Fraction, y: Fraction) -> bool:
    return pair.forward is not None and pair.forward.contains(x, y)


def _backward(pair: WitnessPair, x: Fraction, y: Fraction) -> bool:
    return pair.backward is not None and pair.backward.contains(x, y)


def _natural_block(
    support: Overlap | None,
    domain: Block,
    codomain: Block,
    epsilon: Fraction,
    point: tuple[Fraction, Fraction],
    later: tuple[Fraction, Fraction],
) -> bool:
    def value(at: tuple[Fraction, Fraction]) -> bool:
        return support is not None and support.contains(*at)

    (x, y), (u, v) = point, later
    along_domain: bool = domain.contains(x, y) and domain.contains(u, v)
    along_codomain: bool = codomain.contains(x - epsilon, y + epsilon) and codomain.contains(u - epsilon, v + epsilon)
    return (along_domain and value(later)) == (value(point) and along_codomain)


def witness_violations(witness: InterleavingWitness) -> list[str]:
    """List every failure of naturality or of `g(ε)∘f = φ_M^{2ε}`, `f(ε)∘g = φ_N^{2ε}` on the verification grid.

    Notes
    -----
    - Naturality is checked on the grid steps that lower `x` or raise `y`, which generate the order on the grid.
    """
    epsilon: Fraction = witness.epsilon
    blocks: tuple[Block, ...] = witness.source.blocks + witness.target.blocks
    grid: list[Fraction] = verification_values([c for block in blocks for c in (block.a, block.b)], epsilon)
    by_source: dict[int, WitnessPair] = {pair.source: pair for pair in witness.pairs}
    by_target: dict[int, WitnessPair] = {pair.target: pair for pair in witness.pairs}
    violations: list[str] = []
    for xi, x in enumerate(grid):
        for yi in range(xi, len(grid)):
            y: Fraction = grid[yi]
            steps: list[tuple[Fraction, Fraction]] = []
            if xi > 0:
                steps.append((grid[xi - 1], y))
            if yi + 1 < len(grid):
                steps.append((x, grid[yi + 1]))
            for pair in witness.pairs:
                first: Block = witness.source.blocks[pair.source]
                second: Block = witness.target.blocks[pair.target]
                for later in steps:
                    if not _natural_block(pair.forward, first, second, epsilon, (x, y), later):
                        violations.append(f"f is not natural for pair {pair.source}→{pair.target} at ({x}, {y})")
                    if not _natural_block(pair.backward, second, first, epsilon, (x, y), later):
                        violations.append(f"g is not natural for pair {pair.source}→{pair.target} at ({x}, {y})")
            for i, block in enumerate(witness.source.blocks):
                expected: bool = block.contains(x, y) and block.contains(x - 2 * epsilon, y + 2 * epsilon)
                pair: WitnessPair | None = by_source.get(i)
                actual: bool = pair is not None and _forward(pair, x, y) and _backward(pair, x - epsilon, y + epsilon)
                if expected != actual:
                    violations.append(f"g(ε)∘f differs from φ^2ε on source block {block} at ({x}, {y})")
            for j, block in enumerate(witness.target.blocks):
                expected = block.contains(x, y) and block.contains(x - 2 * epsilon, y + 2 * epsilon)
                pair = by_target.get(j)
                actual = pair is not None and _backward(pair, x, y) and _forward(pair, x - epsilon, y + epsilon)
                if expected != actual:
                    violations.append(f"f(ε)∘g differs from φ^2ε on target block {block} at ({x}, {y})")
    if violations:
        logger.debug("witness at ε=%s fails at %d checks", epsilon, len(violations))
    return violations


def verify_witness(witness: InterleavingWitness) -> bool:
    """Decide whether the witness is an ε-interleaving on its verification grid."""
    return not witness_violations(witness)


def _on(support: tuple[Interval1D, Interval1D] | None, t: Fraction) -> bool:
    return support is not None and support[0].contains_point(t) and support[1].contains_point(t)


def _natural_line(
    support: tuple[Interval1D, Interval1D] | None,
    domain: Interval1D,
    codomain: Interval1D,
    epsilon: Fraction,
    t: Fraction,
    later: Fraction,
) -> bool:
    along_domain: bool = domain.contains_point(t) and domain.contains_point(later)
    along_codomain: bool = codomain.contains_point(t + epsilon) and codomain.contains_point(later + epsilon)
    return (along_domain and _on(support, later)) == (_on(support, t) and along_codomain)


def line_witness_violations(witness: LineInterleavingWitness) -> list[str]:
    """List every failure of the interleaving equations of an interval witness on its verification grid."""
    epsilon: Fraction = witness.epsilon
    intervals: tuple[Interval1D, ...] = witness.source.intervals + witness.target.intervals
    grid: list[Fraction] = verification_values([e.v for iv in intervals for e in (iv.left, iv.right)], epsilon)
    by_source: dict[int, LineWitnessPair] = {pair.source: pair for pair in witness.pairs}
    by_target: dict[int, LineWitnessPair] = {pair.target: pair for pair in witness.pairs}
    violations: list[str] = []
    for k, t in enumerate(grid):
        if k + 1 < len(grid):
            for pair in witness.pairs:
                first: Interval1D = witness.source.intervals[pair.source]
                second: Interval1D = witness.target.intervals[pair.target]
                if not _natural_line(pair.forward, first, second, epsilon, t, grid[k + 1]):
                    violations.append(f"f is not natural for pair {pair.source}→{pair.target} at {t}")
                if not _natural_line(pair.backward, second, first, epsilon, t, grid[k + 1]):
                    violations.append(f"g is not natural for pair {pair.source}→{pair.target} at {t}")
        for i, interval in enumerate(witness.source.intervals):
            expected: bool = interval.contains_point(t) and interval.contains_point(t + 2 * epsilon)
            line_pair: LineWitnessPair | None = by_source.get(i)
            actual: bool = line_pair is not None and _on(line_pair.forward, t) and _on(line_pair.backward, t + epsilon)
            if expected != actual:
                violations.append(f"g(ε)∘f differs from φ^2ε on source interval {interval} at {t}")
        for j, interval in enumerate(witness.target.intervals):
            expected = interval.contains_point(t) and interval.contains_point(t + 2 * epsilon)
            line_pair = by_target.get(j)
            actual = line_pair is not None and _on(line_pair.backward, t) and _on(line_pair.forward, t + epsilon)
            if expected != actual:
                violations.append(f"f(ε)∘g differs from φ^2ε on target interval {interval} at {t}")
    return violations


def verify_witness_1d(witness: LineInterleavingWitness) -> bool:
    return not line_witness_violations(witness)
