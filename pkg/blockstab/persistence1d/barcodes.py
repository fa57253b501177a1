"""Barcodes of line modules and of the kernel, image and cokernel of their morphisms, and induced matchings."""

import logging
from collections import defaultdict
from collections.abc import Callable
from fractions import Fraction

import numpy as np

from blockstab.errors import ConsistencyError
from blockstab.intervals import Barcode1D, Interval1D, is_trivial_1d
from blockstab.linalg import IntArray, column_basis, complement_basis, kernel_basis, matmul, solve
from blockstab.matching import Matching
from blockstab.values import NEG_INF, POS_INF, ExtendedNumber
from blockstab.zigzag import ArrowDirection, ZigzagModule, decompose_zz

from .models import LineModule, LineMorphism

logger: logging.Logger = logging.getLogger(__name__)


def line_barcode(module: LineModule) -> Barcode1D:
    """Decompose a line module into half-open bars.

    Returns
    -------
    - `Barcode1D`: Bars `[g_p, g_{q+1})` for summands on cells `p..q`, `[g_p, ∞)` when `q` is the last cell
    """
    as_zigzag: ZigzagModule = ZigzagModule.from_arrays(
        module.dims,
        [ArrowDirection.FWD] * (module.m - 1),
        [module.map_array(i) for i in range(module.m - 1)],
        module.field,
    )
    bars: list[Interval1D] = [
        Interval1D.closed_open(
            module.grid[interval.first - 1],
            module.grid[interval.last] if interval.last < module.m else POS_INF,
        )
        for interval in decompose_zz(as_zigzag).intervals
    ]
    return Barcode1D(intervals=tuple(bars))


def _induced_module(
    morphism: LineMorphism,
    bases: list[IntArray],
    ambient: Callable[[int], IntArray],
    coordinates: Callable[[int, IntArray], IntArray],
) -> LineModule:
    maps: list[IntArray] = []
    for i in range(morphism.source.m - 1):
        moved: IntArray = matmul(ambient(i), bases[i], morphism.field)
        maps.append(coordinates(i + 1, moved))
    return LineModule.from_arrays(morphism.source.grid, [b.shape[1] for b in bases], maps, morphism.field)


def _coordinates_in(basis: IntArray, vectors: IntArray, p: int) -> IntArray:
    solution: IntArray | None = solve(basis, vectors, p)
    if solution is None:
        msg = "Induced map leaves the subspace; the morphism is not natural"
        raise ConsistencyError(msg)
    return solution


def kernel_module(morphism: LineMorphism) -> LineModule:
    p: int = morphism.field
    bases: list[IntArray] = [kernel_basis(morphism.component(i), p) for i in range(morphism.source.m)]
    return _induced_module(
        morphism,
        bases,
        morphism.source.map_array,
        lambda i, vectors: _coordinates_in(bases[i], vectors, p),
    )


def image_module(morphism: LineMorphism) -> LineModule:
    p: int = morphism.field
    bases: list[IntArray] = [column_basis(morphism.component(i), p) for i in range(morphism.source.m)]
    return _induced_module(
        morphism,
        bases,
        morphism.target.map_array,
        lambda i, vectors: _coordinates_in(bases[i], vectors, p),
    )


def cokernel_module(morphism: LineMorphism) -> LineModule:
    p: int = morphism.field
    images: list[IntArray] = [column_basis(morphism.component(i), p) for i in range(morphism.source.m)]
    complements: list[IntArray] = [
        complement_basis(images[i], morphism.target.dims[i], p) for i in range(morphism.source.m)
    ]

    def coordinates(i: int, vectors: IntArray) -> IntArray:
        # drop the image part of the coordinates in the basis [image | complement]
        full: IntArray = _coordinates_in(np.hstack([images[i], complements[i]]), vectors, p)
        return full[images[i].shape[1] :]

    return _induced_module(morphism, complements, morphism.target.map_array, coordinates)


def morphism_barcodes(morphism: LineMorphism) -> tuple[Barcode1D, Barcode1D, Barcode1D]:
    """Return the barcodes of `ker f`, `im f` and `coker f`.

    Returns
    -------
    - `tuple[Barcode1D, Barcode1D, Barcode1D]`: Kernel, image and cokernel barcodes

    Raises
    ------
    - `ConsistencyError`: if pointwise rank–nullity fails
    """
    kernel: LineModule = kernel_module(morphism)
    image: LineModule = image_module(morphism)
    cokernel: LineModule = cokernel_module(morphism)
    for i in range(morphism.source.m):
        if kernel.dims[i] + image.dims[i] != morphism.source.dims[i] or image.dims[i] + cokernel.dims[i] != morphism.target.dims[i]:
            msg = f"Rank–nullity fails on cell {i + 1}"
            raise ConsistencyError(msg)
    return line_barcode(kernel), line_barcode(image), line_barcode(cokernel)


def _longest(barcode: Barcode1D) -> ExtendedNumber:
    return max((interval.length for interval in barcode.intervals), default=Fraction(0))


def triviality_of(morphism: LineMorphism) -> tuple[ExtendedNumber, ExtendedNumber]:
    """Return the least `(ε, δ)` with `ker f` ε-trivial and `coker f` δ-trivial.

    Notes
    -----
    - Bars are half-open, so `[a, b)` dies under a shift of exactly `b − a`.
    """
    kernel, _, cokernel = morphism_barcodes(morphism)
    return _longest(kernel), _longest(cokernel)


def _pair_by_endpoint(
    first: Barcode1D,
    second: Barcode1D,
    endpoint: Callable[[Interval1D], ExtendedNumber],
) -> Matching:
    groups: dict[ExtendedNumber, tuple[list[int], list[int]]] = defaultdict(lambda: ([], []))
    for index, interval in enumerate(first.intervals):
        groups[endpoint(interval)][0].append(index)
    for index, interval in enumerate(second.intervals):
        groups[endpoint(interval)][1].append(index)
    pairs: list[tuple[int, int]] = []
    for left, right in groups.values():
        left.sort(key=lambda i: first.intervals[i].length, reverse=True)
        right.sort(key=lambda j: second.intervals[j].length, reverse=True)
        pairs.extend(zip(left, right))
    return Matching(pairs=tuple(pairs))


def induced_matching_1d(morphism: LineMorphism) -> Matching:
    """Return the matching induced by `f` between `B(M)` and `B(N)`.

    Returns
    -------
    - `Matching`: Composite of the left-endpoint pairing `B(M) → B(im f)` and the right-endpoint pairing
      `B(im f) → B(N)`, each taken in order of decreasing length; indices refer to `line_barcode` outputs
    """
    source_bars: Barcode1D = line_barcode(morphism.source)
    image_bars: Barcode1D = line_barcode(image_module(morphism))
    target_bars: Barcode1D = line_barcode(morphism.target)
    surjection: Matching = _pair_by_endpoint(source_bars, image_bars, lambda interval: interval.left.v)
    injection: Matching = _pair_by_endpoint(image_bars, target_bars, lambda interval: interval.right.v)
    return surjection.compose(injection)


def induced_matching_violations(morphism: LineMorphism, matching: Matching) -> list[str]:
    """List the ways `matching` fails the induced matching contract for `(ε, δ) = triviality_of(f)`.

    Returns
    -------
    - `list[str]`: Empty when every bar of `B(M)` longer than `ε` and of `B(N)` longer than `δ` is matched and every
      pair `[a, b) ↦ [a′, b′)` satisfies `a′ ≤ a ≤ a′ + δ`, `b − ε ≤ b′ ≤ b` and `a ≤ b′`
    """
    epsilon, delta = triviality_of(morphism)
    source_bars: Barcode1D = line_barcode(morphism.source)
    target_bars: Barcode1D = line_barcode(morphism.target)
    violations: list[str] = []
    for i, interval in enumerate(source_bars.intervals):
        if i not in matching.coim and not _dies_within(interval, epsilon):
            violations.append(f"source bar {interval} is unmatched")
    for j, interval in enumerate(target_bars.intervals):
        if j not in matching.im and not _dies_within(interval, delta):
            violations.append(f"target bar {interval} is unmatched")
    for i, j in matching.pairs:
        a, b = source_bars.intervals[i].left.v, source_bars.intervals[i].right.v
        a2, b2 = target_bars.intervals[j].left.v, target_bars.intervals[j].right.v
        lowest: ExtendedNumber = NEG_INF if epsilon == POS_INF else b - epsilon
        if not (a2 <= a <= a2 + delta and lowest <= b2 <= b and a <= b2):
            violations.append(f"pair {source_bars.intervals[i]} ↦ {target_bars.intervals[j]} breaks the endpoint bounds")
    return violations


def _dies_within(interval: Interval1D, shift: ExtendedNumber) -> bool:
    if shift == POS_INF:
        return True
    return is_trivial_1d(interval, shift)
