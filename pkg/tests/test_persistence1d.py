from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blockstab.errors import InputValidationError
from blockstab.intervals import Barcode1D
from blockstab.linalg import entries_of, random_invertible
from blockstab.matching import Matching
from blockstab.persistence1d import (
    LineMorphism,
    induced_matching_1d,
    induced_matching_violations,
    interval_line_module,
    interval_sum_morphism,
    line_barcode,
    line_change_basis,
    line_direct_sum,
    morphism_barcodes,
    morphism_change_basis,
    triviality_of,
)
from blockstab.values import POS_INF

from .strategies import PRIMES

GRID: tuple[Fraction, ...] = (Fraction(-2), Fraction(0), Fraction(3), Fraction(5))

type Cells = tuple[int, int]


@pytest.fixture
def shifted_bar() -> LineMorphism:
    """The nonzero map from the bar `[0, 5)` to the bar `[−2, 3)`."""
    return interval_sum_morphism(GRID, [(2, 3)], [(1, 2)], {(0, 0): 1})


def test_line_barcode_examples() -> None:
    assert line_barcode(interval_line_module(GRID, (1, 3))) == Barcode1D.parse("[-2, 5)")
    assert line_barcode(interval_line_module(GRID, (2, 4))) == Barcode1D.parse("[0, inf)")
    assert line_barcode(line_direct_sum([], grid=GRID)) == Barcode1D()
    with pytest.raises(InputValidationError):
        interval_line_module(GRID, (0, 2))


@st.composite
def cell_lists(draw: st.DrawFn, m: int, max_count: int = 3) -> list[Cells]:
    cells: list[Cells] = []
    for _ in range(draw(st.integers(0, max_count))):
        first: int = draw(st.integers(1, m))
        cells.append((first, draw(st.integers(first, m))))
    return cells


def _transforms(rng: np.random.Generator, dims: tuple[int, ...], p: int) -> list[np.ndarray]:
    return [random_invertible(rng, d, p) for d in dims]


@given(st.integers(1, 5).flatmap(lambda m: st.tuples(st.just(m), cell_lists(m))), st.sampled_from(PRIMES), st.integers(0, 2**32 - 1))
def test_line_barcode_survives_basis_change(case: tuple[int, list[Cells]], p: int, seed: int) -> None:
    m, cells = case
    grid = tuple(Fraction(k) for k in range(m))
    module = line_direct_sum([interval_line_module(grid, c, p) for c in cells], grid=grid, field=p)
    changed = line_change_basis(module, _transforms(np.random.default_rng(seed), module.dims, p))
    expected = Barcode1D(intervals=tuple(line_barcode(interval_line_module(grid, c, p)).intervals[0] for c in cells))
    assert line_barcode(changed).same_multiset(expected)


def test_morphism_barcode_examples(shifted_bar: LineMorphism) -> None:
    kernel, image, cokernel = morphism_barcodes(shifted_bar)
    assert kernel == Barcode1D.parse("[3, 5)")
    assert image == Barcode1D.parse("[0, 3)")
    assert cokernel == Barcode1D.parse("[-2, 0)")
    assert triviality_of(shifted_bar) == (2, 2)


def test_zero_and_identity_morphisms() -> None:
    zero = interval_sum_morphism(GRID, [(2, 3)], [(1, 2)], {})
    assert morphism_barcodes(zero) == (Barcode1D.parse("[0, 5)"), Barcode1D(), Barcode1D.parse("[-2, 3)"))
    assert triviality_of(zero) == (5, 5)
    assert induced_matching_1d(zero) == Matching()
    assert induced_matching_violations(zero, Matching()) == []
    identity = interval_sum_morphism(GRID, [(1, 4), (2, 3)], [(1, 4), (2, 3)], {(0, 0): 1, (1, 1): 1})
    kernel, image, cokernel = morphism_barcodes(identity)
    assert kernel == cokernel == Barcode1D()
    assert image.same_multiset(Barcode1D.parse("[-2, inf)", "[0, 5)"))
    assert triviality_of(identity) == (0, 0)
    assert len(induced_matching_1d(identity).pairs) == 2
    assert induced_matching_violations(identity, induced_matching_1d(identity)) == []


def test_unbounded_kernel_is_never_trivial() -> None:
    zero = interval_sum_morphism(GRID, [(3, 4)], [], {})
    assert triviality_of(zero) == (POS_INF, 0)


def test_induced_matching_example(shifted_bar: LineMorphism) -> None:
    matching = induced_matching_1d(shifted_bar)
    assert matching == Matching.identity(1)
    assert induced_matching_violations(shifted_bar, matching) == []
    assert induced_matching_violations(shifted_bar, Matching()) == [
        "source bar [0, 5) is unmatched",
        "target bar [-2, 3) is unmatched",
    ]


def test_invalid_scalars_and_non_natural_maps_are_rejected() -> None:
    with pytest.raises(InputValidationError):
        interval_sum_morphism(GRID, [(1, 2)], [(2, 3)], {(0, 0): 1})
    source = interval_line_module(GRID, (1, 2))
    target = interval_line_module(GRID, (2, 3))
    one, none = entries_of(np.ones((1, 1), dtype=np.int64), 2), entries_of(np.zeros((0, 1), dtype=np.int64), 2)
    with pytest.raises(ValueError, match="commute"):
        LineMorphism(
            source=source,
            target=target,
            components=(none, one, entries_of(np.zeros((1, 0), dtype=np.int64), 2), entries_of(np.zeros((0, 0), dtype=np.int64), 2)),
        )


@st.composite
def interval_morphisms(draw: st.DrawFn, max_grid: int = 5, max_cells: int = 3) -> LineMorphism:
    m: int = draw(st.integers(1, max_grid))
    p: int = draw(st.sampled_from(PRIMES))
    grid = tuple(Fraction(2 * k) for k in range(m))
    source_cells: list[Cells] = draw(cell_lists(m, max_cells))
    target_cells: list[Cells] = draw(cell_lists(m, max_cells))
    scalars: dict[tuple[int, int], int] = {}
    for s, (a1, a2) in enumerate(source_cells):
        for t, (c1, c2) in enumerate(target_cells):
            if c1 <= a1 <= c2 <= a2:
                scalars[(s, t)] = draw(st.integers(0, p - 1))
    morphism = interval_sum_morphism(grid, source_cells, target_cells, scalars, p)
    rng = np.random.default_rng(draw(st.integers(0, 2**32 - 1)))
    return morphism_change_basis(
        morphism,
        _transforms(rng, morphism.source.dims, p),
        _transforms(rng, morphism.target.dims, p),
    )


@given(interval_morphisms())
def test_induced_matching_meets_its_contract(morphism: LineMorphism) -> None:
    assert induced_matching_violations(morphism, induced_matching_1d(morphism)) == []


@given(interval_morphisms())
def test_rank_nullity_holds_pointwise(morphism: LineMorphism) -> None:
    kernel, image, cokernel = morphism_barcodes(morphism)

    def count(barcode: Barcode1D, t: Fraction) -> int:
        return sum(1 for bar in barcode.intervals if bar.contains_point(t))

    for i, t in enumerate(morphism.source.grid):
        assert count(kernel, t) + count(image, t) == morphism.source.dims[i]
        assert count(image, t) + count(cokernel, t) == morphism.target.dims[i]


@pytest.mark.slow
@settings(max_examples=200)
@given(interval_morphisms(max_grid=7, max_cells=5))
def test_induced_matching_meets_its_contract_at_scale(morphism: LineMorphism) -> None:
    assert induced_matching_violations(morphism, induced_matching_1d(morphism)) == []
