from fractions import Fraction

import numpy as np
import pytest

from blockstab.blocks import BlockBarcode, bottleneck_block
from blockstab.config import StabilityConstants
from blockstab.errors import InputValidationError, InvalidGraphError
from blockstab.intervals import Barcode1D, bottleneck_1d
from blockstab.levelset import (
    PLGraph,
    Vertex,
    interlevel_blocks,
    level_barcode,
    levelset_spaces,
    levelset_zigzag,
    perturb,
    pointwise_mismatches,
    preimage_graph,
    random_pl_graph,
    reeb_lower_bound,
    validate_pl_graph,
    verify_pointwise,
)
from blockstab.zigzag import ArrowDirection

CURVE_B0: BlockBarcode = BlockBarcode.parse("[-2, 2]", "(-1, 1)", "[-1, 0)", "(0, 1]")
DIAMOND_B0: BlockBarcode = BlockBarcode.parse("[0, 2]", "(0, 2)")


def test_validation_reports_every_issue() -> None:
    graph = PLGraph.of({0: 0, 1: 0}, [(0, 1), (0, 0), (0, 7)])
    assert [str(issue) for issue in validate_pl_graph(graph)] == [
        "edges[0]: endpoints 0 and 1 share the value 0",
        "edges[1]: self-loop at vertex 0",
        "edges[2]: unknown vertex 7",
    ]
    assert [issue.location for issue in validate_pl_graph(PLGraph())] == ["vertices"]
    twice = PLGraph(vertices=(Vertex(id=0, value=Fraction(0)), Vertex(id=0, value=Fraction(1))))
    assert [issue.location for issue in validate_pl_graph(twice)] == ["vertices[id=0]"]


def test_invalid_graphs_are_rejected(diamond: PLGraph) -> None:
    with pytest.raises(InvalidGraphError):
        interlevel_blocks(PLGraph.of({0: 1, 1: 1}, [(0, 1)]), 0)
    with pytest.raises(InputValidationError):
        preimage_graph(diamond, Fraction(1), Fraction(0))
    with pytest.raises(InputValidationError):
        levelset_zigzag(diamond, 2)


def test_preimage_homology(single_edge: PLGraph, diamond: PLGraph) -> None:
    whole = preimage_graph(single_edge, Fraction(0), Fraction(1))
    assert (whole.h0, whole.h1) == (1, 0)
    beyond = preimage_graph(single_edge, Fraction(2), Fraction(3))
    assert (beyond.h0, beyond.h1) == (0, 0)
    band = preimage_graph(diamond, Fraction(0), Fraction(2))
    assert (band.h0, band.h1) == (1, 1)
    upper = preimage_graph(diamond, Fraction(6, 5), Fraction(9, 5))
    assert (upper.h0, upper.h1) == (2, 0)
    level = preimage_graph(diamond, Fraction(1), Fraction(1))
    assert (level.h0, level.h1) == (2, 0)


def test_levelset_spaces(single_edge: PLGraph, immersed_curve: PLGraph) -> None:
    half = Fraction(1, 2)
    assert levelset_spaces(single_edge) == [(0, half), (half, half), (half, 1)]
    assert len(levelset_spaces(immersed_curve)) == 9


def test_levelset_zigzag_dimensions(diamond: PLGraph) -> None:
    zero = levelset_zigzag(diamond, 0)
    assert zero.dims == (1, 2, 2, 2, 1)
    assert zero.orientation == (ArrowDirection.BWD, ArrowDirection.FWD, ArrowDirection.BWD, ArrowDirection.FWD)
    assert levelset_zigzag(diamond, 1).dims == (0, 0, 0, 0, 0)


def test_interlevel_blocks(immersed_curve: PLGraph, diamond: PLGraph, single_edge: PLGraph) -> None:
    assert interlevel_blocks(immersed_curve, 0).same_multiset(CURVE_B0)
    assert interlevel_blocks(immersed_curve, 1) == BlockBarcode.parse("[1, -1]")
    assert interlevel_blocks(diamond, 0).same_multiset(DIAMOND_B0)
    assert interlevel_blocks(diamond, 1) == BlockBarcode.parse("[2, 0]")
    assert interlevel_blocks(single_edge, 0) == BlockBarcode.parse("[0, 1]")
    assert interlevel_blocks(single_edge, 1) == BlockBarcode()


def test_blocks_do_not_depend_on_the_field(immersed_curve: PLGraph) -> None:
    for p in (3, 5):
        assert interlevel_blocks(immersed_curve, 0, p).same_multiset(CURVE_B0)


def test_level_barcodes(immersed_curve: PLGraph, diamond: PLGraph) -> None:
    assert level_barcode(immersed_curve, 0).same_multiset(Barcode1D.parse("[-2, 2]", "(-1, 1)", "[-1, 0)", "(0, 1]"))
    assert level_barcode(immersed_curve, 1) == Barcode1D()
    assert level_barcode(diamond, 0).same_multiset(Barcode1D.parse("[0, 2]", "(0, 2)"))


def test_pointwise_certificate(immersed_curve: PLGraph, diamond: PLGraph) -> None:
    assert verify_pointwise(immersed_curve, 0, CURVE_B0)
    assert verify_pointwise(immersed_curve, 1, BlockBarcode.parse("[1, -1]"))
    assert verify_pointwise(diamond, 0, DIAMOND_B0)
    assert verify_pointwise(diamond, 1, BlockBarcode.parse("[2, 0]"))
    assert not verify_pointwise(diamond, 0, BlockBarcode.parse("[0, 2]"))
    assert not verify_pointwise(diamond, 1, BlockBarcode.parse("(0, 2)"))
    assert "[1, 1]: 1 blocks, H0 has dimension 2" in pointwise_mismatches(diamond, 0, BlockBarcode.parse("[0, 2]"))


def test_random_graphs_are_reproducible() -> None:
    first = random_pl_graph(np.random.SeedSequence([7, 0]))
    assert first == random_pl_graph(np.random.SeedSequence([7, 0]))
    assert validate_pl_graph(first) == []
    with pytest.raises(InputValidationError):
        random_pl_graph(0, vertices=0)


def test_zero_perturbation_is_the_identity(immersed_curve: PLGraph) -> None:
    perturbed = perturb(immersed_curve, Fraction(0), 3)
    assert perturbed.graph == immersed_curve
    assert perturbed.realized_distance == 0
    assert perturbed.attempts == 1


def test_perturbation_respects_delta(immersed_curve: PLGraph) -> None:
    delta = Fraction(1, 4)
    perturbed = perturb(immersed_curve, delta, 11)
    before, after = immersed_curve.values(), perturbed.graph.values()
    assert max(abs(after[v] - before[v]) for v in before) == perturbed.realized_distance <= delta
    assert perturb(immersed_curve, delta, 11) == perturbed
    with pytest.raises(InputValidationError):
        perturb(immersed_curve, Fraction(-1), 0)


def test_reeb_lower_bound(single_edge: PLGraph) -> None:
    taller = PLGraph.of({0: 0, 1: 2}, [(0, 1)])
    assert reeb_lower_bound(single_edge, taller) == Fraction(1, 5)
    assert reeb_lower_bound(single_edge, taller, StabilityConstants.TIGHT) == Fraction(1, 2)
    assert reeb_lower_bound(single_edge, single_edge) == 0


def _check_trial(seed: int, trial: int, delta: Fraction) -> None:
    rng = np.random.default_rng(np.random.SeedSequence([seed, trial]))
    graph = random_pl_graph(rng)
    perturbed = perturb(graph, delta, rng)
    for degree in (0, 1):
        assert verify_pointwise(graph, degree, interlevel_blocks(graph, degree))
        assert bottleneck_block(
            interlevel_blocks(graph, degree),
            interlevel_blocks(perturbed.graph, degree),
        ) <= perturbed.realized_distance
        assert bottleneck_1d(level_barcode(graph, degree), level_barcode(perturbed.graph, degree)) <= (
            perturbed.realized_distance
        )


@pytest.mark.parametrize("trial", range(5))
def test_interlevel_blocks_are_stable(trial: int) -> None:
    _check_trial(2024, trial, Fraction(1, 4))


@pytest.mark.slow
@pytest.mark.parametrize("delta", [Fraction(1, 10), Fraction(1, 4), Fraction(1, 2)])
def test_interlevel_blocks_are_stable_at_scale(delta: Fraction) -> None:
    for trial in range(100):
        _check_trial(0, trial, delta)
