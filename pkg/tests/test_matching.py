from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from blockstab.errors import InputValidationError
from blockstab.matching import Matching, find_covering_matching, infimum_over_candidates
from blockstab.values import POS_INF


def test_matching_model() -> None:
    matching = Matching(pairs=((2, 0), (0, 1)))
    assert matching.pairs == ((0, 1), (2, 0))
    assert matching.coim == {0, 2}
    assert matching.im == {0, 1}
    assert matching.inverse() == Matching(pairs=((1, 0), (0, 2)))
    assert matching.compose(Matching(pairs=((1, 5),))) == Matching(pairs=((0, 5),))
    with pytest.raises(ValueError, match="at most once"):
        Matching(pairs=((0, 1), (1, 1)))
    with pytest.raises(InputValidationError):
        matching.check_indices(3, 1)


def test_covering_matching_respects_requirements() -> None:
    found = find_covering_matching(
        2,
        1,
        source_required=lambda i: i == 1,
        target_required=lambda _: True,
        compatible=lambda i, j: True,
    )
    assert found == Matching(pairs=((1, 0),))
    assert (
        find_covering_matching(
            2,
            1,
            source_required=lambda _: True,
            target_required=lambda _: False,
            compatible=lambda i, j: True,
        )
        is None
    )
    assert find_covering_matching(
        0, 0, source_required=bool, target_required=bool, compatible=lambda i, j: False,
    ) == Matching()


@given(st.integers(0, 4), st.integers(0, 4), st.data())
def test_covering_matching_is_valid(sources: int, targets: int, data: st.DataObject) -> None:
    required_sources: set[int] = data.draw(st.sets(st.integers(0, max(sources - 1, 0)))) if sources else set()
    required_targets: set[int] = data.draw(st.sets(st.integers(0, max(targets - 1, 0)))) if targets else set()
    edges: set[tuple[int, int]] = data.draw(
        st.sets(st.tuples(st.integers(0, max(sources - 1, 0)), st.integers(0, max(targets - 1, 0)))),
    )
    found = find_covering_matching(
        sources,
        targets,
        source_required=lambda i: i in required_sources,
        target_required=lambda j: j in required_targets,
        compatible=lambda i, j: (i, j) in edges,
    )
    if found is not None:
        assert set(found.pairs) <= edges
        assert required_sources <= found.coim
        assert required_targets <= found.im
    elif not required_sources and not required_targets:
        pytest.fail("an empty matching covers nothing and is always admissible")


def test_infimum_over_candidates() -> None:
    candidates = [Fraction(1), Fraction(3), POS_INF, Fraction(-2)]
    assert infimum_over_candidates(candidates, lambda e: e >= 3) == 3
    assert infimum_over_candidates(candidates, lambda e: e > 1) == 1
    assert infimum_over_candidates(candidates, lambda e: True) == 0
    assert infimum_over_candidates(candidates, lambda e: False) == POS_INF
