import logging
from fractions import Fraction
from itertools import combinations

from blockstab.errors import InputValidationError
from blockstab.matching import Matching, find_covering_matching, infimum_over_candidates
from blockstab.values import ExtendedNumber, is_finite

from .models import Barcode1D, Endpoint, Interval1D

logger: logging.Logger = logging.getLogger(__name__)


def _ensure_nonnegative(value: Fraction, name: str) -> None:
    if value < 0:
        msg = f"{name} must be ≥ 0, got {value}"
        raise InputValidationError(msg)


def thicken(interval: Interval1D, epsilon: Fraction) -> Interval1D:
    """Return the ε-thickening `{a : ∃ b ∈ J, |a − b| ≤ ε}`.

    Args
    ----
    - `interval` (`Interval1D`): Interval `J`
    - `epsilon` (`Fraction`): Thickening radius `ε ≥ 0`

    Returns
    -------
    - `Interval1D`: `J` with finite endpoints moved outward by `ε`, decorations kept

    Raises
    ------
    - `InputValidationError`: if `ε < 0`
    """
    _ensure_nonnegative(epsilon, "ε")
    return Interval1D(
        left=Endpoint(v=interval.left.v - epsilon, closed=interval.left.closed),
        right=Endpoint(v=interval.right.v + epsilon, closed=interval.right.closed),
    )


def contains(outer: Interval1D, inner: Interval1D) -> bool:
    """Decide `inner ⊆ outer` from the decorated endpoints."""
    left_ok: bool = outer.left.v < inner.left.v or (
        outer.left.v == inner.left.v and (outer.left.closed or not inner.left.closed)
    )
    right_ok: bool = inner.right.v < outer.right.v or (
        inner.right.v == outer.right.v and (outer.right.closed or not inner.right.closed)
    )
    return left_ok and right_ok


def is_trivial_1d(interval: Interval1D, t: Fraction) -> bool:
    """Decide whether `a + t ∉ J` for every `a ∈ J`, i.e. whether the interval module is `t`-trivial.

    Args
    ----
    - `interval` (`Interval1D`): Interval `J`
    - `t` (`Fraction`): Shift `t ≥ 0`

    Returns
    -------
    - `bool`: `True` iff `J` is bounded and shorter than `t`, or exactly `t` long without both endpoints closed
    """
    _ensure_nonnegative(t, "t")
    if not interval.is_bounded:
        return False
    length: ExtendedNumber = interval.length
    return t > length or (t == length and not (interval.left.closed and interval.right.closed))


def is_interleaved_1d(first: Interval1D, second: Interval1D, epsilon: Fraction) -> bool:
    """Decide whether the interval modules of `first` and `second` are ε-interleaved.

    Returns
    -------
    - `bool`: `True` iff each lies in the ε-thickening of the other, or both are 2ε-trivial
    """
    if contains(thicken(second, epsilon), first) and contains(thicken(first, epsilon), second):
        return True
    return is_trivial_1d(first, 2 * epsilon) and is_trivial_1d(second, 2 * epsilon)


def check_matching_1d(matching: Matching, source: Barcode1D, target: Barcode1D, epsilon: Fraction) -> bool:
    """Decide whether `matching` is an ε-matching between two barcodes.

    Args
    ----
    - `matching` (`Matching`): Candidate matching
    - `source` (`Barcode1D`): Barcode `C`
    - `target` (`Barcode1D`): Barcode `D`
    - `epsilon` (`Fraction`): `ε ≥ 0`

    Returns
    -------
    - `bool`: `True` iff every non-2ε-trivial interval on either side is matched and every pair is ε-interleaved

    Raises
    ------
    - `InputValidationError`: if an index is out of range or `ε < 0`
    """
    _ensure_nonnegative(epsilon, "ε")
    matching.check_indices(len(source.intervals), len(target.intervals))
    for i, interval in enumerate(source.intervals):
        if i not in matching.coim and not is_trivial_1d(interval, 2 * epsilon):
            return False
    for j, interval in enumerate(target.intervals):
        if j not in matching.im and not is_trivial_1d(interval, 2 * epsilon):
            return False
    return all(
        is_interleaved_1d(source.intervals[i], target.intervals[j], epsilon) for i, j in matching.pairs
    )


def find_matching_1d(source: Barcode1D, target: Barcode1D, epsilon: Fraction) -> Matching | None:
    """Return an ε-matching between two barcodes, or `None` when none exists."""
    _ensure_nonnegative(epsilon, "ε")
    return find_covering_matching(
        len(source.intervals),
        len(target.intervals),
        source_required=lambda i: not is_trivial_1d(source.intervals[i], 2 * epsilon),
        target_required=lambda j: not is_trivial_1d(target.intervals[j], 2 * epsilon),
        compatible=lambda i, j: is_interleaved_1d(source.intervals[i], target.intervals[j], epsilon),
    )


def bottleneck_candidates_1d(source: Barcode1D, target: Barcode1D) -> set[Fraction]:
    """Return every value of ε at which ε-matching feasibility may change."""
    intervals: tuple[Interval1D, ...] = source.intervals + target.intervals
    endpoints: set[Fraction] = {
        value for interval in intervals for value in (interval.left.v, interval.right.v) if is_finite(value)
    }
    candidates: set[Fraction] = {abs(u - v) for u, v in combinations(sorted(endpoints), 2)}
    candidates |= {interval.length / 2 for interval in intervals if interval.is_bounded}
    candidates.add(Fraction(0))
    return candidates


def bottleneck_1d(source: Barcode1D, target: Barcode1D) -> ExtendedNumber:
    """Return the bottleneck distance `inf{ε : an ε-matching exists}`.

    Returns
    -------
    - `ExtendedNumber`: The infimum (which need not be attained), or `+∞`
    """
    distance: ExtendedNumber = infimum_over_candidates(
        bottleneck_candidates_1d(source, target),
        lambda epsilon: find_matching_1d(source, target, epsilon) is not None,
    )
    logger.debug("bottleneck_1d over %d/%d intervals = %s", len(source), len(target), distance)
    return distance
