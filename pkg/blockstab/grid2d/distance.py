import logging
from fractions import Fraction

from blockstab.matching import Matching, find_covering_matching, infimum_over_candidates
from blockstab.values import POS_INF, ExtendedNumber

from .models import GeneratorMultiset

logger: logging.Logger = logging.getLogger(__name__)

type RationalPoint = tuple[Fraction, Fraction]


def _chebyshev(u: RationalPoint, v: RationalPoint) -> Fraction:
    return max(abs(u[0] - v[0]), abs(u[1] - v[1]))


def free_bottleneck(first: GeneratorMultiset, second: GeneratorMultiset) -> ExtendedNumber:
    """Return the ℓ∞ bottleneck distance between two generator multisets.

    Returns
    -------
    - `ExtendedNumber`: The least `ε` admitting a bijection moving every generator by at most `ε` in ℓ∞,
      or `+∞` when the cardinalities differ

    Notes
    -----
    - This is the interleaving distance of the corresponding free modules.
    """
    if len(first) != len(second):
        return POS_INF
    candidates: set[Fraction] = {_chebyshev(u, v) for u in first.points for v in second.points}
    distance: ExtendedNumber = infimum_over_candidates(
        candidates,
        lambda epsilon: find_covering_matching(
            len(first),
            len(second),
            source_required=lambda _: True,
            target_required=lambda _: True,
            compatible=lambda i, j: _chebyshev(first.points[i], second.points[j]) <= epsilon,
        )
        is not None,
    )
    logger.debug("free_bottleneck over %d generators = %s", len(first), distance)
    return distance


def generator_matching(
    source: GeneratorMultiset,
    target: GeneratorMultiset,
    epsilon: Fraction,
) -> Matching | None:
    """Find a bijection `ξ(M) → ξ(N)` sending each `b` to some `b′` with `b − ε ≤ b′ ≤ b` coordinatewise.

    Args
    ----
    - `source` (`GeneratorMultiset`): Generators of the domain of a monomorphism
    - `target` (`GeneratorMultiset`): Generators of its codomain
    - `epsilon` (`Fraction`): Allowed downward displacement

    Returns
    -------
    - `Matching | None`: The bijection, or `None` when none exists
    """
    if len(source) != len(target):
        return None

    def fits(i: int, j: int) -> bool:
        b: RationalPoint = source.points[i]
        moved: RationalPoint = target.points[j]
        return all(b[k] - epsilon <= moved[k] <= b[k] for k in range(2))

    return find_covering_matching(
        len(source),
        len(target),
        source_required=lambda _: True,
        target_required=lambda _: True,
        compatible=fits,
    )
