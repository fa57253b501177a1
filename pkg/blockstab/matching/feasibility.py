"""Required-coverage bipartite matching and the threshold search behind every bottleneck distance."""

import logging
from collections.abc import Callable, Iterable
from fractions import Fraction

import networkx as nx
from networkx.algorithms.bipartite import hopcroft_karp_matching

from blockstab.values import POS_INF, ExtendedNumber, is_finite

from .models import Matching

logger: logging.Logger = logging.getLogger(__name__)

type Node = tuple[str, int]


def find_covering_matching(
    source_size: int,
    target_size: int,
    *,
    source_required: Callable[[int], bool],
    target_required: Callable[[int], bool],
    compatible: Callable[[int, int], bool],
) -> Matching | None:
    """Find a partial bijection that covers every required element and pairs only compatible elements.

    Args
    ----
    - `source_size` (`int`): Number of source elements
    - `target_size` (`int`): Number of target elements
    - `source_required` (`Callable[[int], bool]`): Whether source `i` must be matched
    - `target_required` (`Callable[[int], bool]`): Whether target `j` must be matched
    - `compatible` (`Callable[[int, int], bool]`): Whether `(i, j)` may be paired

    Returns
    -------
    - `Matching | None`: A matching meeting both constraints, or `None` when none exists

    Notes
    -----
    - Each element gets a private dummy partner on the other side, usable only when the element
      is optional, and all dummies are mutually joined. A perfect matching of that graph exists
      exactly when the required-coverage matching does.
    """
    if source_size == 0 and target_size == 0:
        return Matching()
    graph: nx.Graph = nx.Graph()
    left: list[Node] = [("s", i) for i in range(source_size)] + [("t*", j) for j in range(target_size)]
    right: list[Node] = [("t", j) for j in range(target_size)] + [("s*", i) for i in range(source_size)]
    graph.add_nodes_from(left, bipartite=0)
    graph.add_nodes_from(right, bipartite=1)
    for i in range(source_size):
        for j in range(target_size):
            if compatible(i, j):
                graph.add_edge(("s", i), ("t", j))
        if not source_required(i):
            graph.add_edge(("s", i), ("s*", i))
        elif graph.degree(("s", i)) == 0:
            return None
    for j in range(target_size):
        if not target_required(j):
            graph.add_edge(("t*", j), ("t", j))
        elif graph.degree(("t", j)) == 0:
            return None
        for i in range(source_size):
            graph.add_edge(("t*", j), ("s*", i))
    mate: dict[Node, Node] = hopcroft_karp_matching(graph, top_nodes=left)
    if any(node not in mate for node in left):
        return None
    return Matching(
        pairs=tuple(
            (node[1], mate[node][1]) for node in left if node[0] == "s" and mate[node][0] == "t"
        ),
    )


def infimum_over_candidates(
    candidates: Iterable[ExtendedNumber],
    feasible: Callable[[Fraction], bool],
) -> ExtendedNumber:
    """Return the infimum of the feasible parameters, given every value where feasibility may change.

    Args
    ----
    - `candidates` (`Iterable[ExtendedNumber]`): Breakpoints of the feasibility predicate (infinite and negative values are ignored, `0` is always added)
    - `feasible` (`Callable[[Fraction], bool]`): Predicate that is monotone nondecreasing in its argument

    Returns
    -------
    - `ExtendedNumber`: The infimum (not necessarily attained), or `+∞` when nothing is feasible

    Notes
    -----
    - The predicate is constant strictly between breakpoints, so probing every breakpoint and one
      point after it decides the infimum; the probes are binary searched.
    """
    values: list[Fraction] = sorted({c for c in candidates if is_finite(c) and c >= 0} | {Fraction(0)})
    probes: list[tuple[Fraction, Fraction]] = []
    for k, value in enumerate(values):
        following: Fraction = values[k + 1] if k + 1 < len(values) else value + 1
        probes.append((value, value))
        probes.append(((value + following) / 2, value))
    lo: int = 0
    hi: int = len(probes)
    while lo < hi:
        mid: int = (lo + hi) // 2
        outcome: bool = feasible(probes[mid][0])
        logger.debug("threshold probe ε=%s feasible=%s", probes[mid][0], outcome)
        if outcome:
            hi = mid
        else:
            lo = mid + 1
    if lo == len(probes):
        return POS_INF
    return probes[lo][1]
