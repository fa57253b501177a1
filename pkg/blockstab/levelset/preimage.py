"""Validation of PL graphs and the combinatorial interlevel sets `γ⁻¹([x, y])`."""

import logging
from collections import Counter
from fractions import Fraction

import numpy as np
from networkx.utils import UnionFind

from blockstab.errors import InputValidationError, InvalidGraphError
from blockstab.linalg import IntArray, kernel_basis

from .models import Fragment, GraphIssue, PLGraph, PreimageGraph, PreimageNode

logger: logging.Logger = logging.getLogger(__name__)


def validate_pl_graph(graph: PLGraph) -> list[GraphIssue]:
    """Check the Morse-type conditions of a PL graph.

    Returns
    -------
    - `list[GraphIssue]`: Every violation with its location; empty when the graph is valid

    Notes
    -----
    - The vertex set must be nonempty and ids unique; every edge must join two distinct known
      vertices with distinct values. Values are finite rationals by construction.
    """
    issues: list[GraphIssue] = []
    if not graph.vertices:
        issues.append(GraphIssue(location="vertices", message="vertex set is empty"))
    counts: Counter[int] = Counter(vertex.id for vertex in graph.vertices)
    issues.extend(
        GraphIssue(location=f"vertices[id={vid}]", message=f"id used {count} times")
        for vid, count in sorted(counts.items())
        if count > 1
    )
    values: dict[int, Fraction] = graph.values()
    for index, (u, w) in enumerate(graph.edges):
        location: str = f"edges[{index}]"
        missing: list[int] = [end for end in (u, w) if end not in values]
        if missing:
            issues.append(GraphIssue(location=location, message=f"unknown vertex {missing[0]}"))
        elif u == w:
            issues.append(GraphIssue(location=location, message=f"self-loop at vertex {u}"))
        elif values[u] == values[w]:
            issues.append(GraphIssue(location=location, message=f"endpoints {u} and {w} share the value {values[u]}"))
    return issues


def ensure_valid(graph: PLGraph) -> PLGraph:
    """Return the graph unchanged when it is of Morse type.

    Raises
    ------
    - `InvalidGraphError`: carrying the issue list otherwise
    """
    issues: list[GraphIssue] = validate_pl_graph(graph)
    if issues:
        raise InvalidGraphError([str(issue) for issue in issues])
    return graph


def preimage_graph(graph: PLGraph, x: Fraction, y: Fraction) -> PreimageGraph:
    """Build the interlevel set `γ⁻¹([x, y])` as a graph and count its homology.

    Args
    ----
    - `graph` (`PLGraph`): PL graph of Morse type
    - `x`, `y` (`Fraction`): Band bounds, `x ≤ y`

    Returns
    -------
    - `PreimageGraph`: Vertices in the band, crossing points where edges meet `x` or `y`, one fragment per
      edge meeting the band in a segment; `h0` from union-find and `h1 = fragments − nodes + h0`

    Raises
    ------
    - `InputValidationError`: if `x > y`
    - `InvalidGraphError`: if the graph is not of Morse type
    """
    if x > y:
        msg = f"Band [{x}, {y}] is empty: need x ≤ y"
        raise InputValidationError(msg)
    ensure_valid(graph)
    values: dict[int, Fraction] = graph.values()
    nodes: list[PreimageNode] = []
    positions: dict[tuple[object, ...], int] = {}

    def add(node: PreimageNode) -> int:
        if node.key not in positions:
            positions[node.key] = len(nodes)
            nodes.append(node)
        return positions[node.key]

    for vertex in graph.vertices:
        if x <= vertex.value <= y:
            add(PreimageNode(vertex=vertex.id, value=vertex.value))
    fragments: list[Fragment] = []
    for index, (u, w) in enumerate(graph.edges):
        low, high = (u, w) if values[u] < values[w] else (w, u)
        start: Fraction = max(values[low], x)
        end: Fraction = min(values[high], y)
        if start > end:
            continue

        def node_at(value: Fraction, edge: int = index, ends: tuple[int, int] = (low, high)) -> int:
            for vid in ends:
                if values[vid] == value:
                    return positions[("v", vid)]
            return add(PreimageNode(edge=edge, value=value))

        if start == end:
            node_at(start)
            continue
        fragments.append(Fragment(edge=index, low=node_at(start), high=node_at(end)))
    components: UnionFind = UnionFind(range(len(nodes)))
    for fragment in fragments:
        components.union(fragment.low, fragment.high)
    roots: dict[int, int] = {}
    labels: list[int] = [roots.setdefault(components[k], len(roots)) for k in range(len(nodes))]
    h0: int = len(roots)
    return PreimageGraph(
        x=x,
        y=y,
        nodes=tuple(nodes),
        fragments=tuple(fragments),
        components=tuple(labels),
        h0=h0,
        h1=len(fragments) - len(nodes) + h0,
    )


def boundary_matrix(preimage: PreimageGraph) -> IntArray:
    """Return the `nodes × fragments` boundary matrix, `−1` at the lower end and `+1` at the upper end."""
    matrix: IntArray = np.zeros((len(preimage.nodes), len(preimage.fragments)), dtype=np.int64)
    for column, fragment in enumerate(preimage.fragments):
        matrix[fragment.low, column] -= 1
        matrix[fragment.high, column] += 1
    return matrix


def cycle_space(preimage: PreimageGraph, p: int) -> IntArray:
    """Return a basis of `H₁` over GF(p), as fragment-coordinate columns of the boundary kernel."""
    if not preimage.fragments:
        return np.zeros((0, 0), dtype=np.int64)
    return kernel_basis(np.mod(boundary_matrix(preimage), p), p)
