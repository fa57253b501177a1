"""Level-set zigzags of PL graphs, their interlevel block barcodes and the pointwise certificate."""

import logging
from fractions import Fraction

import numpy as np

from blockstab.blocks import Block, BlockBarcode, BlockKind, diag_barcode
from blockstab.config import DEFAULT_FIELD
from blockstab.errors import ConsistencyError, InputValidationError
from blockstab.extension import Grid, extend_barcode
from blockstab.intervals import Barcode1D
from blockstab.linalg import IntArray, solve
from blockstab.zigzag import ArrowDirection, ZigzagBarcode, ZigzagModule, decompose_zz

from .models import PLGraph, PreimageGraph
from .preimage import cycle_space, ensure_valid, preimage_graph

logger: logging.Logger = logging.getLogger(__name__)


def _check_degree(degree: int) -> None:
    if degree not in (0, 1):
        msg = f"Homology degree must be 0 or 1, got {degree}"
        raise InputValidationError(msg)


def levelset_spaces(graph: PLGraph) -> list[tuple[Fraction, Fraction]]:
    """Return the bands of the level-set zigzag, left to right.

    Returns
    -------
    - `list[tuple[Fraction, Fraction]]`: Critical bands `[m_{k−1}, m_k]` at the sinks and regular levels
      `[m_k, m_k]` at the sources, where `m_k` is the midpoint of `s_k` and `s_{k+1}` (`m₀ = s₁`, `m_m = s_m`)
    """
    critical: list[Fraction] = ensure_valid(graph).critical_values()
    mids: list[Fraction] = [critical[0]]
    mids += [(left + right) / 2 for left, right in zip(critical, critical[1:])]
    mids.append(critical[-1])
    spaces: list[tuple[Fraction, Fraction]] = []
    for k in range(1, len(critical) + 1):
        spaces.append((mids[k - 1], mids[k]))
        if k < len(critical):
            spaces.append((mids[k], mids[k]))
    return spaces


def _node_in(preimage: PreimageGraph, small: PreimageGraph, node: int) -> int:
    """Locate a node of `small` inside the larger interlevel set `preimage`."""
    key: tuple[object, ...] = small.nodes[node].key
    for index, candidate in enumerate(preimage.nodes):
        if candidate.key == key:
            return index
    edge: int | None = small.nodes[node].edge
    for fragment in preimage.fragments:
        if fragment.edge == edge:
            return fragment.low
    msg = f"Node {key} of [{small.x}, {small.y}] is missing from [{preimage.x}, {preimage.y}]"
    raise ConsistencyError(msg)


def _h0_map(small: PreimageGraph, large: PreimageGraph) -> IntArray:
    matrix: IntArray = np.zeros((large.h0, small.h0), dtype=np.int64)
    for node in range(len(small.nodes)):
        matrix[large.components[_node_in(large, small, node)], small.components[node]] = 1
    return matrix


def _h1_map(small: PreimageGraph, large: PreimageGraph, p: int) -> IntArray:
    source_cycles: IntArray = cycle_space(small, p)
    target_cycles: IntArray = cycle_space(large, p)
    if source_cycles.shape[1] == 0:
        return np.zeros((target_cycles.shape[1], 0), dtype=np.int64)
    column_of: dict[int, int] = {fragment.edge: k for k, fragment in enumerate(large.fragments)}
    pushed: IntArray = np.zeros((len(large.fragments), source_cycles.shape[1]), dtype=np.int64)
    for row, fragment in enumerate(small.fragments):
        pushed[column_of[fragment.edge]] = source_cycles[row]
    coordinates: IntArray | None = solve(target_cycles, pushed, p)
    if coordinates is None:
        msg = f"Cycles of [{small.x}, {small.y}] do not map into the cycles of [{large.x}, {large.y}]"
        raise ConsistencyError(msg)
    return coordinates


def levelset_zigzag(graph: PLGraph, degree: int, field: int = DEFAULT_FIELD) -> ZigzagModule:
    """Build the zigzag of `H_degree` over the bands of `levelset_spaces`.

    Args
    ----
    - `graph` (`PLGraph`): PL graph of Morse type
    - `degree` (`int`): `0` or `1`
    - `field` (`int`, optional): Prime characteristic

    Returns
    -------
    - `ZigzagModule`: Sinks at critical bands, sources at regular levels, every map induced by inclusion

    Raises
    ------
    - `InputValidationError`: if the degree is not `0` or `1`
    - `InvalidGraphError`: if the graph is not of Morse type
    """
    _check_degree(degree)
    preimages: list[PreimageGraph] = [preimage_graph(graph, x, y) for x, y in levelset_spaces(graph)]
    orientation: list[ArrowDirection] = []
    matrices: list[IntArray] = []
    for k in range(len(preimages) - 1):
        if k % 2 == 0:
            orientation.append(ArrowDirection.BWD)
            small, large = preimages[k + 1], preimages[k]
        else:
            orientation.append(ArrowDirection.FWD)
            small, large = preimages[k], preimages[k + 1]
        matrices.append(_h0_map(small, large) if degree == 0 else _h1_map(small, large, field))
    dims: list[int] = [preimage.betti(degree) for preimage in preimages]
    return ZigzagModule.from_arrays(dims, orientation, matrices, field)


def interlevel_blocks(graph: PLGraph, degree: int, field: int = DEFAULT_FIELD) -> BlockBarcode:
    """Return the block barcode `B_degree(γ)` of the interlevel set filtration.

    Returns
    -------
    - `BlockBarcode`: For degree 0, the extended bars of the `H₀` level-set zigzag on the critical values;
      for degree 1, one switched block `[b, a]` per open block `(a, b)` of `B₀`

    Raises
    ------
    - `ConsistencyError`: if the `H₁` level-set zigzag has a bar, which no switched block can explain
    """
    _check_degree(degree)
    grid: Grid = Grid(values=tuple(ensure_valid(graph).critical_values()))
    zero: ZigzagModule = levelset_zigzag(graph, 0, field)
    blocks: BlockBarcode = BlockBarcode(
        blocks=tuple(grid.relabel(block) for block in extend_barcode(decompose_zz(zero), zero.orientation).blocks),
    )
    if degree == 0:
        return blocks
    witness: ZigzagBarcode = decompose_zz(levelset_zigzag(graph, 1, field))
    if len(witness):
        msg = "H₁ level-set zigzag has bars that switched blocks cannot meet"
        raise ConsistencyError(msg, details=[str(interval) for interval in witness.intervals])
    return BlockBarcode(
        blocks=tuple(Block.make(BlockKind.C, block.b, block.a) for block in blocks.blocks if block.kind is BlockKind.O),
    )


def level_barcode(graph: PLGraph, degree: int, field: int = DEFAULT_FIELD) -> Barcode1D:
    """Return the level-set barcode `L_degree(γ)`, the diagonal of `B_degree(γ)`."""
    return diag_barcode(interlevel_blocks(graph, degree, field))


def verification_grid(graph: PLGraph) -> list[Fraction]:
    """Return the critical values, their midpoints and one point beyond each extreme."""
    critical: list[Fraction] = ensure_valid(graph).critical_values()
    points: set[Fraction] = set(critical) | {critical[0] - 1, critical[-1] + 1}
    points |= {(left + right) / 2 for left, right in zip(critical, critical[1:])}
    return sorted(points)


def pointwise_mismatches(graph: PLGraph, degree: int, barcode: BlockBarcode) -> list[str]:
    """List the grid bands where the block count differs from the interlevel homology.

    Returns
    -------
    - `list[str]`: One entry per band `[x, y]` of the verification grid with a mismatch
    """
    _check_degree(degree)
    grid: list[Fraction] = verification_grid(graph)
    mismatches: list[str] = []
    for i, x in enumerate(grid):
        for y in grid[i:]:
            expected: int = preimage_graph(graph, x, y).betti(degree)
            counted: int = barcode.count_containing(x, y)
            if counted != expected:
                mismatches.append(f"[{x}, {y}]: {counted} blocks, H{degree} has dimension {expected}")
    if mismatches:
        logger.debug("pointwise certificate found %d mismatches in degree %d", len(mismatches), degree)
    return mismatches


def verify_pointwise(graph: PLGraph, degree: int, barcode: BlockBarcode) -> bool:
    """Decide whether `barcode` has the interlevel homology of `graph` at every verification band."""
    return not pointwise_mismatches(graph, degree, barcode)
