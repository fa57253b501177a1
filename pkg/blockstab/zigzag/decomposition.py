"""Interval decomposition of zigzag modules through limit-to-colimit ranks."""

import logging
from collections.abc import Iterator, Sequence

import numpy as np

from blockstab.errors import ConsistencyError, InputValidationError
from blockstab.linalg import IntArray, kernel_basis, matmul, rank

from .config import ArrowDirection
from .models import ZigzagBarcode, ZigzagInterval, ZigzagModule

logger: logging.Logger = logging.getLogger(__name__)


def _offsets(module: ZigzagModule, positions: Sequence[int]) -> dict[int, int]:
    offsets: dict[int, int] = {}
    running: int = 0
    for position in positions:
        offsets[position] = running
        running += module.dims[position]
    return offsets


def _place(target: IntArray, row: int, col: int, block: IntArray) -> None:
    target[row : row + block.shape[0], col : col + block.shape[1]] = block


def relation_matrix(module: ZigzagModule, positions: Sequence[int]) -> IntArray:
    """Return the relations `ι_tail(v) − ι_head(A v)` spanning the kernel of `⊕ V_i → colim`.

    Args
    ----
    - `module` (`ZigzagModule`): Module `V`
    - `positions` (`Sequence[int]`): Sorted 0-based positions of the restriction

    Returns
    -------
    - `IntArray`: Columns in `⊕_{i ∈ positions} V_i`, one per basis vector of each arrow tail inside the restriction
    """
    p: int = module.field
    offsets: dict[int, int] = _offsets(module, positions)
    total: int = sum(module.dims[i] for i in positions)
    columns: list[IntArray] = [np.zeros((total, 0), dtype=np.int64)]
    for k in range(module.n - 1):
        if k not in offsets or k + 1 not in offsets:
            continue
        tail, head = (k, k + 1) if module.arrows[k].direction is ArrowDirection.FWD else (k + 1, k)
        block: IntArray = np.zeros((total, module.dims[tail]), dtype=np.int64)
        _place(block, offsets[tail], 0, np.eye(module.dims[tail], dtype=np.int64))
        _place(block, offsets[head], 0, np.mod(-module.map_array(k), p))
        columns.append(block)
    return np.hstack(columns)


def colimit_dimension(module: ZigzagModule, positions: Sequence[int]) -> int:
    """Return `dim colim V|positions`, the quotient of the direct sum by the relation images."""
    total: int = sum(module.dims[i] for i in positions)
    return total - rank(relation_matrix(module, positions), module.field)


def limit_basis(module: ZigzagModule, positions: Sequence[int]) -> IntArray:
    """Return a basis of `lim V|positions` as columns of `⊕_{i ∈ positions} V_i` (compatible families)."""
    p: int = module.field
    offsets: dict[int, int] = _offsets(module, positions)
    total: int = sum(module.dims[i] for i in positions)
    constraints: list[IntArray] = [np.zeros((0, total), dtype=np.int64)]
    for k in range(module.n - 1):
        if k not in offsets or k + 1 not in offsets:
            continue
        tail, head = (k, k + 1) if module.arrows[k].direction is ArrowDirection.FWD else (k + 1, k)
        block: IntArray = np.zeros((module.dims[head], total), dtype=np.int64)
        _place(block, 0, offsets[tail], module.map_array(k))
        _place(block, 0, offsets[head], np.mod(-np.eye(module.dims[head], dtype=np.int64), p))
        constraints.append(block)
    return kernel_basis(np.vstack(constraints), p)


def _check_range(module: ZigzagModule, p: int, q: int) -> None:
    if not 1 <= p <= q <= module.n:
        msg = f"Need 1 ≤ p ≤ q ≤ {module.n}, got p={p}, q={q}"
        raise InputValidationError(msg)


def generalized_rank(module: ZigzagModule, p: int, q: int) -> int:
    """Return the rank of the canonical map `lim V|[p,q] → colim V|[p,q]`.

    Args
    ----
    - `module` (`ZigzagModule`): Module `V`
    - `p`, `q` (`int`): 1-based positions with `p ≤ q`

    Returns
    -------
    - `int`: `rank([R | ι_p L_p]) − rank(R)` where `R` holds the colimit relations and `L_p` the `V_p` part of a limit basis
    """
    _check_range(module, p, q)
    positions: list[int] = list(range(p - 1, q))
    limit: IntArray = limit_basis(module, positions)
    if limit.shape[1] == 0:
        return 0
    head_rows: int = module.dims[p - 1]
    # every family is identified with its first component in the colimit
    image: IntArray = np.zeros_like(limit)
    image[:head_rows] = limit[:head_rows]
    relations: IntArray = relation_matrix(module, positions)
    return rank(np.hstack([relations, image]), module.field) - rank(relations, module.field)


def _cokernel_projection(image: IntArray, p: int) -> IntArray:
    # rows span the annihilator of the image, so the kernel of the projection is the image
    return kernel_basis(image.T, p).T


def _ranks_from(module: ZigzagModule, start: int) -> Iterator[int]:
    """Yield `generalized_rank(V, start, q)` for `q = start, start + 1, …` (1-based), sweeping limit and colimit."""
    p: int = module.field
    dim: int = module.dims[start - 1]
    identity: IntArray = np.eye(dim, dtype=np.int64)
    # limit basis by its first and last components; colimit by the structure maps from both ends
    lim_first, lim_last = identity, identity
    colim_first, colim_last = identity, identity
    yield dim
    for k in range(start - 1, module.n - 1):
        matrix: IntArray = module.map_array(k)
        if module.arrows[k].direction is ArrowDirection.FWD:
            lim_last = matmul(matrix, lim_last, p)
            stacked: IntArray = np.vstack([colim_last, np.mod(-matrix, p)])
            projection: IntArray = _cokernel_projection(stacked, p)
            split: int = colim_first.shape[0]
            colim_first = matmul(projection[:, :split], colim_first, p)
            colim_last = projection[:, split:]
        else:
            pairs: IntArray = kernel_basis(np.hstack([lim_last, np.mod(-matrix, p)]), p)
            split = lim_last.shape[1]
            lim_first = matmul(lim_first, pairs[:split], p)
            lim_last = pairs[split:]
            colim_last = matmul(colim_last, matrix, p)
        composite: IntArray = matmul(colim_first, lim_first, p)
        yield rank(composite, p) if composite.size else 0


def decompose_zz(module: ZigzagModule) -> ZigzagBarcode:
    """Decompose a zigzag module into interval summands.

    Returns
    -------
    - `ZigzagBarcode`: Intervals `[p, q]` with multiplicity `r(p,q) − r(p−1,q) − r(p,q+1) + r(p−1,q+1)`

    Raises
    ------
    - `ConsistencyError`: if the multiplicities are negative or do not reproduce the dimension vector
    """
    n: int = module.n
    ranks: dict[tuple[int, int], int] = {}
    for p in range(1, n + 1):
        for q, value in enumerate(_ranks_from(module, p), start=p):
            if value == 0:
                break
            ranks[(p, q)] = value

    def r(p: int, q: int) -> int:
        return ranks.get((p, q), 0)

    intervals: list[ZigzagInterval] = []
    for p, q in sorted(ranks):
        multiplicity: int = r(p, q) - r(p - 1, q) - r(p, q + 1) + r(p - 1, q + 1)
        if multiplicity < 0:
            msg = f"Negative multiplicity {multiplicity} for [{p}, {q}]"
            raise ConsistencyError(msg)
        if multiplicity:
            logger.debug("interval [%d, %d] with multiplicity %d", p, q, multiplicity)
        intervals.extend(ZigzagInterval(first=p, last=q) for _ in range(multiplicity))
    barcode: ZigzagBarcode = ZigzagBarcode(intervals=tuple(intervals))
    if barcode.pointwise_dims(n) != module.dims:
        raise ConsistencyError(
            "Decomposition does not reproduce the dimension vector",
            details=[f"expected {module.dims}", f"got {barcode.pointwise_dims(n)}"],
        )
    return barcode
