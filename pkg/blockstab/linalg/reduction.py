"""Gaussian elimination over GF(p) on dense `int64` arrays.

All functions take and return arrays with entries in `0..p-1`. Characteristics stay below
`MAX_FIELD`, so sums of products of residues fit in 64 bits.
"""

import numpy as np
from numpy.typing import NDArray

type IntArray = NDArray[np.int64]


def as_residues(a: object, p: int) -> IntArray:
    """Return `a` as a 2-D `int64` array reduced mod `p`."""
    array: IntArray = np.asarray(a, dtype=np.int64)
    if array.ndim == 1:
        array = array.reshape(-1, 1)
    return np.mod(array, p)


def row_reduce(a: IntArray, p: int) -> tuple[IntArray, list[int]]:
    """Bring `a` to reduced row echelon form.

    Args
    ----
    - `a` (`IntArray`): Matrix over GF(p)
    - `p` (`int`): Field characteristic

    Returns
    -------
    - `tuple[IntArray, list[int]]`: The reduced matrix and its pivot columns (one per nonzero row, in order)
    """
    m: IntArray = np.mod(np.array(a, dtype=np.int64), p)
    rows, cols = m.shape
    pivots: list[int] = []
    r: int = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.flatnonzero(m[r:, c])
        if nonzero.size == 0:
            continue
        pivot_row: int = r + int(nonzero[0])
        if pivot_row != r:
            m[[r, pivot_row]] = m[[pivot_row, r]]
        m[r] = np.mod(m[r] * pow(int(m[r, c]), -1, p), p)
        column: IntArray = m[:, c].copy()
        column[r] = 0
        if column.any():
            m = np.mod(m - np.outer(column, m[r]), p)
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: IntArray, p: int) -> int:
    if a.size == 0:
        return 0
    return len(row_reduce(a, p)[1])


def kernel_basis(a: IntArray, p: int) -> IntArray:
    """Return a basis of `{x : a x = 0}` as the columns of a `cols × k` array."""
    cols: int = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    reduced, pivots = row_reduce(a, p)
    pivot_set: set[int] = set(pivots)
    free: list[int] = [c for c in range(cols) if c not in pivot_set]
    basis: IntArray = np.zeros((cols, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        basis[f, k] = 1
        for row, c in enumerate(pivots):
            basis[c, k] = (-reduced[row, f]) % p
    return basis


def solve(a: IntArray, b: IntArray, p: int) -> IntArray | None:
    """Return one `x` with `a x = b` (columnwise for a 2-D `b`), or `None` when `b` leaves the column space."""
    rhs: IntArray = as_residues(b, p)
    rows, cols = a.shape
    if rhs.shape[0] != rows:
        msg = f"Right-hand side has {rhs.shape[0]} rows, matrix has {rows}"
        raise ValueError(msg)
    if rows == 0:
        return np.zeros((cols, rhs.shape[1]), dtype=np.int64)
    reduced, pivots = row_reduce(np.hstack([a, rhs]), p)
    if pivots and pivots[-1] >= cols:
        return None
    x: IntArray = np.zeros((cols, rhs.shape[1]), dtype=np.int64)
    for row, c in enumerate(pivots):
        x[c] = reduced[row, cols:]
    return x


def column_basis(a: IntArray, p: int) -> IntArray:
    """Return the independent columns of `a` selected by elimination (a basis of its column space)."""
    if a.size == 0:
        return np.zeros((a.shape[0], 0), dtype=np.int64)
    _, pivots = row_reduce(a, p)
    return np.mod(a[:, pivots], p)


def complement_basis(sub: IntArray, dim: int, p: int) -> IntArray:
    """Extend the columns of `sub` (assumed independent) by standard vectors to a basis of GF(p)^dim; return the added vectors."""
    identity: IntArray = np.eye(dim, dtype=np.int64)
    if dim == 0:
        return identity
    stacked: IntArray = np.hstack([sub, identity])
    _, pivots = row_reduce(stacked, p)
    offset: int = sub.shape[1]
    chosen: list[int] = [c - offset for c in pivots if c >= offset]
    return identity[:, chosen]


def matmul(a: IntArray, b: IntArray, p: int) -> IntArray:
    return np.mod(a @ b, p)


def inverse(a: IntArray, p: int) -> IntArray:
    """Return the inverse of a square matrix over GF(p).

    Raises
    ------
    - `ValueError`: if `a` is singular or not square
    """
    n: int = a.shape[0]
    if a.shape != (n, n):
        msg = f"Cannot invert a {a.shape[0]}×{a.shape[1]} matrix"
        raise ValueError(msg)
    reduced, pivots = row_reduce(np.hstack([a, np.eye(n, dtype=np.int64)]), p)
    if pivots[:n] != list(range(n)):
        msg = "Matrix is singular"
        raise ValueError(msg)
    return reduced[:, n:]


def random_invertible(rng: np.random.Generator, n: int, p: int) -> IntArray:
    """Sample a uniformly random invertible `n × n` matrix over GF(p) by rejection."""
    while True:
        candidate: IntArray = rng.integers(0, p, size=(n, n), dtype=np.int64)
        if rank(candidate, p) == n:
            return candidate
