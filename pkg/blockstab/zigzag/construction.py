from collections.abc import Sequence

import numpy as np

from blockstab.config import DEFAULT_FIELD
from blockstab.errors import DimensionMismatchError, InputValidationError
from blockstab.linalg import IntArray, ensure_same_field, inverse, matmul, random_invertible

from .config import ArrowDirection
from .models import Orientation, ZigzagInterval, ZigzagModule


def interval_module_zz(
    interval: ZigzagInterval,
    n: int,
    orientation: Orientation,
    field: int = DEFAULT_FIELD,
) -> ZigzagModule:
    """Build the interval module `I^J` on a zigzag with `n` positions.

    Args
    ----
    - `interval` (`ZigzagInterval`): Support `J`
    - `n` (`int`): Number of positions
    - `orientation` (`Orientation`): The `n − 1` arrow directions
    - `field` (`int`, optional): Prime characteristic (defaults to `2`)

    Returns
    -------
    - `ZigzagModule`: `k` on `J`, `0` elsewhere, identities between consecutive positions of `J`

    Raises
    ------
    - `InputValidationError`: if `J` leaves `1..n` or the orientation has the wrong length
    """
    if interval.last > n:
        msg = f"Interval {interval} does not fit in {n} positions"
        raise InputValidationError(msg)
    if len(orientation) != n - 1:
        raise DimensionMismatchError(n - 1, len(orientation), "orientation")
    dims: tuple[int, ...] = tuple(int(interval.contains(i)) for i in range(1, n + 1))
    matrices: list[IntArray] = []
    for k, direction in enumerate(orientation):
        tail, head = (dims[k], dims[k + 1]) if direction is ArrowDirection.FWD else (dims[k + 1], dims[k])
        matrices.append(np.ones((head, tail), dtype=np.int64))
    return ZigzagModule.from_arrays(dims, orientation, matrices, field)


def _block_diagonal(blocks: list[IntArray]) -> IntArray:
    rows: int = sum(block.shape[0] for block in blocks)
    cols: int = sum(block.shape[1] for block in blocks)
    result: IntArray = np.zeros((rows, cols), dtype=np.int64)
    r: int = 0
    c: int = 0
    for block in blocks:
        result[r : r + block.shape[0], c : c + block.shape[1]] = block
        r += block.shape[0]
        c += block.shape[1]
    return result


def direct_sum(
    modules: Sequence[ZigzagModule],
    *,
    n: int | None = None,
    orientation: Orientation | None = None,
    field: int | None = None,
) -> ZigzagModule:
    """Return the direct sum of zigzag modules sharing positions, orientation and field.

    Args
    ----
    - `modules` (`Sequence[ZigzagModule]`): Summands
    - `n`, `orientation`, `field` (optional): Shape of the result; required when `modules` is empty

    Returns
    -------
    - `ZigzagModule`: Summed dimensions with block-diagonal arrow matrices

    Raises
    ------
    - `InputValidationError`: on mismatched shapes or orientations, or an empty list without a declared shape
    - `FieldMismatchError`: on mismatched characteristics
    """
    if not modules:
        if n is None or orientation is None:
            msg = "An empty direct sum needs n and orientation"
            raise InputValidationError(msg)
        return ZigzagModule.zero(n, orientation, field or DEFAULT_FIELD)
    first: ZigzagModule = modules[0]
    p: int = ensure_same_field(*(module.field for module in modules), *(() if field is None else (field,)))
    expected_orientation: Orientation = first.orientation if orientation is None else tuple(orientation)
    for module in modules:
        if module.orientation != expected_orientation or (n is not None and module.n != n):
            msg = "Direct summands must share the number of positions and the orientation"
            raise InputValidationError(msg)
    dims: tuple[int, ...] = tuple(sum(column) for column in zip(*(module.dims for module in modules), strict=True))
    matrices: list[IntArray] = [
        _block_diagonal([module.map_array(k) for module in modules]) for k in range(first.n - 1)
    ]
    return ZigzagModule.from_arrays(dims, expected_orientation, matrices, p)


def shuffle_basis(
    module: ZigzagModule,
    seed: int | np.random.Generator | None = None,
    *,
    transforms: Sequence[IntArray] | None = None,
) -> ZigzagModule:
    """Change basis independently at every position.

    Args
    ----
    - `module` (`ZigzagModule`): Module `V`
    - `seed` (`int | Generator`, optional): Seed or generator for the random invertible matrices
    - `transforms` (`Sequence[IntArray]`, optional): Explicit invertible matrices `T_i`, one per position

    Returns
    -------
    - `ZigzagModule`: The isomorphic module with arrows `T_head · A · T_tail⁻¹`
    """
    p: int = module.field
    if transforms is None:
        rng: np.random.Generator = np.random.default_rng(seed)
        transforms = [random_invertible(rng, dim, p) for dim in module.dims]
    if [t.shape for t in transforms] != [(dim, dim) for dim in module.dims]:
        raise DimensionMismatchError([(d, d) for d in module.dims], [t.shape for t in transforms], "basis change")
    inverses: list[IntArray] = [inverse(t, p) for t in transforms]
    matrices: list[IntArray] = []
    for k, direction in enumerate(module.orientation):
        tail, head = (k, k + 1) if direction is ArrowDirection.FWD else (k + 1, k)
        matrices.append(matmul(matmul(transforms[head], module.map_array(k), p), inverses[tail], p))
    return ZigzagModule.from_arrays(module.dims, module.orientation, matrices, p)
