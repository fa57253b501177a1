from collections.abc import Mapping, Sequence

import numpy as np

from blockstab.config import DEFAULT_FIELD
from blockstab.errors import DimensionMismatchError, InputValidationError
from blockstab.linalg import IntArray, ensure_same_field, entries_of, inverse, matmul
from blockstab.values import Rational

from .models import LineModule, LineMorphism

type CellRange = tuple[int, int]


def interval_line_module(
    grid: tuple[Rational, ...],
    cells: CellRange,
    field: int = DEFAULT_FIELD,
) -> LineModule:
    """Build the interval module supported on cells `first..last` (1-based), i.e. on `[g_first, g_{last+1})`."""
    first, last = cells
    if not 1 <= first <= last <= len(grid):
        msg = f"Cells {cells} outside 1..{len(grid)}"
        raise InputValidationError(msg)
    dims: list[int] = [int(first <= i <= last) for i in range(1, len(grid) + 1)]
    maps: list[IntArray] = [np.ones((dims[i + 1], dims[i]), dtype=np.int64) for i in range(len(grid) - 1)]
    return LineModule.from_arrays(grid, dims, maps, field)


def _block_diagonal(blocks: Sequence[IntArray]) -> IntArray:
    result: IntArray = np.zeros(
        (sum(b.shape[0] for b in blocks), sum(b.shape[1] for b in blocks)),
        dtype=np.int64,
    )
    r: int = 0
    c: int = 0
    for block in blocks:
        result[r : r + block.shape[0], c : c + block.shape[1]] = block
        r += block.shape[0]
        c += block.shape[1]
    return result


def line_direct_sum(
    modules: Sequence[LineModule],
    *,
    grid: tuple[Rational, ...] | None = None,
    field: int | None = None,
) -> LineModule:
    """Return the direct sum of line modules on a common grid (`grid` is needed for an empty list)."""
    if not modules:
        if grid is None:
            msg = "An empty direct sum needs a grid"
            raise InputValidationError(msg)
        p: int = field or DEFAULT_FIELD
        return LineModule.from_arrays(grid, [0] * len(grid), [np.zeros((0, 0), dtype=np.int64)] * (len(grid) - 1), p)
    p = ensure_same_field(*(module.field for module in modules))
    common: tuple[Rational, ...] = modules[0].grid
    if any(module.grid != common for module in modules):
        msg = "Direct summands must share the grid"
        raise InputValidationError(msg)
    dims: list[int] = [sum(column) for column in zip(*(module.dims for module in modules), strict=True)]
    maps: list[IntArray] = [
        _block_diagonal([module.map_array(i) for module in modules]) for i in range(len(common) - 1)
    ]
    return LineModule.from_arrays(common, dims, maps, p)


def interval_sum_morphism(
    grid: tuple[Rational, ...],
    source_cells: Sequence[CellRange],
    target_cells: Sequence[CellRange],
    scalars: Mapping[tuple[int, int], int],
    field: int = DEFAULT_FIELD,
) -> LineMorphism:
    """Build a morphism between sums of interval modules from one scalar per summand pair.

    Args
    ----
    - `grid` (`tuple[Rational, ...]`): Common grid
    - `source_cells`, `target_cells` (`Sequence[CellRange]`): Supports of the summands of `M` and `N`
    - `scalars` (`Mapping[tuple[int, int], int]`): `(source summand, target summand) ↦ λ`
    - `field` (`int`, optional): Prime characteristic

    Returns
    -------
    - `LineMorphism`: `λ` on the cells shared by the two supports, `0` elsewhere

    Raises
    ------
    - `InputValidationError`: if a pair `[a₁..a₂] → [c₁..c₂]` with nonzero `λ` violates `c₁ ≤ a₁ ≤ c₂ ≤ a₂`
    """
    for (s, t), value in scalars.items():
        a1, a2 = source_cells[s]
        c1, c2 = target_cells[t]
        if value % field and not c1 <= a1 <= c2 <= a2:
            msg = f"No nonzero morphism from cells {source_cells[s]} to cells {target_cells[t]}"
            raise InputValidationError(msg)
    source: LineModule = line_direct_sum([interval_line_module(grid, c, field) for c in source_cells], grid=grid, field=field)
    target: LineModule = line_direct_sum([interval_line_module(grid, c, field) for c in target_cells], grid=grid, field=field)
    components: list[IntArray] = []
    for cell in range(1, len(grid) + 1):
        rows: list[int] = [t for t, (c1, c2) in enumerate(target_cells) if c1 <= cell <= c2]
        cols: list[int] = [s for s, (a1, a2) in enumerate(source_cells) if a1 <= cell <= a2]
        component: IntArray = np.zeros((len(rows), len(cols)), dtype=np.int64)
        for r, t in enumerate(rows):
            for c, s in enumerate(cols):
                component[r, c] = scalars.get((s, t), 0) % field
        components.append(component)
    return LineMorphism(source=source, target=target, components=tuple(entries_of(c, field) for c in components))


def line_change_basis(module: LineModule, transforms: Sequence[IntArray]) -> LineModule:
    """Conjugate the structure maps by invertible matrices `T_i`, one per cell."""
    p: int = module.field
    if [t.shape for t in transforms] != [(d, d) for d in module.dims]:
        raise DimensionMismatchError([(d, d) for d in module.dims], [t.shape for t in transforms], "basis change")
    maps: list[IntArray] = [
        matmul(matmul(transforms[i + 1], module.map_array(i), p), inverse(transforms[i], p), p)
        for i in range(module.m - 1)
    ]
    return LineModule.from_arrays(module.grid, module.dims, maps, p)


def morphism_change_basis(
    morphism: LineMorphism,
    source_transforms: Sequence[IntArray],
    target_transforms: Sequence[IntArray],
) -> LineMorphism:
    """Transport a morphism along basis changes of its source and target."""
    p: int = morphism.field
    components: list[IntArray] = [
        matmul(matmul(target_transforms[i], morphism.component(i), p), inverse(source_transforms[i], p), p)
        for i in range(morphism.source.m)
    ]
    return LineMorphism(
        source=line_change_basis(morphism.source, source_transforms),
        target=line_change_basis(morphism.target, target_transforms),
        components=tuple(entries_of(c, p) for c in components),
    )
