from typing import Self

import numpy as np
from pydantic import Field, NonNegativeInt, PositiveInt, field_validator, model_validator

from blockstab.base_model import FrozenModel
from blockstab.config import DEFAULT_FIELD
from blockstab.linalg import IntArray, MatrixEntries, array_of, ensure_prime, has_shape
from blockstab.values import Rational


class LineModule(FrozenModel):
    """Model representing a finitely presented persistence module over ℝ on a grid.

    Attributes
    ----------
    - `field` (`PositiveInt`): Prime characteristic (defaults to `2`)
    - `grid` (`tuple[Rational, ...]`): Strictly increasing `g₁ < … < g_m`
    - `dims` (`tuple[NonNegativeInt, ...]`): Dimension on each cell `[g_i, g_{i+1})`; the last cell is `[g_m, ∞)`
    - `maps` (`tuple[MatrixEntries, ...]`): The `m − 1` structure maps, map `i` is `dims[i+1] × dims[i]`

    Notes
    -----
    - The module is zero below `g₁`.
    """

    field: PositiveInt = DEFAULT_FIELD
    grid: tuple[Rational, ...] = Field(min_length=1)
    dims: tuple[NonNegativeInt, ...]
    maps: tuple[MatrixEntries, ...] = ()

    @field_validator("field")
    @classmethod
    def _check_field(cls, value: int) -> int:
        return ensure_prime(value)

    @model_validator(mode="after")
    def _check_shapes(self) -> Self:
        if any(left >= right for left, right in zip(self.grid, self.grid[1:])):
            msg = "Grid must be strictly increasing"
            raise ValueError(msg)
        if len(self.dims) != len(self.grid) or len(self.maps) != len(self.grid) - 1:
            msg = f"A grid of {len(self.grid)} points needs {len(self.grid)} dims and {len(self.grid) - 1} maps"
            raise ValueError(msg)
        for i, entries in enumerate(self.maps):
            if not has_shape(entries, self.dims[i + 1], self.dims[i]):
                msg = f"Map {i} needs shape {self.dims[i + 1]}×{self.dims[i]}"
                raise ValueError(msg)
        return self

    @classmethod
    def from_arrays(
        cls,
        grid: tuple[Rational, ...],
        dims: tuple[int, ...] | list[int],
        maps: list[IntArray],
        field: int = DEFAULT_FIELD,
    ) -> "LineModule":
        return cls(field=field, grid=tuple(grid), dims=tuple(dims), maps=tuple(entries_of(m, field) for m in maps))

    @property
    def m(self) -> int:
        return len(self.grid)

    def map_array(self, i: int) -> IntArray:
        """Return the structure map from cell `i` to cell `i + 1` (0-based)."""
        return array_of(self.maps[i], self.dims[i + 1], self.dims[i])


class LineMorphism(FrozenModel):
    """Model representing a morphism of line modules on a shared grid.

    Attributes
    ----------
    - `source` (`LineModule`): Domain `M`
    - `target` (`LineModule`): Codomain `N`
    - `components` (`tuple[MatrixEntries, ...]`): One `dim N_i × dim M_i` matrix per cell

    Notes
    -----
    - Validation asserts `N_i ∘ f_i = f_{i+1} ∘ M_i` at every cell boundary.
    """

    source: LineModule
    target: LineModule
    components: tuple[MatrixEntries, ...]

    @model_validator(mode="after")
    def _check_naturality(self) -> Self:
        if self.source.field != self.target.field:
            msg = f"Field characteristics differ: GF({self.source.field}) vs GF({self.target.field})"
            raise ValueError(msg)
        if self.source.grid != self.target.grid:
            msg = "Source and target must live on the same grid"
            raise ValueError(msg)
        if len(self.components) != self.source.m:
            msg = f"Need {self.source.m} components, got {len(self.components)}"
            raise ValueError(msg)
        for i, entries in enumerate(self.components):
            if not has_shape(entries, self.target.dims[i], self.source.dims[i]):
                msg = f"Component {i} needs shape {self.target.dims[i]}×{self.source.dims[i]}"
                raise ValueError(msg)
        p: int = self.source.field
        for i in range(self.source.m - 1):
            left: IntArray = np.mod(self.target.map_array(i) @ self.component(i), p)
            right: IntArray = np.mod(self.component(i + 1) @ self.source.map_array(i), p)
            if not np.array_equal(left, right):
                msg = f"Square at grid boundary {i + 1} does not commute"
                raise ValueError(msg)
        return self

    @property
    def field(self) -> int:
        return self.source.field

    def component(self, i: int) -> IntArray:
        return array_of(self.components[i], self.target.dims[i], self.source.dims[i])
