from collections import Counter
from typing import Self

import numpy as np
from pydantic import Field, NonNegativeInt, PositiveInt, field_validator, model_validator

from blockstab.base_model import FrozenModel
from blockstab.config import DEFAULT_FIELD
from blockstab.linalg import IntArray, ensure_prime

from .config import ArrowDirection

type Orientation = tuple[ArrowDirection, ...]


class Arrow(FrozenModel):
    """Model representing one arrow of a zigzag module.

    Attributes
    ----------
    - `direction` (`ArrowDirection`): Direction, serialized as `dir`
    - `matrix` (`tuple[tuple[int, ...], ...]`): Row-major matrix of the map, from the tail space to the head space
    """

    direction: ArrowDirection = Field(alias="dir")
    matrix: tuple[tuple[int, ...], ...] = ()

    def array(self, rows: int, cols: int) -> IntArray:
        """Return the matrix as a `rows × cols` array (`[]` stands for any empty shape)."""
        if not self.matrix and rows * cols == 0:
            return np.zeros((rows, cols), dtype=np.int64)
        return np.array(self.matrix, dtype=np.int64).reshape(rows, cols)


class ZigzagModule(FrozenModel):
    """Model representing a finite zigzag persistence module over GF(p).

    Attributes
    ----------
    - `field` (`PositiveInt`): Prime characteristic (defaults to `2`)
    - `dims` (`tuple[NonNegativeInt, ...]`): Dimensions of the `n` positions
    - `arrows` (`tuple[Arrow, ...]`): The `n − 1` arrows; arrow `k` joins positions `k` and `k + 1` (0-based)

    Notes
    -----
    - A forward arrow `k` carries a `dims[k+1] × dims[k]` matrix; a backward one `dims[k] × dims[k+1]`.
    """

    field: PositiveInt = DEFAULT_FIELD
    dims: tuple[NonNegativeInt, ...] = Field(min_length=1)
    arrows: tuple[Arrow, ...] = ()

    @field_validator("field")
    @classmethod
    def _check_field(cls, value: int) -> int:
        return ensure_prime(value)

    @model_validator(mode="after")
    def _check_shapes(self) -> Self:
        if len(self.arrows) != len(self.dims) - 1:
            msg = f"{len(self.dims)} positions need {len(self.dims) - 1} arrows, got {len(self.arrows)}"
            raise ValueError(msg)
        for k, arrow in enumerate(self.arrows):
            rows, cols = self.arrow_shape(k)
            empty_ok: bool = not arrow.matrix and rows * cols == 0
            if not empty_ok and (len(arrow.matrix) != rows or any(len(row) != cols for row in arrow.matrix)):
                msg = f"Arrow {k} ({arrow.direction}) needs a {rows}×{cols} matrix"
                raise ValueError(msg)
            if any(not 0 <= entry < self.field for row in arrow.matrix for entry in row):
                msg = f"Arrow {k} has entries outside 0..{self.field - 1}"
                raise ValueError(msg)
        return self

    @classmethod
    def from_arrays(
        cls,
        dims: tuple[int, ...] | list[int],
        orientation: Orientation | list[ArrowDirection],
        matrices: list[IntArray],
        field: int = DEFAULT_FIELD,
    ) -> "ZigzagModule":
        """Build a module from numpy matrices (reduced mod `field`)."""
        return cls(
            field=field,
            dims=tuple(dims),
            arrows=tuple(
                Arrow(
                    direction=direction,
                    matrix=tuple(tuple(int(v) % field for v in row) for row in np.asarray(matrix, dtype=np.int64)),
                )
                for direction, matrix in zip(orientation, matrices, strict=True)
            ),
        )

    @classmethod
    def zero(cls, n: int, orientation: Orientation, field: int = DEFAULT_FIELD) -> "ZigzagModule":
        return cls.from_arrays(
            (0,) * n,
            orientation,
            [np.zeros((0, 0), dtype=np.int64) for _ in orientation],
            field,
        )

    @property
    def n(self) -> int:
        return len(self.dims)

    @property
    def orientation(self) -> Orientation:
        return tuple(arrow.direction for arrow in self.arrows)

    def arrow_shape(self, k: int) -> tuple[int, int]:
        if self.arrows[k].direction is ArrowDirection.FWD:
            return self.dims[k + 1], self.dims[k]
        return self.dims[k], self.dims[k + 1]

    def map_array(self, k: int) -> IntArray:
        """Return the matrix of arrow `k` (0-based) with its declared shape."""
        return self.arrows[k].array(*self.arrow_shape(k))


class ZigzagInterval(FrozenModel):
    """Model representing an interval `[first, last]` of zigzag positions (1-based, inclusive).

    Attributes
    ----------
    - `first` (`PositiveInt`): First position
    - `last` (`PositiveInt`): Last position
    """

    first: PositiveInt
    last: PositiveInt

    @model_validator(mode="after")
    def _check_order(self) -> Self:
        if self.first > self.last:
            msg = f"Interval [{self.first}, {self.last}] is empty"
            raise ValueError(msg)
        return self

    def contains(self, position: int) -> bool:
        return self.first <= position <= self.last

    def __str__(self) -> str:
        return f"[{self.first}, {self.last}]"


class ZigzagBarcode(FrozenModel):
    """Model representing a multiset of zigzag intervals.

    Attributes
    ----------
    - `intervals` (`tuple[ZigzagInterval, ...]`): Intervals, multiplicity by repetition
    """

    intervals: tuple[ZigzagInterval, ...] = ()

    def __len__(self) -> int:
        return len(self.intervals)

    def sorted(self) -> "ZigzagBarcode":
        return ZigzagBarcode(intervals=tuple(sorted(self.intervals, key=lambda iv: (iv.first, iv.last))))

    def multiplicities(self) -> Counter[tuple[int, int]]:
        return Counter((interval.first, interval.last) for interval in self.intervals)

    def same_multiset(self, other: "ZigzagBarcode") -> bool:
        return self.multiplicities() == other.multiplicities()

    def pointwise_dims(self, n: int) -> tuple[int, ...]:
        """Return the dimension vector of the direct sum of the interval modules over `n` positions."""
        return tuple(sum(1 for interval in self.intervals if interval.contains(i)) for i in range(1, n + 1))
