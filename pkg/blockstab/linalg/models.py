from typing import Self

import numpy as np
from pydantic import Field, NonNegativeInt, PositiveInt, ValidationInfo, field_validator, model_validator

from blockstab.base_model import FrozenModel
from blockstab.config import DEFAULT_FIELD, MAX_FIELD
from blockstab.errors import DimensionMismatchError, FieldMismatchError

from .reduction import IntArray, as_residues, kernel_basis, rank, solve


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def ensure_prime(p: int) -> int:
    """Validate a field characteristic.

    Raises
    ------
    - `ValueError`: if `p` is not a prime below `MAX_FIELD`
    """
    if p >= MAX_FIELD:
        msg = f"Field characteristic must be below {MAX_FIELD}, got {p}"
        raise ValueError(msg)
    if not is_prime(p):
        msg = f"Field characteristic must be prime, got {p}"
        raise ValueError(msg)
    return p


def ensure_same_field(*fields: int) -> int:
    """Return the common characteristic of the arguments.

    Raises
    ------
    - `FieldMismatchError`: if two characteristics differ
    """
    first: int = fields[0]
    for other in fields[1:]:
        if other != first:
            raise FieldMismatchError(first, other)
    return first


type MatrixEntries = tuple[tuple[int, ...], ...]


def entries_of(array: IntArray, p: int) -> MatrixEntries:
    """Return the row-major residues of `array` mod `p` as nested tuples."""
    return tuple(tuple(int(v) % p for v in row) for row in np.asarray(array, dtype=np.int64))


def array_of(entries: MatrixEntries, rows: int, cols: int) -> IntArray:
    if not entries and rows * cols == 0:
        return np.zeros((rows, cols), dtype=np.int64)
    return np.array(entries, dtype=np.int64).reshape(rows, cols)


def has_shape(entries: MatrixEntries, rows: int, cols: int) -> bool:
    if not entries and rows * cols == 0:
        return True
    return len(entries) == rows and all(len(row) == cols for row in entries)


class Matrix(FrozenModel):
    """Model representing a dense matrix over GF(p).

    Attributes
    ----------
    - `field` (`PositiveInt`): Prime characteristic `p` (defaults to `2`)
    - `rows` (`NonNegativeInt`): Number of rows
    - `cols` (`NonNegativeInt`): Number of columns
    - `entries` (`tuple[tuple[int, ...], ...]`): Row-major residues in `0..p-1`

    Notes
    -----
    - Entries are reduced mod `p` on validation, so `-1` is accepted and stored as `p - 1`.
    - `rows`/`cols` are explicit because `[]` cannot distinguish a `0×3` from a `0×0` matrix.
    """

    field: PositiveInt = DEFAULT_FIELD
    rows: NonNegativeInt
    cols: NonNegativeInt
    entries: tuple[tuple[int, ...], ...] = Field(default=())

    @field_validator("field")
    @classmethod
    def _check_field(cls, value: int) -> int:
        return ensure_prime(value)

    @field_validator("entries")
    @classmethod
    def _reduce_entries(cls, value: tuple[tuple[int, ...], ...], info: ValidationInfo) -> tuple[tuple[int, ...], ...]:
        p: int = info.data.get("field", DEFAULT_FIELD)
        return tuple(tuple(entry % p for entry in row) for row in value)

    @model_validator(mode="after")
    def _check_shape(self) -> Self:
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            msg = f"Entry grid does not have shape {self.rows}×{self.cols}"
            raise ValueError(msg)
        return self

    @classmethod
    def from_array(cls, array: object, field: int = DEFAULT_FIELD) -> "Matrix":
        """Build a matrix from anything `numpy.asarray` accepts as a 2-D integer array."""
        values: IntArray = np.asarray(array, dtype=np.int64)
        if values.ndim != 2:
            msg = f"Expected a 2-D array, got {values.ndim} dimensions"
            raise ValueError(msg)
        return cls(
            field=field,
            rows=values.shape[0],
            cols=values.shape[1],
            entries=tuple(tuple(int(v) for v in row) for row in values),
        )

    @classmethod
    def identity(cls, n: int, field: int = DEFAULT_FIELD) -> "Matrix":
        return cls.from_array(np.eye(n, dtype=np.int64), field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: int = DEFAULT_FIELD) -> "Matrix":
        return cls.from_array(np.zeros((rows, cols), dtype=np.int64), field)

    @property
    def array(self) -> IntArray:
        """Return the entries as a fresh `rows × cols` `int64` array."""
        return np.array(self.entries, dtype=np.int64).reshape(self.rows, self.cols)

    def transpose(self) -> "Matrix":
        return Matrix.from_array(self.array.T, self.field)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        p: int = ensure_same_field(self.field, other.field)
        if self.cols != other.rows:
            raise DimensionMismatchError(self.cols, other.rows, "matrix product")
        return Matrix.from_array(np.mod(self.array @ other.array, p), p)

    def rank(self) -> int:
        """Return the dimension of the column space.

        Returns
        -------
        - `int`: Rank over GF(p)
        """
        return rank(self.array, self.field)

    def kernel_basis(self) -> list[tuple[int, ...]]:
        """Return a basis of `{x : A x = 0}`.

        Returns
        -------
        - `list[tuple[int, ...]]`: `cols − rank` vectors, each annihilated by the matrix
        """
        basis: IntArray = kernel_basis(self.array, self.field)
        return [tuple(int(v) for v in basis[:, k]) for k in range(basis.shape[1])]

    def membership(self, b: tuple[int, ...] | list[int]) -> tuple[int, ...] | None:
        """Solve `A x = b`.

        Args
        ----
        - `b` (`tuple[int, ...] | list[int]`): Vector with `rows` entries

        Returns
        -------
        - `tuple[int, ...] | None`: One solution, or `None` when `b` is not in the column space

        Raises
        ------
        - `DimensionMismatchError`: if `b` does not have `rows` entries
        """
        if len(b) != self.rows:
            raise DimensionMismatchError(self.rows, len(b), "membership")
        solution: IntArray | None = solve(self.array, as_residues(list(b), self.field), self.field)
        if solution is None:
            return None
        return tuple(int(v) for v in solution[:, 0])
