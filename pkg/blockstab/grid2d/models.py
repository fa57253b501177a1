from collections.abc import Iterator, Mapping
from fractions import Fraction
from typing import Self

import numpy as np
from pydantic import NonNegativeInt, PositiveInt, field_validator, model_validator

from blockstab.base_model import FrozenModel
from blockstab.config import DEFAULT_FIELD
from blockstab.errors import InputValidationError
from blockstab.linalg import IntArray, MatrixEntries, array_of, ensure_prime, entries_of, has_shape, matmul
from blockstab.values import Rational

from .config import Axis

type Point = tuple[int, int]


class Window(FrozenModel):
    """Model representing a finite integer rectangle `[lower₁, upper₁] × [lower₂, upper₂]`.

    Attributes
    ----------
    - `lower` (`tuple[int, int]`): Bottom-left corner
    - `upper` (`tuple[int, int]`): Top-right corner, coordinatewise `≥ lower`
    """

    lower: tuple[int, int]
    upper: tuple[int, int]

    @model_validator(mode="after")
    def _check_corners(self) -> Self:
        if self.lower[0] > self.upper[0] or self.lower[1] > self.upper[1]:
            msg = f"Window corners {self.lower} and {self.upper} are not ordered"
            raise ValueError(msg)
        return self

    @property
    def shape(self) -> tuple[int, int]:
        return self.upper[0] - self.lower[0] + 1, self.upper[1] - self.lower[1] + 1

    def contains(self, point: Point) -> bool:
        return all(self.lower[k] <= point[k] <= self.upper[k] for k in range(2))

    def points(self) -> Iterator[Point]:
        """Iterate over the lattice points, `x` outer and `y` inner."""
        for x in range(self.lower[0], self.upper[0] + 1):
            for y in range(self.lower[1], self.upper[1] + 1):
                yield x, y

    def interior(self) -> Iterator[Point]:
        """Iterate over the points `z` with `z − e₁ − e₂` still in the window."""
        for x, y in self.points():
            if x > self.lower[0] and y > self.lower[1]:
                yield x, y

    def clip(self, point: Point) -> Point:
        """Clamp a point from above to the top-right corner."""
        return min(point[0], self.upper[0]), min(point[1], self.upper[1])

    def index(self, point: Point) -> tuple[int, int]:
        if not self.contains(point):
            msg = f"Point {point} outside window {self.lower}..{self.upper}"
            raise InputValidationError(msg)
        return point[0] - self.lower[0], point[1] - self.lower[1]


def _step(point: Point, axis: Axis) -> Point:
    dx, dy = axis.step
    return point[0] + dx, point[1] + dy


class GridModule2D(FrozenModel):
    """Model representing a persistence module over a finite window of `ℤ²`.

    Attributes
    ----------
    - `field` (`PositiveInt`): Prime characteristic (defaults to `2`)
    - `window` (`Window`): Support rectangle
    - `dims` (`tuple[tuple[NonNegativeInt, ...], ...]`): `dims[i][j]` is the dimension at `lower + (i, j)`
    - `hmaps` (`tuple[tuple[MatrixEntries, ...], ...]`): `hmaps[i][j]` is the step `x₁` out of `lower + (i, j)`
    - `vmaps` (`tuple[tuple[MatrixEntries, ...], ...]`): `vmaps[i][j]` is the step `x₂` out of `lower + (i, j)`

    Notes
    -----
    - Validation asserts that every unit square commutes.
    """

    field: PositiveInt = DEFAULT_FIELD
    window: Window
    dims: tuple[tuple[NonNegativeInt, ...], ...]
    hmaps: tuple[tuple[MatrixEntries, ...], ...]
    vmaps: tuple[tuple[MatrixEntries, ...], ...]

    @field_validator("field")
    @classmethod
    def _check_field(cls, value: int) -> int:
        return ensure_prime(value)

    @model_validator(mode="after")
    def _check_shapes(self) -> Self:
        nx, ny = self.window.shape
        if len(self.dims) != nx or any(len(column) != ny for column in self.dims):
            msg = f"dims must be a {nx}×{ny} array"
            raise ValueError(msg)
        if len(self.hmaps) != nx - 1 or any(len(column) != ny for column in self.hmaps):
            msg = f"hmaps must be a {nx - 1}×{ny} array of matrices"
            raise ValueError(msg)
        if len(self.vmaps) != nx or any(len(column) != ny - 1 for column in self.vmaps):
            msg = f"vmaps must be a {nx}×{ny - 1} array of matrices"
            raise ValueError(msg)
        for i in range(nx):
            for j in range(ny):
                if i + 1 < nx and not has_shape(self.hmaps[i][j], self.dims[i + 1][j], self.dims[i][j]):
                    msg = f"Horizontal map at offset ({i}, {j}) has the wrong shape"
                    raise ValueError(msg)
                if j + 1 < ny and not has_shape(self.vmaps[i][j], self.dims[i][j + 1], self.dims[i][j]):
                    msg = f"Vertical map at offset ({i}, {j}) has the wrong shape"
                    raise ValueError(msg)
        for x, y in self.window.points():
            if x < self.window.upper[0] and y < self.window.upper[1]:
                right_up: IntArray = matmul(self.v((x + 1, y)), self.h((x, y)), self.field)
                up_right: IntArray = matmul(self.h((x, y + 1)), self.v((x, y)), self.field)
                if not np.array_equal(right_up, up_right):
                    msg = f"Unit square at {(x, y)} does not commute"
                    raise ValueError(msg)
        return self

    @classmethod
    def from_maps(
        cls,
        window: Window,
        dims: Mapping[Point, int],
        hmaps: Mapping[Point, IntArray],
        vmaps: Mapping[Point, IntArray],
        field: int = DEFAULT_FIELD,
    ) -> "GridModule2D":
        """Build a module from point-keyed dimensions and step matrices; missing entries are zero."""
        nx, ny = window.shape
        lx, ly = window.lower

        def dim(i: int, j: int) -> int:
            return dims.get((lx + i, ly + j), 0)

        def entries(maps: Mapping[Point, IntArray], i: int, j: int, rows: int, cols: int) -> MatrixEntries:
            matrix: IntArray | None = maps.get((lx + i, ly + j))
            return entries_of(np.zeros((rows, cols), dtype=np.int64) if matrix is None else matrix, field)

        return cls(
            field=field,
            window=window,
            dims=tuple(tuple(dim(i, j) for j in range(ny)) for i in range(nx)),
            hmaps=tuple(
                tuple(entries(hmaps, i, j, dim(i + 1, j), dim(i, j)) for j in range(ny)) for i in range(nx - 1)
            ),
            vmaps=tuple(
                tuple(entries(vmaps, i, j, dim(i, j + 1), dim(i, j)) for j in range(ny - 1)) for i in range(nx)
            ),
        )

    def dim(self, point: Point) -> int:
        """Return the dimension at `point`, `0` outside the window."""
        if not self.window.contains(point):
            return 0
        i, j = self.window.index(point)
        return self.dims[i][j]

    def h(self, point: Point) -> IntArray:
        """Return the step `x₁` from `point` to `point + e₁`, a zero map when either end leaves the window."""
        target: Point = _step(point, Axis.X1)
        if not (self.window.contains(point) and self.window.contains(target)):
            return np.zeros((self.dim(target), self.dim(point)), dtype=np.int64)
        i, j = self.window.index(point)
        return array_of(self.hmaps[i][j], self.dims[i + 1][j], self.dims[i][j])

    def v(self, point: Point) -> IntArray:
        """Return the step `x₂` from `point` to `point + e₂`, a zero map when either end leaves the window."""
        target: Point = _step(point, Axis.X2)
        if not (self.window.contains(point) and self.window.contains(target)):
            return np.zeros((self.dim(target), self.dim(point)), dtype=np.int64)
        i, j = self.window.index(point)
        return array_of(self.vmaps[i][j], self.dims[i][j + 1], self.dims[i][j])

    def step(self, point: Point, axis: Axis) -> IntArray:
        return self.h(point) if axis is Axis.X1 else self.v(point)

    def structure_map(self, source: Point, target: Point) -> IntArray:
        """Return `φ(source, target)` for `source ≤ target` inside the window.

        Raises
        ------
        - `InputValidationError`: if the points are not comparable or leave the window
        """
        self.window.index(source)
        self.window.index(target)
        if source[0] > target[0] or source[1] > target[1]:
            msg = f"Points {source} and {target} are not ordered"
            raise InputValidationError(msg)
        result: IntArray = np.eye(self.dim(source), dtype=np.int64)
        point: Point = source
        while point[0] < target[0]:
            result = matmul(self.h(point), result, self.field)
            point = _step(point, Axis.X1)
        while point[1] < target[1]:
            result = matmul(self.v(point), result, self.field)
            point = _step(point, Axis.X2)
        return result


class GridMorphism2D(FrozenModel):
    """Model representing a morphism of grid modules on the same window.

    Attributes
    ----------
    - `source` (`GridModule2D`): Domain `M`
    - `target` (`GridModule2D`): Codomain `N`
    - `components` (`tuple[tuple[MatrixEntries, ...], ...]`): `components[i][j]` is `f` at `lower + (i, j)`
    """

    source: GridModule2D
    target: GridModule2D
    components: tuple[tuple[MatrixEntries, ...], ...]

    @model_validator(mode="after")
    def _check_naturality(self) -> Self:
        if self.source.field != self.target.field:
            msg = f"Field characteristics differ: GF({self.source.field}) vs GF({self.target.field})"
            raise ValueError(msg)
        if self.source.window != self.target.window:
            msg = "Source and target must share the window"
            raise ValueError(msg)
        nx, ny = self.source.window.shape
        if len(self.components) != nx or any(len(column) != ny for column in self.components):
            msg = f"components must be a {nx}×{ny} array of matrices"
            raise ValueError(msg)
        for point in self.source.window.points():
            i, j = self.source.window.index(point)
            if not has_shape(self.components[i][j], self.target.dims[i][j], self.source.dims[i][j]):
                msg = f"Component at {point} has the wrong shape"
                raise ValueError(msg)
        p: int = self.field
        for point in self.source.window.points():
            for axis in Axis:
                after: Point = _step(point, axis)
                if not self.source.window.contains(after):
                    continue
                left: IntArray = matmul(self.target.step(point, axis), self.component(point), p)
                right: IntArray = matmul(self.component(after), self.source.step(point, axis), p)
                if not np.array_equal(left, right):
                    msg = f"Naturality fails at {point} along {axis}"
                    raise ValueError(msg)
        return self

    @classmethod
    def from_components(
        cls,
        source: GridModule2D,
        target: GridModule2D,
        components: Mapping[Point, IntArray],
    ) -> "GridMorphism2D":
        p: int = source.field
        return cls(
            source=source,
            target=target,
            components=tuple(
                tuple(
                    entries_of(components[(x, y)], p)
                    for y in range(source.window.lower[1], source.window.upper[1] + 1)
                )
                for x in range(source.window.lower[0], source.window.upper[0] + 1)
            ),
        )

    @property
    def field(self) -> int:
        return self.source.field

    def component(self, point: Point) -> IntArray:
        i, j = self.source.window.index(point)
        return array_of(self.components[i][j], self.target.dims[i][j], self.source.dims[i][j])


class GeneratorMultiset(FrozenModel):
    """Model representing the generator positions `ξ(F)` of a free module, multiplicity by repetition.

    Attributes
    ----------
    - `points` (`tuple[tuple[Rational, Rational], ...]`): Generator positions
    """

    points: tuple[tuple[Rational, Rational], ...] = ()

    @classmethod
    def of(cls, *points: tuple[int | Fraction, int | Fraction]) -> "GeneratorMultiset":
        return cls(points=tuple((Fraction(x), Fraction(y)) for x, y in points))

    def __len__(self) -> int:
        return len(self.points)

    def sorted(self) -> "GeneratorMultiset":
        return GeneratorMultiset(points=tuple(sorted(self.points)))

    def same_multiset(self, other: "GeneratorMultiset") -> bool:
        return self.sorted().points == other.sorted().points

    def lattice_points(self) -> list[Point]:
        """Return the generators as integer points.

        Raises
        ------
        - `InputValidationError`: if a coordinate is not an integer
        """
        if any(c.denominator != 1 for point in self.points for c in point):
            msg = "Grid generators must lie on the integer lattice"
            raise InputValidationError(msg, details=[f"({x}, {y})" for x, y in self.points])
        return [(int(x), int(y)) for x, y in self.points]
