from collections.abc import Mapping

import numpy as np

from blockstab.config import DEFAULT_FIELD
from blockstab.errors import ConsistencyError, InputValidationError
from blockstab.linalg import IntArray, matmul, solve

from .models import GeneratorMultiset, GridModule2D, GridMorphism2D, Point, Window


def _below(generators: list[Point], point: Point) -> list[int]:
    return [k for k, g in enumerate(generators) if g[0] <= point[0] and g[1] <= point[1]]


def _inclusion(rows: list[int], cols: list[int]) -> IntArray:
    matrix: IntArray = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for c, generator in enumerate(cols):
        matrix[rows.index(generator), c] = 1
    return matrix


def free_grid_module(generators: GeneratorMultiset, window: Window, field: int = DEFAULT_FIELD) -> GridModule2D:
    """Restrict the free module `⊕_{a∈ξ} I^{⟨a⟩}` to a window.

    Args
    ----
    - `generators` (`GeneratorMultiset`): Integral generator positions (may lie outside the window)
    - `window` (`Window`): Window to restrict to
    - `field` (`int`, optional): Prime characteristic

    Returns
    -------
    - `GridModule2D`: Basis at `p` is the generators `a ≤ p` in index order; steps are the evident inclusions

    Raises
    ------
    - `InputValidationError`: if a generator is not integral
    """
    lattice: list[Point] = generators.lattice_points()
    dims: dict[Point, int] = {}
    hmaps: dict[Point, IntArray] = {}
    vmaps: dict[Point, IntArray] = {}
    for x, y in window.points():
        here: list[int] = _below(lattice, (x, y))
        dims[(x, y)] = len(here)
        hmaps[(x, y)] = _inclusion(_below(lattice, (x + 1, y)), here)
        vmaps[(x, y)] = _inclusion(_below(lattice, (x, y + 1)), here)
    return GridModule2D.from_maps(window, dims, hmaps, vmaps, field)


def free_morphism(
    source_generators: GeneratorMultiset,
    target_generators: GeneratorMultiset,
    coefficients: Mapping[tuple[int, int], int],
    window: Window,
    field: int = DEFAULT_FIELD,
) -> GridMorphism2D:
    """Build the morphism of free modules sending source generator `a_s` to `Σ_t λ(s, t) · x^{a_s − b_t} b_t`.

    Args
    ----
    - `source_generators`, `target_generators` (`GeneratorMultiset`): `ξ(M)` and `ξ(N)`
    - `coefficients` (`Mapping[tuple[int, int], int]`): `(source index, target index) ↦ λ`
    - `window` (`Window`): Common window
    - `field` (`int`, optional): Prime characteristic

    Raises
    ------
    - `InputValidationError`: if some nonzero `λ(s, t)` has `b_t ≰ a_s`
    """
    sources: list[Point] = source_generators.lattice_points()
    targets: list[Point] = target_generators.lattice_points()
    for (s, t), value in coefficients.items():
        if value % field and not (targets[t][0] <= sources[s][0] and targets[t][1] <= sources[s][1]):
            msg = f"Generator {targets[t]} does not lie below {sources[s]}"
            raise InputValidationError(msg)
    components: dict[Point, IntArray] = {}
    for point in window.points():
        rows: list[int] = _below(targets, point)
        cols: list[int] = _below(sources, point)
        component: IntArray = np.zeros((len(rows), len(cols)), dtype=np.int64)
        for c, s in enumerate(cols):
            for r, t in enumerate(rows):
                component[r, c] = coefficients.get((s, t), 0) % field
        components[point] = component
    return GridMorphism2D.from_components(
        free_grid_module(source_generators, window, field),
        free_grid_module(target_generators, window, field),
        components,
    )


def _restricted(ambient: IntArray, basis: IntArray, target_basis: IntArray, p: int, where: Point) -> IntArray:
    coordinates: IntArray | None = solve(target_basis, matmul(ambient, basis, p), p)
    if coordinates is None:
        msg = f"Subspaces are not closed under the step out of {where}"
        raise ConsistencyError(msg)
    return coordinates


def submodule(module: GridModule2D, bases: Mapping[Point, IntArray]) -> GridModule2D:
    """Return the submodule spanned pointwise by the columns of `bases`, in those coordinates.

    Raises
    ------
    - `ConsistencyError`: if a step map leaves the given subspaces
    """
    p: int = module.field
    dims: dict[Point, int] = {point: basis.shape[1] for point, basis in bases.items()}
    hmaps: dict[Point, IntArray] = {}
    vmaps: dict[Point, IntArray] = {}
    for x, y in module.window.points():
        if x < module.window.upper[0]:
            hmaps[(x, y)] = _restricted(module.h((x, y)), bases[(x, y)], bases[(x + 1, y)], p, (x, y))
        if y < module.window.upper[1]:
            vmaps[(x, y)] = _restricted(module.v((x, y)), bases[(x, y)], bases[(x, y + 1)], p, (x, y))
    return GridModule2D.from_maps(module.window, dims, hmaps, vmaps, p)
