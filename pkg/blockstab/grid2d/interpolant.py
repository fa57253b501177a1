"""The interpolant `L^ε(f)` of a morphism of grid modules and directional cokernel triviality."""

import logging
from fractions import Fraction

import numpy as np

from blockstab.errors import InputValidationError
from blockstab.linalg import IntArray, column_basis, kernel_basis, rank, solve
from blockstab.values import POS_INF, ExtendedNumber

from .config import Axis
from .construction import submodule
from .models import GridModule2D, GridMorphism2D, Point

logger: logging.Logger = logging.getLogger(__name__)


def image_bases(morphism: GridMorphism2D) -> dict[Point, IntArray]:
    return {
        point: column_basis(morphism.component(point), morphism.field) for point in morphism.source.window.points()
    }


def _preimage(matrix: IntArray, subspace: IntArray, p: int) -> IntArray:
    """Return a basis of `{n : matrix · n ∈ span(subspace)}`."""
    domain: int = matrix.shape[1]
    joint: IntArray = kernel_basis(np.hstack([matrix, np.mod(-subspace, p)]), p)
    return column_basis(joint[:domain], p)


def interpolant_bases(morphism: GridMorphism2D, epsilon: int) -> dict[Point, IntArray]:
    """Return, per point `a`, a basis of `L_a = φ_N(a, a + εe₁)⁻¹(im f)`, clipping the shift to the window."""
    if epsilon < 0:
        msg = f"ε must be ≥ 0, got {epsilon}"
        raise InputValidationError(msg)
    target: GridModule2D = morphism.target
    images: dict[Point, IntArray] = image_bases(morphism)
    bases: dict[Point, IntArray] = {}
    for a in target.window.points():
        shifted: Point = target.window.clip((a[0] + epsilon, a[1]))
        bases[a] = _preimage(target.structure_map(a, shifted), images[shifted], morphism.field)
    return bases


def interpolant(morphism: GridMorphism2D, epsilon: int) -> GridModule2D:
    """Return the submodule `L^ε(f) ⊆ N`.

    Args
    ----
    - `morphism` (`GridMorphism2D`): Morphism `f: M → N`
    - `epsilon` (`int`): Horizontal shift in lattice steps

    Returns
    -------
    - `GridModule2D`: `L_a` is the preimage of `im f` under the horizontal `ε`-shift, with inherited maps

    Raises
    ------
    - `InputValidationError`: if `ε < 0`

    Notes
    -----
    - A shift that exits the window stops at the right edge, so `N` is read as constant beyond it.
    """
    return submodule(morphism.target, interpolant_bases(morphism, epsilon))


def _inclusion_morphism(
    source: GridModule2D,
    target: GridModule2D,
    source_bases: dict[Point, IntArray],
    target_bases: dict[Point, IntArray] | None,
) -> GridMorphism2D:
    p: int = source.field
    components: dict[Point, IntArray] = {}
    for point in source.window.points():
        if target_bases is None:
            components[point] = source_bases[point]
            continue
        coordinates: IntArray | None = solve(target_bases[point], source_bases[point], p)
        if coordinates is None:
            msg = f"Subspace at {point} is not contained in the target subspace"
            raise InputValidationError(msg)
        components[point] = coordinates
    return GridMorphism2D.from_components(source, target, components)


def interpolant_factorization(morphism: GridMorphism2D, epsilon: int) -> tuple[GridMorphism2D, GridMorphism2D]:
    """Factor the image inclusion as `im f ↪ L^ε(f) ↪ N`.

    Returns
    -------
    - `tuple[GridMorphism2D, GridMorphism2D]`: The inclusions `im f → L^ε(f)` and `L^ε(f) → N`
    """
    images: dict[Point, IntArray] = image_bases(morphism)
    layers: dict[Point, IntArray] = interpolant_bases(morphism, epsilon)
    image: GridModule2D = submodule(morphism.target, images)
    layer: GridModule2D = submodule(morphism.target, layers)
    return (
        _inclusion_morphism(image, layer, images, layers),
        _inclusion_morphism(layer, morphism.target, layers, None),
    )


def is_monomorphism(morphism: GridMorphism2D) -> bool:
    return all(
        rank(morphism.component(point), morphism.field) == morphism.source.dim(point)
        for point in morphism.source.window.points()
    )


def coker_triviality(morphism: GridMorphism2D, direction: tuple[int, int]) -> ExtendedNumber:
    """Return the least `k` with `φ_N(p, p + k · direction)(N_p) ⊆ im f` at every window point `p`.

    Args
    ----
    - `morphism` (`GridMorphism2D`): Morphism `f: M → N`
    - `direction` (`tuple[int, int]`): Nonzero, coordinatewise nonnegative lattice direction

    Returns
    -------
    - `ExtendedNumber`: The least such `k`, or `+∞` when a class survives up to the window edge

    Raises
    ------
    - `InputValidationError`: if the direction is zero or has a negative coordinate
    """
    if direction[0] < 0 or direction[1] < 0 or direction == (0, 0):
        msg = f"Direction {direction} must be nonzero and nonnegative"
        raise InputValidationError(msg)
    target: GridModule2D = morphism.target
    images: dict[Point, IntArray] = image_bases(morphism)
    worst: int = 0
    for point in target.window.points():
        k: int = 0
        while True:
            reached: Point = target.window.clip((point[0] + k * direction[0], point[1] + k * direction[1]))
            if solve(images[reached], target.structure_map(point, reached), morphism.field) is not None:
                break
            following: Point = target.window.clip(
                (point[0] + (k + 1) * direction[0], point[1] + (k + 1) * direction[1]),
            )
            if following == reached:
                logger.debug("cokernel class at %s survives to the window edge %s", point, reached)
                return POS_INF
            k += 1
        worst = max(worst, k)
    return Fraction(worst)


def directional_coker_triviality(morphism: GridMorphism2D, axis: Axis) -> ExtendedNumber:
    """Return `coker_triviality` along one lattice axis."""
    return coker_triviality(morphism, axis.step)
