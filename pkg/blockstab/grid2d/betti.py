"""Koszul Betti numbers of grid modules and the window freeness certificate."""

import logging

import numpy as np

from blockstab.errors import ConsistencyError, InputValidationError
from blockstab.linalg import IntArray, matmul, rank

from .models import GeneratorMultiset, GridModule2D, Point

logger: logging.Logger = logging.getLogger(__name__)


def koszul_maps(module: GridModule2D, z: Point) -> tuple[IntArray, IntArray]:
    """Return the Koszul maps `(κ_z, γ_z)` at `z`.

    Returns
    -------
    - `tuple[IntArray, IntArray]`: `κ_z: M_{z−e₁−e₂} → M_{z−e₁} ⊕ M_{z−e₂}`, `m ↦ (−x₂m, x₁m)` and
      `γ_z: M_{z−e₁} ⊕ M_{z−e₂} → M_z`, `(q₁, q₂) ↦ x₁q₁ + x₂q₂`

    Raises
    ------
    - `InputValidationError`: if `z` or `z − e₁ − e₂` leaves the window
    """
    corner: Point = (z[0] - 1, z[1] - 1)
    if not (module.window.contains(z) and module.window.contains(corner)):
        msg = f"Koszul complex at {z} needs {corner} inside the window"
        raise InputValidationError(msg)
    left: Point = (z[0] - 1, z[1])
    below: Point = (z[0], z[1] - 1)
    p: int = module.field
    kappa: IntArray = np.vstack([np.mod(-module.v(corner), p), module.h(corner)])
    gamma: IntArray = np.hstack([module.h(left), module.v(below)])
    return kappa, gamma


def koszul_xi1(module: GridModule2D, z: Point) -> int:
    """Return the first graded Betti number `ξ₁(M)_z = dim ker γ_z − rank κ_z`.

    Raises
    ------
    - `InputValidationError`: if the Koszul complex at `z` leaves the window
    - `ConsistencyError`: if `γ_z ∘ κ_z ≠ 0`
    """
    kappa, gamma = koszul_maps(module, z)
    if matmul(gamma, kappa, module.field).any():
        msg = f"Koszul complex at {z} is not a complex"
        raise ConsistencyError(msg)
    kernel_dim: int = gamma.shape[1] - rank(gamma, module.field)
    return kernel_dim - rank(kappa, module.field)


def koszul_xi0(module: GridModule2D, z: Point) -> int:
    """Return `ξ₀(M)_z`, the number of minimal generators at `z`.

    Notes
    -----
    - Neighbours outside the window count as zero, so on the bottom and left edges this counts
      every element not reached from inside the window.
    """
    incoming: IntArray = np.hstack([module.h((z[0] - 1, z[1])), module.v((z[0], z[1] - 1))])
    return module.dim(z) - rank(incoming, module.field)


def generators_of(module: GridModule2D) -> GeneratorMultiset:
    """Read the generator multiset of a free window module off `ξ₀`."""
    return GeneratorMultiset.of(
        *(point for point in module.window.points() for _ in range(koszul_xi0(module, point))),
    )


def freeness_certificate(module: GridModule2D) -> list[Point]:
    """Return every interior window point with `ξ₁ ≠ 0`.

    Returns
    -------
    - `list[Point]`: Empty when the module is free on the window proxy

    Notes
    -----
    - Points on the bottom and left edges have no complete Koszul complex and are not checked.
    """
    failures: list[Point] = [z for z in module.window.interior() if koszul_xi1(module, z) != 0]
    logger.debug("freeness certificate: %d interior points fail", len(failures))
    return failures
