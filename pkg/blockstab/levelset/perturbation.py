"""Random PL graphs, perturbations of bounded sup-distance and the Reeb lower bound."""

import logging
from fractions import Fraction

import numpy as np

from blockstab.config import StabilityConstants
from blockstab.errors import InputValidationError, PerturbationError
from blockstab.intervals import bottleneck_1d
from blockstab.values import ExtendedNumber, is_finite

from .filtration import level_barcode
from .models import PerturbedGraph, PLGraph, Vertex
from .preimage import ensure_valid, validate_pl_graph

logger: logging.Logger = logging.getLogger(__name__)

type Seed = int | np.random.SeedSequence | np.random.Generator

PERTURBATION_STEPS: int = 1000
PERTURBATION_ATTEMPTS: int = 100


def perturb(
    graph: PLGraph,
    delta: Fraction,
    seed: Seed,
    *,
    attempts: int = PERTURBATION_ATTEMPTS,
) -> PerturbedGraph:
    """Shift every vertex value by a random rational in `[−δ, δ]`, keeping the graph of Morse type.

    Args
    ----
    - `graph` (`PLGraph`): PL graph of Morse type
    - `delta` (`Fraction`): Largest allowed shift
    - `seed` (`Seed`): Seed or generator for `numpy.random.default_rng`
    - `attempts` (`int`, optional): Samples to draw before giving up

    Returns
    -------
    - `PerturbedGraph`: The perturbed graph and the realized sup-distance `max_v |γ(v) − κ(v)|`

    Raises
    ------
    - `InputValidationError`: if `δ < 0`
    - `PerturbationError`: if every sample ties the two ends of some edge

    Notes
    -----
    - Shifts are multiples of `δ / 1000`.
    """
    if delta < 0:
        msg = f"δ must be ≥ 0, got {delta}"
        raise InputValidationError(msg)
    ensure_valid(graph)
    rng: np.random.Generator = np.random.default_rng(seed)
    for attempt in range(1, attempts + 1):
        steps: list[int] = [
            int(s) for s in rng.integers(-PERTURBATION_STEPS, PERTURBATION_STEPS, size=len(graph.vertices), endpoint=True)
        ]
        shifts: list[Fraction] = [delta * Fraction(s, PERTURBATION_STEPS) for s in steps]
        candidate: PLGraph = PLGraph(
            vertices=tuple(
                Vertex(id=vertex.id, value=vertex.value + shift) for vertex, shift in zip(graph.vertices, shifts)
            ),
            edges=graph.edges,
        )
        if not validate_pl_graph(candidate):
            return PerturbedGraph(
                graph=candidate,
                realized_distance=max((abs(shift) for shift in shifts), default=Fraction(0)),
                attempts=attempt,
            )
        logger.debug("perturbation attempt %d tied an edge, resampling", attempt)
    raise PerturbationError(attempts)


def random_pl_graph(
    seed: Seed,
    *,
    vertices: int = 6,
    edges: int = 8,
    value_range: int = 6,
) -> PLGraph:
    """Sample a random PL graph of Morse type with integer values in `[−value_range, value_range]`.

    Notes
    -----
    - Edges join uniformly drawn vertex pairs with distinct values; parallel edges may occur. When
      every vertex gets the same value the graph has no edges.
    """
    if vertices < 1 or edges < 0:
        msg = "A random graph needs at least one vertex and a nonnegative edge count"
        raise InputValidationError(msg)
    rng: np.random.Generator = np.random.default_rng(seed)
    values: list[int] = [int(v) for v in rng.integers(-value_range, value_range, size=vertices, endpoint=True)]
    pairs: list[tuple[int, int]] = [
        (u, w) for u in range(vertices) for w in range(u + 1, vertices) if values[u] != values[w]
    ]
    chosen: list[tuple[int, int]] = []
    if pairs:
        chosen = [pairs[int(k)] for k in rng.integers(0, len(pairs), size=edges)]
    return PLGraph.of(dict(enumerate(values)), chosen)


def reeb_lower_bound(
    first: PLGraph,
    second: PLGraph,
    constants: StabilityConstants = StabilityConstants.PUBLISHED,
) -> ExtendedNumber:
    """Return a certified lower bound on the interleaving distance of the Reeb graphs.

    Returns
    -------
    - `ExtendedNumber`: `d_b(L₀(γ), L₀(κ)) / c` with `c = 5` (`PUBLISHED`) or `2` (`TIGHT`); `+∞` stays `+∞`
    """
    distance: ExtendedNumber = bottleneck_1d(level_barcode(first, 0), level_barcode(second, 0))
    if not is_finite(distance):
        return distance
    return distance / constants.value.reeb
