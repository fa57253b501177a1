from .filtration import (
    interlevel_blocks,
    level_barcode,
    levelset_spaces,
    levelset_zigzag,
    pointwise_mismatches,
    verification_grid,
    verify_pointwise,
)
from .models import Fragment, GraphIssue, PerturbedGraph, PLGraph, PreimageGraph, PreimageNode, Vertex
from .perturbation import perturb, random_pl_graph, reeb_lower_bound
from .preimage import boundary_matrix, cycle_space, ensure_valid, preimage_graph, validate_pl_graph

__all__ = [
    "Vertex",
    "PLGraph",
    "GraphIssue",
    "PreimageNode",
    "Fragment",
    "PreimageGraph",
    "PerturbedGraph",
    "validate_pl_graph",
    "ensure_valid",
    "preimage_graph",
    "boundary_matrix",
    "cycle_space",
    "levelset_spaces",
    "levelset_zigzag",
    "interlevel_blocks",
    "level_barcode",
    "verification_grid",
    "pointwise_mismatches",
    "verify_pointwise",
    "perturb",
    "random_pl_graph",
    "reeb_lower_bound",
]
