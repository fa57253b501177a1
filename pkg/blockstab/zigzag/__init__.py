from .config import ArrowDirection
from .construction import direct_sum, interval_module_zz, shuffle_basis
from .decomposition import colimit_dimension, decompose_zz, generalized_rank, limit_basis, relation_matrix
from .models import Arrow, Orientation, ZigzagBarcode, ZigzagInterval, ZigzagModule

__all__ = [
    "ArrowDirection",
    "Arrow",
    "Orientation",
    "ZigzagModule",
    "ZigzagInterval",
    "ZigzagBarcode",
    "interval_module_zz",
    "direct_sum",
    "shuffle_basis",
    "relation_matrix",
    "limit_basis",
    "colimit_dimension",
    "generalized_rank",
    "decompose_zz",
]
