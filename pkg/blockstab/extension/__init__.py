from .functor import (
    extend_barcode,
    extend_interval,
    module_blocks,
    pointwise_dim_E,
    tag_interval,
    zz_bottleneck,
    zz_interleaving_bounds,
    zz_positions,
)
from .models import Grid, TaggedZigzagInterval

__all__ = [
    "TaggedZigzagInterval",
    "Grid",
    "zz_positions",
    "tag_interval",
    "extend_interval",
    "extend_barcode",
    "pointwise_dim_E",
    "module_blocks",
    "zz_bottleneck",
    "zz_interleaving_bounds",
]
