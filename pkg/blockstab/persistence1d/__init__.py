from .barcodes import (
    cokernel_module,
    image_module,
    induced_matching_1d,
    induced_matching_violations,
    kernel_module,
    line_barcode,
    morphism_barcodes,
    triviality_of,
)
from .construction import (
    interval_line_module,
    interval_sum_morphism,
    line_change_basis,
    line_direct_sum,
    morphism_change_basis,
)
from .models import LineModule, LineMorphism

__all__ = [
    "LineModule",
    "LineMorphism",
    "interval_line_module",
    "line_direct_sum",
    "interval_sum_morphism",
    "line_change_basis",
    "morphism_change_basis",
    "line_barcode",
    "kernel_module",
    "image_module",
    "cokernel_module",
    "morphism_barcodes",
    "triviality_of",
    "induced_matching_1d",
    "induced_matching_violations",
]
