from blockstab.matching import Matching

from .distance import (
    bottleneck_1d,
    bottleneck_candidates_1d,
    check_matching_1d,
    contains,
    find_matching_1d,
    is_interleaved_1d,
    is_trivial_1d,
    thicken,
)
from .models import Barcode1D, Endpoint, Interval1D

__all__ = [
    "Endpoint",
    "Interval1D",
    "Barcode1D",
    "Matching",
    "thicken",
    "contains",
    "is_trivial_1d",
    "is_interleaved_1d",
    "check_matching_1d",
    "find_matching_1d",
    "bottleneck_candidates_1d",
    "bottleneck_1d",
]
