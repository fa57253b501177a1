from .feasibility import find_covering_matching, infimum_over_candidates
from .models import Matching

__all__ = [
    "Matching",
    "find_covering_matching",
    "infimum_over_candidates",
]
