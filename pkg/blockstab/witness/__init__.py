from .construction import (
    as_region,
    block_stability_check,
    pullback,
    shift_down,
    typed_stability_matching,
    witness_from_matching,
    witness_from_matching_1d,
)
from .models import (
    InterleavingWitness,
    LineInterleavingWitness,
    LineWitnessPair,
    Overlap,
    Region,
    WitnessPair,
)
from .verification import (
    line_witness_violations,
    verification_values,
    verify_witness,
    verify_witness_1d,
    witness_violations,
)

__all__ = [
    "Region",
    "Overlap",
    "WitnessPair",
    "InterleavingWitness",
    "LineWitnessPair",
    "LineInterleavingWitness",
    "as_region",
    "pullback",
    "shift_down",
    "witness_from_matching",
    "witness_from_matching_1d",
    "typed_stability_matching",
    "block_stability_check",
    "verification_values",
    "witness_violations",
    "verify_witness",
    "line_witness_violations",
    "verify_witness_1d",
]
