from enum import Enum
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, PositiveInt

DEFAULT_FIELD: PositiveInt = 2
# Residues are int64; below this bound n·p² stays under 2**63 for any practical n.
MAX_FIELD: PositiveInt = 2**15
SCHEMA_VERSION: str = "1"


class StabilityFactors(BaseModel):
    """Model for the constants relating bottleneck and interleaving distances.

    Attributes
    ----------
    - `block` (`Fraction`): Factor `c` in `d_I ≤ d_b ≤ c · d_I` for block-decomposable modules
    - `reeb` (`Fraction`): Factor `c` in `d_b(L₀) ≤ c · d_I` for Reeb graphs
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    block: Fraction
    reeb: Fraction


class StabilityConstants(Enum):
    """Enum for the stability constants used when reporting certified bounds.

    Attributes
    ----------
    - `PUBLISHED` (`StabilityFactors`): Block factor 5/2 and Reeb factor 5
    - `TIGHT` (`StabilityFactors`): Isometry for block-decomposable modules (factor 1), Reeb factor 2

    Notes
    -----
    - `TIGHT` relies on the later sharp form of the algebraic stability theorem, which makes
      the interleaving and bottleneck distances coincide for block-decomposable modules.
    """

    PUBLISHED: StabilityFactors = StabilityFactors(block=Fraction(5, 2), reeb=Fraction(5))
    TIGHT: StabilityFactors = StabilityFactors(block=Fraction(1), reeb=Fraction(2))
