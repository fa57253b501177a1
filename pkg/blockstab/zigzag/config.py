from enum import StrEnum


class ArrowDirection(StrEnum):
    """Enum for the direction of a zigzag arrow between positions `i` and `i + 1`.

    Attributes
    ----------
    - `FWD`: `V_i → V_{i+1}`
    - `BWD`: `V_i ← V_{i+1}`
    """

    FWD = "fwd"
    BWD = "bwd"

    @property
    def flipped(self) -> "ArrowDirection":
        return ArrowDirection.BWD if self is ArrowDirection.FWD else ArrowDirection.FWD
