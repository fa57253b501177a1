from enum import StrEnum


class Axis(StrEnum):
    """Enum for the two lattice directions of a grid module.

    Attributes
    ----------
    - `X1` (`str`): Horizontal direction `e₁`
    - `X2` (`str`): Vertical direction `e₂`
    """

    X1 = "x1"
    X2 = "x2"

    @property
    def step(self) -> tuple[int, int]:
        return (1, 0) if self is Axis.X1 else (0, 1)
