from enum import StrEnum


class BlockKind(StrEnum):
    """Enum for the block types over the upper half-plane `𝕌 = {(x, y) : x ≤ y}`.

    Attributes
    ----------
    - `O`: `(a, b)_BL = {a < x, y < b}`
    - `CO`: `[a, b)_BL = {a ≤ y < b}`
    - `OC`: `(a, b]_BL = {a < x ≤ b}`
    - `C`: `[a, b]_BL = {x ≤ b, y ≥ a}`; with `a > b` this is the switched block above the diagonal

    Notes
    -----
    - The same letters tag zigzag intervals `⟨b, d⟩_ZZ`, since block extension keeps the type.
    """

    O = "o"
    CO = "co"
    OC = "oc"
    C = "c"

    @property
    def left_closed(self) -> bool:
        return self in (BlockKind.CO, BlockKind.C)

    @property
    def right_closed(self) -> bool:
        return self in (BlockKind.OC, BlockKind.C)

    @classmethod
    def from_decorations(cls, *, left_closed: bool, right_closed: bool) -> "BlockKind":
        match (left_closed, right_closed):
            case (True, True):
                return cls.C
            case (True, False):
                return cls.CO
            case (False, True):
                return cls.OC
            case _:
                return cls.O
