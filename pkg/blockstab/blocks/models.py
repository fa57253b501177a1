import re
from typing import Any, Self

from pydantic import model_validator

from blockstab.base_model import FrozenModel
from blockstab.values import NEG_INF, POS_INF, ExtendedNumber, ExtendedValue, format_extended, is_finite, parse_extended

from .config import BlockKind

_BLOCK_PATTERN: re.Pattern[str] = re.compile(
    r"^\s*([\[(])\s*([^,\s]+)\s*,\s*([^,\s\])]+)\s*([\])])\s*(?:_BL)?\s*$",
)


def region_contains(kind: BlockKind, a: ExtendedNumber, b: ExtendedNumber, x: object, y: object) -> bool:
    """Evaluate the membership formula of a block region at `(x, y)`, without validating `(a, b)`.

    Args
    ----
    - `kind` (`BlockKind`): Region type
    - `a`, `b` (`ExtendedNumber`): Region coordinates (an empty region is fine)
    - `x`, `y`: Point of `𝕌`

    Returns
    -------
    - `bool`: Membership of `(x, y)`
    """
    match kind:
        case BlockKind.O:
            return a < x and y < b
        case BlockKind.CO:
            return a <= y < b
        case BlockKind.OC:
            return a < x <= b
        case BlockKind.C:
            return x <= b and y >= a


def _normalize_kind(kind: BlockKind, a: ExtendedNumber, b: ExtendedNumber) -> BlockKind:
    # Infinite ends collapse to the type whose region is the same set.
    match kind:
        case BlockKind.O if a == NEG_INF and b == POS_INF:
            return BlockKind.C
        case BlockKind.O if a == NEG_INF:
            return BlockKind.CO
        case BlockKind.O if b == POS_INF:
            return BlockKind.OC
        case BlockKind.CO if b == POS_INF:
            return BlockKind.C
        case BlockKind.OC if a == NEG_INF:
            return BlockKind.C
        case _:
            return kind


class Block(FrozenModel):
    """Model representing a block `⟨a, b⟩_BL` of `𝕌`.

    Attributes
    ----------
    - `kind` (`BlockKind`): Block type
    - `a` (`ExtendedValue`): First coordinate
    - `b` (`ExtendedValue`): Second coordinate

    Notes
    -----
    - Kind `c` with `a > b` encodes the switched block `{x ≤ b < a ≤ y}` lying off the diagonal.
    - Blocks with infinite coordinates are normalized on construction to the type describing the
      same region, e.g. `(−∞, b)_o` becomes `(−∞, b)_co` and `[a, ∞)_co` becomes `[a, ∞)_c`.
    """

    kind: BlockKind
    a: ExtendedValue
    b: ExtendedValue

    @model_validator(mode="before")
    @classmethod
    def _normalize(cls, data: Any) -> Any:
        if isinstance(data, dict) and {"kind", "a", "b"} <= data.keys():
            a: ExtendedNumber = parse_extended(data["a"])
            b: ExtendedNumber = parse_extended(data["b"])
            return {**data, "kind": _normalize_kind(BlockKind(data["kind"]), a, b), "a": a, "b": b}
        return data

    @model_validator(mode="after")
    def _check_coordinates(self) -> Self:
        if self.a == POS_INF or self.b == NEG_INF:
            msg = "A block cannot start at +∞ or end at −∞"
            raise ValueError(msg)
        if self.kind is not BlockKind.C and not self.a < self.b:
            msg = f"Block of kind {self.kind} needs a < b, got a={format_extended(self.a)}, b={format_extended(self.b)}"
            raise ValueError(msg)
        return self

    @classmethod
    def make(cls, kind: BlockKind | str, a: object, b: object) -> "Block":
        return cls(kind=BlockKind(kind), a=parse_extended(a), b=parse_extended(b))

    @classmethod
    def parse(cls, text: str) -> "Block":
        """Parse the bracket notation produced by `str`, e.g. `"(0, 10)_BL"` or `"[2, 0]_BL"`.

        Raises
        ------
        - `ValueError`: if the text is not in bracket notation
        """
        found: re.Match[str] | None = _BLOCK_PATTERN.match(text)
        if found is None:
            msg = f"Not a block: {text!r}"
            raise ValueError(msg)
        opening, a, b, closing = found.groups()
        return cls.make(BlockKind.from_decorations(left_closed=opening == "[", right_closed=closing == "]"), a, b)

    @property
    def is_switched(self) -> bool:
        return self.kind is BlockKind.C and self.a > self.b

    @property
    def length(self) -> ExtendedNumber:
        return self.b - self.a

    def contains(self, x: object, y: object) -> bool:
        return region_contains(self.kind, self.a, self.b, x, y)

    def sort_key(self) -> tuple[str, ExtendedNumber, ExtendedNumber]:
        return (self.kind.value, self.a, self.b)

    def __str__(self) -> str:
        left: str = "[" if self.kind.left_closed and is_finite(self.a) else "("
        right: str = "]" if self.kind.right_closed and is_finite(self.b) else ")"
        return f"{left}{format_extended(self.a)}, {format_extended(self.b)}{right}_BL"


class BlockBarcode(FrozenModel):
    """Model representing a finite multiset of blocks.

    Attributes
    ----------
    - `blocks` (`tuple[Block, ...]`): Blocks, multiplicity by repetition
    """

    blocks: tuple[Block, ...] = ()

    @classmethod
    def parse(cls, *texts: str) -> "BlockBarcode":
        return cls(blocks=tuple(Block.parse(text) for text in texts))

    def __len__(self) -> int:
        return len(self.blocks)

    def sorted(self) -> "BlockBarcode":
        return BlockBarcode(blocks=tuple(sorted(self.blocks, key=Block.sort_key)))

    def same_multiset(self, other: "BlockBarcode") -> bool:
        return self.sorted() == other.sorted()

    def count_containing(self, x: object, y: object) -> int:
        return sum(1 for block in self.blocks if block.contains(x, y))

    def __str__(self) -> str:
        return "{" + ", ".join(str(block) for block in self.sorted().blocks) + "}"
