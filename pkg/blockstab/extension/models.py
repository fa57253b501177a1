from typing import Self

from pydantic import Field, field_validator, model_validator

from blockstab.base_model import FrozenModel
from blockstab.blocks import Block, BlockKind
from blockstab.errors import InputValidationError
from blockstab.values import ExtendedNumber, ExtendedValue, Rational, format_extended, is_finite


class TaggedZigzagInterval(FrozenModel):
    """Model representing a typed zigzag interval `⟨b, d⟩_ZZ` in ℤℤ coordinates.

    Attributes
    ----------
    - `kind` (`BlockKind`): Interval type, shared with the block it extends to
    - `b` (`ExtendedValue`): Left label, an integer or `−∞`
    - `d` (`ExtendedValue`): Right label, an integer or `+∞`
    """

    kind: BlockKind
    b: ExtendedValue
    d: ExtendedValue

    @field_validator("b", "d")
    @classmethod
    def _check_integral(cls, value: ExtendedNumber) -> ExtendedNumber:
        if is_finite(value) and value.denominator != 1:
            msg = f"ℤℤ labels are integers, got {value}"
            raise ValueError(msg)
        return value

    @model_validator(mode="after")
    def _check_order(self) -> Self:
        if self.kind is BlockKind.C:
            if not self.b <= self.d:
                msg = f"[b, d]_ZZ needs b ≤ d, got b={format_extended(self.b)}, d={format_extended(self.d)}"
                raise ValueError(msg)
        elif not self.b < self.d:
            msg = f"⟨b, d⟩_ZZ of kind {self.kind} needs b < d"
            raise ValueError(msg)
        return self

    def __str__(self) -> str:
        left: str = "[" if self.kind.left_closed and is_finite(self.b) else "("
        right: str = "]" if self.kind.right_closed and is_finite(self.d) else ")"
        return f"{left}{format_extended(self.b)}, {format_extended(self.d)}{right}_ZZ"


class Grid(FrozenModel):
    """Model representing the real values `s₁ < … < s_m` attached to the integer labels `1..m`.

    Attributes
    ----------
    - `values` (`tuple[Rational, ...]`): Strictly increasing critical values
    """

    values: tuple[Rational, ...] = Field(min_length=1)

    @field_validator("values")
    @classmethod
    def _check_increasing(cls, values: tuple[Rational, ...]) -> tuple[Rational, ...]:
        if any(left >= right for left, right in zip(values, values[1:])):
            msg = "Grid values must be strictly increasing"
            raise ValueError(msg)
        return values

    def value(self, label: ExtendedNumber) -> ExtendedNumber:
        """Return `s_label`, passing infinities through.

        Raises
        ------
        - `InputValidationError`: if the label is outside `1..m`
        """
        if not is_finite(label):
            return label
        if not 1 <= label <= len(self.values):
            msg = f"Label {label} outside 1..{len(self.values)}"
            raise InputValidationError(msg)
        return self.values[int(label) - 1]

    def relabel(self, block: Block) -> Block:
        """Move a block from integer labels to real critical values."""
        return Block.make(block.kind, self.value(block.a), self.value(block.b))
