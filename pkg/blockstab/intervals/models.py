import re
from fractions import Fraction
from typing import Self

from pydantic import model_validator

from blockstab.base_model import FrozenModel
from blockstab.values import ExtendedNumber, ExtendedValue, format_extended, is_finite, parse_extended

_INTERVAL_PATTERN: re.Pattern[str] = re.compile(r"^\s*([\[(])\s*([^,\s]+)\s*,\s*([^,\s]+)\s*([\])])\s*$")


class Endpoint(FrozenModel):
    """Model representing a decorated interval endpoint.

    Attributes
    ----------
    - `v` (`ExtendedValue`): Rational position or `±∞`
    - `closed` (`bool`): Whether the endpoint belongs to the interval
    """

    v: ExtendedValue
    closed: bool


class Interval1D(FrozenModel):
    """Model representing an interval of the real line with decorated endpoints.

    Attributes
    ----------
    - `left` (`Endpoint`): Left endpoint
    - `right` (`Endpoint`): Right endpoint

    Notes
    -----
    - `left.v ≤ right.v`; equality is allowed only for the closed point interval `[a, a]`.
    - Infinite endpoints are always open.
    """

    left: Endpoint
    right: Endpoint

    @model_validator(mode="after")
    def _check_shape(self) -> Self:
        if (not is_finite(self.left.v) and self.left.closed) or (not is_finite(self.right.v) and self.right.closed):
            msg = "Infinite endpoints must be open"
            raise ValueError(msg)
        if self.left.v == float("inf") or self.right.v == float("-inf"):
            msg = "An interval cannot start at +∞ or end at −∞"
            raise ValueError(msg)
        if self.left.v > self.right.v:
            msg = f"Left endpoint {format_extended(self.left.v)} exceeds right endpoint {format_extended(self.right.v)}"
            raise ValueError(msg)
        if self.left.v == self.right.v and not (self.left.closed and self.right.closed):
            msg = "A degenerate interval must be the closed point [a, a]"
            raise ValueError(msg)
        return self

    @classmethod
    def make(cls, a: object, b: object, *, left_closed: bool, right_closed: bool) -> "Interval1D":
        return cls(
            left=Endpoint(v=parse_extended(a), closed=left_closed),
            right=Endpoint(v=parse_extended(b), closed=right_closed),
        )

    @classmethod
    def closed(cls, a: object, b: object) -> "Interval1D":
        return cls.make(a, b, left_closed=True, right_closed=True)

    @classmethod
    def open(cls, a: object, b: object) -> "Interval1D":
        return cls.make(a, b, left_closed=False, right_closed=False)

    @classmethod
    def closed_open(cls, a: object, b: object) -> "Interval1D":
        return cls.make(a, b, left_closed=True, right_closed=False)

    @classmethod
    def open_closed(cls, a: object, b: object) -> "Interval1D":
        return cls.make(a, b, left_closed=False, right_closed=True)

    @classmethod
    def parse(cls, text: str) -> "Interval1D":
        """Parse the bracket notation produced by `str`, e.g. `"[-1, 0)"` or `"(-inf, 3/2]"`.

        Raises
        ------
        - `ValueError`: if the text is not in bracket notation
        """
        found: re.Match[str] | None = _INTERVAL_PATTERN.match(text)
        if found is None:
            msg = f"Not an interval: {text!r}"
            raise ValueError(msg)
        opening, a, b, closing = found.groups()
        return cls.make(a, b, left_closed=opening == "[", right_closed=closing == "]")

    @property
    def length(self) -> ExtendedNumber:
        return self.right.v - self.left.v

    @property
    def is_bounded(self) -> bool:
        return is_finite(self.left.v) and is_finite(self.right.v)

    def contains_point(self, x: Fraction) -> bool:
        above: bool = self.left.v < x or (self.left.closed and self.left.v == x)
        below: bool = x < self.right.v or (self.right.closed and self.right.v == x)
        return above and below

    def sort_key(self) -> tuple[ExtendedNumber, bool, ExtendedNumber, bool]:
        return (self.left.v, not self.left.closed, self.right.v, self.right.closed)

    def __str__(self) -> str:
        return (
            f"{'[' if self.left.closed else '('}{format_extended(self.left.v)}, "
            f"{format_extended(self.right.v)}{']' if self.right.closed else ')'}"
        )


class Barcode1D(FrozenModel):
    """Model representing a finite multiset of intervals.

    Attributes
    ----------
    - `intervals` (`tuple[Interval1D, ...]`): Intervals, multiplicity by repetition
    """

    intervals: tuple[Interval1D, ...] = ()

    @classmethod
    def parse(cls, *texts: str) -> "Barcode1D":
        return cls(intervals=tuple(Interval1D.parse(text) for text in texts))

    def __len__(self) -> int:
        return len(self.intervals)

    def sorted(self) -> "Barcode1D":
        """Return the barcode in canonical order; equal multisets have equal sorted forms."""
        return Barcode1D(intervals=tuple(sorted(self.intervals, key=Interval1D.sort_key)))

    def same_multiset(self, other: "Barcode1D") -> bool:
        return self.sorted() == other.sorted()

    def __str__(self) -> str:
        return "{" + ", ".join(str(interval) for interval in self.sorted().intervals) + "}"
