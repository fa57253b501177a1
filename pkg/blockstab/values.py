"""Exact rationals and the extended values `±∞` used for every barcode coordinate."""

from fractions import Fraction
from math import isinf

from pydantic import PlainSerializer, PlainValidator
from typing_extensions import Annotated

ExtendedNumber = Fraction | float

POS_INF: float = float("inf")
NEG_INF: float = float("-inf")

_POSITIVE_INFINITY_TOKENS: frozenset[str] = frozenset({"inf", "+inf", "infinity", "+infinity", "∞", "+∞"})
_NEGATIVE_INFINITY_TOKENS: frozenset[str] = frozenset({"-inf", "-infinity", "-∞"})


def parse_extended(raw: object) -> ExtendedNumber:
    """Parse a rational or an infinity.

    Args
    ----
    - `raw` (`object`): `Fraction`, `int`, an infinite or integral `float`, or a string such as `"3/4"`, `"-2"`, `"inf"`

    Returns
    -------
    - `Fraction | float`: A `Fraction`, or `±inf` as a float

    Raises
    ------
    - `ValueError`: for booleans, non-integral floats, malformed strings and zero denominators
    """
    if isinstance(raw, bool):
        msg = "Booleans are not rationals"
        raise ValueError(msg)
    if isinstance(raw, Fraction):
        return raw
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, float):
        if isinf(raw):
            return raw
        if raw.is_integer():
            return Fraction(int(raw))
        msg = f"Inexact float {raw!r}; pass the rational as a string like '1/10'"
        raise ValueError(msg)
    if isinstance(raw, str):
        token: str = raw.strip().lower()
        if token in _POSITIVE_INFINITY_TOKENS:
            return POS_INF
        if token in _NEGATIVE_INFINITY_TOKENS:
            return NEG_INF
        try:
            return Fraction(token)
        except (ValueError, ZeroDivisionError) as exc:
            msg = f"Not a rational: {raw!r}"
            raise ValueError(msg) from exc
    msg = f"Unsupported value type {type(raw).__name__}"
    raise ValueError(msg)


def parse_rational(raw: object) -> Fraction:
    """Parse a finite rational (see `parse_extended`).

    Raises
    ------
    - `ValueError`: if the value is infinite or cannot be parsed
    """
    value: ExtendedNumber = parse_extended(raw)
    if not isinstance(value, Fraction):
        msg = f"Expected a finite rational, got {raw!r}"
        raise ValueError(msg)
    return value


def parse_nonnegative_rational(raw: object) -> Fraction:
    value: Fraction = parse_rational(raw)
    if value < 0:
        msg = f"Expected a rational ≥ 0, got {value}"
        raise ValueError(msg)
    return value


def format_extended(value: ExtendedNumber) -> str:
    """Format a rational as `"p/q"` (or `"n"`) and an infinity as `"inf"` / `"-inf"`."""
    if isinstance(value, Fraction):
        return str(value)
    return "inf" if value > 0 else "-inf"


def is_finite(value: ExtendedNumber) -> bool:
    return isinstance(value, Fraction)


def gap(u: ExtendedNumber, v: ExtendedNumber) -> ExtendedNumber:
    """Return `|u − v|`, taking the gap between like-signed infinities as 0 and any other infinite gap as `+∞`."""
    if is_finite(u) and is_finite(v):
        return abs(u - v)
    if not is_finite(u) and not is_finite(v) and u == v:
        return Fraction(0)
    return POS_INF


ExtendedValue = Annotated[
    ExtendedNumber,
    PlainValidator(parse_extended),
    PlainSerializer(format_extended, return_type=str),
]
Rational = Annotated[
    Fraction,
    PlainValidator(parse_rational),
    PlainSerializer(format_extended, return_type=str),
]
NonNegativeRational = Annotated[
    Fraction,
    PlainValidator(parse_nonnegative_rational),
    PlainSerializer(format_extended, return_type=str),
]
