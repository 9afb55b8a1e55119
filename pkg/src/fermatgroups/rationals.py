"""Exact rational building blocks: projective line, heights, 2x2 matrices.

Rational values are `fractions.Fraction` throughout.  The stdlib type already
maintains the canonical reduced form (coprime numerator and denominator,
positive denominator) and compares structurally, which is exactly the
equality the rest of the library relies on.  This module adds what the curve
groups need on top: the point at infinity completing Q to the projective
line, the height measure that bounds searches, exact 2x2 matrices, and the
"p/q" text codec shared by the CLI and the JSON payloads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import InvalidArgumentError

__all__ = [
    "Fraction",
    "INF",
    "Infinity",
    "Mat2",
    "ProjectiveRational",
    "as_projective",
    "format_point",
    "format_projective",
    "format_rational",
    "height",
    "parse_point",
    "parse_projective",
    "parse_rational",
    "pr_neg",
    "projective_ratio",
    "rational",
]


class Infinity:
    """The point at infinity completing Q to the projective rational line."""

    _instance = None
    __slots__ = ()

    def __new__(cls) -> "Infinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "inf"


INF = Infinity()

#: A value on the projective rational line: a finite Fraction or INF.
ProjectiveRational = Union[Fraction, Infinity]


def rational(num: int, den: int = 1) -> Fraction:
    """Reduced fraction with positive denominator.  Rejects ``den == 0``."""
    if den == 0:
        raise InvalidArgumentError("rational with zero denominator")
    return Fraction(num, den)


def as_projective(value) -> ProjectiveRational:
    """Coerce an int, Fraction, or INF onto the projective line."""
    if isinstance(value, Infinity):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Fraction(value)
    raise InvalidArgumentError(f"not a projective rational: {value!r}")


def pr_neg(value: ProjectiveRational) -> ProjectiveRational:
    """Negation extended to the projective line; -inf is identified with inf."""
    if isinstance(value, Infinity):
        return value
    return -value


def projective_ratio(num: Fraction, den: Fraction) -> "ProjectiveRational | None":
    """Exact num/den as a projective value; None encodes the indeterminate 0/0."""
    if den != 0:
        return Fraction(num) / Fraction(den)
    if num == 0:
        return None
    return INF


def height(value) -> int:
    """Size measure used as a search bound.

    For a reduced fraction p/q this is max(|p|, q); heights start at 1 since
    0 is 0/1.  A point or tuple takes the maximum over its components.
    """
    if isinstance(value, bool):
        raise InvalidArgumentError("height undefined for booleans")
    if isinstance(value, int):
        value = Fraction(value)
    if isinstance(value, Fraction):
        return max(abs(value.numerator), value.denominator)
    if isinstance(value, Infinity):
        raise InvalidArgumentError("height of the point at infinity is undefined")
    try:
        components = tuple(value)
    except TypeError:
        raise InvalidArgumentError(f"height undefined for {value!r}") from None
    if not components:
        raise InvalidArgumentError("height of an empty point is undefined")
    return max(height(component) for component in components)


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" (integers, q != 0) into a reduced fraction."""
    raw = text.strip()
    num_part, slash, den_part = raw.partition("/")
    try:
        num = int(num_part)
        den = int(den_part) if slash else 1
    except ValueError:
        raise InvalidArgumentError(f"malformed rational: {text!r}") from None
    if den == 0:
        raise InvalidArgumentError(f"malformed rational (zero denominator): {text!r}")
    return Fraction(num, den)


def format_rational(value: "Fraction | int") -> str:
    """Canonical "p/q" text, denominator always present."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_projective(text: str) -> ProjectiveRational:
    """Parse "p/q", "p", or "inf"."""
    if text.strip() == "inf":
        return INF
    return parse_rational(text)


def format_projective(value: ProjectiveRational) -> str:
    if isinstance(value, Infinity):
        return "inf"
    return format_rational(value)


def parse_point(text: str) -> tuple[Fraction, Fraction]:
    """Parse "x,y" with rational components."""
    parts = text.split(",")
    if len(parts) != 2:
        raise InvalidArgumentError(f"malformed point (need two components): {text!r}")
    return parse_rational(parts[0]), parse_rational(parts[1])


def format_point(point) -> str:
    return ",".join(format_rational(component) for component in point)


@dataclass(frozen=True)
class Mat2:
    """Exact 2x2 rational matrix with rows (a11, a12), (a21, a22)."""

    a11: Fraction
    a12: Fraction
    a21: Fraction
    a22: Fraction

    def __post_init__(self) -> None:
        for name in ("a11", "a12", "a21", "a22"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(Fraction(1), Fraction(0), Fraction(0), Fraction(1))

    def __mul__(self, other: "Mat2") -> "Mat2":
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a11, -self.a12, -self.a21, -self.a22)

    def __pow__(self, exponent: int) -> "Mat2":
        if not isinstance(exponent, int) or exponent < 0:
            raise InvalidArgumentError("matrix power needs a nonnegative integer")
        result = Mat2.identity()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def det(self) -> Fraction:
        return self.a11 * self.a22 - self.a12 * self.a21

    def apply(self, x, y) -> tuple[Fraction, Fraction]:
        x = Fraction(x)
        y = Fraction(y)
        return (self.a11 * x + self.a12 * y, self.a21 * x + self.a22 * y)

    def rows(self) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        return ((self.a11, self.a12), (self.a21, self.a22))
