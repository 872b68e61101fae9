"""Exact rationals on [0, 1] and the doubly-represented dyadic points.

A rational in (0, 1) has two binary expansions exactly when its reduced
denominator is a power of two, i.e. it is of the form (2v+1)/2^u. These
points are enumerated level by level (u ascending, then numerator
ascending: 1/2; 1/4, 3/4; 1/8, 3/8, ...), an order chosen because the
position of a point has the closed form ``2^(u-1) - 1 + v``.

Indices are 0-based everywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import OutOfRange, ParseError

_RATIONAL_RE = re.compile(r"(\d+)(?:/(\d+))?")


@dataclass(frozen=True)
class Dyadic:
    """A point (2v+1)/2^u strictly inside the unit interval.

    ``numerator`` is the odd number 2v+1; ``exponent`` is u >= 1.
    """

    numerator: int
    exponent: int

    def __post_init__(self):
        if self.exponent < 1:
            raise ValueError("exponent must be >= 1")
        if self.numerator % 2 == 0:
            raise ValueError("numerator must be odd")
        if not 1 <= self.numerator < 2**self.exponent:
            raise ValueError("value must lie strictly between 0 and 1")

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, 2**self.exponent)

    @property
    def odd_index(self) -> int:
        """v in numerator = 2v + 1."""
        return (self.numerator - 1) // 2

    @classmethod
    def from_fraction(cls, q: Fraction) -> "Dyadic":
        if not 0 < q < 1 or q.denominator & (q.denominator - 1):
            raise ValueError(f"{q} is not a dyadic point of (0, 1)")
        return cls(q.numerator, q.denominator.bit_length() - 1)

    @classmethod
    def from_index(cls, k: int) -> "Dyadic":
        """The k-th point of the fixed enumeration (inverse of index_of)."""
        if k < 0:
            raise ValueError("index must be nonnegative")
        exponent = (k + 1).bit_length()
        numerator = 2 * (k - (2 ** (exponent - 1) - 1)) + 1
        return cls(numerator, exponent)

    def __str__(self) -> str:
        return str(self.fraction)


@dataclass(frozen=True)
class DualDyadic:
    """Classification: the point has exactly two binary expansions."""

    point: Dyadic


@dataclass(frozen=True)
class Endpoint:
    """Classification: 0 or 1, each with a unique expansion."""

    value: int

    def __post_init__(self):
        if self.value not in (0, 1):
            raise ValueError("endpoint must be 0 or 1")


@dataclass(frozen=True)
class OtherRational:
    """Classification: a uniquely-represented interior rational."""


PointClass = DualDyadic | Endpoint | OtherRational


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` (nonnegative integers, q > 0)."""
    match = _RATIONAL_RE.fullmatch(text)
    if match is None:
        prefix = _RATIONAL_RE.match(text)
        raise ParseError(
            f"not a rational literal: {text!r}",
            position=prefix.end() if prefix else 0,
        )
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ParseError(f"zero denominator in {text!r}", position=match.start(2))
    return Fraction(numerator, denominator)


def ensure_unit_interval(q: Fraction) -> Fraction:
    q = Fraction(q)
    if not 0 <= q <= 1:
        raise OutOfRange(f"{q} is not in [0, 1]")
    return q


def classify(q: Fraction) -> PointClass:
    """Exactly one of: dual dyadic point, endpoint, other rational."""
    q = ensure_unit_interval(q)
    if q == 0 or q == 1:
        return Endpoint(int(q))
    if q.denominator & (q.denominator - 1) == 0:
        return DualDyadic(Dyadic.from_fraction(q))
    return OtherRational()


def enumerate_duals(count: int) -> list[Dyadic]:
    """The first ``count`` dyadic points in the fixed order."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    return [Dyadic.from_index(k) for k in range(count)]


def index_of(point: Dyadic) -> int:
    """Position of ``point`` in the fixed enumeration (closed form)."""
    return 2 ** (point.exponent - 1) - 1 + point.odd_index
