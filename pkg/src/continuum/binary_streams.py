"""Eventually periodic binary streams, written ``preamble(period)``.

These are exactly the binary expansions of rationals, so they form the
computable fragment of the space of all infinite 0/1 strings: values
are exact, equality is decidable (via a canonical form), and the
trailing-zeros / trailing-ones duplicate pair of each dyadic point can
be constructed and recognized.

Valuation reads the stream as digits after the binary point:
``value = int(preamble) / 2^L + int(period) / (2^L * (2^P - 1))``
with L, P the lengths, which is the closed form of bit 1 at weight 1/2,
bit 2 at weight 1/4, and so on.

Class split of the stream universe:

* ``InBS`` -- the redundant trailing-ones duplicates: eventually all 1s
  *and* containing a 0 (the second expansion of a dyadic point < 1).
* ``InBX`` -- everything else, i.e. the canonical representations of
  the unit interval, including ``(0)`` for 0 and ``(1)`` for 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator

from .dyadic import DualDyadic, classify, ensure_unit_interval
from .errors import ParseError

Bits = tuple[int, ...]


@dataclass(frozen=True)
class EPBS:
    """An eventually periodic bit stream: finite preamble, repeating block."""

    preamble: Bits
    period: Bits

    def __post_init__(self):
        if not self.period:
            raise ValueError("period must be nonempty")
        for bit in self.preamble + self.period:
            if bit not in (0, 1):
                raise ValueError(f"bits must be 0 or 1, got {bit!r}")

    @property
    def size(self) -> int:
        return len(self.preamble) + len(self.period)

    def bits(self, count: int) -> list[int]:
        """The first ``count`` bits of the infinite expansion."""
        out = list(self.preamble[:count])
        while len(out) < count:
            out.extend(self.period)
        return out[:count]

    def __str__(self) -> str:
        return format_stream(self)


class StreamClass(Enum):
    IN_BX = "InBX"
    IN_BS = "InBS"


def parse_stream(text: str) -> EPBS:
    """Parse a ``bits(bits)`` literal; period part must be nonempty."""
    open_at = text.find("(")
    if open_at < 0:
        raise ParseError("missing '(' in stream literal", position=len(text))
    for i, ch in enumerate(text[:open_at]):
        if ch not in "01":
            raise ParseError(f"invalid preamble character {ch!r}", position=i)
    if not text.endswith(")"):
        raise ParseError("missing ')' in stream literal", position=len(text))
    body = text[open_at + 1 : -1]
    if not body:
        raise ParseError("period must be nonempty", position=open_at + 1)
    for i, ch in enumerate(body):
        if ch not in "01":
            raise ParseError(
                f"invalid period character {ch!r}", position=open_at + 1 + i
            )
    return EPBS(
        tuple(int(ch) for ch in text[:open_at]),
        tuple(int(ch) for ch in body),
    )


def format_stream(stream: EPBS) -> str:
    """Inverse of :func:`parse_stream`."""
    pre = "".join(str(b) for b in stream.preamble)
    per = "".join(str(b) for b in stream.period)
    return f"{pre}({per})"


def _primitive(period: Bits) -> Bits:
    for length in range(1, len(period)):
        if len(period) % length == 0:
            if period == period[:length] * (len(period) // length):
                return period[:length]
    return period


def canonicalize(stream: EPBS) -> EPBS:
    """The unique minimal representation of the same infinite stream.

    The period is reduced to its primitive block, then preamble bits
    equal to the period's last bit are absorbed by rotating the period.
    Two streams are bit-for-bit equal iff their canonical forms are
    structurally equal.
    """
    preamble = stream.preamble
    period = _primitive(stream.period)
    while preamble and preamble[-1] == period[-1]:
        preamble = preamble[:-1]
        period = period[-1:] + period[:-1]
    return EPBS(preamble, period)


def _bits_to_int(bits: Bits) -> int:
    value = 0
    for bit in bits:
        value = value * 2 + bit
    return value


def value(stream: EPBS) -> Fraction:
    """Exact value of the stream as digits after the binary point."""
    pre_len = len(stream.preamble)
    per_len = len(stream.period)
    head = Fraction(_bits_to_int(stream.preamble), 2**pre_len)
    tail = Fraction(_bits_to_int(stream.period), 2**pre_len * (2**per_len - 1))
    return head + tail


def _long_division(numerator: int, denominator: int) -> tuple[list[int], int]:
    """Binary digits of a proper fraction, with the cycle start position.

    Digits repeat from ``start`` onward; a terminating expansion shows up
    as the cycle ``[0]``.
    """
    seen: dict[int, int] = {}
    digits: list[int] = []
    remainder = numerator
    while remainder not in seen:
        seen[remainder] = len(digits)
        remainder *= 2
        digits.append(remainder // denominator)
        remainder %= denominator
    return digits, seen[remainder]


def expansions_of(q: Fraction) -> list[EPBS]:
    """Every binary expansion of q, canonical, trailing-zeros form first.

    Interior dyadic points get two (trailing 0s, then trailing 1s);
    everything else in [0, 1], including both endpoints, gets one.
    """
    q = ensure_unit_interval(q)
    if q == 0:
        return [EPBS((), (0,))]
    if q == 1:
        return [EPBS((), (1,))]
    digits, start = _long_division(q.numerator, q.denominator)
    if digits[start:] == [0]:
        # Terminating expansion: q is a dyadic point with two forms.
        finite = tuple(digits[:start])
        trailing_zeros = EPBS(finite, (0,))
        trailing_ones = EPBS(finite[:-1] + (0,), (1,))
        return [canonicalize(trailing_zeros), canonicalize(trailing_ones)]
    stream = EPBS(tuple(digits[:start]), tuple(digits[start:]))
    return [canonicalize(stream)]


def classify_stream(stream: EPBS) -> StreamClass:
    """``InBS`` iff the stream is eventually all 1s and contains a 0.

    Those are exactly the redundant second expansions of dyadic points
    below 1; ``(1)`` itself (value 1) and ``(0)`` (value 0) are ``InBX``.
    """
    canonical = canonicalize(stream)
    if canonical.period == (1,) and canonical.preamble:
        return StreamClass.IN_BS
    return StreamClass.IN_BX


def dual_of(stream: EPBS) -> EPBS | None:
    """The other expansion of the same value, if the value is dual-dyadic."""
    canonical = canonicalize(stream)
    if not isinstance(classify(value(canonical)), DualDyadic):
        return None
    first, second = expansions_of(value(canonical))
    return second if canonical == first else first


def enumerate_streams(max_size: int) -> Iterator[EPBS]:
    """All raw streams with ``len(preamble) + len(period) <= max_size``."""
    for total in range(1, max_size + 1):
        for per_len in range(1, total + 1):
            pre_len = total - per_len
            for pre in itertools.product((0, 1), repeat=pre_len):
                for per in itertools.product((0, 1), repeat=per_len):
                    yield EPBS(pre, per)


def enumerate_canonical(max_size: int) -> tuple[EPBS, ...]:
    """Distinct canonical streams of bounded size, in a fixed order."""
    unique = {canonicalize(e) for e in enumerate_streams(max_size)}
    return tuple(sorted(unique, key=lambda e: (e.size, e.preamble, e.period)))
