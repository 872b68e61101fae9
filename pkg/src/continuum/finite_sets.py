"""Finite set algebra and cardinal arithmetic by explicit enumeration.

Sets are ordered collections of distinct string labels, so products,
covering-sets and law witnesses enumerate in a reproducible order.
Cardinal operations are computed the set-theoretic way: build witness
sets, combine them, count the result. Nothing here shortcuts through
integer arithmetic; the integer laws are what the enumeration is
checked *against*.

A "covering of N with M" is a total function N -> M; the covering-set
(N | M) is the set of all of them, and exponentiation of cardinals is
defined as its size. The three exponent laws are verified by building
the natural bijection between both sides element by element.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import BudgetExceeded, DisjointnessViolation

LAW_IDS = ("ADD_EXP", "MUL_EXP", "CURRY")

DEFAULT_BUDGET = 1_000_000


@dataclass(frozen=True)
class FiniteSet:
    """Ordered finite set of distinct labels (insertion order kept)."""

    elements: tuple[str, ...] = ()

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("duplicate labels in FiniteSet")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __contains__(self, label: object) -> bool:
        return label in self.elements


@dataclass(frozen=True)
class Covering:
    """A total function from ``domain`` into ``codomain``.

    ``assignment[i]`` is the value at ``domain.elements[i]``.
    """

    domain: FiniteSet
    codomain: FiniteSet
    assignment: tuple[str, ...]

    def __post_init__(self):
        if len(self.assignment) != len(self.domain):
            raise ValueError("assignment is not total over the domain")
        allowed = set(self.codomain.elements)
        for value in self.assignment:
            if value not in allowed:
                raise ValueError(f"assigned value {value!r} is not in the codomain")

    def __call__(self, label: str) -> str:
        return self.assignment[self.domain.elements.index(label)]

    def word(self) -> str:
        """The assignment read off as a word, e.g. ``"011"``."""
        return "".join(self.assignment)

    def label(self) -> str:
        """A canonical label for this covering, usable as a set element."""
        return "[" + ",".join(self.assignment) + "]"


@dataclass(frozen=True)
class CoveringSet:
    """All coverings of ``domain`` with ``codomain``, enumerated once each."""

    domain: FiniteSet
    codomain: FiniteSet
    coverings: tuple[Covering, ...]

    def __post_init__(self):
        expected = len(self.codomain) ** len(self.domain)
        if len(self.coverings) != expected:
            raise ValueError(f"expected {expected} coverings, got {len(self.coverings)}")
        if len({c.assignment for c in self.coverings}) != len(self.coverings):
            raise ValueError("coverings are not pairwise distinct")

    def __len__(self) -> int:
        return len(self.coverings)

    def __iter__(self) -> Iterator[Covering]:
        return iter(self.coverings)


@dataclass(frozen=True)
class LawWitness:
    """An explicit bijection witnessing one exponent law.

    ``pairs`` maps every element of ``left_set`` to one of ``right_set``;
    the witness is only meaningful if :meth:`is_bijection` holds.
    """

    law_id: str
    left_set: FiniteSet
    right_set: FiniteSet
    pairs: tuple[tuple[str, str], ...]

    def is_bijection(self) -> bool:
        lefts = [left for left, _ in self.pairs]
        rights = [right for _, right in self.pairs]
        total = len(self.pairs) == len(self.left_set) and set(lefts) == set(self.left_set.elements)
        injective = len(set(rights)) == len(rights)
        surjective = set(rights) == set(self.right_set.elements)
        return total and injective and surjective


def make_set(labels: Iterable[str]) -> FiniteSet:
    """Build a set from labels, dropping duplicates, keeping first-seen order."""
    return FiniteSet(tuple(dict.fromkeys(labels)))


def disjoint_union(left: FiniteSet, right: FiniteSet) -> FiniteSet:
    """Union of sets that must not share labels.

    Raises :class:`DisjointnessViolation` listing the common labels
    otherwise; the caller that wants a total operation should use
    :func:`tagged_union` instead.
    """
    common = tuple(label for label in left if label in right)
    if common:
        raise DisjointnessViolation(common)
    return FiniteSet(left.elements + right.elements)


def tagged_union(left: FiniteSet, right: FiniteSet) -> FiniteSet:
    """Disjointified union: labels are tagged ``L.``/``R.`` by side.

    Total on all inputs; the result always has ``len(left) + len(right)``
    elements.
    """
    return FiniteSet(
        tuple(f"L.{label}" for label in left) + tuple(f"R.{label}" for label in right)
    )


def pair_label(left: str, right: str) -> str:
    return f"({left},{right})"


def product(left: FiniteSet, right: FiniteSet) -> FiniteSet:
    """All ordered pairs as composite labels, left order major."""
    return FiniteSet(
        tuple(pair_label(a, b) for a in left for b in right)
    )


def covering_set(domain: FiniteSet, codomain: FiniteSet) -> CoveringSet:
    """Enumerate every total function ``domain -> codomain`` exactly once.

    Order is lexicographic: domain elements are the digit positions,
    codomain order gives the digit values. The empty domain yields the
    single empty covering (so sizes follow ``|codomain| ** |domain|``
    with ``0 ** 0 == 1``).
    """
    coverings = tuple(
        Covering(domain, codomain, assignment)
        for assignment in itertools.product(codomain.elements, repeat=len(domain))
    )
    return CoveringSet(domain, codomain, coverings)


def _require_cardinal(value: int, name: str) -> None:
    if value < 0:
        raise ValueError(f"{name} must be a nonnegative integer, got {value}")


def _plain_witness(size: int) -> FiniteSet:
    return FiniteSet(tuple(f"e{i}" for i in range(size)))


def _role_witness(role: str, size: int) -> FiniteSet:
    return FiniteSet(tuple(f"{role}.e{i}" for i in range(size)))


def cardinal_add(a: int, b: int) -> int:
    """a + b as the size of a disjointified union of witness sets.

    The witnesses deliberately reuse the same labels, so the sum is only
    correct because it routes through :func:`tagged_union`.
    """
    _require_cardinal(a, "a")
    _require_cardinal(b, "b")
    return len(tagged_union(_plain_witness(a), _plain_witness(b)))


def cardinal_mul(a: int, b: int) -> int:
    """a * b as the size of the enumerated pair set."""
    _require_cardinal(a, "a")
    _require_cardinal(b, "b")
    return len(product(_plain_witness(a), _plain_witness(b)))


def cardinal_pow(a: int, b: int) -> int:
    """a ** b as the size of the covering-set of a b-element set with an
    a-element set (``0 ** 0 == 1``: the empty covering)."""
    _require_cardinal(a, "a")
    _require_cardinal(b, "b")
    return len(covering_set(_plain_witness(b), _plain_witness(a)))


def _enumeration_cost(law_id: str, a: int, b: int, c: int) -> int:
    # Total items materialized: intermediate covering/pair sets plus both sides.
    if law_id == "ADD_EXP":
        return a**b + a**c + a**b * a**c + a ** (b + c)
    if law_id == "MUL_EXP":
        return a**c + b**c + a * b + a**c * b**c + (a * b) ** c
    return a**b + (a**b) ** c + c * b + a ** (b * c)


def _add_exp_witness(m: FiniteSet, n: FiniteSet, p: FiniteSet) -> tuple[FiniteSet, FiniteSet, tuple]:
    # Pairs of coverings (N -> M, P -> M)  <->  coverings of N (+) P with M.
    nm = covering_set(n, m)
    pm = covering_set(p, m)
    right = covering_set(disjoint_union(n, p), m)
    left_labels = []
    pairs = []
    for f in nm:
        for g in pm:
            left = pair_label(f.label(), g.label())
            glued = Covering(right.domain, m, f.assignment + g.assignment)
            left_labels.append(left)
            pairs.append((left, glued.label()))
    left_set = FiniteSet(tuple(left_labels))
    right_set = FiniteSet(tuple(cov.label() for cov in right))
    return left_set, right_set, tuple(pairs)


def _mul_exp_witness(m: FiniteSet, n: FiniteSet, p: FiniteSet) -> tuple[FiniteSet, FiniteSet, tuple]:
    # Pairs of coverings (P -> M, P -> N)  <->  coverings of P with M x N.
    pm = covering_set(p, m)
    pn = covering_set(p, n)
    mn = product(m, n)
    right = covering_set(p, mn)
    left_labels = []
    pairs = []
    for f in pm:
        for g in pn:
            left = pair_label(f.label(), g.label())
            paired = Covering(
                p, mn, tuple(pair_label(x, y) for x, y in zip(f.assignment, g.assignment))
            )
            left_labels.append(left)
            pairs.append((left, paired.label()))
    left_set = FiniteSet(tuple(left_labels))
    right_set = FiniteSet(tuple(cov.label() for cov in right))
    return left_set, right_set, tuple(pairs)


def _curry_witness(m: FiniteSet, n: FiniteSet, p: FiniteSet) -> tuple[FiniteSet, FiniteSet, tuple]:
    # Coverings of P with the covering-set (N | M)  <->  coverings of P x N with M.
    nm = covering_set(n, m)
    by_label = {cov.label(): cov for cov in nm}
    nm_labels = FiniteSet(tuple(by_label))
    left = covering_set(p, nm_labels)
    right = covering_set(product(p, n), m)
    pairs = []
    for outer in left:
        flat = tuple(
            itertools.chain.from_iterable(by_label[lab].assignment for lab in outer.assignment)
        )
        uncurried = Covering(right.domain, m, flat)
        pairs.append((outer.label(), uncurried.label()))
    left_set = FiniteSet(tuple(cov.label() for cov in left))
    right_set = FiniteSet(tuple(cov.label() for cov in right))
    return left_set, right_set, tuple(pairs)


_LAW_BUILDERS = {
    "ADD_EXP": _add_exp_witness,
    "MUL_EXP": _mul_exp_witness,
    "CURRY": _curry_witness,
}


def verify_exponent_law(
    law_id: str, a: int, b: int, c: int, budget: int = DEFAULT_BUDGET
) -> LawWitness:
    """Verify one exponent law on witness sets of sizes a, b, c.

    Laws, with ``|M| = a``, ``|N| = b``, ``|P| = c``:

    * ``ADD_EXP``:  (N|M) x (P|M)  ~  (N (+) P | M)      [a^b * a^c = a^(b+c)]
    * ``MUL_EXP``:  (P|M) x (P|N)  ~  (P | M x N)        [a^c * b^c = (a*b)^c]
    * ``CURRY``:    (P | (N|M))    ~  (P x N | M)        [(a^b)^c = a^(b*c)]

    The returned witness's ``pairs`` is the natural bijection, fully
    enumerated and validated. Raises :class:`BudgetExceeded` before
    enumerating anything when the total item count would pass ``budget``.
    """
    if law_id not in _LAW_BUILDERS:
        raise ValueError(f"unknown law id {law_id!r}; expected one of {LAW_IDS}")
    _require_cardinal(a, "a")
    _require_cardinal(b, "b")
    _require_cardinal(c, "c")
    cost = _enumeration_cost(law_id, a, b, c)
    if cost > budget:
        raise BudgetExceeded(
            f"{law_id} with a={a} b={b} c={c} would enumerate {cost} items (budget {budget})"
        )
    m = _role_witness("M", a)
    n = _role_witness("N", b)
    p = _role_witness("P", c)
    left_set, right_set, pairs = _LAW_BUILDERS[law_id](m, n, p)
    witness = LawWitness(law_id, left_set, right_set, pairs)
    if not witness.is_bijection():
        raise AssertionError(f"constructed {law_id} witness is not a bijection")
    return witness
