"""Exact arithmetic on monomial ideals of K[x, y].

A monomial x^a y^b is stored as its exponent pair; the coefficient field
never enters.  A monomial ideal is stored as its minimal generating set,
ordered by strictly decreasing x-exponent (equivalently strictly increasing
y-exponent), so equality of ideals is equality of generator tuples.
"""

from __future__ import annotations

from functools import reduce
from operator import itemgetter
from typing import Iterable, Iterator, NamedTuple, Sequence, Tuple

__all__ = [
    "MAX_EXPONENT",
    "IdealError",
    "ExponentOverflowError",
    "Monomial",
    "PairIndex",
    "StaircaseIdeal",
    "divides",
    "product",
    "minimalize",
    "ideal_product",
    "ideal_power",
    "mu",
    "contains",
    "normalize",
    "pair_product",
    "pairs",
]

MAX_EXPONENT = 2**64 - 1


class IdealError(ValueError):
    """Raised when an operation's precondition on an ideal is violated."""


class ExponentOverflowError(OverflowError):
    """An exponent left the unsigned 64-bit range."""


def _check_exponent(e: int) -> int:
    if e > MAX_EXPONENT:
        raise ExponentOverflowError(f"exponent {e} exceeds 2^64 - 1")
    return e


class Monomial(tuple):
    """The monomial x^xexp * y^yexp."""

    __slots__ = ()

    def __new__(cls, xexp: int, yexp: int) -> "Monomial":
        xexp, yexp = int(xexp), int(yexp)
        if xexp < 0 or yexp < 0:
            raise ValueError(f"exponents must be nonnegative, got ({xexp}, {yexp})")
        _check_exponent(xexp)
        _check_exponent(yexp)
        return tuple.__new__(cls, (xexp, yexp))

    xexp = property(itemgetter(0))
    yexp = property(itemgetter(1))

    @property
    def degree(self) -> int:
        return self[0] + self[1]

    def __mul__(self, other):  # type: ignore[override]
        if not isinstance(other, Monomial):
            return NotImplemented
        return product(self, other)

    def __repr__(self) -> str:
        return f"Monomial({self[0]}, {self[1]})"

    def __str__(self) -> str:
        parts = []
        for var, e in (("x", self[0]), ("y", self[1])):
            if e == 1:
                parts.append(var)
            elif e > 1:
                parts.append(f"{var}^{e}")
        return " ".join(parts) or "1"


def _mono(xexp: int, yexp: int) -> Monomial:
    # trusted constructor: caller guarantees 0 <= exponents
    return tuple.__new__(Monomial, (xexp, yexp))


class PairIndex(NamedTuple):
    """A 1-based index pair (i, j) with i <= j, naming the product u_i u_j."""

    i: int
    j: int

    def validate(self, m: int) -> "PairIndex":
        if not 1 <= self.i <= self.j <= m:
            raise IndexError(f"pair {tuple(self)} is not in V for m={m}")
        return self

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


def pairs(m: int) -> Iterator[PairIndex]:
    """All of V = {(i, j) : 1 <= i <= j <= m}, in lexicographic order."""
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            yield PairIndex(i, j)


def divides(u: Sequence[int], v: Sequence[int]) -> bool:
    return u[0] <= v[0] and u[1] <= v[1]


def product(u: Sequence[int], v: Sequence[int]) -> Monomial:
    return _mono(_check_exponent(u[0] + v[0]), _check_exponent(u[1] + v[1]))


def _minimal_sorted(gens: Iterable[Sequence[int]]) -> Tuple[Monomial, ...]:
    # Sorted by (x asc, y asc), every kept monomial has x <= the current
    # one, so the current one is redundant iff some kept y is <= its y.
    # Equal monomials fail the strict test.  Reversed at the end.
    ordered = sorted(g if type(g) is Monomial else Monomial(*g) for g in gens)
    kept = []
    ymin = None
    for g in ordered:
        if ymin is None or g[1] < ymin:
            kept.append(g)
            ymin = g[1]
    kept.reverse()
    return tuple(kept)


def minimalize(gens: Iterable[Sequence[int]]) -> "StaircaseIdeal":
    """Return the ideal generated by ``gens``, reduced to its minimal generators.

    Raises IdealError on an empty generating set.
    """
    return StaircaseIdeal(gens)


class StaircaseIdeal:
    """A monomial ideal of K[x, y], held as its minimal generators.

    Generators are kept in canonical staircase order: x-exponents strictly
    decreasing, y-exponents strictly increasing.  Any iterable of exponent
    pairs is accepted and reduced; indexing is 0-based over ``gens``.
    """

    __slots__ = ("gens", "_hash")

    def __init__(self, gens: Iterable[Sequence[int]]):
        kept = _minimal_sorted(gens)
        if not kept:
            raise IdealError("empty generating set")
        self.gens: Tuple[Monomial, ...] = kept
        self._hash = None

    @classmethod
    def _trusted(cls, gens: Tuple[Monomial, ...]) -> "StaircaseIdeal":
        obj = cls.__new__(cls)
        obj.gens = gens
        obj._hash = None
        return obj

    @classmethod
    def from_exponents(cls, xexps: Sequence[int], yexps: Sequence[int]) -> "StaircaseIdeal":
        if len(xexps) != len(yexps):
            raise IdealError("exponent sequences differ in length")
        return cls(zip(xexps, yexps))

    @property
    def mu(self) -> int:
        return len(self.gens)

    @property
    def xexps(self) -> Tuple[int, ...]:
        return tuple(g[0] for g in self.gens)

    @property
    def yexps(self) -> Tuple[int, ...]:
        return tuple(g[1] for g in self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.gens)

    def __getitem__(self, k):
        return self.gens[k]

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StaircaseIdeal):
            return NotImplemented
        return self.gens == other.gens

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.gens)
        return self._hash

    def __mul__(self, other: "StaircaseIdeal") -> "StaircaseIdeal":
        if not isinstance(other, StaircaseIdeal):
            return NotImplemented
        return ideal_product(self, other)

    def __pow__(self, k: int) -> "StaircaseIdeal":
        return ideal_power(self, k)

    def to_list(self) -> list:
        return [[g[0], g[1]] for g in self.gens]

    def __repr__(self) -> str:
        return f"StaircaseIdeal({self.to_list()})"

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def ideal_product(I: StaircaseIdeal, J: StaircaseIdeal) -> StaircaseIdeal:
    return StaircaseIdeal._trusted(
        _minimal_sorted(product(u, v) for u in I.gens for v in J.gens)
    )


def ideal_power(I: StaircaseIdeal, k: int) -> StaircaseIdeal:
    """I^k by repeated multiplication, left to right."""
    if k < 1:
        raise IdealError(f"power must be >= 1, got {k}")
    return reduce(ideal_product, [I] * (k - 1), I)


def mu(I: StaircaseIdeal) -> int:
    return len(I.gens)


def contains(I: StaircaseIdeal, v: Sequence[int]) -> bool:
    return any(g[0] <= v[0] and g[1] <= v[1] for g in I.gens)


def normalize(I: StaircaseIdeal) -> StaircaseIdeal:
    """Divide out the greatest common monomial factor of the generators."""
    dx = I.gens[-1][0]
    dy = I.gens[0][1]
    if dx == 0 and dy == 0:
        return I
    return StaircaseIdeal._trusted(tuple(_mono(g[0] - dx, g[1] - dy) for g in I.gens))


def pair_product(I: StaircaseIdeal, p: Tuple[int, int]) -> Monomial:
    """u_i * u_j for the 1-based pair p = (i, j)."""
    p = PairIndex(*p).validate(len(I.gens))
    return product(I.gens[p.i - 1], I.gens[p.j - 1])
