"""Pairs of generators and the minimal generators of I^2 they map to.

Index pairs are 1-based and range over V = {(i, j) : 1 <= i <= j <= m},
ordered componentwise.  A monomial of I^2 may be the product of several
pairs; its canonical representative is the lexicographically least one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple

from .core import (
    Monomial,
    PairIndex,
    StaircaseIdeal,
    divides,
    ideal_product,
    pair_product,
    pairs,
)

__all__ = [
    "DivSet",
    "GammaValue",
    "comparable",
    "noncomparable",
    "nested",
    "canonical_pairs",
    "div_set",
    "gamma_map",
    "gamma_table",
    "square_generator_pairs",
]


@dataclass(frozen=True)
class DivSet:
    target: PairIndex
    members: FrozenSet[PairIndex]

    def __contains__(self, p) -> bool:
        return PairIndex(*p) in self.members

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class GammaValue:
    source: PairIndex
    image: PairIndex
    image_monomial: Monomial


def comparable(v, w) -> bool:
    return (v[0] <= w[0] and v[1] <= w[1]) or (w[0] <= v[0] and w[1] <= v[1])


def noncomparable(v, w) -> bool:
    """True iff neither v <= w nor w <= v componentwise."""
    return not comparable(v, w)


def nested(v, w) -> bool:
    """Strict nesting of the integer intervals spanned by v and w, either way round."""
    (a, b), (c, d) = sorted(v), sorted(w)
    return a < c <= d < b or c < a <= b < d


def canonical_pairs(I: StaircaseIdeal) -> Dict[Monomial, PairIndex]:
    """Map each product u_i u_j to its lexicographically least pair."""
    reps: Dict[Monomial, PairIndex] = {}
    for p in pairs(len(I)):
        reps.setdefault(pair_product(I, p), p)
    return reps


def div_set(I: StaircaseIdeal, p) -> DivSet:
    """All (r, s) in V with u_r u_s dividing u_i u_j, found by scanning V."""
    p = PairIndex(*p).validate(len(I))
    g = I.gens
    tx = g[p.i - 1][0] + g[p.j - 1][0]
    ty = g[p.i - 1][1] + g[p.j - 1][1]
    members = frozenset(
        q for q in pairs(len(g))
        if g[q.i - 1][0] + g[q.j - 1][0] <= tx and g[q.i - 1][1] + g[q.j - 1][1] <= ty
    )
    return DivSet(p, members)


def _square_generators(I: StaircaseIdeal) -> List[Tuple[Monomial, PairIndex]]:
    reps = canonical_pairs(I)
    return [(g, reps[g]) for g in ideal_product(I, I).gens]


def square_generator_pairs(I: StaircaseIdeal) -> List[PairIndex]:
    """Canonical pair of every minimal generator of I^2, in staircase order."""
    return [p for _, p in _square_generators(I)]


def _gamma(square, p, target) -> GammaValue:
    image_monomial, image = min(
        ((g, q) for g, q in square if divides(g, target)),
        key=lambda gq: gq[1],
    )
    return GammaValue(p, image, image_monomial)


def gamma_map(I: StaircaseIdeal, p) -> GammaValue:
    """The minimal generator of I^2 dividing u_i u_j with lexicographically least pair."""
    p = PairIndex(*p).validate(len(I))
    return _gamma(_square_generators(I), p, pair_product(I, p))


def gamma_table(I: StaircaseIdeal) -> Dict[PairIndex, GammaValue]:
    """gamma_map for every pair of V, sharing one computation of I^2."""
    square = _square_generators(I)
    return {p: _gamma(square, p, pair_product(I, p)) for p in pairs(len(I))}
