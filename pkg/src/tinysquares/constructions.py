"""Ideals with mu(I) = m and mu(I^2) = 9, and checks around them."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .core import (
    IdealError,
    Monomial,
    StaircaseIdeal,
    divides,
    ideal_product,
    product,
)

__all__ = [
    "ConditionReport",
    "J0",
    "tiny_square_ideal",
    "tiny_square_exponents",
    "check_conditions",
    "corner_subideal",
    "scale",
    "power_mu_profile",
    "degree_profile",
]

# (x^5, x^4 y, x y^4, y^5); the corner subideal of the family, up to scaling
J0 = StaircaseIdeal([(5, 0), (4, 1), (1, 4), (0, 5)])


def tiny_square_exponents(m: int) -> List[int]:
    """x-exponents (5m, 4m, 4m-1, ..., 3m+4, m, 0); the middle run has m-4 terms."""
    if m < 5:
        raise IdealError("construction requires m >= 5")
    return [5 * m] + list(range(4 * m, 3 * m + 3, -1)) + [m, 0]


def tiny_square_ideal(m: int) -> StaircaseIdeal:
    a = tiny_square_exponents(m)
    return StaircaseIdeal.from_exponents(a, a[::-1])


@dataclass
class ConditionReport:
    """Outcome of the five divisibility conditions that force mu(I^2) = 9.

    ``conditions[k]`` is True iff every divisibility in condition k holds.
    ``verified`` is computed from the actual square, independently of the
    flags.
    """

    m: int
    conditions: Dict[int, bool]
    predicted_generators: List[Monomial]
    square_mu: int
    verified: bool
    failures: List[str] = field(default_factory=list)

    @property
    def all_conditions(self) -> bool:
        return all(self.conditions.values())

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "conditions": {str(k): v for k, v in sorted(self.conditions.items())},
            "predicted_generators": [[g[0], g[1]] for g in self.predicted_generators],
            "square_mu": self.square_mu,
            "verified": self.verified,
            "failures": list(self.failures),
        }


def _condition_table(m: int):
    # (divisor pair, dividend pairs) per condition, 1-based
    return {
        1: ((1, m), [(2, m - 1)]),
        2: ((1, m - 1), [(2, 3), (m - 2, m - 2)]),
        3: ((2, 2), [(1, 3), (1, m - 2)]),
        4: ((2, m), [(3, m - 1), (m - 2, m - 1)]),
        5: ((m - 1, m - 1), [(3, m), (m - 2, m)]),
    }


def _predicted_pairs(m: int) -> List[Tuple[int, int]]:
    return [
        (1, 1), (1, 2), (2, 2),
        (1, m - 1), (1, m), (2, m),
        (m - 1, m - 1), (m - 1, m), (m, m),
    ]


def check_conditions(I: StaircaseIdeal) -> ConditionReport:
    m = len(I)
    if m < 5:
        raise IdealError(f"condition check requires mu(I) >= 5, got {m}")

    def f(i, j):
        return product(I[i - 1], I[j - 1])

    flags = {}
    failures = []
    for k, ((i, j), targets) in _condition_table(m).items():
        ok = True
        for r, s in targets:
            if not divides(f(i, j), f(r, s)):
                ok = False
                failures.append(f"({k}): u{i}u{j} does not divide u{r}u{s}")
        flags[k] = ok

    predicted = [f(i, j) for i, j in _predicted_pairs(m)]
    square = ideal_product(I, I)
    if len(set(predicted)) != len(predicted):
        failures.append("predicted generators contain duplicates")
    verified = (
        all(flags.values())
        and len(square) == 9
        and len(set(predicted)) == 9
        and set(square.gens) == set(predicted)
    )
    return ConditionReport(m, flags, predicted, len(square), verified, failures)


def corner_subideal(I: StaircaseIdeal) -> StaircaseIdeal:
    """(u_1, u_2, u_{m-1}, u_m)."""
    if len(I) < 4:
        raise IdealError(f"corner subideal requires mu(I) >= 4, got {len(I)}")
    return StaircaseIdeal._trusted(I.gens[:2] + I.gens[-2:])


def scale(I: StaircaseIdeal, factor: int) -> StaircaseIdeal:
    """Multiply every exponent by ``factor`` (x -> x^factor, y -> y^factor)."""
    if factor < 1:
        raise IdealError("scale factor must be positive")
    return StaircaseIdeal._trusted(tuple(Monomial(g[0] * factor, g[1] * factor) for g in I))


def power_mu_profile(I: StaircaseIdeal, kmax: int) -> List[Tuple[int, int]]:
    if kmax < 1:
        raise IdealError("kmax must be >= 1")
    profile = []
    P = I
    for k in range(1, kmax + 1):
        if k > 1:
            P = ideal_product(P, I)
        profile.append((k, len(P)))
    return profile


def degree_profile(I: StaircaseIdeal) -> List[Tuple[int, int]]:
    """Sorted (total degree, number of generators of that degree)."""
    return sorted(Counter(g.degree for g in I).items())
