"""Exhaustive searches over bounded spaces of normalized staircases.

The space for (m, B) holds every ideal with generators x^{a_i} y^{b_i},
B >= a_1 > ... > a_m = 0 and 0 = b_1 < ... < b_m <= B.  It has
C(B, m-1)^2 members.  Work is split by a-sequence; each slice is folded
to (min mu(I^2), lexicographically least witness) by a compiled kernel and
the slices are merged deterministically.
"""

from __future__ import annotations

import itertools
import logging
import math
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from . import _kernels
from .core import IdealError, StaircaseIdeal, ideal_product

__all__ = [
    "SearchSpace",
    "SearchOutcome",
    "ScanRow",
    "SearchError",
    "default_workers",
    "min_mu_square",
    "verify_ge_nine",
    "single_degree_staircases",
    "single_degree_bound_check",
    "two_degree_scan",
]

log = logging.getLogger(__name__)

SPOT_CHECK_EVERY = 100


class SearchError(IdealError):
    pass


def default_workers() -> int:
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:  # pragma: no cover - non-Linux
        return os.cpu_count() or 1


@dataclass(frozen=True)
class SearchSpace:
    m: int
    bound: int

    def __post_init__(self):
        if self.m < 1:
            raise SearchError(f"m must be >= 1, got {self.m}")
        if self.bound < self.m - 1:
            raise SearchError(f"bound too small for m: bound={self.bound} < m-1={self.m - 1}")

    @property
    def size(self) -> int:
        return math.comb(self.bound, self.m - 1) ** 2

    def a_rows(self) -> np.ndarray:
        """All a-sequences, one per row, a_1 first."""
        m = self.m
        combos = itertools.combinations(range(1, self.bound + 1), m - 1)
        rows = [tuple(reversed(c)) + (0,) for c in combos]
        return np.array(rows, dtype=np.int64).reshape(len(rows), m)

    def __contains__(self, I: StaircaseIdeal) -> bool:
        return (
            len(I) == self.m
            and I.xexps[-1] == 0
            and I.yexps[0] == 0
            and I.xexps[0] <= self.bound
            and I.yexps[-1] <= self.bound
        )

    def __iter__(self):
        """Every ideal of the space, in lexicographic order of (a, b); slow."""
        combos = list(itertools.combinations(range(1, self.bound + 1), self.m - 1))
        a_seqs = sorted(tuple(reversed(c)) + (0,) for c in combos)
        for a in a_seqs:
            for c in combos:
                yield StaircaseIdeal.from_exponents(a, (0,) + c)


@dataclass(frozen=True)
class SearchOutcome:
    m: int
    bound: int
    minimum_mu_square: Optional[int]
    witness: Optional[StaircaseIdeal]
    candidates_examined: int
    candidates_matched: int = 0
    spot_checks: int = 0
    gap: Optional[int] = None
    passed: Optional[bool] = None
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "bound": self.bound,
            "gap": self.gap,
            "minimum_mu_square": self.minimum_mu_square,
            "witness": None if self.witness is None else self.witness.to_list(),
            "candidates_examined": self.candidates_examined,
            "candidates_matched": self.candidates_matched,
            "spot_checks": self.spot_checks,
            "passed": self.passed,
            "note": self.note,
        }


def _fold_chunk(args) -> Tuple[int, Tuple[int, ...], int, int, int, int]:
    rows, offset, bound, gap, symmetric, spot_every = args
    best, key, examined, matched, spots, bad = _kernels.fold_slices(
        rows, offset, bound, gap, symmetric, spot_every
    )
    return int(best), tuple(int(k) for k in key), int(examined), int(matched), int(spots), int(bad)


def _merge(parts: Iterable[Tuple]) -> Tuple[int, Tuple[int, ...], int, int, int, int]:
    best, best_key = -1, ()
    examined = matched = spots = bad = 0
    for b, key, e, mt, s, x in parts:
        examined += e
        matched += mt
        spots += s
        bad += x
        if b >= 0 and (best < 0 or (b, key) < (best, best_key)):
            best, best_key = b, key
    return best, best_key, examined, matched, spots, bad


def _run(space: SearchSpace, gap: int, workers: Optional[int], symmetric: bool):
    rows = space.a_rows()
    workers = default_workers() if workers is None else workers
    if workers < 1:
        raise SearchError("workers must be >= 1")
    if workers == 1 or len(rows) < 2:
        parts = [_fold_chunk((rows, 0, space.bound, gap, symmetric, SPOT_CHECK_EVERY))]
    else:
        nchunks = min(len(rows), 4 * workers)
        bounds = np.linspace(0, len(rows), nchunks + 1).astype(int)
        jobs = [
            (rows[lo:hi], int(lo), space.bound, gap, symmetric, SPOT_CHECK_EVERY)
            for lo, hi in zip(bounds[:-1], bounds[1:])
            if hi > lo
        ]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_fold_chunk, jobs))
    best, key, examined, matched, spots, bad = _merge(parts)
    if bad:
        raise RuntimeError(f"fast and pairwise minimal-generator counts disagreed on {bad} candidates")
    if examined != space.size:
        raise RuntimeError(f"enumerated {examined} candidates, expected {space.size}")
    m = space.m
    witness = None
    if best >= 0:
        witness = StaircaseIdeal.from_exponents(key[:m], key[m:])
        if len(ideal_product(witness, witness)) != best:
            raise RuntimeError("witness does not attain the reported minimum")
    return (None if best < 0 else best), witness, examined, matched, spots


def min_mu_square(
    m: int, bound: int, workers: Optional[int] = 1, symmetric: bool = True
) -> SearchOutcome:
    """Minimum of mu(I^2) over the normalized space with m generators and exponents <= bound.

    The witness is the minimizer whose exponent vector (a_1..a_m, b_1..b_m)
    is lexicographically least, so the result does not depend on
    ``workers``.  ``symmetric=False`` disables x<->y pruning.
    """
    space = SearchSpace(m, bound)
    best, witness, examined, matched, spots = _run(space, 0, workers, symmetric)
    log.info("m=%d bound=%d: min mu(I^2)=%s over %d candidates", m, bound, best, examined)
    return SearchOutcome(m, bound, best, witness, examined, matched, spots)


def verify_ge_nine(bound: int, workers: Optional[int] = 1) -> SearchOutcome:
    """Check mu(I^2) >= 9 for every 6-generator ideal in the space of the given bound.

    This is a bounded check, not a proof.
    """
    if bound < 5:
        raise SearchError("bound must be >= 5")
    out = min_mu_square(6, bound, workers)
    passed = out.minimum_mu_square >= 9
    note = (
        f"verified within exponent bound B={bound}: mu(I^2) >= 9 for all "
        f"{out.candidates_examined} ideals with mu(I)=6"
        if passed
        else f"FAILED within exponent bound B={bound}: found mu(I^2)={out.minimum_mu_square}"
    )
    return SearchOutcome(
        out.m, out.bound, out.minimum_mu_square, out.witness, out.candidates_examined,
        out.candidates_matched, out.spot_checks, None, passed, note,
    )


def single_degree_staircases(m: int, degree: int) -> Iterable[StaircaseIdeal]:
    """Every normalized m-generator ideal with all generators of the given degree.

    Normalized means u_1 = x^degree and u_m = y^degree; the m-2 middle
    x-exponents range over subsets of 1..degree-1.
    """
    _check_single_degree(m, degree)
    for mid in itertools.combinations(range(degree - 1, 0, -1), m - 2):
        a = (degree,) + mid + (0,)
        yield StaircaseIdeal([(e, degree - e) for e in a])


def _check_single_degree(m: int, degree: int) -> None:
    if m < 2:
        raise SearchError("single-degree check needs m >= 2")
    if degree < m - 1:
        raise SearchError(f"no {m}-generator single-degree staircase of degree {degree}")


def single_degree_bound_check(m: int, degree: int, trials: int, seed: int = 0) -> bool:
    """True iff every examined single-degree ideal has mu(I^2) >= 2m - 1.

    Exhaustive when there are at most ``trials`` candidates, otherwise
    ``trials`` uniform samples drawn with the given seed.
    """
    _check_single_degree(m, degree)
    if trials < 1:
        raise SearchError("trials must be >= 1")
    total = math.comb(degree - 1, m - 2)
    if total <= trials:
        ideals = single_degree_staircases(m, degree)
    else:
        rng = random.Random(seed)

        def sample():
            for _ in range(trials):
                mid = sorted(rng.sample(range(1, degree), m - 2), reverse=True)
                a = [degree] + mid + [0]
                yield StaircaseIdeal([(e, degree - e) for e in a])

        ideals = sample()
    return all(len(ideal_product(I, I)) >= 2 * m - 1 for I in ideals)


@dataclass(frozen=True)
class ScanRow:
    m: int
    gap: int
    bound: int
    min_mu_square: Optional[int]
    witness: Optional[StaircaseIdeal]
    matched: int


def two_degree_scan(
    gap: int, m_range: Sequence[int], bound: int, workers: Optional[int] = 1
) -> List[ScanRow]:
    """Min mu(I^2) over ideals generated in exactly two degrees d1 < d2 = d1 + gap.

    ``min_mu_square`` is None when no such ideal lies in the space.
    """
    if gap < 1:
        raise SearchError("gap must be >= 1 (gap 0 is the single-degree case)")
    rows = []
    for m in m_range:
        space = SearchSpace(m, bound)
        best, witness, _, matched, _ = _run(space, gap, workers, True)
        rows.append(ScanRow(m, gap, bound, best, witness, matched))
    return rows
