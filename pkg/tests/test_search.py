import math

import pytest

from oracles import brute_min_mu_square, square_pairwise
from tinysquares import StaircaseIdeal, degree_profile, ideal_product, tiny_square_ideal
from tinysquares.search import (
    SearchError,
    SearchSpace,
    min_mu_square,
    single_degree_bound_check,
    single_degree_staircases,
    two_degree_scan,
    verify_ge_nine,
)

# (m, B*, minimum, witness a, witness b); B* is the least bound attaining the
# minimum, found by brute enumeration in tests/oracles.py
TABLE = [
    (1, 0, 1, (0,), (0,)),
    (2, 1, 3, (1, 0), (0, 1)),
    (3, 2, 5, (2, 1, 0), (0, 1, 2)),
    (4, 3, 7, (3, 2, 1, 0), (0, 1, 2, 3)),
    (5, 6, 8, (6, 4, 3, 2, 0), (0, 2, 4, 5, 6)),
]


def test_space_size_and_iteration():
    s = SearchSpace(3, 5)
    ideals = list(s)
    assert len(ideals) == s.size == math.comb(5, 2) ** 2
    assert len(set(ideals)) == len(ideals)
    assert all(I in s for I in ideals)
    assert len(s.a_rows()) == math.comb(5, 2)


def test_bound_too_small():
    with pytest.raises(SearchError, match="bound too small"):
        min_mu_square(5, 2)
    with pytest.raises(SearchError):
        SearchSpace(0, 4)


@pytest.mark.parametrize("m, bound, minimum, a, b", TABLE)
def test_table_at_sufficient_bound(m, bound, minimum, a, b):
    out = min_mu_square(m, bound)
    assert out.minimum_mu_square == minimum
    assert out.witness == StaircaseIdeal.from_exponents(a, b)
    assert out.witness in SearchSpace(m, bound)
    assert len(ideal_product(out.witness, out.witness)) == minimum
    assert out.candidates_examined == math.comb(bound, m - 1) ** 2


def test_m5_below_sufficient_bound_gives_nine():
    assert min_mu_square(5, 5).minimum_mu_square == 9


def test_m2_small_examples():
    out = min_mu_square(2, 2)
    assert out.minimum_mu_square == 3
    assert out.witness.to_list() == [[1, 0], [0, 1]]
    assert min_mu_square(1, 7).minimum_mu_square == 1


@pytest.mark.parametrize("m, bound", [(2, 4), (3, 5), (4, 6), (5, 7), (6, 7)])
def test_kernel_matches_brute_force(m, bound):
    best, (a, b), examined = brute_min_mu_square(m, bound)
    for symmetric in (True, False):
        out = min_mu_square(m, bound, symmetric=symmetric)
        assert out.minimum_mu_square == best
        assert out.witness == StaircaseIdeal.from_exponents(a, b)
        assert out.candidates_examined == examined


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_exhaustive_oracle_consistency(m):
    # every candidate at m <= 4, bound <= 6: library square vs pairwise oracle
    for I in SearchSpace(m, 6):
        assert [tuple(g) for g in ideal_product(I, I)] == square_pairwise(list(I))


def test_spot_checks_happen():
    out = min_mu_square(5, 9)
    assert out.spot_checks > 0


def test_monotone_refinement():
    for m in (3, 4, 5):
        values = [min_mu_square(m, B).minimum_mu_square for B in range(m - 1, 10)]
        assert values == sorted(values, reverse=True)


def test_determinism_across_workers():
    one = min_mu_square(5, 9, workers=1)
    three = min_mu_square(5, 9, workers=3)
    assert one == three


def test_verify_ge_nine():
    for bound in (5, 8, 12):
        out = verify_ge_nine(bound)
        assert out.passed
        assert out.minimum_mu_square >= 9
        assert out.candidates_examined == math.comb(bound, 5) ** 2
        assert f"verified within exponent bound B={bound}" in out.note
    assert verify_ge_nine(5).candidates_examined == 1
    with pytest.raises(SearchError):
        verify_ge_nine(4)


def test_single_degree():
    assert single_degree_bound_check(3, 2, trials=10)
    assert [I.to_list() for I in single_degree_staircases(3, 2)] == [[[2, 0], [1, 1], [0, 2]]]
    assert len(list(single_degree_staircases(4, 6))) == 10
    assert single_degree_bound_check(4, 6, trials=100)
    assert single_degree_bound_check(6, 12, trials=1000)
    assert single_degree_bound_check(7, 30, trials=200, seed=3)
    with pytest.raises(SearchError):
        single_degree_bound_check(5, 3, trials=10)


def test_single_degree_bound_is_attained():
    # (x, y)^(m-1) squared has exactly 2m - 1 generators
    for m in range(2, 8):
        I = next(iter(single_degree_staircases(m, m - 1)))
        assert len(ideal_product(I, I)) == 2 * m - 1


def test_two_degree_scan_rejects_gap_zero():
    with pytest.raises(SearchError):
        two_degree_scan(0, range(3, 5), 8)


def test_two_degree_scan_fixtures():
    # frozen from brute_min_mu_square(m, bound, gap=1)
    (row,) = two_degree_scan(1, [3], 6)
    assert row.min_mu_square == 5
    assert row.witness.to_list() == [[2, 0], [1, 1], [0, 3]]
    rows = two_degree_scan(1, range(3, 6), 8)
    assert [(r.m, r.min_mu_square) for r in rows] == [(3, 5), (4, 7), (5, 8)]
    assert rows[2].witness == StaircaseIdeal.from_exponents((6, 4, 3, 2, 0), (0, 2, 4, 5, 6))


@pytest.mark.parametrize("m, bound", [(3, 6), (4, 7)])
def test_two_degree_scan_matches_brute_force(m, bound):
    for gap in (1, 2, 3):
        best, wit, _ = brute_min_mu_square(m, bound, gap=gap)
        (row,) = two_degree_scan(gap, [m], bound)
        assert row.min_mu_square == best
        if best is not None:
            assert row.witness == StaircaseIdeal.from_exponents(*wit)


def test_two_degree_scan_none():
    (row,) = two_degree_scan(1, [1], 3)
    assert row.min_mu_square is None and row.witness is None


def test_two_degree_scan_contains_tiny_square():
    m = 5
    gap = 2 * m + 3
    assert {d for d, _ in degree_profile(tiny_square_ideal(m))} == {5 * m, 7 * m + 3}
    (row,) = two_degree_scan(gap, [m], 25)
    assert row.min_mu_square <= 9
