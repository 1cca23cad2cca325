"""Independent reference computations used to freeze expected values.

Nothing here touches the sweep-based minimalization or the compiled
search kernel.
"""

import itertools


def minimal_pairwise(gens):
    """Minimal elements under divisibility by the O(n^2) filter, in staircase order."""
    gens = set(map(tuple, gens))
    keep = [
        g for g in gens
        if not any(h != g and h[0] <= g[0] and h[1] <= g[1] for h in gens)
    ]
    return sorted(keep, key=lambda g: -g[0])


def products(A, B):
    return [(u[0] + v[0], u[1] + v[1]) for u in A for v in B]


def square_pairwise(gens):
    return minimal_pairwise(products(gens, gens))


def power_pairwise(gens, k):
    P = minimal_pairwise(gens)
    for _ in range(k - 1):
        P = minimal_pairwise(products(P, gens))
    return P


def space(m, bound):
    """Every normalized staircase, as (a, b), in lexicographic order of a + b."""
    combos = list(itertools.combinations(range(1, bound + 1), m - 1))
    a_seqs = sorted(tuple(reversed(c)) + (0,) for c in combos)
    b_seqs = [(0,) + c for c in combos]
    for a in a_seqs:
        for b in b_seqs:
            yield a, b


def two_degrees(a, b, gap):
    degs = {x + y for x, y in zip(a, b)}
    return len(degs) == 2 and max(degs) - min(degs) == gap


def brute_min_mu_square(m, bound, gap=None):
    """(minimum, lex-least witness (a, b), examined) by plain enumeration."""
    best = None
    witness = None
    examined = 0
    for a, b in space(m, bound):
        examined += 1
        if gap is not None and not two_degrees(a, b, gap):
            continue
        v = len(square_pairwise(list(zip(a, b))))
        if best is None or v < best:
            best, witness = v, (a, b)
    return best, witness, examined
