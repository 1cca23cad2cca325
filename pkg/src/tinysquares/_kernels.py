"""Compiled inner loops for the exhaustive search.

A candidate is a pair of int64 exponent rows (a, b) of length m with
a strictly decreasing to 0 and b strictly increasing from 0.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def square_products(a, b, m, px, py):
    n = 0
    for i in range(m):
        for j in range(i, m):
            px[n] = a[i] + a[j]
            py[n] = b[i] + b[j]
            n += 1
    return n


@njit(cache=True)
def count_minimal_sweep(px, py, n):
    # insertion sort by (x asc, y asc), then one pass tracking min y
    for s in range(1, n):
        x = px[s]
        y = py[s]
        t = s - 1
        while t >= 0 and (px[t] > x or (px[t] == x and py[t] > y)):
            px[t + 1] = px[t]
            py[t + 1] = py[t]
            t -= 1
        px[t + 1] = x
        py[t + 1] = y
    count = 0
    ymin = np.int64(-1)
    for s in range(n):
        if count == 0 or py[s] < ymin:
            count += 1
            ymin = py[s]
    return count


@njit(cache=True)
def count_minimal_pairwise(px, py, n):
    count = 0
    for s in range(n):
        minimal = True
        for t in range(n):
            if t == s:
                continue
            if px[t] <= px[s] and py[t] <= py[s]:
                # an equal copy only disqualifies the later occurrence
                if px[t] != px[s] or py[t] != py[s] or t < s:
                    minimal = False
                    break
        if minimal:
            count += 1
    return count


@njit(cache=True)
def _lex_less(u, v):
    for k in range(u.shape[0]):
        if u[k] != v[k]:
            return u[k] < v[k]
    return False


@njit(cache=True)
def _two_degrees(a, b, m, gap):
    lo = a[0] + b[0]
    hi = lo
    for i in range(1, m):
        d = a[i] + b[i]
        if d < lo:
            lo = d
        if d > hi:
            hi = d
    if hi - lo != gap:
        return False
    for i in range(m):
        d = a[i] + b[i]
        if d != lo and d != hi:
            return False
    return True


@njit(cache=True)
def fold_slices(a_rows, row_offset, bound, gap, symmetric, spot_every):
    """Fold min mu(I^2) over every b-sequence for each a-row.

    gap == 0 searches the whole space; gap > 0 keeps only ideals whose
    generator degrees take exactly two values differing by gap.  With
    ``symmetric`` only b-rows with b_m <= a_1 are visited and those with
    b_m < a_1 are counted twice (their x<->y mirror lies outside the slice).

    Spot checks re-count with the pairwise filter on roughly one candidate
    in ``spot_every``, chosen from the global row number so the selection
    does not depend on how rows are chunked.

    Returns (best_mu, best_key, examined, matched, spot_checked, mismatches);
    best_mu is -1 when no candidate matched.
    """
    nrows, m = a_rows.shape
    r = m - 1
    n_max = m * (m + 1) // 2
    px = np.empty(n_max, np.int64)
    py = np.empty(n_max, np.int64)
    qx = np.empty(n_max, np.int64)
    qy = np.empty(n_max, np.int64)
    b = np.zeros(m, np.int64)
    ib = np.empty(max(r, 1), np.int64)
    key = np.empty(2 * m, np.int64)
    alt = np.empty(2 * m, np.int64)
    best_key = np.zeros(2 * m, np.int64)
    best_mu = -1
    examined = 0
    matched = 0
    spot_checked = 0
    mismatches = 0
    for row in range(nrows):
        a = a_rows[row]
        top = a[0] if symmetric else bound
        if r > top:
            continue
        evaluated = (row_offset + row) * 7919
        for t in range(r):
            ib[t] = t + 1
        while True:
            for t in range(r):
                b[t + 1] = ib[t]
            weight = 1
            if symmetric and b[m - 1] < a[0]:
                weight = 2
            examined += weight
            if gap == 0 or _two_degrees(a, b, m, gap):
                matched += weight
                n = square_products(a, b, m, px, py)
                if spot_every > 0 and evaluated % spot_every == 0:
                    for k in range(n):
                        qx[k] = px[k]
                        qy[k] = py[k]
                    slow = count_minimal_pairwise(qx, qy, n)
                    spot_checked += 1
                else:
                    slow = -1
                mu = count_minimal_sweep(px, py, n)
                if slow >= 0 and slow != mu:
                    mismatches += 1
                evaluated += 1
                if best_mu < 0 or mu <= best_mu:
                    for k in range(m):
                        key[k] = a[k]
                        key[m + k] = b[k]
                    if symmetric:
                        for k in range(m):
                            alt[k] = b[m - 1 - k]
                            alt[m + k] = a[m - 1 - k]
                        if _lex_less(alt, key):
                            for k in range(2 * m):
                                key[k] = alt[k]
                    if best_mu < 0 or mu < best_mu or _lex_less(key, best_key):
                        best_mu = mu
                        for k in range(2 * m):
                            best_key[k] = key[k]
            # next r-combination of 1..top in lexicographic order
            p = r - 1
            while p >= 0 and ib[p] == top - r + 1 + p:
                p -= 1
            if p < 0:
                break
            ib[p] += 1
            for q in range(p + 1, r):
                ib[q] = ib[q - 1] + 1
    return best_mu, best_key, examined, matched, spot_checked, mismatches
