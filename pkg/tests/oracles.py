"""
Independent reference computations used by the tests.

Nothing here imports the package's numeric code.
"""

from functools import lru_cache
from itertools import combinations

import mpmath

_DPS = 30


def li2_series(x):
    """
    Li2(x) = sum x^k / k^2 summed directly at 30 digits.

    Stops once the geometric tail bound x^(K+1) / ((K+1)^2 (1-x)) is below
    1e-28. At x = 1 the series is summed to N terms and the tail
    sum_{k>N} 1/k^2 is added through its Euler-Maclaurin expansion.
    """
    with mpmath.workdps(_DPS):
        x = mpmath.mpf(x)
        if x == 0:
            return mpmath.mpf(0)
        if x == 1:
            N = 1000
            head = mpmath.fsum(mpmath.mpf(1) / (k * k) for k in range(1, N + 1))
            N = mpmath.mpf(N)
            # sum_{k>N} k^-2 = 1/N - 1/(2N^2) + 1/(6N^3) - 1/(30N^5) + 1/(42N^7) - ...
            tail = 1 / N - 1 / (2 * N**2) + 1 / (6 * N**3) - 1 / (30 * N**5) + 1 / (42 * N**7) - 1 / (30 * N**9)
            return head + tail
        total = mpmath.mpf(0)
        power = x
        k = 1
        eps = mpmath.mpf(10) ** -28
        while True:
            total += power / (k * k)
            if power * x / ((k + 1) ** 2 * (1 - x)) < eps:
                return total
            k += 1
            power *= x


def rogers_oracle(x):
    """Rogers L at 30 digits via mpmath's polylog, which converges at every x in [0, 1]."""
    with mpmath.workdps(_DPS):
        x = mpmath.mpf(x)
        if x == 0:
            return mpmath.mpf(0)
        if x == 1:
            return mpmath.pi ** 2 / 6
        return mpmath.polylog(2, x) + mpmath.log(x) * mpmath.log(1 - x) / 2


GRID = [i / 1000 for i in range(1001)]


@lru_cache(maxsize=None)
def li2_grid():
    """Oracle values of Li2 on the 1001-point grid 0, 0.001, ..., 1."""
    return tuple(li2_series(x) for x in GRID)


def exact_cross_ratio(a, b, c, d):
    """[a b | c d] for finite Fractions."""
    return (a - c) * (b - d) / ((a - d) * (b - c))


def exact_dihedral(z, i, j):
    """u_{i,j} = [i, i+1 | j+1, j] on a finite configuration of Fractions (1-based)."""
    n = len(z)
    p = lambda t: z[(t - 1) % n]
    return exact_cross_ratio(p(i), p(i + 1), p(j + 1), p(j))


def strictly_between(a, b, n):
    """Vertices met walking forward from a to b, endpoints excluded."""
    out = []
    v = a % n + 1
    while v != b:
        out.append(v)
        v = v % n + 1
    return out


def brute_chords(n):
    return sorted(
        (i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
        if len({i, j, i % n + 1, j % n + 1}) == 4
    )


def brute_crosses(c1, c2, n):
    """Interleaving read off the cyclic-interval condition, both labelings of each chord."""
    (a, c), (k, l) = c1, c2
    for a_, c_ in ((a, c), (c, a)):
        for k_, l_ in ((k, l), (l, k)):
            if k_ in strictly_between(a_, c_, n) and l_ in strictly_between(c_, a_, n):
                return True
    return False


def brute_blocks(n, J):
    """Blocks of the polygon with z_s (s in J) forgotten: block of s-1 absorbs s."""
    J = set(J)
    out = []
    for v in range(1, n + 1):
        if v in J:
            continue
        b = [v]
        w = v % n + 1
        while w in J:
            b.append(w)
            w = w % n + 1
        out.append(tuple(b))
    return out


def brute_symbols(n, J):
    """Product-symbols (frozensets of (i, j) pairs, i < j) of the block chords."""
    B = brute_blocks(n, J)
    m = len(B)
    out = []
    for s in range(m):
        for t in range(s + 2, m):
            if s == 0 and t == m - 1:
                continue
            out.append(frozenset(tuple(sorted((x, y))) for x in B[s] for y in B[t]))
    return out


def brute_inclusion_exclusion(n):
    """symbol -> sum_{J subset {1..n//2}} (-1)^|J| (occurrences in the polygon forgetting 2J)."""
    k = n // 2
    total = {}
    for l in range(k + 1):
        for J in combinations(range(1, k + 1), l):
            for sym in brute_symbols(n, [2 * j for j in J]):
                total[sym] = total.get(sym, 0) + (-1) ** l
    return total
