"""Independent brute-force checks used by the test suite and ``selftest``.

Nothing here shares code with the elimination kernels: ranks use textbook
Gaussian elimination over :class:`fractions.Fraction`, and loop existence is
decided by enumerating small integer coefficient vectors directly against
the per-axis indicator sums.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

import numpy as np


def naive_rank(rows) -> int:
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return 0
    nr, nc = len(a), len(a[0])
    r = 0
    for c in range(nc):
        p = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        for i in range(nr):
            if i != r and a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == nr:
            break
    return r


@lru_cache(maxsize=8)
def _grid(k: int, bound: int) -> np.ndarray:
    vals = np.arange(-bound, bound + 1, dtype=np.int16)
    g = np.stack(np.meshgrid(*([vals] * k), indexing="ij"), axis=-1).reshape(-1, k)
    # keep one representative per +-pair: first nonzero entry positive
    nz = g != 0
    first = np.argmax(nz, axis=1)
    lead = g[np.arange(len(g)), first]
    return np.ascontiguousarray(g[lead > 0])


def loop_witnesses(points, bound: int = 6) -> np.ndarray:
    """All nonzero vectors in ``[-bound, bound]^k`` (first nonzero > 0)
    whose signed indicator sums vanish on every axis and symbol.

    Zero entries are allowed, so a witness on any subset shows up too.
    """
    k = len(points)
    n = len(points[0])
    cand = _grid(k, bound)
    for i in range(n):
        symbols = {p[i] for p in points}
        for sym in symbols:
            idx = [j for j, p in enumerate(points) if p[i] == sym]
            if len(cand) == 0:
                return cand
            cand = cand[cand[:, idx].sum(axis=1) == 0]
    return cand


def has_loop_brute_force(points, bound: int = 6) -> bool:
    return len(loop_witnesses(points, bound)) > 0


def is_minimal_brute_force(points, coefficients, bound: int = 6) -> bool:
    """Signed sums vanish and no proper subset carries a witness."""
    n = len(points[0])
    for i in range(n):
        acc: dict = {}
        for p, c in zip(points, coefficients):
            acc[p[i]] = acc.get(p[i], 0) + c
        if any(acc.values()):
            return False
    k = len(points)
    for size in range(1, k):
        for sub in itertools.combinations(points, size):
            if has_loop_brute_force(list(sub), bound):
                return False
    return True
