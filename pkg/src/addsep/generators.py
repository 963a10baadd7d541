"""Seeded point-set families: exhaustive enumerations, random sets, and the
standard constructions (axes union, grids, two-point products)."""
from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Iterator, Sequence

from addsep import _backend
from addsep.matrix import FunctionTable, PointSet, build_matrix


def exhaustive_sets(n: int, q: int, kmax: int) -> Iterator[PointSet]:
    """Every subset of ``{0..q-1}^n`` with 1 <= k <= kmax, in lexicographic order."""
    cube = list(itertools.product(range(q), repeat=n))
    for k in range(1, kmax + 1):
        for combo in itertools.combinations(cube, k):
            yield PointSet.from_points(combo, n)


def axes_union(sizes: Sequence[int]) -> PointSet:
    """``(X_1 x {0} x ... x {0}) u ... u ({0} x ... x X_n)`` with ``X_i = {0..m_i-1}``.

    The base point is shared by all n blocks, so the set has
    ``m_1 + ... + m_n - (n - 1)`` points.
    """
    n = len(sizes)
    base = (0,) * n
    pts = [base]
    for i, m in enumerate(sizes):
        for v in range(1, m):
            p = list(base)
            p[i] = v
            pts.append(tuple(p))
    return PointSet.from_points(pts, n)


def grid(*sides: int) -> PointSet:
    return PointSet.from_points(itertools.product(*(range(a) for a in sides)), len(sides))


def random_point_set(rng: random.Random, n: int, sizes: Sequence[int], k: int) -> PointSet:
    """``k`` distinct points drawn uniformly from ``prod(range(m_i))``."""
    total = 1
    for m in sizes:
        total *= m
    k = min(k, total)
    chosen: dict[tuple, None] = {}
    while len(chosen) < k:
        chosen.setdefault(tuple(rng.randrange(m) for m in sizes), None)
    return PointSet.from_points(chosen, n)


def random_good_set(rng: random.Random, n: int, sizes: Sequence[int], k: int, attempts: int = 200) -> PointSet:
    """Grow a set point by point, keeping only points whose row is independent.

    Stops at ``k`` points or after ``attempts`` rejected candidates.
    """
    pts: list[tuple] = []
    seen: set[tuple] = set()
    misses = 0
    while len(pts) < k and misses < attempts:
        p = tuple(rng.randrange(m) for m in sizes)
        if p in seen:
            misses += 1
            continue
        trial = PointSet.from_points(pts + [p], n)
        if _backend.bareiss_rank(build_matrix(trial).dense()) == len(pts) + 1:
            pts.append(p)
        else:
            misses += 1
        seen.add(p)
    return PointSet.from_points(pts, n)


def random_function(rng: random.Random, s: PointSet, num: int = 50, den: int = 12) -> FunctionTable:
    return FunctionTable.from_vector(
        s, [Fraction(rng.randint(-num, num), rng.randint(1, den)) for _ in range(s.k)]
    )
