"""Links and linked components for n = 2 and n = 3.

A link is a sequence of distinct points in which consecutive points differ
in exactly one coordinate and the changing coordinate never repeats on two
consecutive steps. Two points are linked if some link joins them.

For components, plain single-coordinate-step connectivity is enough: a
shortest single-step path never changes the same coordinate twice in a row
(the two steps would collapse into one), so it is already a link. Unique
linkage, on the other hand, is checked against the literal definition.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from addsep.errors import PreconditionViolated, ResourceLimit, UnsupportedArity
from addsep.matrix import Point, PointSet

DEFAULT_MAX_PATHS = 10**6


class UnionFind:
    """Union by size with path halving over ``range(n)``."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, a: int) -> int:
        parent = self.parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


@dataclass(frozen=True)
class ComponentPartition:
    components: tuple[tuple[Point, ...], ...]
    uniquely_linked: tuple[bool, ...]

    def to_json(self) -> dict:
        return {
            "components": [
                {"points": [list(p) for p in comp], "uniquely_linked": u}
                for comp, u in zip(self.components, self.uniquely_linked)
            ]
        }


def _check_arity(n: int) -> None:
    if n not in (2, 3):
        raise UnsupportedArity(n)


def _neighbours(points: Sequence[Point]) -> list[list[tuple[int, int]]]:
    """For each point, the ``(other_index, changed_axis)`` single-step moves."""
    n = len(points[0])
    adj: list[list[tuple[int, int]]] = [[] for _ in points]
    for axis in range(n):
        groups: dict[tuple, list[int]] = defaultdict(list)
        for j, p in enumerate(points):
            groups[p[:axis] + p[axis + 1:]].append(j)
        for members in groups.values():
            for a in members:
                for b in members:
                    if a != b:
                        adj[a].append((b, axis))
    return adj


def component_indices(s: PointSet) -> list[list[int]]:
    """Classes of the link relation as sorted index lists, ordered by first index."""
    _check_arity(s.n)
    uf = UnionFind(s.k)
    for axis in range(s.n):
        first: dict[tuple, int] = {}
        for j, p in enumerate(s.points):
            key = p[:axis] + p[axis + 1:]
            if key in first:
                uf.union(first[key], j)
            else:
                first[key] = j
    classes: dict[int, list[int]] = {}
    for j in range(s.k):
        classes.setdefault(uf.find(j), []).append(j)
    return sorted(classes.values(), key=lambda c: c[0])


def linked_components(s: PointSet, max_paths: int = DEFAULT_MAX_PATHS) -> ComponentPartition:
    comps = [tuple(s.points[j] for j in c) for c in component_indices(s)]
    unique = tuple(is_uniquely_linked(s, c, max_paths) for c in comps)
    return ComponentPartition(tuple(comps), unique)


def _tree_rule(component: Sequence[Point]) -> bool:
    xs = {p[0] for p in component}
    ys = {p[1] for p in component}
    return len(component) == len(xs) + len(ys) - 1


def count_links(points: Sequence[Point], max_paths: int = DEFAULT_MAX_PATHS, stop_at: int | None = None):
    """Count links between every ordered pair of distinct points.

    Enumerates simple paths with the alternation constraint by depth-first
    search from every source. Returns a dict ``(i, j) -> count``. With
    ``stop_at`` set, returns early as soon as some pair reaches that count.
    Raises :class:`ResourceLimit` after ``max_paths`` path extensions.
    """
    adj = _neighbours(points)
    counts: dict[tuple[int, int], int] = defaultdict(int)
    budget = max_paths
    for src in range(len(points)):
        visited = [False] * len(points)
        visited[src] = True
        stack = [(src, -1, iter(adj[src]))]
        while stack:
            node, last_axis, it = stack[-1]
            for nxt, axis in it:
                if visited[nxt] or axis == last_axis:
                    continue
                budget -= 1
                if budget < 0:
                    raise ResourceLimit(f"more than {max_paths} partial links enumerated")
                counts[(src, nxt)] += 1
                if stop_at is not None and counts[(src, nxt)] >= stop_at:
                    return counts
                visited[nxt] = True
                stack.append((nxt, axis, iter(adj[nxt])))
                break
            else:
                stack.pop()
                visited[node] = False
    return counts


def is_uniquely_linked(s: PointSet, component: Sequence[Sequence], max_paths: int = DEFAULT_MAX_PATHS) -> bool:
    """Whether every pair in ``component`` is joined by exactly one link.

    For n = 2 this is the tree identity on the bipartite symbol graph (one
    edge per point). For n = 3 all links are enumerated.
    """
    _check_arity(s.n)
    comp = [s.points[s.index(p)] for p in component]
    if len(comp) <= 1:
        return True
    if s.n == 2:
        return _tree_rule(comp)
    counts = count_links(comp, max_paths, stop_at=2)
    k = len(comp)
    return all(counts.get((a, b), 0) == 1 for a in range(k) for b in range(k) if a != b)


def good_via_links(s: PointSet, max_paths: int = DEFAULT_MAX_PATHS) -> bool:
    """Goodness decided from link structure alone.

    For n = 2: every linked component is uniquely linked. For n = 3 only a
    single linked component is accepted (several raise
    :class:`PreconditionViolated`), and only ``False`` is conclusive there:
    the path 101-001-000-010-110 is uniquely linked but not good.
    """
    _check_arity(s.n)
    comps = component_indices(s)
    if s.n == 3 and len(comps) > 1:
        raise PreconditionViolated(
            f"n=3 set has {len(comps)} linked components; the componentwise criterion does not apply"
        )
    return all(is_uniquely_linked(s, [s.points[j] for j in c], max_paths) for c in comps)
