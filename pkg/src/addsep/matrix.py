"""Point sets over opaque symbol alphabets and their incidence matrices.

A point set ``S`` lives in ``X_1 x ... x X_n``. Coordinates are compared only
for equality, so every symbol is stored as a string. The alphabet of axis
``i`` is the projection of ``S`` on that axis, listed in first-occurrence
order over the points; this fixes the column layout of the incidence matrix
and makes every downstream certificate reproducible.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Any, Callable, Iterable, Mapping, Sequence

from addsep.errors import (
    ArityMismatch,
    DomainError,
    DuplicatePoint,
    EmptySet,
    ParseError,
)

Point = tuple[str, ...]


def canonical_symbol(value: Any) -> str:
    """Map a JSON scalar to its symbol string.

    Strings pass through. Integers and integral floats become their decimal
    integer form (so ``1`` and ``1.0`` name the same symbol); other finite
    floats use the shortest round-trip repr.
    """
    if isinstance(value, str):
        return value
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"symbol must be a string or number, got {value!r}")
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ParseError(f"non-finite numeric symbol {value!r}")
        if value.is_integer():
            return str(int(value))
        return repr(value)
    return str(value)


@dataclass(frozen=True)
class PointSet:
    """A finite set of distinct n-tuples of symbols.

    Build one with :meth:`from_points`; the constructor checks that the
    stored alphabets are exactly the first-occurrence projections.
    """

    n: int
    points: tuple[Point, ...]
    alphabets: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ParseError(f"n must be >= 1, got {self.n}")
        if not self.points:
            raise EmptySet()
        seen: dict[Point, int] = {}
        for j, p in enumerate(self.points):
            if len(p) != self.n:
                raise ArityMismatch(j, self.n, len(p))
            if p in seen:
                raise DuplicatePoint(seen[p], j, p)
            seen[p] = j
        if self.alphabets != _first_occurrence(self.points, self.n):
            raise ParseError("alphabets must be the first-occurrence projections of the points")

    @classmethod
    def from_points(cls, points: Iterable[Sequence[Any]], n: int | None = None) -> "PointSet":
        pts = tuple(tuple(canonical_symbol(x) for x in p) for p in points)
        if not pts:
            raise EmptySet()
        if n is None:
            n = len(pts[0])
        for j, p in enumerate(pts):
            if len(p) != n:
                raise ArityMismatch(j, n, len(p))
        return cls(n, pts, _first_occurrence(pts, n))

    @property
    def k(self) -> int:
        return len(self.points)

    @property
    def sizes(self) -> tuple[int, ...]:
        """Alphabet sizes ``(m_1, ..., m_n)``."""
        return tuple(len(a) for a in self.alphabets)

    @property
    def bound(self) -> int:
        """``m_1 + ... + m_n - (n - 1)``, the largest possible good cardinality."""
        return sum(self.sizes) - (self.n - 1)

    @cached_property
    def _row_of(self) -> dict[Point, int]:
        return {p: j for j, p in enumerate(self.points)}

    def index(self, point: Sequence[Any]) -> int:
        key = tuple(canonical_symbol(x) for x in point)
        try:
            return self._row_of[key]
        except KeyError:
            raise DomainError(f"point {key!r} is not in the set") from None

    def __contains__(self, point) -> bool:
        try:
            self.index(point)
        except (DomainError, ParseError):
            return False
        return True

    def __len__(self) -> int:
        return len(self.points)

    def subset(self, indices: Iterable[int]) -> "PointSet":
        """The sub-point-set on the given row indices, in ascending order."""
        return PointSet.from_points([self.points[j] for j in sorted(set(indices))], self.n)


def _first_occurrence(points: Sequence[Point], n: int) -> tuple[tuple[str, ...], ...]:
    alphabets: list[dict[str, None]] = [{} for _ in range(n)]
    for p in points:
        for i, x in enumerate(p):
            alphabets[i].setdefault(x, None)
    return tuple(tuple(a) for a in alphabets)


def _load_json(document: str | bytes | Mapping) -> Any:
    if isinstance(document, (str, bytes)):
        try:
            return json.loads(document)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return document


def parse_point_set(document: str | bytes | Mapping) -> PointSet:
    """Parse ``{"n": <int>, "points": [[<symbol>, ...], ...]}``."""
    doc = _load_json(document)
    if not isinstance(doc, Mapping):
        raise ParseError("point-set document must be a JSON object")
    n = doc.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParseError(f'"n" must be an integer >= 1, got {n!r}')
    points = doc.get("points")
    if not isinstance(points, list):
        raise ParseError('"points" must be a list')
    if not points:
        raise EmptySet()
    for j, p in enumerate(points):
        if not isinstance(p, list):
            raise ParseError(f"point {j} must be a list of symbols")
    return PointSet.from_points(points, n)


def serialize_point_set(s: PointSet) -> dict:
    return {"n": s.n, "points": [list(p) for p in s.points]}


@dataclass(frozen=True)
class IncidenceMatrix:
    """Sparse 0/1 matrix with one row per point and one column per (axis, symbol).

    Column blocks follow axis order with offsets ``0, m_1, m_1 + m_2, ...``.
    Row ``j`` stores only the ``n`` column indices holding a one.
    """

    point_set: PointSet
    offsets: tuple[int, ...]
    support: tuple[tuple[int, ...], ...]

    @property
    def rows(self) -> int:
        return len(self.support)

    @property
    def cols(self) -> int:
        return self.offsets[-1] + len(self.point_set.alphabets[-1])

    def row(self, j: int) -> tuple[int, ...]:
        return self.support[j]

    def row_index(self, point: Sequence[Any]) -> int:
        return self.point_set.index(point)

    @cached_property
    def _col_of(self) -> dict[tuple[int, str], int]:
        return {
            (i, x): off + t
            for i, (off, alpha) in enumerate(zip(self.offsets, self.point_set.alphabets))
            for t, x in enumerate(alpha)
        }

    def col_index(self, axis: int, symbol: Any) -> int:
        try:
            return self._col_of[(axis, canonical_symbol(symbol))]
        except KeyError:
            raise DomainError(f"symbol {symbol!r} not in alphabet of axis {axis}") from None

    def column_label(self, c: int) -> tuple[int, str]:
        for i in range(len(self.offsets) - 1, -1, -1):
            if c >= self.offsets[i]:
                return i, self.point_set.alphabets[i][c - self.offsets[i]]
        raise IndexError(c)

    def entry(self, j: int, c: int) -> int:
        return 1 if c in self.support[j] else 0

    def dense(self, rows: Iterable[int] | None = None) -> list[list[int]]:
        """Dense integer rows, optionally restricted to the given row indices."""
        width = self.cols
        out = []
        for j in range(self.rows) if rows is None else rows:
            r = [0] * width
            for c in self.support[j]:
                r[c] = 1
            out.append(r)
        return out

    def multiply(self, v: Sequence) -> list:
        """``M @ v`` using the sparse rows."""
        if len(v) != self.cols:
            raise ValueError(f"vector length {len(v)} != {self.cols} columns")
        return [sum(v[c] for c in cols) for cols in self.support]


def build_matrix(s: PointSet) -> IncidenceMatrix:
    offsets = [0]
    for m in s.sizes[:-1]:
        offsets.append(offsets[-1] + m)
    col = [{x: off + t for t, x in enumerate(alpha)} for off, alpha in zip(offsets, s.alphabets)]
    support = tuple(tuple(col[i][x] for i, x in enumerate(p)) for p in s.points)
    return IncidenceMatrix(s, tuple(offsets), support)


def kernel_witnesses(m: IncidenceMatrix) -> list[list[int]]:
    """The ``n - 1`` vectors ``(1..1, 0.., -1..-1, 0..)`` annihilated by M.

    Vector ``t`` is +1 on the block of axis 1 and -1 on the block of axis
    ``t + 1``: every row has exactly one 1 in each block, so both contribute
    one unit and cancel.
    """
    sizes = m.point_set.sizes
    out = []
    for t in range(1, len(sizes)):
        v = [0] * m.cols
        for c in range(sizes[0]):
            v[c] = 1
        for c in range(m.offsets[t], m.offsets[t] + sizes[t]):
            v[c] = -1
        out.append(v)
    return out


def parse_rational(value: Any) -> Fraction:
    """Parse a bare JSON integer or a ``"p/q"`` / ``"p"`` string exactly."""
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        try:
            p = int(num)
            q = int(den) if sep else 1
        except ValueError:
            raise ParseError(f"not a rational: {value!r}") from None
        if q == 0:
            raise ParseError(f"zero denominator: {value!r}")
        return Fraction(p, q)
    raise ParseError(f"rationals must be integers or 'p/q' strings, got {value!r}")


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


@dataclass(frozen=True)
class FunctionTable:
    """Exact rational values of ``f`` on every point of a point set."""

    point_set: PointSet
    values: Mapping[Point, Fraction] = field(hash=False)

    def __post_init__(self):
        pts = self.point_set.points
        if len(self.values) != len(pts) or any(p not in self.values for p in pts):
            missing = [p for p in pts if p not in self.values]
            extra = [p for p in self.values if p not in self.point_set._row_of]
            raise DomainError(
                f"function table domain differs from point set (missing {missing[:3]}, extra {extra[:3]})"
            )

    @classmethod
    def from_callable(cls, s: PointSet, fn: Callable[[Point], Any]) -> "FunctionTable":
        return cls(s, {p: Fraction(fn(p)) for p in s.points})

    @classmethod
    def from_vector(cls, s: PointSet, z: Sequence) -> "FunctionTable":
        if len(z) != s.k:
            raise DomainError(f"{len(z)} values for {s.k} points")
        return cls(s, {p: Fraction(v) for p, v in zip(s.points, z)})

    def __getitem__(self, point: Sequence[Any]) -> Fraction:
        key = tuple(canonical_symbol(x) for x in point)
        try:
            return self.values[key]
        except KeyError:
            raise DomainError(f"point {key!r} is not in the function's domain") from None

    def vector(self) -> list[Fraction]:
        """``z = (f(s_1), ..., f(s_k))`` in point order."""
        return [self.values[p] for p in self.point_set.points]


def parse_function_table(document: str | bytes | Mapping, s: PointSet) -> FunctionTable:
    """Parse ``{"values": [{"point": [...], "value": "p/q" | int}, ...]}`` against ``s``."""
    doc = _load_json(document)
    if not isinstance(doc, Mapping) or not isinstance(doc.get("values"), list):
        raise ParseError('function document must be an object with a "values" list')
    values: dict[Point, Fraction] = {}
    for j, entry in enumerate(doc["values"]):
        if not isinstance(entry, Mapping) or "point" not in entry or "value" not in entry:
            raise ParseError(f'entry {j} needs "point" and "value"')
        if not isinstance(entry["point"], list):
            raise ParseError(f"entry {j}: point must be a list")
        key = tuple(canonical_symbol(x) for x in entry["point"])
        if key in values:
            raise ParseError(f"entry {j}: point {key!r} given twice")
        values[key] = parse_rational(entry["value"])
    return FunctionTable(s, values)


def serialize_function_table(f: FunctionTable) -> dict:
    return {
        "values": [
            {"point": list(p), "value": _json_rational(f.values[p])} for p in f.point_set.points
        ]
    }


def _json_rational(q: Fraction):
    return q.numerator if q.denominator == 1 else format_rational(q)
