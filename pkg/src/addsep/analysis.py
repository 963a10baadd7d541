"""Decision procedures for additive separability on finite point sets.

``S`` is *good* when every function on it splits as ``u_1(x_1) + ... +
u_n(x_n)``. That happens exactly when the rows of the incidence matrix are
independent; when they are not, a circuit of the rows is a *loop* (a minimal
set of points with nonzero integer weights whose signed indicator sums vanish
on every axis) and it is returned as the certificate.
"""
from __future__ import annotations

import itertools
import random
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping, Sequence

from addsep import _backend
from addsep.errors import DomainError, ParseError, PreconditionViolated
from addsep.linalg import (
    Inconsistent,
    RationalMatrix,
    fundamental_circuit,
    integerize,
    solve_exact,
)
from addsep.matrix import (
    FunctionTable,
    Point,
    PointSet,
    _load_json,
    build_matrix,
    canonical_symbol,
    format_rational,
    parse_rational,
)


@dataclass(frozen=True)
class LoopCertificate:
    points: tuple[Point, ...]
    coefficients: tuple[int, ...]

    def to_json(self) -> dict:
        return {"points": [list(p) for p in self.points], "coefficients": list(self.coefficients)}

    @classmethod
    def from_json(cls, document) -> "LoopCertificate":
        doc = _load_json(document)
        if not isinstance(doc, Mapping):
            raise ParseError("certificate must be a JSON object")
        pts, coeffs = doc.get("points"), doc.get("coefficients")
        if not isinstance(pts, list) or not isinstance(coeffs, list) or len(pts) != len(coeffs):
            raise ParseError('"points" and "coefficients" must be lists of equal length')
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise ParseError(f"coefficients must be integers, got {c!r}")
        points = []
        for j, p in enumerate(pts):
            if not isinstance(p, list):
                raise ParseError(f"point {j} must be a list of symbols")
            points.append(tuple(canonical_symbol(x) for x in p))
        return cls(tuple(points), tuple(coeffs))


@dataclass(frozen=True)
class Decomposition:
    """One table ``symbol -> u_i(symbol)`` per axis."""

    tables: tuple[Mapping[str, Fraction], ...] = field(hash=False)

    def to_json(self) -> dict:
        return {"tables": [{x: format_rational(v) for x, v in t.items()} for t in self.tables]}

    @classmethod
    def from_json(cls, document) -> "Decomposition":
        doc = _load_json(document)
        if not isinstance(doc, Mapping) or not isinstance(doc.get("tables"), list):
            raise ParseError('decomposition must be an object with a "tables" list')
        tables = []
        for t in doc["tables"]:
            if not isinstance(t, Mapping):
                raise ParseError("each table must be an object")
            tables.append({str(x): parse_rational(v) for x, v in t.items()})
        return cls(tuple(tables))


@dataclass(frozen=True)
class Obstruction:
    """A loop on which ``f`` has a nonzero signed sum."""

    loop: LoopCertificate
    value: Fraction

    def to_json(self) -> dict:
        return {"obstruction": self.loop.to_json(), "loop_functional": format_rational(self.value)}


@dataclass(frozen=True)
class GoodnessVerdict:
    good: bool
    rank: int
    k: int
    bound: int
    certificate: LoopCertificate | None = None

    def to_json(self) -> dict:
        out: dict[str, Any] = {"good": self.good, "rank": self.rank, "k": self.k, "bound": self.bound}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out


def is_good(s: PointSet) -> GoodnessVerdict:
    m = build_matrix(s)
    rank = _backend.bareiss_rank(m.dense())
    good = rank == s.k
    # rank <= columns - (n-1) because the n-1 kernel witnesses are independent
    if good and s.k > s.bound:
        raise RuntimeError(f"rank {rank} = k exceeds the cardinality bound {s.bound}")
    cert = None if good else find_loop(s)
    if not good and cert is None:
        raise RuntimeError("rank-deficient matrix without a dependent row")
    return GoodnessVerdict(good, rank, s.k, s.bound, cert)


def find_loop(s: PointSet) -> LoopCertificate | None:
    """The fundamental circuit of the first dependent point, as a loop.

    Points appear in ascending point-set order and the coefficients are the
    primitive integer vector with the first one positive. ``None`` means ``S``
    is good.
    """
    w = fundamental_circuit(build_matrix(s))
    if w is None:
        return None
    return LoopCertificate(tuple(s.points[j] for j in w.support), tuple(integerize(w.coefficients)))


def _signed_sums_vanish(points: Sequence[Point], coefficients: Sequence[int]) -> bool:
    n = len(points[0])
    for i in range(n):
        acc: dict[str, int] = defaultdict(int)
        for p, c in zip(points, coefficients):
            acc[p[i]] += c
        if any(acc.values()):
            return False
    return True


def verify_loop(c: LoopCertificate) -> bool:
    """Check both loop conditions independently of how ``c`` was produced.

    The per-axis signed indicator sums must vanish, and the points must be
    minimally dependent: their rows have rank ``len(points) - 1``, so the
    dependency space is the line through the (all nonzero) coefficients.
    """
    pts, coeffs = c.points, c.coefficients
    if not pts or len(pts) != len(coeffs) or len(set(pts)) != len(pts):
        return False
    if len({len(p) for p in pts}) != 1:
        return False
    if any(not isinstance(p, int) or isinstance(p, bool) or p == 0 for p in coeffs):
        return False
    if not _signed_sums_vanish(pts, coeffs):
        return False
    sub = PointSet.from_points(pts)
    return _backend.bareiss_rank(build_matrix(sub).dense()) == len(pts) - 1


def loop_functional(c: LoopCertificate, f: FunctionTable) -> Fraction:
    """``sum_j p_j f(x^j)``; nonzero means no additive split of f exists."""
    total = Fraction(0)
    for p, coeff in zip(c.points, c.coefficients):
        total += coeff * f[p]
    return total


def decompose(s: PointSet, f: FunctionTable) -> Decomposition | Obstruction:
    if f.point_set.points != s.points:
        if set(f.point_set.points) != set(s.points):
            raise DomainError("function domain does not match the point set")
        f = FunctionTable(s, f.values)
    m = build_matrix(s)
    try:
        alpha = solve_exact(m, f.vector())
    except Inconsistent as exc:
        support = [j for j, c in enumerate(exc.certificate) if c]
        w = fundamental_circuit(RationalMatrix.from_rows(m.dense(support)))
        if w is None:
            raise RuntimeError("dual certificate support is independent") from None
        loop = LoopCertificate(
            tuple(s.points[support[j]] for j in w.support), tuple(integerize(w.coefficients))
        )
        value = loop_functional(loop, f)
        if value == 0:
            raise RuntimeError("extracted loop does not obstruct f") from None
        return Obstruction(loop, value)
    tables = tuple(
        {x: alpha[off + t] for t, x in enumerate(alpha_i)}
        for off, alpha_i in zip(m.offsets, s.alphabets)
    )
    return Decomposition(tables)


def evaluate(d: Decomposition, x: Sequence[Any]) -> Fraction:
    if len(x) != len(d.tables):
        raise DomainError(f"point has {len(x)} coordinates, decomposition has {len(d.tables)} axes")
    total = Fraction(0)
    for i, (table, sym) in enumerate(zip(d.tables, x)):
        key = canonical_symbol(sym)
        if key not in table:
            raise DomainError(f"symbol {key!r} not in table of axis {i}")
        total += table[key]
    return total


@dataclass(frozen=True)
class HereditaryReport:
    passed: bool
    trials: int
    subset_size: int
    seed: int
    failing_subset: tuple[Point, ...] | None = None

    def to_json(self) -> dict:
        out = {"passed": self.passed, "trials": self.trials, "subset_size": self.subset_size, "seed": self.seed}
        if self.failing_subset is not None:
            out["failing_subset"] = [list(p) for p in self.failing_subset]
        return out


def check_hereditary(s: PointSet, trials: int, subset_size: int, seed: int) -> HereditaryReport:
    """Sample subsets of a good set and confirm each one is good.

    A failure here indicates a bug in the rank computation, since every
    subset of a good set is good.
    """
    if not 1 <= subset_size <= s.k:
        raise PreconditionViolated(f"subset_size must be in [1, {s.k}], got {subset_size}")
    rng = random.Random(seed)
    for _ in range(trials):
        idx = sorted(rng.sample(range(s.k), subset_size))
        sub = s.subset(idx)
        if not is_good(sub).good:
            return HereditaryReport(False, trials, subset_size, seed, sub.points)
    return HereditaryReport(True, trials, subset_size, seed)


def product_loop(axis_pairs: Sequence[Sequence[Any]]) -> LoopCertificate:
    """A loop inside the product ``B_1 x ... x B_n`` of two-symbol sets."""
    if len(axis_pairs) < 2:
        raise PreconditionViolated("need at least two axes")
    pairs = []
    for i, pair in enumerate(axis_pairs):
        if len(pair) != 2:
            raise PreconditionViolated(f"axis {i} needs two distinct symbols, got {pair!r}")
        a, b = (canonical_symbol(x) for x in pair)
        if a == b:
            raise PreconditionViolated(f"axis {i} needs two distinct symbols, got {pair!r}")
        pairs.append((a, b))
    loop = find_loop(PointSet.from_points(itertools.product(*pairs)))
    if loop is None:
        raise RuntimeError("product of two-point sets reported good")
    return loop
