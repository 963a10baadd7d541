"""Exact rational linear algebra over arbitrary-precision integers.

Rows are scaled to integers on entry (row scaling changes neither rank nor
which row sets are dependent) and handed to the integer kernels in
:mod:`addsep._backend`. Nothing here touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence, Union

from addsep import _backend
from addsep.errors import DimensionError, ZeroVector
from addsep.matrix import IncidenceMatrix


@dataclass(frozen=True)
class RationalMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise DimensionError("matrix dimensions must be positive")
        width = len(self.entries[0])
        if any(len(r) != width for r in self.entries):
            raise DimensionError("ragged matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RationalMatrix":
        return cls(tuple(tuple(Fraction(x) for x in r) for r in rows))

    @classmethod
    def from_incidence(cls, m: IncidenceMatrix) -> "RationalMatrix":
        return cls.from_rows(m.dense())

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def select(self, indices: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix(tuple(self.entries[j] for j in indices))


MatrixLike = Union[RationalMatrix, IncidenceMatrix]


@dataclass(frozen=True)
class CircuitWitness:
    """A minimal dependent row set with its (one-dimensional) dependency."""

    support: tuple[int, ...]
    coefficients: tuple[Fraction, ...]


class Inconsistent(ArithmeticError):
    """``M x = z`` has no solution.

    ``certificate`` is a rational vector ``c`` with ``c^T M = 0`` and
    ``c^T z != 0``. Its support is a single circuit of the rows of ``M``.
    """

    def __init__(self, certificate: list[Fraction]):
        self.certificate = certificate
        super().__init__("inconsistent linear system")


def _integer_rows(m: MatrixLike, extra: Sequence[Fraction] | None = None):
    """Integer rows plus the per-row scale that produced them."""
    if isinstance(m, IncidenceMatrix):
        rows = m.dense()
        if extra is None:
            return rows, [1] * len(rows)
        out, scales = [], []
        for r, z in zip(rows, extra):
            z = Fraction(z)
            s = z.denominator
            out.append([s * x for x in r] + [z.numerator])
            scales.append(s)
        return out, scales
    out, scales = [], []
    for j, r in enumerate(m.entries):
        vals = list(r) if extra is None else list(r) + [Fraction(extra[j])]
        s = 1
        for v in vals:
            s = lcm(s, v.denominator)
        out.append([int(v * s) for v in vals])
        scales.append(s)
    return out, scales


def rank_exact(m: MatrixLike) -> int:
    """Rank over the rationals by fraction-free elimination."""
    rows, _ = _integer_rows(m)
    return _backend.bareiss_rank(rows)


def solve_exact(m: MatrixLike, z: Sequence) -> list[Fraction]:
    """One exact solution of ``M x = z`` with every free variable set to 0.

    Raises :class:`Inconsistent` carrying a dual certificate when the system
    has no solution.
    """
    if len(z) != m.rows:
        raise DimensionError(f"right-hand side has length {len(z)}, matrix has {m.rows} rows")
    ncols = m.cols
    rows, scales = _integer_rows(m, z)
    basis, dep = _backend.first_dependent(rows, ncols)
    if dep is not None:
        _, track, _ = dep
        raise Inconsistent([Fraction(t * s) for t, s in zip(track, scales)])
    x = [Fraction(0)] * ncols
    for _, p, row in reversed(basis):
        acc = row[ncols]
        for j in range(ncols):
            if j != p and row[j]:
                acc -= row[j] * x[j]
        x[p] = Fraction(acc, row[p])
    return x


def fundamental_circuit(rows: MatrixLike) -> CircuitWitness | None:
    """Fundamental circuit of the first row dependent on its predecessors.

    A row basis is grown greedily in index order. The first row that reduces
    to zero is written over the basis; it and the basis rows with nonzero
    weight form a circuit. Returns ``None`` when the rows are independent.
    """
    if rows.rows == 0:
        raise DimensionError("no rows")
    ints, scales = _integer_rows(rows)
    _, dep = _backend.first_dependent(ints, rows.cols)
    if dep is None:
        return None
    _, track, _ = dep
    support = tuple(j for j, t in enumerate(track) if t)
    coeffs = tuple(Fraction(track[j] * scales[j]) for j in support)
    witness = CircuitWitness(support, coeffs)
    _check_circuit(ints, scales, witness)
    return witness


def _check_circuit(ints, scales, w: CircuitWitness) -> None:
    width = len(ints[0])
    total = [Fraction(0)] * width
    for j, c in zip(w.support, w.coefficients):
        q = c / scales[j]
        for t, v in enumerate(ints[j]):
            if v:
                total[t] += q * v
    if any(total):
        raise RuntimeError("circuit coefficients do not annihilate the rows")
    if _backend.bareiss_rank([ints[j] for j in w.support]) != len(w.support) - 1:
        raise RuntimeError("dependent row set is not minimal")


def integerize(coeffs: Sequence) -> list[int]:
    """Primitive integer representative of the ray through ``coeffs``.

    Denominators are cleared, the common factor removed, and the sign fixed
    so the first nonzero entry is positive.
    """
    qs = [Fraction(c) for c in coeffs]
    first = next((q for q in qs if q), None)
    if first is None:
        raise ZeroVector("cannot integerize the zero vector")
    d = 1
    for q in qs:
        d = lcm(d, q.denominator)
    ints = [int(q * d) for q in qs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    sign = -1 if first < 0 else 1
    return [sign * v // g for v in ints]
