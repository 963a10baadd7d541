from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from addsep.errors import DimensionError, ZeroVector
from addsep.linalg import (
    Inconsistent,
    RationalMatrix,
    fundamental_circuit,
    integerize,
    rank_exact,
    solve_exact,
)
from addsep.matrix import PointSet, build_matrix
from addsep.generators import axes_union
from addsep.oracles import naive_rank
from strategies import int_matrices, rationals

LOOP5 = [(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)]
GRID = [(0, 0), (0, 1), (1, 0), (1, 1)]


def rm(rows):
    return RationalMatrix.from_rows(rows)


def test_rank_identity():
    assert rank_exact(rm([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == 3


def test_rank_loop5_and_grid_match_oracle():
    m5 = build_matrix(PointSet.from_points(LOOP5))
    mg = build_matrix(PointSet.from_points(GRID))
    assert naive_rank(m5.dense()) == 4
    assert naive_rank(mg.dense()) == 3
    assert rank_exact(m5) == 4
    assert rank_exact(RationalMatrix.from_incidence(mg)) == 3


def test_rank_with_fractions():
    assert rank_exact(rm([[Fraction(1, 2), Fraction(1, 3)], [3, 2]])) == 1


@settings(max_examples=300)
@given(int_matrices())
def test_rank_matches_textbook_elimination(rows):
    assert rank_exact(rm(rows)) == naive_rank(rows)


@given(st.integers(1, 8).flatmap(lambda c: st.lists(st.lists(rationals, min_size=c, max_size=c), min_size=1, max_size=8)))
def test_rank_rational_matches_oracle(rows):
    assert rank_exact(rm(rows)) == naive_rank(rows)


def test_solve_identity():
    assert solve_exact(rm([[1, 0], [0, 1]]), [1, 2]) == [1, 2]


def test_solve_inconsistent_duplicate_rows():
    with pytest.raises(Inconsistent) as exc:
        solve_exact(rm([[1, 0], [1, 0]]), [0, 1])
    c = exc.value.certificate
    assert integerize(c) == [1, -1]


def test_solve_dimension_error():
    with pytest.raises(DimensionError):
        solve_exact(rm([[1, 0]]), [1, 2])


def test_solve_axes_union_any_rhs():
    s = axes_union((2, 3, 4))
    m = build_matrix(s)
    z = [Fraction(j * j - 3, j + 1) for j in range(s.k)]
    x = solve_exact(m, z)
    assert m.multiply(x) == z


def test_solve_pins_free_variables():
    # x + y = 2: y is free and pinned to 0
    assert solve_exact(rm([[1, 1]]), [2]) == [2, 0]


@settings(max_examples=200)
@given(int_matrices(max_dim=8, lo=-3, hi=3), st.data())
def test_solve_solution_or_certificate(rows, data):
    z = data.draw(st.lists(rationals, min_size=len(rows), max_size=len(rows)))
    m = rm(rows)
    try:
        x = solve_exact(m, z)
    except Inconsistent as exc:
        c = exc.certificate
        for j in range(m.cols):
            assert sum(c[i] * m.entries[i][j] for i in range(m.rows)) == 0
        assert sum(ci * zi for ci, zi in zip(c, z)) != 0
        support = [i for i, ci in enumerate(c) if ci]
        assert naive_rank([rows[i] for i in support]) == len(support) - 1
    else:
        for i in range(m.rows):
            assert sum(m.entries[i][j] * x[j] for j in range(m.cols)) == z[i]


def test_circuit_independent_rows():
    assert fundamental_circuit(rm([[1, 0], [0, 1]])) is None


def test_circuit_forced_dependency():
    w = fundamental_circuit(rm([[1, 0], [0, 1], [1, 1]]))
    assert w.support == (0, 1, 2)
    assert integerize(w.coefficients) == [1, 1, -1]


def test_circuit_loop5():
    w = fundamental_circuit(build_matrix(PointSet.from_points(LOOP5)))
    assert w.support == (0, 1, 2, 3, 4)
    assert integerize(w.coefficients) == [2, -1, -1, -1, 1]


def test_circuit_skips_rows_outside():
    # row 2 depends on row 0 only; row 1 is not in the circuit
    w = fundamental_circuit(rm([[1, 2, 0], [0, 1, 1], [2, 4, 0]]))
    assert w.support == (0, 2)
    assert integerize(w.coefficients) == [2, -1]


@settings(max_examples=300)
@given(int_matrices(max_dim=9, lo=-2, hi=2))
def test_circuit_invariants(rows):
    w = fundamental_circuit(rm(rows))
    if w is None:
        assert naive_rank(rows) == len(rows)
        return
    width = len(rows[0])
    assert all(c != 0 for c in w.coefficients)
    for j in range(width):
        assert sum(c * rows[i][j] for i, c in zip(w.support, w.coefficients)) == 0
    sub = [rows[i] for i in w.support]
    assert naive_rank(sub) == len(sub) - 1
    for drop in range(len(sub)):
        rest = sub[:drop] + sub[drop + 1:]
        assert naive_rank(rest) == len(rest)
    # first dependent row: everything before the last support row is independent
    last = max(w.support)
    assert naive_rank(rows[:last]) == last


def test_integerize_examples():
    assert integerize([Fraction(1, 2), Fraction(-1, 3)]) == [3, -2]
    assert integerize([-2, 1, 1, 1, -1]) == [2, -1, -1, -1, 1]
    assert integerize([4, -6]) == [2, -3]
    assert integerize([0, -3, 6]) == [0, 1, -2]
    with pytest.raises(ZeroVector):
        integerize([0, 0])


@given(st.lists(rationals.filter(bool), min_size=1, max_size=8))
def test_integerize_primitive(coeffs):
    from math import gcd

    v = integerize(coeffs)
    g = 0
    for x in v:
        g = gcd(g, x)
    assert g == 1
    assert all(v)
    assert v[0] > 0
    ratio = Fraction(v[0]) / coeffs[0]
    assert all(Fraction(a) == ratio * b for a, b in zip(v, coeffs))


def test_rational_matrix_validation():
    with pytest.raises(DimensionError):
        RationalMatrix(())
    with pytest.raises(DimensionError):
        rm([[1, 2], [3]])
