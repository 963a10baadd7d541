import itertools
import json
import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from addsep.analysis import (
    Decomposition,
    LoopCertificate,
    Obstruction,
    check_hereditary,
    decompose,
    evaluate,
    find_loop,
    is_good,
    loop_functional,
    product_loop,
    verify_loop,
)
from addsep.errors import DomainError, PreconditionViolated
from addsep.fixtures import LOOP26, LOOP26_COEFFICIENTS
from addsep.generators import axes_union, grid, random_function
from addsep.matrix import FunctionTable, PointSet, parse_point_set, serialize_point_set
from addsep.oracles import has_loop_brute_force, is_minimal_brute_force, loop_witnesses
from strategies import point_sets

LOOP5 = [(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)]
TWO = [(0, 0, 0), (0, 0, 1), (1, 1, 0), (1, 1, 1)]
GRID = [(0, 0), (0, 1), (1, 0), (1, 1)]


def ps(points):
    return PointSet.from_points(points)


def cert(points, coeffs):
    return LoopCertificate(ps(points).points, tuple(coeffs))


def xyz(p):
    return int(p[0]) * int(p[1]) * int(p[2])


# -- is_good -----------------------------------------------------------------

def test_loop5_not_good():
    v = is_good(ps(LOOP5))
    assert not v.good and v.rank == 4 and v.k == 5 and v.bound == 4
    assert verify_loop(v.certificate)


def test_axes_union_222_good():
    s = axes_union((2, 2, 2))
    v = is_good(s)
    assert v.good and v.k == 4 == v.bound and v.certificate is None


def test_two_components_not_good():
    v = is_good(ps(TWO))
    assert not v.good
    assert v.k <= v.bound  # not good despite satisfying the cardinality bound


# -- find_loop ---------------------------------------------------------------

def test_find_loop_loop5_coefficients():
    loop = find_loop(ps(LOOP5))
    assert loop.points == ps(LOOP5).points
    assert loop.coefficients == (2, -1, -1, -1, 1)


def test_find_loop_grid_matches_brute_force():
    loop = find_loop(ps(GRID))
    assert loop.coefficients == (1, -1, -1, 1)
    # every witness in [-6, 6]^4 is a multiple of (1, -1, -1, 1)
    for w in loop_witnesses(ps(GRID).points):
        assert list(w) == [w[0], -w[0], -w[0], w[0]]


def test_find_loop_singleton():
    assert find_loop(ps([("a", "b")])) is None


def test_find_loop_loop26_recovers_coefficient_five():
    loop = find_loop(ps(LOOP26))
    assert loop.coefficients == LOOP26_COEFFICIENTS


# -- verify_loop -------------------------------------------------------------

def test_verify_loop26():
    assert verify_loop(cert(LOOP26, LOOP26_COEFFICIENTS))


def test_verify_rejects_unbalanced():
    c = cert(LOOP5, (1, -1, -1, -1, 1))
    assert not verify_loop(c)
    # axis 0, symbol "0": 1 - 1 - 1 = -1
    assert sum(p for x, p in zip(c.points, c.coefficients) if x[0] == "0") == -1


def test_verify_rejects_non_minimal_parity_cube():
    cube = list(itertools.product((0, 1), repeat=3))
    parity = [(-1) ** sum(p) for p in cube]
    c = cert(cube, parity)
    assert not verify_loop(c)
    assert not is_minimal_brute_force(c.points, c.coefficients)
    sub = ps(TWO).points
    assert has_loop_brute_force(sub)


def test_verify_rejects_malformed():
    assert not verify_loop(LoopCertificate((), ()))
    assert not verify_loop(cert(GRID, (1, -1, -1, 0)))
    assert not verify_loop(LoopCertificate((("0", "0"), ("0", "0")), (1, -1)))
    assert not verify_loop(cert(GRID, (1, -1, -1)))


def test_verify_accepts_scaled_loop():
    assert verify_loop(cert(GRID, (3, -3, -3, 3)))


# -- loop_functional ---------------------------------------------------------

def test_loop_functional_xyz():
    s = ps(LOOP5)
    f = FunctionTable.from_callable(s, xyz)
    assert loop_functional(find_loop(s), f) == 1


def test_loop_functional_constant_and_additive():
    s = ps(GRID)
    loop = find_loop(s)
    assert loop_functional(loop, FunctionTable.from_callable(s, lambda p: 7)) == 0
    add = FunctionTable.from_callable(s, lambda p: Fraction(int(p[0]) * 3, 2) - int(p[1]))
    assert loop_functional(loop, add) == 0


def test_loop_functional_missing_point():
    s = ps(GRID[:3])
    with pytest.raises(DomainError):
        loop_functional(find_loop(ps(GRID)), FunctionTable.from_callable(s, lambda p: 1))


# -- decompose / evaluate ----------------------------------------------------

def test_decompose_three_points():
    s = ps([(0, 0), (0, 1), (1, 0)])
    f = FunctionTable.from_vector(s, [0, 1, 2])
    d = decompose(s, f)
    assert isinstance(d, Decomposition)
    u1, u2 = d.tables
    assert u1["0"] + u2["0"] == 0
    assert u1["0"] + u2["1"] == 1
    assert u1["1"] + u2["0"] == 2


def test_decompose_zero_function_gives_zero_tables():
    s = axes_union((3, 2, 2))
    d = decompose(s, FunctionTable.from_callable(s, lambda p: 0))
    assert all(v == 0 for t in d.tables for v in t.values())


def test_decompose_loop5_xyz_obstruction():
    s = ps(LOOP5)
    out = decompose(s, FunctionTable.from_callable(s, xyz))
    assert isinstance(out, Obstruction)
    assert out.value == 1
    assert out.loop.coefficients == (2, -1, -1, -1, 1)


def test_decompose_domain_mismatch():
    with pytest.raises(DomainError):
        decompose(ps(GRID), FunctionTable.from_callable(ps(GRID[:3]), lambda p: 0))


def test_decompose_accepts_reordered_domain():
    s = ps(GRID[:3])
    f = FunctionTable.from_callable(ps(GRID[:3][::-1]), lambda p: int(p[0]) + 2 * int(p[1]))
    d = decompose(s, f)
    assert all(evaluate(d, p) == f[p] for p in s.points)


def test_evaluate_examples():
    assert evaluate(Decomposition(({"a": Fraction(0)}, {"b": Fraction(0)})), ("a", "b")) == 0
    assert evaluate(Decomposition(({"a": Fraction(5)},)), ("a",)) == 5
    with pytest.raises(DomainError):
        evaluate(Decomposition(({"a": Fraction(5)},)), ("z",))
    with pytest.raises(DomainError):
        evaluate(Decomposition(({"a": Fraction(5)},)), ("a", "a"))


def test_json_round_trips():
    d = Decomposition(({"a": Fraction(1, 2)}, {"b": Fraction(-3)}))
    assert Decomposition.from_json(json.dumps(d.to_json())).tables == d.tables
    c = cert(GRID, (1, -1, -1, 1))
    assert LoopCertificate.from_json(json.dumps(c.to_json())) == c


# -- hereditary / product ----------------------------------------------------

def test_hereditary_examples():
    s = axes_union((3, 3, 3))
    assert check_hereditary(s, 20, 4, seed=1).passed
    assert check_hereditary(s, 3, s.k, seed=1).passed
    assert check_hereditary(s, 20, 1, seed=1).passed
    with pytest.raises(PreconditionViolated):
        check_hereditary(s, 1, s.k + 1, seed=0)


def test_hereditary_reports_failing_subset():
    rep = check_hereditary(ps(GRID), 1, 4, seed=0)
    assert not rep.passed and set(rep.failing_subset) == set(ps(GRID).points)


def test_product_loop_n2():
    loop = product_loop([(0, 1), (0, 1)])
    assert loop.coefficients == (1, -1, -1, 1)
    assert loop.points == ps(GRID).points


def test_product_loop_n3_is_valid():
    loop = product_loop([(0, 1)] * 3)
    assert len(loop.points) <= 8
    assert verify_loop(loop)
    assert is_minimal_brute_force(loop.points, loop.coefficients)
    # the reference four-point loop is also valid
    assert verify_loop(cert(TWO, (1, -1, -1, 1)))


def test_product_loop_preconditions():
    with pytest.raises(PreconditionViolated):
        product_loop([("a", "a"), ("b", "c")])
    with pytest.raises(PreconditionViolated):
        product_loop([("a", "b")])
    with pytest.raises(PreconditionViolated):
        product_loop([("a", "b", "c"), ("a", "b")])


# -- properties --------------------------------------------------------------

@settings(max_examples=200)
@given(point_sets(max_k=10))
def test_soundness(s):
    v = is_good(s)
    assert v.good == (v.rank == s.k)
    if v.good:
        assert s.k <= s.bound
        rng = random.Random(hash(s.points) & 0xFFFF)
        for _ in range(5):
            f = random_function(rng, s)
            d = decompose(s, f)
            assert isinstance(d, Decomposition)
            assert all(evaluate(d, p) == f[p] for p in s.points)
    else:
        assert verify_loop(v.certificate)
        assert set(v.certificate.points) <= set(s.points)


@settings(max_examples=300)
@given(point_sets(max_n=3, max_symbols=2, max_k=6))
def test_completeness_against_brute_force(s):
    assert is_good(s).good != has_loop_brute_force(s.points, 6)


@settings(max_examples=100)
@given(point_sets(max_k=8), st.data())
def test_no_certificate_inside_good_set(s, data):
    assume(is_good(s).good)
    idx = data.draw(st.lists(st.integers(0, s.k - 1), min_size=1, unique=True))
    coeffs = data.draw(st.lists(st.integers(-4, 4).filter(bool), min_size=len(idx), max_size=len(idx)))
    assert not verify_loop(LoopCertificate(tuple(s.points[j] for j in idx), tuple(coeffs)))


@settings(max_examples=100)
@given(point_sets(max_k=8), st.data())
def test_gauge_freedom(s, data):
    assume(is_good(s).good)
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    f = random_function(rng, s)
    d = decompose(s, f)
    shifts = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(s.n - 1)]
    shifts.append(-sum(shifts, Fraction(0)))
    shifted = Decomposition(tuple({x: v + c for x, v in t.items()} for t, c in zip(d.tables, shifts)))
    assert all(evaluate(shifted, p) == evaluate(d, p) for p in s.points)
    again = decompose(parse_point_set(json.dumps(serialize_point_set(s))), f)
    assert again.tables == d.tables


@settings(max_examples=200)
@given(point_sets(max_k=10))
def test_loop_coefficients_primitive(s):
    loop = find_loop(s)
    if loop is None:
        return
    from math import gcd

    g = 0
    for c in loop.coefficients:
        assert c != 0
        g = gcd(g, c)
    assert g == 1 and loop.coefficients[0] > 0
    order = [s.index(p) for p in loop.points]
    assert order == sorted(order)


def test_decompose_obstruction_on_grid():
    s = grid(3, 3)
    rng = random.Random(3)
    f = random_function(rng, s)
    out = decompose(s, f)
    assert isinstance(out, Obstruction)
    assert loop_functional(out.loop, f) == out.value != 0
    assert verify_loop(out.loop)
