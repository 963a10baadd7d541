"""Desk-scale cross-validation suites.

Each suite checks one equivalence on a seeded or exhaustive family and
returns a :class:`SuiteResult`. ``addsep selftest`` and the acceptance tests
both run these.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from addsep import _kernels_py, fixtures
from addsep.analysis import (
    Decomposition,
    check_hereditary,
    decompose,
    evaluate,
    find_loop,
    is_good,
    loop_functional,
    product_loop,
    verify_loop,
)
from addsep.generators import (
    axes_union,
    exhaustive_sets,
    random_function,
    random_good_set,
    random_point_set,
)
from addsep.linalg import RationalMatrix, rank_exact
from addsep.links import component_indices, good_via_links, linked_components
from addsep.matrix import PointSet
from addsep.oracles import has_loop_brute_force, naive_rank


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checked: int
    seconds: float = 0.0
    detail: str = ""
    failures: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "seconds": round(self.seconds, 3),
            "detail": self.detail,
            "failures": self.failures[:5],
        }


def _timed(fn: Callable[..., SuiteResult]) -> Callable[..., SuiteResult]:
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t0
        return res

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _pts(s: PointSet) -> list:
    return [list(p) for p in s.points]


@_timed
def fixtures_suite() -> SuiteResult:
    failures = []
    s5 = fixtures.point_set("loop5")
    v5 = is_good(s5)
    if v5.good or v5.certificate is None or v5.certificate.coefficients != fixtures.LOOP5_COEFFICIENTS:
        failures.append({"fixture": "loop5", "verdict": v5.to_json()})
    if v5.certificate is not None and v5.certificate.points != s5.points:
        failures.append({"fixture": "loop5", "reason": "certificate points out of order"})
    s26 = fixtures.point_set("loop26")
    if not verify_loop(fixtures.certificate("loop26")):
        failures.append({"fixture": "loop26", "reason": "stored certificate rejected"})
    loop26 = find_loop(s26)
    if loop26 is None or max(abs(c) for c in loop26.coefficients) != 5:
        failures.append({"fixture": "loop26", "found": None if loop26 is None else loop26.to_json()})
    two = fixtures.point_set("two-components")
    part = linked_components(two)
    if len(part.components) != 2 or not all(part.uniquely_linked) or is_good(two).good:
        failures.append({"fixture": "two-components", "partition": part.to_json()})
    return SuiteResult("fixtures", not failures, 3, failures=failures)


@_timed
def rank_oracle_suite(seed: int = 0, trials: int = 200, max_dim: int = 12) -> SuiteResult:
    """Rank and circuits against textbook Fraction elimination on random matrices."""
    rng = random.Random(seed)
    failures = []
    for t in range(trials):
        r, c = rng.randint(1, max_dim), rng.randint(1, max_dim)
        density = rng.random()
        rows = [
            [rng.randint(-5, 5) if rng.random() < density else 0 for _ in range(c)] for _ in range(r)
        ]
        # plant dependent rows half of the time
        if r > 2 and rng.random() < 0.5:
            a, b = rng.sample(range(r), 2)
            rows[rng.randrange(r)] = [rng.randint(-2, 2) * x + rng.randint(-2, 2) * y for x, y in zip(rows[a], rows[b])]
        expected = naive_rank(rows)
        got = rank_exact(RationalMatrix.from_rows(rows))
        got_py = _kernels_py.bareiss_rank(rows)
        if got != expected or got_py != expected:
            failures.append({"trial": t, "rows": rows, "expected": expected, "got": got, "python": got_py})
    return SuiteResult("rank-oracle", not failures, trials, failures=failures)


@_timed
def oracle_equivalence_suite(bound: int = 6) -> SuiteResult:
    """Rank criterion vs. brute-force coefficient search, exhaustively."""
    failures = []
    checked = 0
    for n, q, kmax in ((3, 2, 6), (2, 3, 5)):
        for s in exhaustive_sets(n, q, kmax):
            checked += 1
            v = is_good(s)
            brute = has_loop_brute_force(s.points, bound)
            if v.good == brute or (not v.good and not verify_loop(v.certificate)):
                failures.append({"points": _pts(s), "good": v.good, "brute_force_loop": brute})
    return SuiteResult(
        "oracle-equivalence",
        not failures,
        checked,
        detail="all subsets of {0,1}^3 with k<=6 and {0,1,2}^2 with k<=5",
        failures=failures,
    )


@_timed
def exhaustive_n2_suite(q: int = 3, kmax: int = 5) -> SuiteResult:
    """Rank criterion vs. forest criterion on every small n=2 set."""
    failures = []
    checked = 0
    for s in exhaustive_sets(2, q, kmax):
        checked += 1
        if is_good(s).good != good_via_links(s):
            failures.append({"points": _pts(s)})
    return SuiteResult("exhaustive-n2", not failures, checked, detail=f"{{0..{q - 1}}}^2, k<={kmax}", failures=failures)


@_timed
def random_n2_suite(seed: int = 0, count: int = 1000, kmax: int = 30) -> SuiteResult:
    rng = random.Random(seed)
    failures = []
    goods = 0
    for _ in range(count):
        sizes = (rng.randint(1, 12), rng.randint(1, 12))
        k = rng.randint(1, min(kmax, sizes[0] * sizes[1]))
        s = random_point_set(rng, 2, sizes, k)
        g = is_good(s).good
        goods += g
        if g != good_via_links(s):
            failures.append({"points": _pts(s)})
    return SuiteResult("random-n2", not failures, count, detail=f"{goods} good / {count - goods} not good", failures=failures)


@_timed
def linked_n3_suite(kmax: int = 6) -> SuiteResult:
    """Single-component n=3 sets: good implies uniquely linked.

    The converse does not hold. A five-point path such as
    101-001-000-010-110 is uniquely linked but exceeds the cardinality
    bound, so it cannot be good. Such sets are counted, not failed.
    """
    failures = []
    checked = uniquely_linked_not_good = 0
    for s in exhaustive_sets(3, 2, kmax):
        if len(component_indices(s)) != 1:
            continue
        checked += 1
        good, linked = is_good(s).good, good_via_links(s)
        if good and not linked:
            failures.append({"points": _pts(s)})
        elif linked and not good:
            uniquely_linked_not_good += 1
    return SuiteResult(
        "linked-n3",
        not failures,
        checked,
        detail=f"linked subsets of {{0,1}}^3, k<={kmax}; {uniquely_linked_not_good} uniquely linked but not good",
        failures=failures,
    )


@_timed
def bound_suite(seed: int = 0, count: int = 1000, kmax: int = 25) -> SuiteResult:
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        n = rng.randint(1, 4)
        sizes = [rng.randint(1, 8) for _ in range(n)]
        s = random_good_set(rng, n, sizes, rng.randint(1, kmax))
        v = is_good(s)
        if not v.good or s.k > s.bound:
            failures.append({"points": _pts(s), "verdict": v.to_json()})
    au = axes_union((2, 3, 4))
    v = is_good(au)
    if not (v.good and au.k == 7 == au.bound):
        failures.append({"axes_union": v.to_json()})
    return SuiteResult("cardinality-bound", not failures, count + 1, failures=failures)


@_timed
def roundtrip_suite(seed: int = 0, count: int = 200) -> SuiteResult:
    """Decompositions reproduce f; obstructions carry a nonzero loop functional."""
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        n = rng.randint(1, 4)
        s = random_good_set(rng, n, [rng.randint(1, 6) for _ in range(n)], rng.randint(1, 20))
        f = random_function(rng, s)
        d = decompose(s, f)
        if not isinstance(d, Decomposition) or any(evaluate(d, p) != f[p] for p in s.points):
            failures.append({"good_set": _pts(s)})
    obstructed = skipped = 0
    while obstructed < count:
        n = rng.randint(2, 3)
        sizes = [rng.randint(2, 4) for _ in range(n)]
        total = 1
        for m in sizes:
            total *= m
        s = random_point_set(rng, n, sizes, rng.randint(2, total))
        if is_good(s).good:
            continue
        f = random_function(rng, s)
        d = decompose(s, f)
        if isinstance(d, Decomposition):
            skipped += 1
            continue
        obstructed += 1
        if d.value == 0 or loop_functional(d.loop, f) != d.value or not verify_loop(d.loop):
            failures.append({"bad_set": _pts(s), "loop": d.loop.to_json()})
    return SuiteResult(
        "decompose-roundtrip",
        not failures,
        2 * count,
        detail=f"{skipped} consistent non-good draws skipped",
        failures=failures,
    )


@_timed
def hereditary_suite(seed: int = 0, sets: int = 50, trials: int = 100, point_set: PointSet | None = None) -> SuiteResult:
    rng = random.Random(seed)
    failures = []
    if point_set is not None:
        targets = [point_set]
    else:
        targets = []
        while len(targets) < sets:
            n = rng.randint(2, 4)
            s = random_good_set(rng, n, [rng.randint(2, 6) for _ in range(n)], rng.randint(2, 15))
            targets.append(s)
    for i, s in enumerate(targets):
        if not is_good(s).good:
            failures.append({"points": _pts(s), "reason": "input set is not good"})
            continue
        rep = check_hereditary(s, trials, rng.randint(1, s.k), seed + i)
        if not rep.passed:
            failures.append(rep.to_json())
    return SuiteResult("hereditary", not failures, len(targets) * trials, failures=failures)


@_timed
def product_suite(ns=(2, 3, 4, 5)) -> SuiteResult:
    failures = []
    for n in ns:
        loop = product_loop([(f"a{i}", f"b{i}") for i in range(n)])
        if not verify_loop(loop):
            failures.append({"n": n, "loop": loop.to_json()})
    return SuiteResult("product-loop", not failures, len(ns), failures=failures)


def run(seed: int = 0, *, exhaustive_n2: bool = False, hereditary: PointSet | None = None,
        random_sets: int = 1000, trials: int = 100) -> list[SuiteResult]:
    """Run the selected suites, or all of them when nothing is selected."""
    selected = exhaustive_n2 or hereditary is not None
    results = []
    if exhaustive_n2:
        results.append(exhaustive_n2_suite())
    if hereditary is not None:
        results.append(hereditary_suite(seed, trials=trials, point_set=hereditary))
    if selected:
        return results
    return [
        fixtures_suite(),
        rank_oracle_suite(seed),
        oracle_equivalence_suite(),
        exhaustive_n2_suite(),
        random_n2_suite(seed, random_sets),
        linked_n3_suite(),
        bound_suite(seed, random_sets),
        roundtrip_suite(seed),
        hereditary_suite(seed, trials=trials),
        product_suite(),
    ]
