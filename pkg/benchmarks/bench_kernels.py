"""Compare the compiled and pure-Python elimination kernels.

    python benchmarks/bench_kernels.py [--repeat 5]

Times Bareiss rank and the tracked incremental reduction on random incidence
matrices of increasing size, then the end-to-end ``is_good`` loop used by the
randomized suites with each backend forced in turn.
"""
import argparse
import random
import timeit

from addsep import _backend, _kernels_py
from addsep.analysis import is_good
from addsep.generators import random_point_set
from addsep.matrix import build_matrix


def incidence_rows(rng, n, m, k):
    s = random_point_set(rng, n, [m] * n, k)
    return build_matrix(s).dense()


def bench(fn, args, repeat):
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if _backend._ckernels is None:
        raise SystemExit("compiled kernels not built; run `pip install -e . --no-build-isolation` first")
    compiled = _backend._ckernels
    rng = random.Random(args.seed)

    print(f"{'kernel':<16}{'n':>3}{'m':>5}{'k':>6}{'python ms':>12}{'cython ms':>12}{'speedup':>9}")
    for n, m, k in [(2, 10, 20), (3, 10, 30), (3, 20, 60), (4, 25, 100), (3, 60, 200)]:
        rows = incidence_rows(rng, n, m, k)
        width = len(rows[0])
        for name, py, cy, extra in [
            ("bareiss_rank", _kernels_py.bareiss_rank, compiled.bareiss_rank, ()),
            ("first_dependent", _kernels_py.first_dependent, compiled.first_dependent, (width,)),
        ]:
            assert py(rows, *extra) == cy(rows, *extra)
            tp = bench(py, (rows, *extra), args.repeat) * 1e3
            tc = bench(cy, (rows, *extra), args.repeat) * 1e3
            print(f"{name:<16}{n:>3}{m:>5}{len(rows):>6}{tp:>12.3f}{tc:>12.3f}{tp / tc:>8.1f}x")

    sets = []
    for _ in range(1000):
        sizes = [rng.randint(1, 8) for _ in range(rng.randint(2, 4))]
        sets.append(random_point_set(rng, len(sizes), sizes, rng.randint(1, 25)))

    def pipeline():
        return [is_good(s).good for s in sets]

    t_c = bench(pipeline, (), max(1, args.repeat // 2))
    _backend._ckernels = None
    try:
        t_p = bench(pipeline, (), max(1, args.repeat // 2))
    finally:
        _backend._ckernels = compiled
    print(f"\nis_good on 1000 random sets: python {t_p:.3f}s, cython {t_c:.3f}s ({t_p / t_c:.1f}x)")


if __name__ == "__main__":
    main()
