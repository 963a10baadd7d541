"""Pure-Python integer elimination kernels.

These are the reference implementations of the two hot loops. The compiled
module ``addsep._ckernels`` exposes the same functions with the same return
values; ``addsep._backend`` picks one at import time.

All inputs are lists of rows of Python ints. Inputs are never mutated.
"""
from math import gcd


def bareiss_rank(rows):
    """Rank of an integer matrix by fraction-free (Bareiss) elimination.

    Pivot columns may be skipped, so this works for rectangular and
    rank-deficient input. Every intermediate entry is a minor of the input,
    which makes each division exact.
    """
    a = [list(r) for r in rows]
    nr = len(a)
    if nr == 0:
        return 0
    nc = len(a[0])
    r = 0
    prev = 1
    for c in range(nc):
        if r == nr:
            break
        p = r
        while p < nr and a[p][c] == 0:
            p += 1
        if p == nr:
            continue
        if p != r:
            a[p], a[r] = a[r], a[p]
        prow = a[r]
        piv = prow[c]
        for i in range(r + 1, nr):
            row = a[i]
            f = row[c]
            if f:
                for j in range(c + 1, nc):
                    row[j] = (piv * row[j] - f * prow[j]) // prev
            elif piv != prev:
                for j in range(c + 1, nc):
                    row[j] = piv * row[j] // prev
            row[c] = 0
        prev = piv
        r += 1
    return r


def _primitive(vec):
    g = 0
    for v in vec:
        if v:
            g = gcd(g, v)
            if g == 1:
                return vec
    if g > 1:
        return [v // g for v in vec]
    return vec


def first_dependent(rows, nmain):
    """Reduce rows in index order against a growing echelon basis.

    Each processed row carries a tracking vector ``t`` with
    ``reduced == sum(t[j] * rows[j])``. A row whose first ``nmain`` entries
    reduce to zero is *dependent*. It is reported (and elimination stops)
    when ``nmain == ncols`` or when its trailing entries are not all zero;
    otherwise it is dropped and elimination continues.

    Returns ``(basis, dependency)``:

    * ``basis`` -- list of ``(row_index, pivot_col, reduced_row)``
    * ``dependency`` -- ``None`` or ``(row_index, tracking, trailing)``
    """
    nr = len(rows)
    basis = []
    btrack = []
    for i in range(nr):
        cur = list(rows[i])
        nc = len(cur)
        track = [0] * nr
        track[i] = 1
        for (_, p, brow), bt in zip(basis, btrack):
            f = cur[p]
            if not f:
                continue
            g = brow[p]
            d = gcd(g, f)
            g //= d
            f //= d
            cur = [g * x - f * y for x, y in zip(cur, brow)]
            track = [g * x - f * y for x, y in zip(track, bt)]
            both = _primitive(cur + track)
            cur, track = both[:nc], both[nc:]
        pivot = -1
        for j in range(nmain):
            if cur[j]:
                pivot = j
                break
        if pivot < 0:
            trailing = cur[nmain:]
            if nmain == nc or any(trailing):
                return basis, (i, track, trailing)
            continue
        basis.append((i, pivot, cur))
        btrack.append(track)
    return basis, None
