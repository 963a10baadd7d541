"""Kernel selection.

The compiled int64 kernels are used when the extension is importable. An
int64 overflow inside them re-runs the same call on the arbitrary-precision
Python kernels, so results never depend on which backend is active.
"""
from addsep import _kernels_py

try:
    from addsep import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"


def bareiss_rank(rows):
    if _ckernels is not None:
        try:
            return _ckernels.bareiss_rank(rows)
        except OverflowError:
            pass
    return _kernels_py.bareiss_rank(rows)


def first_dependent(rows, nmain):
    if _ckernels is not None:
        try:
            return _ckernels.first_dependent(rows, nmain)
        except OverflowError:
            pass
    return _kernels_py.first_dependent(rows, nmain)
