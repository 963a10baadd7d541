"""Additive separability of finite point sets.

A finite ``S`` in ``X_1 x ... x X_n`` is *good* when every function on it is
``u_1(x_1) + ... + u_n(x_n)``. This package decides goodness exactly, returns
integer loop certificates when ``S`` is not good, and solves for the ``u_i``
when it is.
"""
from addsep._backend import BACKEND
from addsep.analysis import (
    Decomposition,
    GoodnessVerdict,
    HereditaryReport,
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
from addsep.errors import (
    AddSepError,
    ArityMismatch,
    DimensionError,
    DomainError,
    DuplicatePoint,
    EmptySet,
    ParseError,
    PreconditionViolated,
    ResourceLimit,
    UnsupportedArity,
    ZeroVector,
)
from addsep.linalg import (
    CircuitWitness,
    Inconsistent,
    RationalMatrix,
    fundamental_circuit,
    integerize,
    rank_exact,
    solve_exact,
)
from addsep.links import (
    ComponentPartition,
    good_via_links,
    is_uniquely_linked,
    linked_components,
)
from addsep.matrix import (
    FunctionTable,
    IncidenceMatrix,
    PointSet,
    build_matrix,
    kernel_witnesses,
    parse_function_table,
    parse_point_set,
    serialize_function_table,
    serialize_point_set,
)

__version__ = "0.1.0"
