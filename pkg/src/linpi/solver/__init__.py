from linpi.solver.closure import (
    CanonicalMap,
    Classification,
    ClosureState,
    classify_variables,
    close,
    order_key,
)
from linpi.solver.completion import complete, default_undefined, inst
from linpi.solver.synthesis import SolverTrace, run_solver, solve, synthesize
from linpi.solver.unionfind import UnionFind
from linpi.solver.uses import (
    UseAssignment,
    eliminate_determined,
    extract_use_constraints,
    partition_uses,
    rank_vectors,
    satisfies,
    solve_uses,
)

__all__ = [
    "CanonicalMap",
    "Classification",
    "ClosureState",
    "SolverTrace",
    "UnionFind",
    "UseAssignment",
    "classify_variables",
    "close",
    "complete",
    "default_undefined",
    "eliminate_determined",
    "extract_use_constraints",
    "inst",
    "order_key",
    "partition_uses",
    "rank_vectors",
    "run_solver",
    "satisfies",
    "solve",
    "solve_uses",
    "synthesize",
]
