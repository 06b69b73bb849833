"""From a solved constraint set to ground types, and the whole solving pipeline."""

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from typing import Optional

from linpi.config.defaults import DEFAULT_MAX_SEARCH_VARS
from linpi.constraints.exprs import (
    ChanT,
    Constraint,
    ConstraintSet,
    IntT,
    ProdT,
    TVar,
    TypeExpr,
    UEq,
    is_proper,
)
from linpi.constraints.generate import VarSupply
from linpi.constraints.substitution import GroundSubstitution
from linpi.solver.closure import ClosureState, close
from linpi.solver.completion import Templates, complete, default_undefined
from linpi.solver.uses import UseAssignment, extract_use_constraints, partition_uses, solve_uses
from linpi.types.shapes import ChanShape, IntShape, ProdShape, Shape, SumShape, Unknown
from linpi.types.store import TypeStore
from linpi.types.uses import Use
from linpi.utils.decorators import log_execution_time

logger = logging.getLogger(__name__)


def _shape(t: TypeExpr, uses: Mapping[str, Use]) -> Shape:
    if isinstance(t, TVar):
        return Unknown(t.name)
    if isinstance(t, IntT):
        return IntShape()
    if isinstance(t, ChanT):
        return ChanShape(t.inp.evaluate(uses), t.out.evaluate(uses), _shape(t.payload, uses))
    if isinstance(t, ProdT):
        return ProdShape(_shape(t.left, uses), _shape(t.right, uses))
    return SumShape(_shape(t.left, uses), _shape(t.right, uses))


@log_execution_time(logger)
def synthesize(
    cbar: ConstraintSet, s: ClosureState, ua: UseAssignment, store: TypeStore
) -> GroundSubstitution:
    """Solve ``a = ua(rep(a))`` for every type variable, ``rep`` being the ``=`` representative.

    Variables whose class holds no constructor term are bound to ``int``;
    use variables missing from ``ua`` are bound to 0.
    """
    uses: dict[str, Use] = {**dict.fromkeys(cbar.use_vars(), Use.ZERO), **ua}
    equations: dict[str, Shape] = {}
    for name in s.type_vars():
        rep = s.eq_rep(TVar(name))
        equations[name] = _shape(rep, uses) if is_proper(rep) else IntShape()
    return GroundSubstitution(store.make_type(equations), uses)


@dataclass
class SolverTrace:
    """Every intermediate result of :func:`run_solver`."""

    closure: ClosureState
    completed: ConstraintSet
    use_constraints: ConstraintSet
    partitions: list[list[UEq]] = field(default_factory=list)
    assignment: UseAssignment = field(default_factory=dict)
    solution: GroundSubstitution = field(default_factory=GroundSubstitution)


def run_solver(
    c: Iterable[Constraint],
    store: TypeStore,
    supply: VarSupply,
    pins: Iterable[Constraint] = (),
    max_search_vars: int = DEFAULT_MAX_SEARCH_VARS,
    omega_fallback: bool = False,
    templates: Optional[Templates] = None,
    minimal: bool = True,
) -> SolverTrace:
    """Close, default, complete, extract and solve the use equations, then synthesize.

    Args:
        c: Constraint set to solve.
        store: Store receiving the synthesized types.
        supply: The supply ``c`` was generated with; completion draws fresh
            variables from it.
        pins: Extra constraints solved together with ``c``.
        max_search_vars: Largest group of use variables searched exhaustively.
        omega_fallback: Assign w to groups above ``max_search_vars`` instead
            of failing.
        templates: Known ground types guiding completion, see
            :func:`~linpi.solver.completion.complete`.
        minimal: Search for a least use assignment; when false any
            assignment is accepted and the search is not bounded.

    Raises:
        Unsatisfiable: If the closure holds a constructor clash.
        NoSolution: If the use equations cannot be solved.
    """
    constraints = ConstraintSet(c)
    constraints.update(pins)
    state = close(constraints)
    defaults = default_undefined(state)
    if len(defaults):
        logger.debug("defaulting %d unconstrained variables to int", len(defaults))
        constraints = constraints | defaults
        state = close(constraints)
    completed = complete(constraints, state, supply, templates)
    state = close(completed)
    use_constraints = extract_use_constraints(completed, state)
    assignment = solve_uses(use_constraints, max_search_vars, omega_fallback, minimal)
    solution = synthesize(completed, state, assignment, store)
    return SolverTrace(
        closure=state,
        completed=completed,
        use_constraints=use_constraints,
        partitions=partition_uses(use_constraints),
        assignment=assignment,
        solution=solution,
    )


@log_execution_time(logger)
def solve(
    c: Iterable[Constraint],
    store: TypeStore,
    supply: VarSupply,
    pins: Iterable[Constraint] = (),
    max_search_vars: int = DEFAULT_MAX_SEARCH_VARS,
    omega_fallback: bool = False,
    templates: Optional[Templates] = None,
    minimal: bool = True,
) -> GroundSubstitution:
    """Solution of ``c`` (and ``pins``) binding every variable of the completed set.

    Raises:
        Unsatisfiable: If the closure holds a constructor clash.
        NoSolution: If the use equations cannot be solved.
    """
    trace = run_solver(
        c, store, supply, pins, max_search_vars, omega_fallback, templates, minimal
    )
    return trace.solution
