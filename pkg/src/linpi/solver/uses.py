"""Use equations: extraction from a completed set, simplification and minimal solving.

Solving is an exhaustive search over ``{0, 1, w}``, kept tractable by
eliminating variables that an equation defines outright and by splitting
the rest into groups that share no variable. Each group is searched in
order of increasing total rank (``0 < 1 < w`` count as 0, 1 and 2), so the
first hit cannot be improved by lowering any variable. A checker only needs
some assignment and uses a backtracking search instead, which has no bound
on the group size.
"""

import logging
from collections import defaultdict, deque
from collections.abc import Iterable, Iterator, Mapping
from typing import Optional

import networkx as nx

from linpi.config.defaults import DEFAULT_MAX_SEARCH_VARS
from linpi.constraints.exprs import (
    ChanT,
    ConstraintSet,
    ProdT,
    SumT,
    UEq,
    UseExpr,
    is_proper,
    render_constraint,
    render_type_expr,
    var_key,
)
from linpi.errors import NoSolution, Unsatisfiable
from linpi.solver.closure import ClosureState, subterms
from linpi.types.uses import Use
from linpi.utils.decorators import log_execution_time

logger = logging.getLogger(__name__)

UseAssignment = dict[str, Use]


@log_execution_time(logger)
def extract_use_constraints(cbar: ConstraintSet, s: ClosureState) -> ConstraintSet:
    """Collect every use equation of the completed set ``cbar`` closed into ``s``.

    Each combination is read on the representatives of the ``=`` classes of
    its three members and decomposed down to channels, where it yields one
    equation per use slot. Triples of classes are visited once, which keeps
    the walk finite on cyclic definitions.
    """
    found = ConstraintSet(c for c in cbar if isinstance(c, UEq) and c.left != c.right)
    found.update(s.use_eqs)
    pending = deque(s.comb_links)
    seen: set[tuple[int, int, int]] = set()
    while pending:
        triple = pending.popleft()
        find = s.eq_classes.find
        key = (find(triple[0]), find(triple[1]), find(triple[2]))
        if key in seen:
            continue
        seen.add(key)
        result, left, right = (s.eq_rep_of_id(i) for i in triple)
        if not (is_proper(result) and is_proper(left) and is_proper(right)):
            continue
        if not (type(result) is type(left) is type(right)):
            raise Unsatisfiable(render_type_expr(result), render_type_expr(left))
        if isinstance(result, ChanT) and isinstance(left, ChanT) and isinstance(right, ChanT):
            for slot in ("inp", "out"):
                target = getattr(result, slot)
                total = getattr(left, slot) + getattr(right, slot)
                if target != total:
                    found.add(UEq(target, total))
        elif isinstance(result, (ProdT, SumT)):
            for t, s1, s2 in zip(subterms(result), subterms(left), subterms(right)):
                pending.append((s.term_id(t), s.term_id(s1), s.term_id(s2)))
    logger.debug("extracted %d use equations", len(found))
    return found


def partition_uses(ueqs: Iterable[UEq]) -> list[list[UEq]]:
    """Group equations into connected components of the variable-sharing graph.

    Equations without variables each form their own group, listed last.
    """
    items = list(ueqs)
    graph = nx.Graph()
    for c in items:
        variables = c.variables
        graph.add_nodes_from(variables)
        graph.add_edges_from(zip(variables, variables[1:]))
    component_of = {
        name: k for k, component in enumerate(nx.connected_components(graph)) for name in component
    }
    groups: dict[int, list[UEq]] = defaultdict(list)
    closed: list[list[UEq]] = []
    for c in items:
        if c.variables:
            groups[component_of[c.variables[0]]].append(c)
        else:
            closed.append([c])
    ordered = sorted(
        groups.values(), key=lambda group: min(var_key(v) for c in group for v in c.variables)
    )
    return ordered + closed


def _single_variable(u: UseExpr) -> Optional[str]:
    if u.literal is Use.ZERO and len(u.vars) == 1 and u.vars[0][1] == 1:
        return u.vars[0][0]
    return None


def _determined(c: UEq) -> Optional[tuple[str, UseExpr]]:
    for side, other in ((c.left, c.right), (c.right, c.left)):
        name = _single_variable(side)
        if name is not None and name not in other.variables:
            return name, other
    return None


def eliminate_determined(
    ueqs: Iterable[UEq],
) -> tuple[list[UEq], list[tuple[str, UseExpr]]]:
    """Remove equations ``r = U`` where ``r`` does not occur in ``U``.

    Returns:
        The remaining equations, and the eliminated variables with their
        defining expressions in elimination order. Evaluating them in reverse
        order recovers every eliminated variable.
    """
    remaining = [c for c in ueqs if c.left != c.right]
    substitutions: list[tuple[str, UseExpr]] = []
    while True:
        for position, c in enumerate(remaining):
            determined = _determined(c)
            if determined is not None:
                break
        else:
            return remaining, substitutions
        name, by = determined
        substitutions.append((name, by))
        del remaining[position]
        rewritten = (UEq(r.left.replace(name, by), r.right.replace(name, by)) for r in remaining)
        remaining = [r for r in rewritten if r.left != r.right]


def satisfies(assignment: Mapping[str, Use], ueqs: Iterable[UEq]) -> bool:
    return all(c.left.evaluate(assignment) == c.right.evaluate(assignment) for c in ueqs)


def rank_vectors(size: int, rank: int) -> Iterator[tuple[int, ...]]:
    """Vectors over ``{0, 1, 2}`` of length ``size`` summing to ``rank``, in lexicographic order."""
    if size == 0:
        if rank == 0:
            yield ()
        return
    for first in range(min(2, rank) + 1):
        if rank - first <= 2 * (size - 1):
            for rest in rank_vectors(size - 1, rank - first):
                yield (first, *rest)


def _solve_partition(
    partition: list[UEq], max_search_vars: int, omega_fallback: bool
) -> UseAssignment:
    variables = sorted({v for c in partition for v in c.variables}, key=var_key)
    listing = "; ".join(render_constraint(c) for c in partition)
    if len(variables) > max_search_vars:
        if not omega_fallback:
            raise NoSolution(
                f"{len(variables)} use variables in one group exceed the search bound of "
                f"{max_search_vars}; retry with --omega-fallback",
                variables,
            )
        candidate = dict.fromkeys(variables, Use.OMEGA)
        if satisfies(candidate, partition):
            logger.info("assigned w to %d use variables", len(variables))
            return candidate
        raise NoSolution(f"no assignment satisfies {listing}", variables)
    for rank in range(2 * len(variables) + 1):
        for vector in rank_vectors(len(variables), rank):
            candidate = dict(zip(variables, map(Use, vector)))
            if satisfies(candidate, partition):
                return candidate
    raise NoSolution(f"no assignment satisfies {listing}", variables)


def _next_variable(partition: list[UEq], assignment: Mapping[str, Use]) -> str:
    # an open variable of the equation with the fewest open variables
    best = (0, "")
    for c in partition:
        open_vars = [v for v in c.variables if v not in assignment]
        if open_vars and (not best[1] or len(open_vars) < best[0]):
            best = (len(open_vars), open_vars[0])
            if best[0] == 1:
                break
    return best[1]


def _satisfy_partition(partition: list[UEq]) -> UseAssignment:
    variables = {v for c in partition for v in c.variables}
    listing = "; ".join(render_constraint(c) for c in partition)
    if not variables:
        if satisfies({}, partition):
            return {}
        raise NoSolution(f"no assignment satisfies {listing}", ())
    assignment: UseAssignment = {}
    touching: dict[str, list[UEq]] = defaultdict(list)
    for c in partition:
        for v in set(c.variables):
            touching[v].append(c)

    def consistent(name: str) -> bool:
        return all(
            c.left.evaluate(assignment) == c.right.evaluate(assignment)
            for c in touching[name]
            if all(v in assignment for v in c.variables)
        )

    values = tuple(Use)
    trail: list[tuple[str, int]] = []
    name, k = _next_variable(partition, assignment), 0
    while True:
        if k < len(values):
            assignment[name] = values[k]
            if consistent(name):
                trail.append((name, k))
                if len(assignment) == len(variables):
                    return assignment
                name, k = _next_variable(partition, assignment), 0
                continue
            del assignment[name]
            k += 1
            continue
        if not trail:
            raise NoSolution(
                f"no assignment satisfies {listing}", tuple(sorted(variables, key=var_key))
            )
        name, k = trail.pop()
        del assignment[name]
        k += 1


@log_execution_time(logger)
def solve_uses(
    ueqs: Iterable[UEq],
    max_search_vars: int = DEFAULT_MAX_SEARCH_VARS,
    omega_fallback: bool = False,
    minimal: bool = True,
) -> UseAssignment:
    """Find a minimal assignment of uses satisfying ``ueqs``.

    Variables mentioned by ``ueqs`` but left free by the search are set to 0.
    With ``minimal`` false the first assignment found is returned, whatever
    the group sizes; ``max_search_vars`` and ``omega_fallback`` are ignored.

    Raises:
        NoSolution: If some group of equations is unsatisfiable, or too large
            to search without ``omega_fallback``.
    """
    items = list(ueqs)
    reduced, substitutions = eliminate_determined(items)
    assignment: UseAssignment = {}
    partitions = partition_uses(reduced)
    for partition in partitions:
        if minimal:
            assignment.update(_solve_partition(partition, max_search_vars, omega_fallback))
        else:
            assignment.update(_satisfy_partition(partition))
    for name, by in reversed(substitutions):
        for v in by.variables:
            assignment.setdefault(v, Use.ZERO)
        assignment[name] = by.evaluate(assignment)
    for c in items:
        for v in c.variables:
            assignment.setdefault(v, Use.ZERO)
    logger.debug(
        "solved %d use equations in %d groups after eliminating %d variables",
        len(items),
        len(partitions),
        len(substitutions),
    )
    return assignment
