"""Type checking through reconstruction.

``g |- p`` is decided by generating the constraints of ``p`` and solving
them together with ``Delta(u) = g(u)`` for every free name ``u``: a solution
exists exactly when ``p`` is well typed in ``g``. A ground type enters the
constraint set as one fresh variable per node reachable from it, each
defined by an equation whose use slots are literals, so matching the
reconstructed types against ``g`` is carried out by the closure itself.

Variables that the closure leaves without a definition are completed along
the pinned types they are coherent with, so a recursive type in ``g`` whose
uses repeat every second unfolding can be split between two processes.
Should that fail, the plain completion is tried as well. Either way any
solution of the completed set solves the original one.
"""

import logging
from collections.abc import Iterable, Mapping

from linpi.constraints.exprs import (
    ChanT,
    Constraint,
    ConstraintSet,
    IntT,
    ProdT,
    SumT,
    TComb,
    TCoh,
    TEq,
    TVar,
    TypeExpr,
    UseExpr,
    render_constraint,
)
from linpi.constraints.generate import VarSupply, gen_expression, gen_process
from linpi.constraints.substitution import GroundSubstitution
from linpi.errors import NoSolution, UnboundName, Unsatisfiable
from linpi.solver.synthesis import solve
from linpi.syntax.ast import Expression, Name, Process
from linpi.syntax.names import free_names, free_names_expr
from linpi.types.store import ChanNode, IntNode, ProdNode, TypeId, TypeStore

logger = logging.getLogger(__name__)


def verify_solution(c: Iterable[Constraint], s: GroundSubstitution, store: TypeStore) -> bool:
    """Whether ``s`` solves every constraint of ``c``.

    Raises:
        NotCovering: If ``s`` leaves a variable of ``c`` unbound.
    """

    def ground(t: TypeExpr) -> TypeId:
        return s.type_of(t, store)

    for constraint in c:
        if isinstance(constraint, TEq):
            ok = store.type_equal(ground(constraint.left), ground(constraint.right))
        elif isinstance(constraint, TComb):
            joint = store.type_combine(ground(constraint.left), ground(constraint.right))
            ok = joint is not None and store.type_equal(ground(constraint.result), joint)
        elif isinstance(constraint, TCoh):
            ok = store.coherent(ground(constraint.left), ground(constraint.right))
        else:
            ok = s.use_of(constraint.left) == s.use_of(constraint.right)
        if not ok:
            logger.debug("not solved: %s", render_constraint(constraint))
            return False
    return True


class _Pinner:
    """Encodes ground types as variables defined by literal equations."""

    def __init__(self, store: TypeStore, supply: VarSupply) -> None:
        self.store = store
        self.supply = supply
        self.variables: dict[TypeId, TVar] = {}
        self.definitions: dict[str, TypeExpr] = {}
        self.pins = ConstraintSet()

    def pin(self, t: TypeId) -> TVar:
        fresh = [node for node in self.store.reachable(t) if node not in self.variables]
        for node in fresh:
            self.variables[node] = self.supply.fresh_type()
        for node in fresh:
            definition = self.expression(node)
            self.definitions[self.variables[node].name] = definition
            self.pins.add(TEq(self.variables[node], definition))
        return self.variables[t]

    def expression(self, t: TypeId) -> TypeExpr:
        node = self.store.node(t)
        if isinstance(node, IntNode):
            return IntT()
        if isinstance(node, ChanNode):
            return ChanT(UseExpr.lit(node.inp), UseExpr.lit(node.out), self.variables[node.payload])
        left, right = self.variables[node.left], self.variables[node.right]
        return ProdT(left, right) if isinstance(node, ProdNode) else SumT(left, right)


def _weakened(g: Mapping[Name, TypeId], used: frozenset[Name], store: TypeStore) -> bool:
    for u, t in g.items():
        if u not in used and not store.is_unlimited(t):
            logger.debug("%s is not used but its type is linear", u)
            return False
    return True


def _matches(
    c: ConstraintSet,
    pairs: list[tuple[TypeExpr, TypeId]],
    store: TypeStore,
    supply: VarSupply,
) -> bool:
    pinner = _Pinner(store, supply)
    for expr, t in pairs:
        pinner.pins.add(TEq(expr, pinner.pin(t)))
    attempts = [pinner.definitions, None] if pinner.definitions else [None]
    for templates in attempts:
        try:
            solution = solve(c, store, supply, pinner.pins, templates=templates, minimal=False)
        except (Unsatisfiable, NoSolution) as e:
            logger.debug("rejected: %s", e)
            continue
        if all(store.type_equal(solution.type_of(expr, store), t) for expr, t in pairs):
            return True
        logger.debug("solution differs from the given types")
    return False


def check_process(
    g: Mapping[Name, TypeId],
    p: Process,
    store: TypeStore,
    unbalanced_new: bool = False,
) -> bool:
    """Decide ``g |- p``.

    Names of ``g`` that ``p`` does not mention must have unlimited types.
    Any use assignment will do, so the search is not bounded.

    Raises:
        UnboundName: If a free name of ``p`` is missing from ``g``.
    """
    names = free_names(p)
    missing = sorted(u.text for u in names - g.keys())
    if missing:
        raise UnboundName(f"no type for {', '.join(missing)}")
    if not _weakened(g, names, store):
        return False
    supply = VarSupply()
    delta, c = gen_process(p, supply, unbalanced_new)
    pairs = [(delta[u], g[u]) for u in sorted(delta, key=lambda u: u.text)]
    return _matches(c, pairs, store, supply)


def check_expression(
    g: Mapping[Name, TypeId],
    e: Expression,
    t: TypeId,
    store: TypeStore,
) -> bool:
    """Decide ``g |- e : t``.

    Raises:
        UnboundName: If a free name of ``e`` is missing from ``g``.
    """
    names = free_names_expr(e)
    missing = sorted(u.text for u in names - g.keys())
    if missing:
        raise UnboundName(f"no type for {', '.join(missing)}")
    if not _weakened(g, names, store):
        return False
    supply = VarSupply()
    synthesized, delta, c = gen_expression(e, supply)
    pairs = [(delta[u], g[u]) for u in sorted(delta, key=lambda u: u.text)]
    pairs.append((synthesized, t))
    return _matches(c, pairs, store, supply)
