"""Closure of a constraint set under the deduction rules.

The type expressions of a constraint set (and all their subterms) are
interned and partitioned twice: ``eq`` classes for ``=`` and the coarser
``coh`` classes for ``~``. Merging two classes that both contain a
constructor term unifies those terms structurally, so the closure never
substitutes into expressions. Pairing the use slots of equated channels
produces the use equations, and a constructor clash inside a ``coh`` class
means the set has no solution.

Example:
    >>> state = close(ConstraintSet([TEq(TVar("a0"), IntT())]))
    >>> render_type_expr(state.eq_rep(TVar("a0")))
    'int'
"""

import logging
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Any, NamedTuple

from linpi.constraints.exprs import (
    ChanT,
    ConstraintSet,
    IntT,
    ProdT,
    SumT,
    TCoh,
    TComb,
    TEq,
    TVar,
    TypeExpr,
    UEq,
    UseExpr,
    is_proper,
    render_type_expr,
    var_key,
)
from linpi.errors import Unsatisfiable
from linpi.solver.unionfind import UnionFind
from linpi.utils.decorators import log_execution_time

logger = logging.getLogger(__name__)

_TAGS = {IntT: 0, ChanT: 1, ProdT: 2, SumT: 3}


def _use_key(u: UseExpr) -> tuple[Any, ...]:
    return (int(u.literal), tuple((var_key(name), times) for name, times in u.vars))


def order_key(t: TypeExpr) -> tuple[Any, ...]:
    """Sort key of the total order on type expressions: constructor terms before variables."""
    if isinstance(t, TVar):
        return (1, var_key(t.name))
    if isinstance(t, IntT):
        return (0, 0)
    if isinstance(t, ChanT):
        return (0, 1, order_key(t.payload), _use_key(t.inp), _use_key(t.out))
    return (0, _TAGS[type(t)], order_key(t.left), order_key(t.right))


def subterms(t: TypeExpr) -> tuple[TypeExpr, ...]:
    if isinstance(t, ChanT):
        return (t.payload,)
    if isinstance(t, (ProdT, SumT)):
        return (t.left, t.right)
    return ()


@dataclass
class CanonicalMap:
    """Chosen representative term id of every ``eq`` and ``coh`` class, keyed by class root."""

    eq_reps: dict[int, int] = field(default_factory=dict)
    coh_reps: dict[int, int] = field(default_factory=dict)


@dataclass
class ClosureState:
    terms: list[TypeExpr] = field(default_factory=list)
    index: dict[TypeExpr, int] = field(default_factory=dict)
    eq_classes: UnionFind = field(default_factory=UnionFind)
    coh_classes: UnionFind = field(default_factory=UnionFind)
    use_eqs: ConstraintSet = field(default_factory=ConstraintSet)
    comb_links: list[tuple[int, int, int]] = field(default_factory=list)
    canonical: CanonicalMap = field(default_factory=CanonicalMap)

    def term_id(self, t: TypeExpr) -> int:
        try:
            return self.index[t]
        except KeyError:
            message = f"{render_type_expr(t)} does not occur in the closed constraint set"
            raise KeyError(message) from None

    def eq_rep(self, t: TypeExpr) -> TypeExpr:
        root = self.eq_classes.find(self.term_id(t))
        return self.terms[self.canonical.eq_reps[root]]

    def coh_rep(self, t: TypeExpr) -> TypeExpr:
        root = self.coh_classes.find(self.term_id(t))
        return self.terms[self.canonical.coh_reps[root]]

    def eq_rep_of_id(self, i: int) -> TypeExpr:
        return self.terms[self.canonical.eq_reps[self.eq_classes.find(i)]]

    def type_vars(self) -> list[str]:
        return sorted((t.name for t in self.terms if isinstance(t, TVar)), key=var_key)

    def _classes(self, classes: UnionFind) -> list[list[TypeExpr]]:
        groups = [
            sorted((self.terms[i] for i in classes.members[root]), key=order_key)
            for root in classes.roots()
        ]
        return sorted(groups, key=lambda group: order_key(group[0]))

    def eq_partition(self) -> list[list[TypeExpr]]:
        """``eq`` classes with their members sorted, representative first."""
        return self._classes(self.eq_classes)

    def coh_partition(self) -> list[list[TypeExpr]]:
        return self._classes(self.coh_classes)


class Classification(NamedTuple):
    defined_eq: frozenset[str]
    undefined_eq: frozenset[str]
    defined_coh: frozenset[str]
    undefined_coh: frozenset[str]


class _Closer:
    def __init__(self) -> None:
        self.state = ClosureState()
        self.pending: deque[tuple[bool, int, int]] = deque()
        # constructor term of each class, keyed by class root
        self.eq_witness: dict[int, int] = {}
        self.coh_witness: dict[int, int] = {}

    def intern(self, t: TypeExpr) -> int:
        existing = self.state.index.get(t)
        if existing is not None:
            return existing
        for sub in subterms(t):
            self.intern(sub)
        i = len(self.state.terms)
        self.state.terms.append(t)
        self.state.index[t] = i
        self.state.eq_classes.add()
        self.state.coh_classes.add()
        if is_proper(t):
            self.eq_witness[i] = i
            self.coh_witness[i] = i
        return i

    def add(self, c: Any) -> None:
        if isinstance(c, TEq):
            self.pending.append((True, self.intern(c.left), self.intern(c.right)))
        elif isinstance(c, TCoh):
            self.pending.append((False, self.intern(c.left), self.intern(c.right)))
        elif isinstance(c, TComb):
            triple = (self.intern(c.result), self.intern(c.left), self.intern(c.right))
            self.state.comb_links.append(triple)
            self.pending.append((False, triple[0], triple[1]))
            self.pending.append((False, triple[0], triple[2]))
        elif isinstance(c, UEq):
            self.pair_uses(c.left, c.right)
        else:
            raise TypeError(f"not a constraint: {c!r}")

    def pair_uses(self, left: UseExpr, right: UseExpr) -> None:
        if left != right:
            self.state.use_eqs.add(UEq(left, right))

    def drain(self) -> None:
        while self.pending:
            equal, a, b = self.pending.popleft()
            if equal:
                self.merge_eq(a, b)
            else:
                self.merge_coh(a, b)

    def merge_eq(self, a: int, b: int) -> None:
        merged = self.state.eq_classes.union(a, b)
        if merged is None:
            return
        root, absorbed = merged
        self.pending.append((False, a, b))
        witness = self.eq_witness.pop(absorbed, None)
        if witness is None:
            return
        if root not in self.eq_witness:
            self.eq_witness[root] = witness
            return
        self.unify(self.eq_witness[root], witness)

    def merge_coh(self, a: int, b: int) -> None:
        merged = self.state.coh_classes.union(a, b)
        if merged is None:
            return
        root, absorbed = merged
        witness = self.coh_witness.pop(absorbed, None)
        if witness is None:
            return
        if root not in self.coh_witness:
            self.coh_witness[root] = witness
            return
        self.cohere(self.coh_witness[root], witness)

    def clash(self, x: TypeExpr, y: TypeExpr) -> Unsatisfiable:
        return Unsatisfiable(render_type_expr(x), render_type_expr(y))

    def unify(self, i: int, j: int) -> None:
        x, y = self.state.terms[i], self.state.terms[j]
        if type(x) is not type(y):
            raise self.clash(x, y)
        if isinstance(x, ChanT) and isinstance(y, ChanT):
            self.pending.append((True, self.intern(x.payload), self.intern(y.payload)))
            self.pair_uses(x.inp, y.inp)
            self.pair_uses(x.out, y.out)
        elif isinstance(x, (ProdT, SumT)) and isinstance(y, (ProdT, SumT)):
            self.pending.append((True, self.intern(x.left), self.intern(y.left)))
            self.pending.append((True, self.intern(x.right), self.intern(y.right)))

    def cohere(self, i: int, j: int) -> None:
        x, y = self.state.terms[i], self.state.terms[j]
        if type(x) is not type(y):
            raise self.clash(x, y)
        if isinstance(x, ChanT) and isinstance(y, ChanT):
            # coherent channels carry equal payloads
            self.pending.append((True, self.intern(x.payload), self.intern(y.payload)))
        elif isinstance(x, (ProdT, SumT)) and isinstance(y, (ProdT, SumT)):
            self.pending.append((False, self.intern(x.left), self.intern(y.left)))
            self.pending.append((False, self.intern(x.right), self.intern(y.right)))

    def finish(self) -> ClosureState:
        state = self.state
        key = [order_key(t) for t in state.terms]
        for classes, reps in (
            (state.eq_classes, state.canonical.eq_reps),
            (state.coh_classes, state.canonical.coh_reps),
        ):
            for root in classes.roots():
                reps[root] = min(classes.members[root], key=key.__getitem__)
        return state


@log_execution_time(logger)
def close(c: Iterable[Any]) -> ClosureState:
    """Close ``c`` under the deduction rules.

    Raises:
        Unsatisfiable: If two coherent constructor terms have different
            topmost constructors.
    """
    closer = _Closer()
    for constraint in c:
        closer.add(constraint)
    closer.drain()
    state = closer.finish()
    logger.debug(
        "closure: %d terms, %d eq classes, %d coh classes, %d use equations",
        len(state.terms),
        len(state.canonical.eq_reps),
        len(state.canonical.coh_reps),
        len(state.use_eqs),
    )
    return state


def classify_variables(s: ClosureState) -> Classification:
    """Split the type variables of ``s`` by whether their classes hold a constructor term."""
    defined_eq: set[str] = set()
    defined_coh: set[str] = set()
    names = s.type_vars()
    for name in names:
        if is_proper(s.eq_rep(TVar(name))):
            defined_eq.add(name)
        if is_proper(s.coh_rep(TVar(name))):
            defined_coh.add(name)
    return Classification(
        frozenset(defined_eq),
        frozenset(names) - defined_eq,
        frozenset(defined_coh),
        frozenset(names) - defined_coh,
    )