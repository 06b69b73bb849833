"""Defaulting and completion.

A variable whose ``~`` class holds no constructor term is unconstrained and
defaults to ``int``. A variable whose ``=`` class holds none is then given a
definition by instantiating the representative of its ``~`` class: every
channel gets fresh use variables and every variable ``b`` becomes the
instance variable ``i(a,b)``, itself defined the same way. There are at most
as many instance variables as pairs of variables, so completion terminates.

Instantiating representatives gives every recursive instance a period of
one unfolding. When ground types are known for some variables (the types a
checker pins), the ``~`` class of an undefined variable may hold one of
them; the instance then follows that type's own equations instead, so
alternating uses such as those of a list split into odd and even positions
can still be expressed.
"""

import logging
from collections import deque
from collections.abc import Mapping
from typing import Optional

from linpi.constraints.exprs import (
    ChanT,
    ConstraintSet,
    IntT,
    ProdT,
    SumT,
    TEq,
    TVar,
    TypeExpr,
    is_proper,
    var_key,
)
from linpi.constraints.generate import VarSupply
from linpi.solver.closure import ClosureState, classify_variables, subterms
from linpi.utils.decorators import log_execution_time

logger = logging.getLogger(__name__)

Templates = Mapping[str, TypeExpr]


def default_undefined(s: ClosureState) -> ConstraintSet:
    """``a = int`` for every variable whose ``~`` class has no constructor term."""
    undefined = classify_variables(s).undefined_coh
    return ConstraintSet(TEq(TVar(name), IntT()) for name in sorted(undefined, key=var_key))


class _Instantiator:
    def __init__(self, supply: VarSupply) -> None:
        self.supply = supply
        self.pending: deque[tuple[str, str]] = deque()
        self.seen: set[tuple[str, str]] = set()

    def instance(self, alpha: str, beta: str) -> TVar:
        if (alpha, beta) not in self.seen:
            self.seen.add((alpha, beta))
            self.pending.append((alpha, beta))
        return self.supply.instance(alpha, beta)

    def inst(self, alpha: str, t: TypeExpr) -> TypeExpr:
        if isinstance(t, TVar):
            return self.instance(alpha, t.name)
        if isinstance(t, IntT):
            return t
        if isinstance(t, ChanT):
            return ChanT(self.supply.fresh_use(), self.supply.fresh_use(), t.payload)
        if isinstance(t, ProdT):
            return ProdT(self.inst(alpha, t.left), self.inst(alpha, t.right))
        return SumT(self.inst(alpha, t.left), self.inst(alpha, t.right))


def inst(alpha: str, t: TypeExpr, supply: VarSupply) -> TypeExpr:
    """Instantiate ``t`` for ``alpha``: fresh channel uses, ``b`` becomes ``i(alpha,b)``."""
    return _Instantiator(supply).inst(alpha, t)


def _reach(start: str, templates: Templates) -> int:
    seen: set[str] = set()
    stack = [start]
    while stack:
        name = stack.pop()
        if name in seen:
            continue
        seen.add(name)
        stack.extend(
            t.name for t in subterms(templates[name]) if isinstance(t, TVar) and t.name in templates
        )
    return len(seen)


def choose_templates(s: ClosureState, templates: Templates) -> dict[int, str]:
    """Template of every ``~`` class holding a variable of ``templates``, keyed by class root.

    The variable reaching the most equations wins, so the instance unfolds
    as far as the longest known period; ties go to the smallest name.
    """
    chosen: dict[int, tuple[int, str]] = {}
    for name in sorted(templates, key=var_key):
        i = s.index.get(TVar(name))
        if i is None:
            continue
        root = s.coh_classes.find(i)
        reach = _reach(name, templates)
        if root not in chosen or reach > chosen[root][0]:
            chosen[root] = (reach, name)
    return {root: name for root, (_, name) in chosen.items()}


@log_execution_time(logger)
def complete(
    c: ConstraintSet,
    s: ClosureState,
    supply: VarSupply,
    templates: Optional[Templates] = None,
) -> ConstraintSet:
    """Extend ``c`` so that every type variable is defined by a constructor term.

    ``s`` is the closure of ``c``; variables with an undefined ``~`` class must
    have been defaulted already.

    Args:
        c: Constraint set to complete.
        s: Closure of ``c``.
        supply: Source of the fresh use and instance variables.
        templates: Variables with their defining terms, each term built from
            other variables of the mapping. An undefined variable whose ``~``
            class holds one of them is instantiated along its equations.
    """
    templates = templates or {}
    chosen = choose_templates(s, templates)
    completed = ConstraintSet(c)
    instantiator = _Instantiator(supply)
    templated: set[str] = set()
    for alpha in sorted(classify_variables(s).undefined_eq, key=var_key):
        template = chosen.get(s.coh_classes.find(s.term_id(TVar(alpha))))
        if template is None:
            completed.add(TEq(TVar(alpha), instantiator.instance(alpha, alpha)))
        else:
            templated.add(alpha)
            completed.add(TEq(TVar(alpha), instantiator.instance(alpha, template)))
        while instantiator.pending:
            owner, beta = instantiator.pending.popleft()
            if owner in templated:
                rep = templates[beta]
            else:
                rep = s.coh_rep(TVar(beta))
                if not is_proper(rep):
                    logger.debug("%s has no constructor term, left for defaulting", beta)
                    continue
            completed.add(TEq(supply.instance(owner, beta), instantiator.inst(owner, rep)))
    if templated:
        logger.debug("%d variables instantiated from known types", len(templated))
    logger.debug("completion added %d constraints", len(completed) - len(c))
    return completed
