"""Syntax-directed constraint generation.

Every name occurrence gets its own type variable; environments of
subterms are joined with :func:`combine_envs` (sequential use, emitting
``alpha = T1 + T2`` for shared names) or :func:`merge_envs` (alternative
branches, emitting ``T1 = T2``). Weakening is applied at binders that the
body does not use and before merging branches with different domains, each
time with a fresh variable constrained to be unlimited.

Example:
    >>> delta, constraints = gen_process(parse_process("a!3"), VarSupply())
    >>> [render_constraint(c) for c in constraints]
    ['a0 = [int]{2r0,1+r1}']
"""

import logging
from collections.abc import Mapping

from linpi.constraints.exprs import (
    ChanT,
    ConstraintSet,
    IntT,
    ProdT,
    SumT,
    TComb,
    TEq,
    TVar,
    TypeExpr,
    UseExpr,
    un,
)
from linpi.errors import DomainMismatch
from linpi.syntax.ast import (
    Add,
    Case,
    Expression,
    Fst,
    Idle,
    Inl,
    Inr,
    Input,
    IntLit,
    Name,
    NameRef,
    New,
    Output,
    Pair,
    Par,
    Process,
    Repl,
    Snd,
    Split,
)
from linpi.types.uses import Use

logger = logging.getLogger(__name__)

SynthEnv = dict[Name, TypeExpr]

ONE = UseExpr.lit(Use.ONE)


class VarSupply:
    """Source of fresh type and use variables.

    ``instance(alpha, beta)`` is injective and stable: asking twice for the
    same pair returns the same variable.
    """

    def __init__(self) -> None:
        self.next_type_index = 0
        self.next_use_index = 0
        self.inst_names: dict[tuple[str, str], str] = {}

    def fresh_type(self) -> TVar:
        name = f"a{self.next_type_index}"
        self.next_type_index += 1
        return TVar(name)

    def fresh_use(self) -> UseExpr:
        name = f"r{self.next_use_index}"
        self.next_use_index += 1
        return UseExpr.var(name)

    def instance(self, alpha: str, beta: str) -> TVar:
        key = (alpha, beta)
        if key not in self.inst_names:
            self.inst_names[key] = f"i({alpha},{beta})"
        return TVar(self.inst_names[key])


def _combine_into(
    d1: Mapping[Name, TypeExpr], d2: Mapping[Name, TypeExpr], supply: VarSupply, out: ConstraintSet
) -> SynthEnv:
    combined: SynthEnv = dict(d1)
    for u, t in d2.items():
        if u in combined:
            alpha = supply.fresh_type()
            out.add(TComb(alpha, combined[u], t))
            combined[u] = alpha
        else:
            combined[u] = t
    return combined


def combine_envs(
    d1: Mapping[Name, TypeExpr], d2: Mapping[Name, TypeExpr], supply: VarSupply
) -> tuple[SynthEnv, ConstraintSet]:
    """``d1 + d2``: shared names get a fresh variable that is the combination of both types."""
    constraints = ConstraintSet()
    return _combine_into(d1, d2, supply, constraints), constraints


def merge_envs(
    d1: Mapping[Name, TypeExpr], d2: Mapping[Name, TypeExpr]
) -> tuple[SynthEnv, ConstraintSet]:
    """``d1 merged with d2``: same domain, pairwise equal types.

    Raises:
        DomainMismatch: If the domains differ.
    """
    if d1.keys() != d2.keys():
        names = sorted(u.text for u in d1.keys() ^ d2.keys())
        raise DomainMismatch(f"cannot merge environments differing on {', '.join(names)}")
    constraints = ConstraintSet(TEq(t, d2[u]) for u, t in d1.items())
    return dict(d1), constraints


class _Generator:
    def __init__(self, supply: VarSupply, unbalanced_new: bool) -> None:
        self.supply = supply
        self.unbalanced_new = unbalanced_new
        self.constraints = ConstraintSet()

    def weaken(self) -> TVar:
        alpha = self.supply.fresh_type()
        self.constraints.add(un(alpha))
        return alpha

    def bind(self, env: SynthEnv, binder: Name) -> TypeExpr:
        """Remove ``binder`` from ``env``, weakening if the body never used it."""
        t = env.pop(binder, None)
        return t if t is not None else self.weaken()

    def require_int(self, t: TypeExpr) -> None:
        if not isinstance(t, IntT):
            self.constraints.add(TEq(t, IntT()))

    def expression(self, e: Expression) -> tuple[TypeExpr, SynthEnv]:
        if isinstance(e, IntLit):
            return IntT(), {}
        if isinstance(e, NameRef):
            alpha = self.supply.fresh_type()
            return alpha, {e.id: alpha}
        if isinstance(e, Pair):
            t1, d1 = self.expression(e.fst)
            t2, d2 = self.expression(e.snd)
            return ProdT(t1, t2), _combine_into(d1, d2, self.supply, self.constraints)
        if isinstance(e, (Fst, Snd)):
            t, delta = self.expression(e.arg)
            alpha, beta = self.supply.fresh_type(), self.supply.fresh_type()
            self.constraints.add(TEq(t, ProdT(alpha, beta)))
            if isinstance(e, Fst):
                self.constraints.add(un(beta))
                return alpha, delta
            self.constraints.add(un(alpha))
            return beta, delta
        if isinstance(e, Inl):
            t, delta = self.expression(e.arg)
            return SumT(t, self.supply.fresh_type()), delta
        if isinstance(e, Inr):
            t, delta = self.expression(e.arg)
            return SumT(self.supply.fresh_type(), t), delta
        if isinstance(e, Add):
            t1, d1 = self.expression(e.lhs)
            t2, d2 = self.expression(e.rhs)
            delta = _combine_into(d1, d2, self.supply, self.constraints)
            self.require_int(t1)
            self.require_int(t2)
            return IntT(), delta
        raise TypeError(f"not an expression: {e!r}")

    def process(self, p: Process) -> SynthEnv:  # noqa: C901
        if isinstance(p, Idle):
            return {}
        if isinstance(p, Input):
            t, d1 = self.expression(p.subject)
            rho1, rho2 = self.supply.fresh_use(), self.supply.fresh_use()
            d2 = self.process(p.body)
            s = self.bind(d2, p.binder)
            delta = _combine_into(d1, d2, self.supply, self.constraints)
            self.constraints.add(TEq(t, ChanT(ONE + rho1, rho2.doubled(), s)))
            return delta
        if isinstance(p, Output):
            t, d1 = self.expression(p.subject)
            s, d2 = self.expression(p.object)
            rho1, rho2 = self.supply.fresh_use(), self.supply.fresh_use()
            delta = _combine_into(d1, d2, self.supply, self.constraints)
            self.constraints.add(TEq(t, ChanT(rho1.doubled(), ONE + rho2, s)))
            return delta
        if isinstance(p, Par):
            d1 = self.process(p.left)
            d2 = self.process(p.right)
            return _combine_into(d1, d2, self.supply, self.constraints)
        if isinstance(p, Repl):
            delta = self.process(p.body)
            return _combine_into(delta, delta, self.supply, self.constraints)
        if isinstance(p, New):
            delta = self.process(p.body)
            t = self.bind(delta, p.binder)
            alpha = self.supply.fresh_type()
            rho = self.supply.fresh_use()
            rho_out = self.supply.fresh_use() if self.unbalanced_new else rho
            self.constraints.add(TEq(t, ChanT(rho, rho_out, alpha)))
            return delta
        if isinstance(p, Case):
            t, d1 = self.expression(p.scrutinee)
            left = self.process(p.left_body)
            t_left = self.bind(left, p.left_binder)
            right = self.process(p.right_body)
            t_right = self.bind(right, p.right_binder)
            self.equalize(left, right)
            d2, merged = merge_envs(left, right)
            self.constraints.update(merged)
            delta = _combine_into(d1, d2, self.supply, self.constraints)
            self.constraints.add(TEq(t, SumT(t_left, t_right)))
            return delta
        if isinstance(p, Split):
            t, d1 = self.expression(p.scrutinee)
            d2 = self.process(p.body)
            t_snd = self.bind(d2, p.snd_binder)
            t_fst = self.weaken() if p.fst_binder == p.snd_binder else self.bind(d2, p.fst_binder)
            delta = _combine_into(d1, d2, self.supply, self.constraints)
            self.constraints.add(TEq(t, ProdT(t_fst, t_snd)))
            return delta
        raise TypeError(f"not a process: {p!r}")

    def equalize(self, left: SynthEnv, right: SynthEnv) -> None:
        """Weaken both branch environments to the union of their domains."""
        for u in list(left):
            if u not in right:
                right[u] = self.weaken()
        for u in list(right):
            if u not in left:
                left[u] = self.weaken()


def gen_expression(
    e: Expression, supply: VarSupply
) -> tuple[TypeExpr, SynthEnv, ConstraintSet]:
    generator = _Generator(supply, unbalanced_new=False)
    t, delta = generator.expression(e)
    return t, delta, generator.constraints


def gen_process(
    p: Process, supply: VarSupply, unbalanced_new: bool = False
) -> tuple[SynthEnv, ConstraintSet]:
    """Synthesize the environment and constraint set of ``p``.

    Args:
        p: Process to analyze.
        supply: Source of fresh variables; shared with the solver later on.
        unbalanced_new: Give restricted channels independent input and
            output use variables instead of a single shared one.
    """
    generator = _Generator(supply, unbalanced_new)
    delta = generator.process(p)
    logger.debug(
        "generated %d constraints for %d free names", len(generator.constraints), len(delta)
    )
    return delta, generator.constraints
