from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from linpi.constraints.exprs import (
    ChanT,
    ConstraintSet,
    IntT,
    ProdT,
    TVar,
    TypeExpr,
    UseExpr,
)
from linpi.errors import NotCovering
from linpi.syntax.ast import Name
from linpi.types.env import TypeEnv
from linpi.types.store import TypeId, TypeStore
from linpi.types.uses import Use


@dataclass
class GroundSubstitution:
    """Maps type variables to types of a store and use variables to uses."""

    type_bindings: dict[str, TypeId] = field(default_factory=dict)
    use_bindings: dict[str, Use] = field(default_factory=dict)

    def use_of(self, u: UseExpr) -> Use:
        try:
            return u.evaluate(self.use_bindings)
        except KeyError as e:
            raise NotCovering(f"use variable {e.args[0]} is unbound") from e

    def type_of(self, t: TypeExpr, store: TypeStore) -> TypeId:
        if isinstance(t, TVar):
            if t.name not in self.type_bindings:
                raise NotCovering(f"type variable {t.name} is unbound")
            return self.type_bindings[t.name]
        if isinstance(t, IntT):
            return store.int_type()
        if isinstance(t, ChanT):
            payload = self.type_of(t.payload, store)
            return store.channel(self.use_of(t.inp), self.use_of(t.out), payload)
        left, right = self.type_of(t.left, store), self.type_of(t.right, store)
        return store.product(left, right) if isinstance(t, ProdT) else store.sum(left, right)

    def covers(self, constraints: ConstraintSet) -> bool:
        return set(constraints.type_vars()) <= self.type_bindings.keys() and set(
            constraints.use_vars()
        ) <= self.use_bindings.keys()

    def missing(self, constraints: ConstraintSet) -> list[str]:
        return [v for v in constraints.type_vars() if v not in self.type_bindings] + [
            v for v in constraints.use_vars() if v not in self.use_bindings
        ]

    def apply_env(self, delta: Mapping[Name, TypeExpr], store: TypeStore) -> TypeEnv:
        """``sigma(delta)``"""
        return {u: self.type_of(t, store) for u, t in delta.items()}

    def restrict(self, type_vars: Iterable[str], use_vars: Iterable[str]) -> "GroundSubstitution":
        types, uses = set(type_vars), set(use_vars)
        return GroundSubstitution(
            {v: t for v, t in self.type_bindings.items() if v in types},
            {v: k for v, k in self.use_bindings.items() if v in uses},
        )
