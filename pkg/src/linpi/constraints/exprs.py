"""Use expressions, type expressions and constraints over them.

Type variables are named ``a0, a1, ...``, use variables ``r0, r1, ...`` and
instantiation variables ``i(a, b)``; :func:`var_key` orders them numerically.

Example:
    >>> chan = ChanT(UseExpr.lit(Use.ONE) + UseExpr.var("r1"), UseExpr.var("r2").doubled(), IntT())
    >>> render_type_expr(chan)
    '[int]{1+r1,2r2}'
"""

import re
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from typing import Union

from linpi.types.uses import Use, use_add

_NUMBERED = re.compile(r"^[ar](\d+)$")


def var_key(name: str) -> tuple[int, Union[int, str]]:
    match = _NUMBERED.match(name)
    if match:
        return (0, int(match.group(1)))
    if name.startswith("i("):
        return (1, name)
    return (2, name)


@dataclass(frozen=True)
class UseExpr:
    """``literal + sum of variables``; a variable added to itself has multiplicity 2."""

    literal: Use = Use.ZERO
    vars: tuple[tuple[str, int], ...] = ()

    @classmethod
    def lit(cls, use: Use) -> "UseExpr":
        return cls(use, ())

    @classmethod
    def var(cls, name: str) -> "UseExpr":
        return cls(Use.ZERO, ((name, 1),))

    def __add__(self, other: "UseExpr") -> "UseExpr":
        counts = dict(self.vars)
        for name, times in other.vars:
            counts[name] = min(2, counts.get(name, 0) + times)
        return UseExpr(
            use_add(self.literal, other.literal),
            tuple(sorted(counts.items(), key=lambda item: var_key(item[0]))),
        )

    def doubled(self) -> "UseExpr":
        return self + self

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.vars)

    def is_literal(self) -> bool:
        return not self.vars

    def evaluate(self, uses: Mapping[str, Use]) -> Use:
        """Value under ``uses``; raises ``KeyError`` for an unbound variable."""
        total = self.literal
        for name, times in self.vars:
            for _ in range(times):
                total = use_add(total, uses[name])
        return total

    def replace(self, name: str, by: "UseExpr") -> "UseExpr":
        counts = dict(self.vars)
        times = counts.pop(name, 0)
        if not times:
            return self
        rest = UseExpr(self.literal, tuple(sorted(counts.items(), key=lambda i: var_key(i[0]))))
        return rest + (by.doubled() if times == 2 else by)

    def __str__(self) -> str:
        parts = [str(self.literal)] if self.literal is not Use.ZERO else []
        parts.extend(name if times == 1 else f"2{name}" for name, times in self.vars)
        return "+".join(parts) or "0"


# Type expressions


@dataclass(frozen=True)
class TVar:
    name: str


@dataclass(frozen=True)
class IntT:
    pass


@dataclass(frozen=True)
class ChanT:
    inp: UseExpr
    out: UseExpr
    payload: "TypeExpr"


@dataclass(frozen=True)
class ProdT:
    left: "TypeExpr"
    right: "TypeExpr"


@dataclass(frozen=True)
class SumT:
    left: "TypeExpr"
    right: "TypeExpr"


TypeExpr = Union[TVar, IntT, ChanT, ProdT, SumT]


def is_proper(t: TypeExpr) -> bool:
    return not isinstance(t, TVar)


def type_vars_of(t: TypeExpr) -> Iterator[str]:
    if isinstance(t, TVar):
        yield t.name
    elif isinstance(t, ChanT):
        yield from type_vars_of(t.payload)
    elif isinstance(t, (ProdT, SumT)):
        yield from type_vars_of(t.left)
        yield from type_vars_of(t.right)


def use_vars_of(t: TypeExpr) -> Iterator[str]:
    if isinstance(t, ChanT):
        yield from t.inp.variables
        yield from t.out.variables
        yield from use_vars_of(t.payload)
    elif isinstance(t, (ProdT, SumT)):
        yield from use_vars_of(t.left)
        yield from use_vars_of(t.right)


# Constraints


@dataclass(frozen=True)
class TEq:
    """``left = right``"""

    left: TypeExpr
    right: TypeExpr


@dataclass(frozen=True)
class TComb:
    """``result = left + right``"""

    result: TypeExpr
    left: TypeExpr
    right: TypeExpr


@dataclass(frozen=True)
class TCoh:
    """``left ~ right``"""

    left: TypeExpr
    right: TypeExpr


@dataclass(frozen=True)
class UEq:
    left: UseExpr
    right: UseExpr

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(dict.fromkeys(self.left.variables + self.right.variables))


Constraint = Union[TEq, TComb, TCoh, UEq]


def un(t: TypeExpr) -> TComb:
    """``t`` is unlimited: ``t = t + t``."""
    return TComb(t, t, t)


def type_exprs_of(c: Constraint) -> tuple[TypeExpr, ...]:
    if isinstance(c, TComb):
        return (c.result, c.left, c.right)
    if isinstance(c, (TEq, TCoh)):
        return (c.left, c.right)
    return ()


class ConstraintSet:
    """Insertion-ordered set of constraints."""

    def __init__(self, constraints: Iterable[Constraint] = ()) -> None:
        self._items: dict[Constraint, None] = dict.fromkeys(constraints)

    def add(self, c: Constraint) -> None:
        self._items[c] = None

    def update(self, constraints: Iterable[Constraint]) -> None:
        for c in constraints:
            self._items[c] = None

    def __or__(self, other: Iterable[Constraint]) -> "ConstraintSet":
        joined = ConstraintSet(self)
        joined.update(other)
        return joined

    def __iter__(self) -> Iterator[Constraint]:
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __contains__(self, c: object) -> bool:
        return c in self._items

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ConstraintSet):
            return NotImplemented
        return self._items.keys() == other._items.keys()

    def __repr__(self) -> str:
        return f"ConstraintSet({list(self._items)!r})"

    def type_vars(self) -> list[str]:
        found: dict[str, None] = {}
        for c in self:
            for t in type_exprs_of(c):
                found.update(dict.fromkeys(type_vars_of(t)))
        return sorted(found, key=var_key)

    def use_vars(self) -> list[str]:
        found: dict[str, None] = {}
        for c in self:
            if isinstance(c, UEq):
                found.update(dict.fromkeys(c.variables))
            for t in type_exprs_of(c):
                found.update(dict.fromkeys(use_vars_of(t)))
        return sorted(found, key=var_key)


# Rendering


def _level(t: TypeExpr) -> int:
    if isinstance(t, SumT):
        return 2
    if isinstance(t, ProdT):
        return 1
    return 0


def render_type_expr(t: TypeExpr) -> str:
    if isinstance(t, TVar):
        return t.name
    if isinstance(t, IntT):
        return "int"
    if isinstance(t, ChanT):
        return f"[{render_type_expr(t.payload)}]{{{t.inp},{t.out}}}"
    left, right = render_type_expr(t.left), render_type_expr(t.right)
    if _level(t.left) > 0:
        left = f"({left})"
    if _level(t.right) > _level(t):
        right = f"({right})"
    operator = "*" if isinstance(t, ProdT) else "(+)"
    return f"{left} {operator} {right}"


def render_use_expr(u: UseExpr) -> str:
    return str(u)


def render_constraint(c: Constraint) -> str:
    if isinstance(c, TEq):
        return f"{render_type_expr(c.left)} = {render_type_expr(c.right)}"
    if isinstance(c, TComb):
        return (
            f"{render_type_expr(c.result)} = "
            f"{render_type_expr(c.left)} + {render_type_expr(c.right)}"
        )
    if isinstance(c, TCoh):
        return f"{render_type_expr(c.left)} ~ {render_type_expr(c.right)}"
    return f"{c.left} = {c.right}"
