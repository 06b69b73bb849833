"""Free names, capture-avoiding substitution and alpha-equivalence."""

from collections.abc import Iterable
from typing import Optional

from linpi.errors import NotAValue
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
    is_value,
)


def free_names_expr(e: Expression) -> frozenset[Name]:
    if isinstance(e, IntLit):
        return frozenset()
    if isinstance(e, NameRef):
        return frozenset((e.id,))
    if isinstance(e, (Pair, Add)):
        left, right = (e.fst, e.snd) if isinstance(e, Pair) else (e.lhs, e.rhs)
        return free_names_expr(left) | free_names_expr(right)
    return free_names_expr(e.arg)


def free_names(p: Process) -> frozenset[Name]:
    if isinstance(p, Idle):
        return frozenset()
    if isinstance(p, Input):
        return free_names_expr(p.subject) | (free_names(p.body) - {p.binder})
    if isinstance(p, Output):
        return free_names_expr(p.subject) | free_names_expr(p.object)
    if isinstance(p, Par):
        return free_names(p.left) | free_names(p.right)
    if isinstance(p, Repl):
        return free_names(p.body)
    if isinstance(p, New):
        return free_names(p.body) - {p.binder}
    if isinstance(p, Case):
        return (
            free_names_expr(p.scrutinee)
            | (free_names(p.left_body) - {p.left_binder})
            | (free_names(p.right_body) - {p.right_binder})
        )
    if isinstance(p, Split):
        return free_names_expr(p.scrutinee) | (
            free_names(p.body) - {p.fst_binder, p.snd_binder}
        )
    raise TypeError(f"not a process: {p!r}")


def fresh_text(base: str, avoid: Iterable[str]) -> str:
    """Prime ``base`` until it differs from every identifier in ``avoid``."""
    taken = set(avoid)
    candidate = base
    while candidate in taken:
        candidate += "'"
    return candidate


def substitute_expr(e: Expression, x: Name, v: Expression) -> Expression:
    if isinstance(e, IntLit):
        return e
    if isinstance(e, NameRef):
        return v if e.id == x else e
    if isinstance(e, Pair):
        return Pair(substitute_expr(e.fst, x, v), substitute_expr(e.snd, x, v))
    if isinstance(e, Add):
        return Add(substitute_expr(e.lhs, x, v), substitute_expr(e.rhs, x, v))
    return type(e)(substitute_expr(e.arg, x, v))


def substitute(p: Process, x: Name, v: Expression) -> Process:
    """Replace the free occurrences of ``x`` in ``p`` with the value ``v``.

    Bound names whose spelling clashes with a free name of ``v`` are renamed,
    so the result never rebinds anything ``v`` refers to.

    Raises:
        NotAValue: If ``v`` is not a value.
    """
    if not is_value(v):
        raise NotAValue(f"cannot substitute a non-value expression {v!r}")
    return _subst(p, x, v)


def _subst(p: Process, x: Name, v: Expression) -> Process:
    if isinstance(p, Idle):
        return p
    if isinstance(p, Output):
        return Output(substitute_expr(p.subject, x, v), substitute_expr(p.object, x, v))
    if isinstance(p, Par):
        return Par(_subst(p.left, x, v), _subst(p.right, x, v))
    if isinstance(p, Repl):
        return Repl(_subst(p.body, x, v))
    if isinstance(p, Input):
        binder, body = _under_binder(p.binder, p.body, x, v)
        return Input(substitute_expr(p.subject, x, v), binder, body)
    if isinstance(p, New):
        binder, body = _under_binder(p.binder, p.body, x, v)
        return New(binder, body)
    if isinstance(p, Case):
        left_binder, left_body = _under_binder(p.left_binder, p.left_body, x, v)
        right_binder, right_body = _under_binder(p.right_binder, p.right_body, x, v)
        scrutinee = substitute_expr(p.scrutinee, x, v)
        return Case(scrutinee, left_binder, left_body, right_binder, right_body)
    if isinstance(p, Split):
        scrutinee = substitute_expr(p.scrutinee, x, v)
        if x in (p.fst_binder, p.snd_binder):
            return Split(scrutinee, p.fst_binder, p.snd_binder, p.body)
        fst_binder, body = _rename_if_capturing(p.fst_binder, p.body, x, v, (p.snd_binder,))
        snd_binder, body = _rename_if_capturing(p.snd_binder, body, x, v, (fst_binder,))
        return Split(scrutinee, fst_binder, snd_binder, _subst(body, x, v))
    raise TypeError(f"not a process: {p!r}")


def _under_binder(binder: Name, body: Process, x: Name, v: Expression) -> tuple[Name, Process]:
    if binder == x:
        return binder, body
    binder, body = _rename_if_capturing(binder, body, x, v, ())
    return binder, _subst(body, x, v)


def _rename_if_capturing(
    binder: Name, body: Process, x: Name, v: Expression, siblings: Iterable[Name]
) -> tuple[Name, Process]:
    clashing = {n.text for n in free_names_expr(v)}
    if binder.text not in clashing or x not in free_names(body):
        return binder, body
    avoid = clashing | {n.text for n in free_names(body)} | {x.text}
    avoid |= {s.text for s in siblings}
    renamed = Name(binder.kind, fresh_text(binder.text, avoid))
    return renamed, _subst(body, binder, NameRef(renamed))


def alpha_equal(p: Process, q: Process) -> bool:
    """True iff ``p`` and ``q`` differ only in the spelling of bound names."""
    return _alpha(p, q, {}, {}, 0)


def _alpha_name(a: Name, b: Name, left: dict[Name, int], right: dict[Name, int]) -> bool:
    level_a: Optional[int] = left.get(a)
    level_b: Optional[int] = right.get(b)
    if level_a is None and level_b is None:
        return a == b
    return level_a == level_b


def _alpha_expr(
    e: Expression, f: Expression, left: dict[Name, int], right: dict[Name, int]
) -> bool:
    if type(e) is not type(f):
        return False
    if isinstance(e, IntLit):
        return e.value == f.value
    if isinstance(e, NameRef):
        return _alpha_name(e.id, f.id, left, right)
    if isinstance(e, Pair):
        return _alpha_expr(e.fst, f.fst, left, right) and _alpha_expr(e.snd, f.snd, left, right)
    if isinstance(e, Add):
        return _alpha_expr(e.lhs, f.lhs, left, right) and _alpha_expr(e.rhs, f.rhs, left, right)
    return _alpha_expr(e.arg, f.arg, left, right)


def _bind(env: dict[Name, int], binders: Iterable[Name], level: int) -> dict[Name, int]:
    extended = dict(env)
    for offset, binder in enumerate(binders):
        extended[binder] = level + offset
    return extended


def _alpha(  # noqa: C901
    p: Process, q: Process, left: dict[Name, int], right: dict[Name, int], level: int
) -> bool:
    if type(p) is not type(q):
        return False
    if isinstance(p, Idle):
        return True
    if isinstance(p, Output):
        return _alpha_expr(p.subject, q.subject, left, right) and _alpha_expr(
            p.object, q.object, left, right
        )
    if isinstance(p, Par):
        return _alpha(p.left, q.left, left, right, level) and _alpha(
            p.right, q.right, left, right, level
        )
    if isinstance(p, Repl):
        return _alpha(p.body, q.body, left, right, level)
    if isinstance(p, Input):
        return _alpha_expr(p.subject, q.subject, left, right) and _alpha(
            p.body,
            q.body,
            _bind(left, [p.binder], level),
            _bind(right, [q.binder], level),
            level + 1,
        )
    if isinstance(p, New):
        return _alpha(
            p.body,
            q.body,
            _bind(left, [p.binder], level),
            _bind(right, [q.binder], level),
            level + 1,
        )
    if isinstance(p, Case):
        return (
            _alpha_expr(p.scrutinee, q.scrutinee, left, right)
            and _alpha(
                p.left_body,
                q.left_body,
                _bind(left, [p.left_binder], level),
                _bind(right, [q.left_binder], level),
                level + 1,
            )
            and _alpha(
                p.right_body,
                q.right_body,
                _bind(left, [p.right_binder], level),
                _bind(right, [q.right_binder], level),
                level + 1,
            )
        )
    if isinstance(p, Split):
        return _alpha_expr(p.scrutinee, q.scrutinee, left, right) and _alpha(
            p.body,
            q.body,
            _bind(left, [p.fst_binder, p.snd_binder], level),
            _bind(right, [q.fst_binder, q.snd_binder], level),
            level + 2,
        )
    raise TypeError(f"not a process: {p!r}")
