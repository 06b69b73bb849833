"""Pretty-printing of processes and expressions in the concrete syntax.

The output always parses back to an alpha-equivalent tree: parentheses are
inserted exactly where the grammar's precedence would otherwise regroup.
"""

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

_PREFIX_OPERATORS = {Fst: "fst", Snd: "snd", Inl: "inl", Inr: "inr"}


def render_expression(e: Expression) -> str:
    if isinstance(e, IntLit):
        return str(e.value)
    if isinstance(e, NameRef):
        return e.id.text
    if isinstance(e, Pair):
        return f"({render_expression(e.fst)}, {render_expression(e.snd)})"
    if isinstance(e, Add):
        rhs = render_expression(e.rhs)
        if isinstance(e.rhs, Add):
            rhs = f"({rhs})"
        return f"{render_expression(e.lhs)} + {rhs}"
    arg = render_expression(e.arg)
    if isinstance(e.arg, Add):
        arg = f"({arg})"
    return f"{_PREFIX_OPERATORS[type(e)]} {arg}"


def _prefix(p: Process) -> str:
    """Render ``p`` where the grammar expects a prefix (no bare ``|``)."""
    text = render_process(p)
    return f"({text})" if isinstance(p, Par) else text


def render_process(p: Process) -> str:
    """Render ``p`` in the concrete syntax accepted by ``parse_process``."""
    if isinstance(p, Idle):
        return "idle"
    if isinstance(p, Input):
        return f"{render_expression(p.subject)}?({p.binder.text}).{_prefix(p.body)}"
    if isinstance(p, Output):
        return f"{render_expression(p.subject)}!{render_expression(p.object)}"
    if isinstance(p, Par):
        return f"{render_process(p.left)} | {_prefix(p.right)}"
    if isinstance(p, Repl):
        return f"*{_prefix(p.body)}"
    if isinstance(p, New):
        binders = []
        body: Process = p
        while isinstance(body, New):
            binders.append(body.binder.text)
            body = body.body
        return f"new {', '.join(binders)} in {_prefix(body)}"
    if isinstance(p, Case):
        return (
            f"case {render_expression(p.scrutinee)} of "
            f"{{ inl({p.left_binder.text}) => {render_process(p.left_body)}; "
            f"inr({p.right_binder.text}) => {render_process(p.right_body)} }}"
        )
    if isinstance(p, Split):
        return (
            f"let ({p.fst_binder.text}, {p.snd_binder.text}) = "
            f"{render_expression(p.scrutinee)} in {_prefix(p.body)}"
        )
    raise TypeError(f"not a process: {p!r}")
