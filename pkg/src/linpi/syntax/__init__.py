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
    NameKind,
    NameRef,
    New,
    Output,
    Pair,
    Par,
    Process,
    Repl,
    Snd,
    Split,
    channel,
    is_value,
    name,
    new_all,
    par_all,
)
from linpi.syntax.names import (
    alpha_equal,
    free_names,
    free_names_expr,
    fresh_text,
    substitute,
    substitute_expr,
)
from linpi.syntax.parser import parse_process
from linpi.syntax.render import render_expression, render_process

__all__ = [
    "Add",
    "Case",
    "Expression",
    "Fst",
    "Idle",
    "Inl",
    "Inr",
    "Input",
    "IntLit",
    "Name",
    "NameKind",
    "NameRef",
    "New",
    "Output",
    "Pair",
    "Par",
    "Process",
    "Repl",
    "Snd",
    "Split",
    "alpha_equal",
    "channel",
    "free_names",
    "free_names_expr",
    "fresh_text",
    "is_value",
    "name",
    "new_all",
    "par_all",
    "parse_process",
    "render_expression",
    "render_process",
    "substitute",
    "substitute_expr",
]
