"""Lark front end for the process language.

Example:
    >>> parse_process("new a in (a!3 | a?(x).idle)")
    New(binder=Name(kind=<NameKind.VARIABLE: 'variable'>, text='a'), ...)
"""

import functools
import logging

import lark
from lark import Lark, Transformer, v_args

from linpi.errors import ParseError
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
    Output,
    Pair,
    Par,
    Process,
    Repl,
    Snd,
    Split,
    new_all,
)

logger = logging.getLogger(__name__)

PROCESS_GRAMMAR = r"""
?start: process

?process: process "|" prefix                                -> par
        | prefix

?prefix: "idle"                                             -> idle
       | expr "?" "(" binder ")" "." prefix                 -> input
       | expr "!" expr                                      -> output
       | "*" prefix                                         -> repl
       | "new" binder ("," binder)* "in" prefix             -> new
       | "case" expr "of" "{" _left_arm ";" _right_arm "}"  -> case
       | "let" "(" binder "," binder ")" "=" expr "in" prefix -> split
       | "(" process ")"

_left_arm: "inl" "(" binder ")" "=>" process
_right_arm: "inr" "(" binder ")" "=>" process

binder: IDENT

?expr: expr "+" app                                         -> add
     | app

?app: "fst" app                                             -> fst
    | "snd" app                                             -> snd
    | "inl" app                                             -> inl
    | "inr" app                                             -> inr
    | atom

?atom: INT                                                  -> int_lit
     | IDENT                                                -> name_ref
     | "(" expr "," expr ")"                                -> pair
     | "(" expr ")"

IDENT: /[a-zA-Z_][a-zA-Z0-9_']*/
INT: /[0-9]+/
COMMENT: /--[^\n]*/

%import common.WS
%ignore WS
%ignore COMMENT
"""

ANONYMOUS = "_"


@functools.lru_cache(maxsize=None)
def _process_parser() -> Lark:
    return Lark(PROCESS_GRAMMAR, parser="lalr", start="start")


@v_args(inline=True)
class _ToAst(Transformer):
    """Builds AST nodes bottom-up; every ``_`` binder gets a distinct fresh name."""

    def __init__(self) -> None:
        super().__init__()
        self._anonymous = 0

    def binder(self, token: lark.Token) -> Name:
        text = str(token)
        if text == ANONYMOUS:
            text = f"_'{self._anonymous}"
            self._anonymous += 1
        return Name.var(text)

    def int_lit(self, token: lark.Token) -> Expression:
        return IntLit(int(token))

    def name_ref(self, token: lark.Token) -> Expression:
        return NameRef(Name.var(str(token)))

    def pair(self, fst: Expression, snd: Expression) -> Expression:
        return Pair(fst, snd)

    def add(self, lhs: Expression, rhs: Expression) -> Expression:
        return Add(lhs, rhs)

    def fst(self, arg: Expression) -> Expression:
        return Fst(arg)

    def snd(self, arg: Expression) -> Expression:
        return Snd(arg)

    def inl(self, arg: Expression) -> Expression:
        return Inl(arg)

    def inr(self, arg: Expression) -> Expression:
        return Inr(arg)

    def idle(self) -> Process:
        return Idle()

    def input(self, subject: Expression, binder: Name, body: Process) -> Process:
        return Input(subject, binder, body)

    def output(self, subject: Expression, obj: Expression) -> Process:
        return Output(subject, obj)

    def par(self, left: Process, right: Process) -> Process:
        return Par(left, right)

    def repl(self, body: Process) -> Process:
        return Repl(body)

    def new(self, *children: object) -> Process:
        *binders, body = children
        return new_all(list(binders), body)  # type: ignore[arg-type]

    def case(
        self,
        scrutinee: Expression,
        left_binder: Name,
        left_body: Process,
        right_binder: Name,
        right_body: Process,
    ) -> Process:
        return Case(scrutinee, left_binder, left_body, right_binder, right_body)

    def split(
        self, fst_binder: Name, snd_binder: Name, scrutinee: Expression, body: Process
    ) -> Process:
        return Split(scrutinee, fst_binder, snd_binder, body)


def terminal_display(parser: Lark) -> dict[str, str]:
    """Map lark terminal names to the text a user would type."""
    display = {}
    for terminal in parser.terminals:
        pattern = terminal.pattern
        display[terminal.name] = f'"{pattern.value}"' if pattern.type == "str" else terminal.name
    return display


def raise_parse_error(error: lark.exceptions.LarkError, text: str, parser: Lark) -> None:
    """Re-raise a lark exception as a :class:`ParseError` with position and expectations."""
    display = terminal_display(parser)
    if isinstance(error, lark.exceptions.UnexpectedEOF):
        lines = text.splitlines() or [""]
        expected = {display.get(name, name) for name in error.expected}
        raise ParseError(
            "unexpected end of input", len(lines), len(lines[-1]) + 1, expected
        ) from error
    if isinstance(error, lark.exceptions.UnexpectedToken):
        expected = {display.get(name, name) for name in error.expected}
        raise ParseError(
            f"unexpected {error.token!r}", error.line, error.column, expected
        ) from error
    if isinstance(error, lark.exceptions.UnexpectedCharacters):
        expected = {display.get(name, name) for name in error.allowed or ()}
        raise ParseError(
            f"unexpected character {error.char!r}", error.line, error.column, expected
        ) from error
    raise ParseError(str(error)) from error


def parse_process(text: str) -> Process:
    """Parse the concrete syntax of a process.

    Raises:
        ParseError: With line, column and the set of expected tokens.
    """
    parser = _process_parser()
    try:
        tree = parser.parse(text)
    except lark.exceptions.LarkError as e:
        raise_parse_error(e, text, parser)
        raise  # unreachable, keeps type checkers quiet
    process = _ToAst().transform(tree)
    logger.debug("parsed process with %d characters", len(text))
    return process
