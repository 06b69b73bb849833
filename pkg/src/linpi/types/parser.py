"""Parser for the type grammar (env files and command-line output).

``rec X.`` binders become unknowns of a ``make_type`` system, so parsing
``rec X. int * X`` yields the same node graph as the equation ``X = int * X``.
"""

import functools
from typing import Union

import lark
from lark import Lark, Token, Tree

from linpi.errors import IllFormedSystem, ParseError
from linpi.syntax.parser import raise_parse_error
from linpi.types.shapes import ChanShape, IntShape, ProdShape, Shape, SumShape, Unknown
from linpi.types.store import TypeId, TypeStore
from linpi.types.uses import Use

TYPE_RULES = r"""
?type: "rec" NAME "." type          -> rec
     | sum

?sum: prod "(+)" sum                -> sum_type
    | prod

?prod: atom "*" prod                -> prod_type
     | atom

?atom: "int"                        -> int_type
     | "[" type "]" "{" use "," use "}" -> chan_type
     | NAME                         -> type_var
     | "(" type ")"

use: "0"                            -> zero
   | "1"                            -> one
   | "w"                            -> omega

NAME: /[a-zA-Z_][a-zA-Z0-9_']*/
COMMENT: /--[^\n]*/

%import common.WS
%ignore WS
%ignore COMMENT
"""

TYPE_GRAMMAR = "?start: type\n" + TYPE_RULES

_USES = {"zero": Use.ZERO, "one": Use.ONE, "omega": Use.OMEGA}


@functools.lru_cache(maxsize=None)
def _type_parser() -> Lark:
    return Lark(TYPE_GRAMMAR, parser="lalr", start="start")


class _ShapeBuilder:
    """Turns a parse tree into a shape plus one equation per ``rec`` binder."""

    def __init__(self) -> None:
        self.equations: dict[str, Shape] = {}
        self._aliases: dict[str, str] = {}
        self._binders = 0

    def build(self, tree: Union[Tree, Token], scope: dict[str, str]) -> Shape:
        if isinstance(tree, Token):
            raise ParseError(f"unexpected token {tree!r}", tree.line, tree.column)
        kind = tree.data
        if kind == "int_type":
            return IntShape()
        if kind == "type_var":
            token = tree.children[0]
            if token not in scope:
                raise ParseError(
                    f"type variable {token} is not bound by rec", token.line, token.column
                )
            return Unknown(scope[token])
        if kind == "chan_type":
            payload, inp, out = tree.children
            return ChanShape(_USES[inp.data], _USES[out.data], self.build(payload, scope))
        if kind in ("prod_type", "sum_type"):
            left, right = (self.build(child, scope) for child in tree.children)
            return ProdShape(left, right) if kind == "prod_type" else SumShape(left, right)
        if kind == "rec":
            binder, body = tree.children
            unknown = f"{binder}#{self._binders}"
            self._binders += 1
            shape = self.resolve(self.build(body, {**scope, str(binder): unknown}))
            if isinstance(shape, Unknown):
                # rec X. rec Y. T: X names the same tree as Y
                if shape.name == unknown:
                    raise IllFormedSystem(f"rec {binder}. {binder} has no solution")
                self._aliases[unknown] = shape.name
            else:
                self.equations[unknown] = shape
            return Unknown(unknown)
        raise ParseError(f"unexpected node {kind}")

    def resolve(self, shape: Shape) -> Shape:
        if isinstance(shape, Unknown):
            name = shape.name
            while name in self._aliases:
                name = self._aliases[name]
            return Unknown(name)
        if isinstance(shape, ChanShape):
            return ChanShape(shape.inp, shape.out, self.resolve(shape.payload))
        if isinstance(shape, ProdShape):
            return ProdShape(self.resolve(shape.left), self.resolve(shape.right))
        if isinstance(shape, SumShape):
            return SumShape(self.resolve(shape.left), self.resolve(shape.right))
        return shape


ROOT = "$root"


def parse_type(text: str, store: TypeStore) -> TypeId:
    """Parse ``text`` in the type grammar into a type of ``store``.

    Raises:
        ParseError: On syntax errors and unbound type variables.
        IllFormedSystem: For binders without a solution such as ``rec X. X``.
    """
    parser = _type_parser()
    try:
        tree = parser.parse(text)
    except lark.exceptions.LarkError as e:
        raise_parse_error(e, text, parser)
        raise
    return type_from_tree(tree, store)


def type_from_tree(tree: Tree, store: TypeStore) -> TypeId:
    """Build the type denoted by a parse tree of the ``type`` rule."""
    builder = _ShapeBuilder()
    top = builder.build(tree, {})
    equations = {name: builder.resolve(shape) for name, shape in builder.equations.items()}
    top = builder.resolve(top)
    if isinstance(top, Unknown):
        return store.make_type(equations)[top.name]
    equations[ROOT] = top
    return store.make_type(equations)[ROOT]
