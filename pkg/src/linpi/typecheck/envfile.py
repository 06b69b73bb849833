"""Typing environment files: one ``name : type`` binding per line, ``--`` comments."""

import functools
import logging

import lark
from lark import Lark

from linpi.errors import IllFormedSystem, ParseError
from linpi.syntax.ast import Name
from linpi.syntax.parser import raise_parse_error
from linpi.types.env import TypeEnv
from linpi.types.parser import TYPE_RULES, type_from_tree
from linpi.types.store import TypeStore

logger = logging.getLogger(__name__)

ENV_GRAMMAR = (
    r"""
start: binding*

binding: NAME ":" type
"""
    + TYPE_RULES
)


@functools.lru_cache(maxsize=None)
def _env_parser() -> Lark:
    return Lark(ENV_GRAMMAR, parser="lalr", start="start")


def load_env(text: str, store: TypeStore) -> TypeEnv:
    """Parse an environment file into ``store``.

    Names are read as variables, the way the process parser reads free names.

    Raises:
        ParseError: On syntax errors, unbound ``rec`` variables, binders
            without a solution such as ``rec X. X`` and names bound twice,
            with the line of the offending binding.
    """
    parser = _env_parser()
    try:
        tree = parser.parse(text)
    except lark.exceptions.LarkError as e:
        raise_parse_error(e, text, parser)
        raise
    env: TypeEnv = {}
    for binding in tree.children:
        token, type_tree = binding.children
        name = Name.var(str(token))
        if name in env:
            raise ParseError(f"{token} is bound twice", token.line, token.column)
        try:
            env[name] = type_from_tree(type_tree, store)
        except IllFormedSystem as e:
            raise ParseError(str(e), token.line, token.column) from e
    logger.debug("loaded %d bindings", len(env))
    return env
