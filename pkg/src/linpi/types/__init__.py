from linpi.types.env import TypeEnv, env_combine, env_reduce, env_reduces_to, render_env
from linpi.types.parser import parse_type
from linpi.types.shapes import ChanShape, IntShape, ProdShape, Ref, Shape, SumShape, Unknown
from linpi.types.store import (
    ChanNode,
    IntNode,
    ProdNode,
    SumNode,
    TypeId,
    TypeNode,
    TypeStore,
)
from linpi.types.uses import Use, use_add, use_subtract_one, use_sum

__all__ = [
    "ChanNode",
    "ChanShape",
    "IntNode",
    "IntShape",
    "ProdNode",
    "ProdShape",
    "Ref",
    "Shape",
    "SumNode",
    "SumShape",
    "TypeEnv",
    "TypeId",
    "TypeNode",
    "TypeStore",
    "Unknown",
    "Use",
    "env_combine",
    "env_reduce",
    "env_reduces_to",
    "parse_type",
    "render_env",
    "use_add",
    "use_subtract_one",
    "use_sum",
]
