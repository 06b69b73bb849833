"""Finite shapes over unknowns: the right-hand sides accepted by ``make_type``."""

from dataclasses import dataclass
from typing import Union

from linpi.types.uses import Use


@dataclass(frozen=True)
class Unknown:
    name: str


@dataclass(frozen=True)
class IntShape:
    pass


@dataclass(frozen=True)
class ChanShape:
    inp: Use
    out: Use
    payload: "Shape"


@dataclass(frozen=True)
class ProdShape:
    left: "Shape"
    right: "Shape"


@dataclass(frozen=True)
class SumShape:
    left: "Shape"
    right: "Shape"


@dataclass(frozen=True)
class Ref:
    """A type already present in the store, embedded as a leaf."""

    id: int


Shape = Union[Unknown, IntShape, ChanShape, ProdShape, SumShape, Ref]


def unknowns_of(shape: Shape) -> list[str]:
    """Unknown names mentioned by ``shape``, in first-occurrence order."""
    found: list[str] = []
    stack = [shape]
    while stack:
        s = stack.pop()
        if isinstance(s, Unknown):
            if s.name not in found:
                found.append(s.name)
        elif isinstance(s, ChanShape):
            stack.append(s.payload)
        elif isinstance(s, (ProdShape, SumShape)):
            stack.extend((s.right, s.left))
    return found
