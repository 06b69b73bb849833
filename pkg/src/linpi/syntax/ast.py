"""Abstract syntax of processes and expressions.

All nodes are frozen dataclasses: they compare structurally, hash, and can be
shared freely between processes.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Union


class NameKind(str, Enum):
    VARIABLE = "variable"
    CHANNEL = "channel"


@dataclass(frozen=True)
class Name:
    kind: NameKind
    text: str

    @classmethod
    def var(cls, text: str) -> "Name":
        return cls(NameKind.VARIABLE, text)

    @classmethod
    def chan(cls, text: str) -> "Name":
        return cls(NameKind.CHANNEL, text)

    @property
    def is_channel(self) -> bool:
        return self.kind is NameKind.CHANNEL

    def __str__(self) -> str:
        return self.text


# Expressions


@dataclass(frozen=True)
class IntLit:
    value: int


@dataclass(frozen=True)
class NameRef:
    id: Name


@dataclass(frozen=True)
class Pair:
    fst: "Expression"
    snd: "Expression"


@dataclass(frozen=True)
class Fst:
    arg: "Expression"


@dataclass(frozen=True)
class Snd:
    arg: "Expression"


@dataclass(frozen=True)
class Inl:
    arg: "Expression"


@dataclass(frozen=True)
class Inr:
    arg: "Expression"


@dataclass(frozen=True)
class Add:
    lhs: "Expression"
    rhs: "Expression"


Expression = Union[IntLit, NameRef, Pair, Fst, Snd, Inl, Inr, Add]


# Processes


@dataclass(frozen=True)
class Idle:
    pass


@dataclass(frozen=True)
class Input:
    subject: Expression
    binder: Name
    body: "Process"


@dataclass(frozen=True)
class Output:
    subject: Expression
    object: Expression


@dataclass(frozen=True)
class Par:
    left: "Process"
    right: "Process"


@dataclass(frozen=True)
class Repl:
    body: "Process"


@dataclass(frozen=True)
class New:
    binder: Name
    body: "Process"


@dataclass(frozen=True)
class Case:
    scrutinee: Expression
    left_binder: Name
    left_body: "Process"
    right_binder: Name
    right_body: "Process"


@dataclass(frozen=True)
class Split:
    scrutinee: Expression
    fst_binder: Name
    snd_binder: Name
    body: "Process"


Process = Union[Idle, Input, Output, Par, Repl, New, Case, Split]


def name(text: str) -> NameRef:
    """Shorthand for an expression naming the variable ``text``"""
    return NameRef(Name.var(text))


def channel(text: str) -> NameRef:
    """Shorthand for an expression naming the channel ``text``"""
    return NameRef(Name.chan(text))


def is_value(e: Expression) -> bool:
    """Values are integers, channels, and pairs and injections of values."""
    if isinstance(e, IntLit):
        return True
    if isinstance(e, NameRef):
        return e.id.is_channel
    if isinstance(e, Pair):
        return is_value(e.fst) and is_value(e.snd)
    if isinstance(e, (Inl, Inr)):
        return is_value(e.arg)
    return False


def par_all(processes: "list[Process]") -> Process:
    """Left-nested parallel composition; ``idle`` for an empty list."""
    if not processes:
        return Idle()
    result = processes[0]
    for p in processes[1:]:
        result = Par(result, p)
    return result


def new_all(binders: "list[Name]", body: Process) -> Process:
    for binder in reversed(binders):
        body = New(binder, body)
    return body
