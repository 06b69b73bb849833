"""Typing environments: finite maps from names to types."""

from collections.abc import Mapping
from typing import Optional

from linpi.errors import InsufficientUse, MissingChannel
from linpi.semantics.labels import Comm, Label
from linpi.syntax.ast import Name
from linpi.types.store import ChanNode, TypeId, TypeStore
from linpi.types.uses import use_subtract_one

TypeEnv = dict[Name, TypeId]


def env_combine(
    store: TypeStore, g1: Mapping[Name, TypeId], g2: Mapping[Name, TypeId]
) -> Optional[TypeEnv]:
    """``g1 + g2``: shared names are combined, or ``None`` if some combination is undefined."""
    combined: TypeEnv = dict(g1)
    for u, t in g2.items():
        if u not in combined:
            combined[u] = t
            continue
        joint = store.type_combine(combined[u], t)
        if joint is None:
            return None
        combined[u] = joint
    return combined


def env_reduce(store: TypeStore, g: Mapping[Name, TypeId], label: Label) -> TypeEnv:
    """Consume one input and one output use of the channel in ``label``.

    Raises:
        MissingChannel: If the channel is not in ``g`` or its type is not a channel.
        InsufficientUse: If either use slot of the channel is 0.
    """
    if not isinstance(label, Comm):
        return dict(g)
    a = label.channel
    if a not in g:
        raise MissingChannel(f"channel {a.text} is not in the environment")
    node = store.node(g[a])
    if not isinstance(node, ChanNode):
        raise MissingChannel(f"{a.text} has non-channel type {store.render(g[a])}")
    inp, out = use_subtract_one(node.inp), use_subtract_one(node.out)
    if inp is None or out is None:
        raise InsufficientUse(f"channel {a.text} : {store.render(g[a])} cannot communicate")
    reduced = dict(g)
    reduced[a] = store.channel(inp, out, node.payload)
    return reduced


def env_reduces_to(
    store: TypeStore, g: Mapping[Name, TypeId], label: Label, g2: Mapping[Name, TypeId]
) -> bool:
    """The relation ``g ->label g2``, with types compared up to equality."""
    try:
        reduced = env_reduce(store, g, label)
    except (MissingChannel, InsufficientUse):
        return False
    return reduced.keys() == g2.keys() and all(
        store.type_equal(t, g2[u]) for u, t in reduced.items()
    )


def render_env(store: TypeStore, g: Mapping[Name, TypeId]) -> list[str]:
    """One ``name : type`` line per binding, sorted by name."""
    return [f"{u.text} : {store.render(g[u])}" for u in sorted(g, key=lambda u: u.text)]
