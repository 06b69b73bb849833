"""Session types read off linear channel types.

A session is encoded by continuation passing:

* ``?t.S`` is ``[t * enc(S)]{1,0}``
* ``!t.S`` is ``[t * enc(dual S)]{0,1}``
* ``end`` is any channel with uses ``(0, 0)``

Sessions are regular trees stored, like types, as an interned node table.
Decoding and encoding keep one memo table per polarity, so ``dual`` never
has to be computed on a cyclic structure before it is needed.

Example:
    >>> t = parse_type("rec X. [int * [int * X]{0,1}]{0,1}", store)
    >>> sessions = SessionStore(store)
    >>> sessions.render_session(sessions.decode(t))
    'rec X. !int.?int.X'
"""

import logging
from dataclasses import dataclass
from typing import Optional, Union

from linpi.errors import NotSessionShaped
from linpi.types.shapes import ChanShape, IntShape, ProdShape, Ref, Shape, Unknown
from linpi.types.store import ChanNode, ProdNode, TypeId, TypeStore, binder_name
from linpi.types.uses import Use

logger = logging.getLogger(__name__)

SessionId = int


@dataclass(frozen=True)
class TypeRef:
    """A payload that is plain data."""

    type: TypeId


@dataclass(frozen=True)
class SessionRef:
    """A payload that is itself a session endpoint."""

    session: SessionId


Payload = Union[TypeRef, SessionRef]


@dataclass(frozen=True)
class EndNode:
    pass


@dataclass(frozen=True)
class InNode:
    payload: Payload
    cont: SessionId


@dataclass(frozen=True)
class OutNode:
    payload: Payload
    cont: SessionId


SessionNode = Union[EndNode, InNode, OutNode]

_DIRECTIONS = {(Use.ONE, Use.ZERO): True, (Use.ZERO, Use.ONE): False}


class SessionStore:
    """Session nodes over the types of one :class:`TypeStore`."""

    def __init__(self, types: TypeStore) -> None:
        self.types = types
        self._nodes: list[Optional[SessionNode]] = []
        self._intern: dict[SessionNode, SessionId] = {}
        # (type, positive) -> session
        self._decoded: dict[tuple[TypeId, bool], SessionId] = {}
        self._duals: dict[SessionId, SessionId] = {}

    def node(self, s: SessionId) -> SessionNode:
        node = self._nodes[s]
        if node is None:
            raise KeyError(f"session {s} is reserved but not yet defined")
        return node

    def intern(self, node: SessionNode) -> SessionId:
        existing = self._intern.get(node)
        if existing is not None:
            return existing
        self._nodes.append(node)
        self._intern[node] = len(self._nodes) - 1
        return len(self._nodes) - 1

    def _reserve(self) -> SessionId:
        self._nodes.append(None)
        return len(self._nodes) - 1

    def _fill(self, s: SessionId, node: SessionNode) -> None:
        self._nodes[s] = node
        self._intern.setdefault(node, s)

    def end(self) -> SessionId:
        return self.intern(EndNode())

    def receive(self, payload: Payload, cont: SessionId) -> SessionId:
        return self.intern(InNode(payload, cont))

    def send(self, payload: Payload, cont: SessionId) -> SessionId:
        return self.intern(OutNode(payload, cont))

    # Decoding

    def shape_error(self, t: TypeId) -> Optional[str]:
        """Why ``t`` does not encode a session, or None if it does."""
        seen: set[TypeId] = set()
        while t not in seen:
            seen.add(t)
            node = self.types.node(t)
            if not isinstance(node, ChanNode):
                return f"{self.types.render(t)} is not a channel type"
            if (node.inp, node.out) == (Use.ZERO, Use.ZERO):
                return None
            if (node.inp, node.out) not in _DIRECTIONS:
                return f"uses {{{node.inp},{node.out}}} of {self.types.render(t)} are not linear"
            message = self.types.node(node.payload)
            if not isinstance(message, ProdNode):
                return f"payload of {self.types.render(t)} is not a pair"
            t = message.right
        return None

    def decode(self, t: TypeId) -> SessionId:
        """The session encoded by ``t``.

        Raises:
            NotSessionShaped: If some channel on the continuation chain has
                uses other than ``{1,0}``, ``{0,1}`` or ``{0,0}``, or a
                payload that is not a pair.
        """
        error = self.shape_error(t)
        if error is not None:
            raise NotSessionShaped(error)
        return self._decode(t, True)

    def _payload(self, t: TypeId) -> Payload:
        node = self.types.node(t)
        if (
            isinstance(node, ChanNode)
            and (node.inp, node.out) in _DIRECTIONS
            and self.shape_error(t) is None
        ):
            return SessionRef(self._decode(t, True))
        return TypeRef(t)

    def _decode(self, t: TypeId, positive: bool) -> SessionId:
        key = (t, positive)
        if key in self._decoded:
            return self._decoded[key]
        node = self.types.node(t)
        assert isinstance(node, ChanNode)
        if (node.inp, node.out) == (Use.ZERO, Use.ZERO):
            self._decoded[key] = self.end()
            return self._decoded[key]
        s = self._reserve()
        self._decoded[key] = s
        message = self.types.node(node.payload)
        assert isinstance(message, ProdNode)
        receives = _DIRECTIONS[(node.inp, node.out)] == positive
        payload = self._payload(message.left)
        # an output hands over the peer's side of the continuation
        cont_positive = positive if _DIRECTIONS[(node.inp, node.out)] else not positive
        cont = self._decode(message.right, cont_positive)
        self._fill(s, InNode(payload, cont) if receives else OutNode(payload, cont))
        return s

    # Operations

    def dual(self, s: SessionId) -> SessionId:
        """Swap inputs and outputs at every step; payloads are unchanged."""
        if s in self._duals:
            return self._duals[s]
        node = self.node(s)
        if isinstance(node, EndNode):
            return s
        d = self._reserve()
        self._duals[s] = d
        cont = self.dual(node.cont)
        flipped = OutNode if isinstance(node, InNode) else InNode
        self._fill(d, flipped(node.payload, cont))
        self._duals.setdefault(d, s)
        return d

    def encode(self, s: SessionId) -> TypeId:
        """The channel type encoding ``s``; ``end`` becomes ``[int]{0,0}``."""
        equations: dict[str, Shape] = {}
        pending = [(s, True)]
        while pending:
            current, positive = pending.pop()
            unknown = _unknown(current, positive)
            if unknown in equations:
                continue
            node = self.node(current)
            if isinstance(node, EndNode):
                equations[unknown] = ChanShape(Use.ZERO, Use.ZERO, IntShape())
                continue
            receives = isinstance(node, InNode)
            # the continuation of an input is ours, that of an output the peer's
            cont = (node.cont, receives)
            if isinstance(node.payload, SessionRef):
                payload: Shape = Unknown(_unknown(node.payload.session, True))
                pending.append((node.payload.session, True))
            else:
                payload = Ref(node.payload.type)
            uses = (Use.ONE, Use.ZERO) if receives == positive else (Use.ZERO, Use.ONE)
            equations[unknown] = ChanShape(*uses, ProdShape(payload, Unknown(_unknown(*cont))))
            pending.append(cont)
        return self.types.make_type(equations)[_unknown(s, True)]

    def session_equal(self, s1: SessionId, s2: SessionId) -> bool:
        """Bisimilarity; data payloads are compared with ``type_equal``."""
        assumed: set[tuple[SessionId, SessionId]] = set()
        pending = [(s1, s2)]
        while pending:
            a, b = pending.pop()
            if a == b or (a, b) in assumed:
                continue
            assumed.add((a, b))
            x, y = self.node(a), self.node(b)
            if type(x) is not type(y):
                return False
            if isinstance(x, EndNode) or isinstance(y, EndNode):
                continue
            if isinstance(x.payload, SessionRef) and isinstance(y.payload, SessionRef):
                pending.append((x.payload.session, y.payload.session))
            elif isinstance(x.payload, TypeRef) and isinstance(y.payload, TypeRef):
                if not self.types.type_equal(x.payload.type, y.payload.type):
                    return False
            else:
                return False
            pending.append((x.cont, y.cont))
        return True

    def render_session(self, s: SessionId) -> str:
        """``?t.S``, ``!t.S``, ``end`` and ``rec X. S`` for loops."""
        heads: dict[SessionId, str] = {}

        def payload_text(payload: Payload) -> str:
            if isinstance(payload, SessionRef):
                return f"({go(payload.session, ())})"
            text = self.types.render(payload.type)
            return f"({text})" if " " in text else text

        def go(current: SessionId, path: tuple[SessionId, ...]) -> str:
            if current in path:
                if current not in heads:
                    heads[current] = binder_name(len(heads))
                return heads[current]
            node = self.node(current)
            if isinstance(node, EndNode):
                return "end"
            prefix = "?" if isinstance(node, InNode) else "!"
            body = f"{prefix}{payload_text(node.payload)}.{go(node.cont, (*path, current))}"
            if current in heads:
                return f"rec {heads[current]}. {body}"
            return body

        return go(s, ())


def _unknown(s: SessionId, positive: bool) -> str:
    return f"{'+' if positive else '-'}{s}"


def decode(t: TypeId, store: TypeStore) -> tuple[SessionStore, SessionId]:
    """Decode ``t`` into a fresh :class:`SessionStore` over ``store``.

    Raises:
        NotSessionShaped: If ``t`` does not encode a session.
    """
    sessions = SessionStore(store)
    return sessions, sessions.decode(t)
