"""Regular-tree types as an interned node graph.

A :class:`TypeStore` owns a table of nodes. A ``TypeId`` is an index into
that table and denotes the (possibly infinite) regular tree obtained by
unfolding the node graph from that index. Finite nodes are hash-consed;
cyclic systems built by :meth:`TypeStore.make_type` get one node per unknown.

Example:
    >>> store = TypeStore()
    >>> stream = store.make_type({"X": ProdShape(IntShape(), Unknown("X"))})["X"]
    >>> store.render(stream)
    'rec X. int * X'
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Optional, Union

import networkx as nx

from linpi.errors import IllFormedSystem
from linpi.types.shapes import (
    ChanShape,
    IntShape,
    ProdShape,
    Ref,
    Shape,
    SumShape,
    Unknown,
    unknowns_of,
)
from linpi.types.uses import Use, use_add

logger = logging.getLogger(__name__)

TypeId = int


@dataclass(frozen=True)
class IntNode:
    pass


@dataclass(frozen=True)
class ChanNode:
    inp: Use
    out: Use
    payload: TypeId


@dataclass(frozen=True)
class ProdNode:
    left: TypeId
    right: TypeId


@dataclass(frozen=True)
class SumNode:
    left: TypeId
    right: TypeId


TypeNode = Union[IntNode, ChanNode, ProdNode, SumNode]

_BINDER_LETTERS = ("X", "Y", "Z")


def binder_name(index: int) -> str:
    """X, Y, Z, X1, Y1, Z1, X2, ..."""
    letter = _BINDER_LETTERS[index % 3]
    round_ = index // 3
    return letter if round_ == 0 else f"{letter}{round_}"


def children(node: TypeNode) -> tuple[TypeId, ...]:
    if isinstance(node, ChanNode):
        return (node.payload,)
    if isinstance(node, (ProdNode, SumNode)):
        return (node.left, node.right)
    return ()


class TypeStore:
    """Interned table of type nodes plus memo tables for the semantic operations.

    The store mutates while it interns and memoizes, so it must be confined
    to one execution context.
    """

    def __init__(self) -> None:
        self._nodes: list[Optional[TypeNode]] = []
        self._intern: dict[TypeNode, TypeId] = {}
        self._equal_memo: dict[tuple[TypeId, TypeId], bool] = {}
        self._combine_memo: dict[tuple[TypeId, TypeId], Optional[TypeId]] = {}

    def __len__(self) -> int:
        return len(self._nodes)

    def __contains__(self, t: object) -> bool:
        return isinstance(t, int) and 0 <= t < len(self._nodes) and self._nodes[t] is not None

    # Construction

    def node(self, t: TypeId) -> TypeNode:
        node = self._nodes[t]
        if node is None:
            raise KeyError(f"type {t} is reserved but not yet defined")
        return node

    def intern(self, node: TypeNode) -> TypeId:
        existing = self._intern.get(node)
        if existing is not None:
            return existing
        self._nodes.append(node)
        t = len(self._nodes) - 1
        self._intern[node] = t
        return t

    def _reserve(self) -> TypeId:
        self._nodes.append(None)
        return len(self._nodes) - 1

    def _fill(self, t: TypeId, node: TypeNode) -> None:
        self._nodes[t] = node
        self._intern.setdefault(node, t)

    def int_type(self) -> TypeId:
        return self.intern(IntNode())

    def channel(self, inp: Use, out: Use, payload: TypeId) -> TypeId:
        return self.intern(ChanNode(inp, out, payload))

    def product(self, left: TypeId, right: TypeId) -> TypeId:
        return self.intern(ProdNode(left, right))

    def sum(self, left: TypeId, right: TypeId) -> TypeId:
        return self.intern(SumNode(left, right))

    def make_type(self, equations: Mapping[str, Shape]) -> dict[str, TypeId]:
        """Return the unique regular solution of ``{X = shape, ...}``.

        Unknowns are resolved strongly-connected-component by component:
        acyclic ones are interned bottom-up, every unknown of a cycle gets a
        reserved node that is filled once its body is built.

        Raises:
            IllFormedSystem: If a right-hand side is a bare unknown, or refers
                to an unknown without an equation or a type outside the store.
        """
        graph = nx.DiGraph()
        for unknown, shape in equations.items():
            if isinstance(shape, Unknown):
                raise IllFormedSystem(
                    f"right-hand side of {unknown} is the bare unknown {shape.name}"
                )
            graph.add_node(unknown)
            for dependency in unknowns_of(shape):
                if dependency not in equations:
                    raise IllFormedSystem(f"unknown {dependency} has no defining equation")
                graph.add_edge(unknown, dependency)

        solution: dict[str, TypeId] = {}
        condensed = nx.condensation(graph)
        for component in reversed(list(nx.topological_sort(condensed))):
            members = sorted(condensed.nodes[component]["members"], key=list(equations).index)
            cyclic = len(members) > 1 or graph.has_edge(members[0], members[0])
            if cyclic:
                for unknown in members:
                    solution[unknown] = self._reserve()
                for unknown in members:
                    self._fill(solution[unknown], self._top_node(equations[unknown], solution))
            else:
                solution[members[0]] = self._build(equations[members[0]], solution)
        logger.debug("solved %d type equations", len(equations))
        return {unknown: solution[unknown] for unknown in equations}

    def _top_node(self, shape: Shape, solution: Mapping[str, TypeId]) -> TypeNode:
        if isinstance(shape, IntShape):
            return IntNode()
        if isinstance(shape, ChanShape):
            return ChanNode(shape.inp, shape.out, self._build(shape.payload, solution))
        if isinstance(shape, ProdShape):
            return ProdNode(self._build(shape.left, solution), self._build(shape.right, solution))
        if isinstance(shape, SumShape):
            return SumNode(self._build(shape.left, solution), self._build(shape.right, solution))
        raise IllFormedSystem(f"not a constructor shape: {shape!r}")

    def _build(self, shape: Shape, solution: Mapping[str, TypeId]) -> TypeId:
        if isinstance(shape, Unknown):
            return solution[shape.name]
        if isinstance(shape, Ref):
            if shape.id not in self:
                raise IllFormedSystem(f"type {shape.id} is not in this store")
            return shape.id
        return self.intern(self._top_node(shape, solution))

    # Semantic operations

    def type_equal(self, a: TypeId, b: TypeId) -> bool:
        """Bisimilarity of the trees rooted at ``a`` and ``b``."""
        if a == b:
            return True
        key = (min(a, b), max(a, b))
        cached = self._equal_memo.get(key)
        if cached is not None:
            return cached
        parent: dict[TypeId, TypeId] = {}

        def find(t: TypeId) -> TypeId:
            while parent.get(t, t) != t:
                parent[t] = parent.get(parent[t], parent[t])
                t = parent[t]
            return t

        result = True
        pending = [(a, b)]
        while pending:
            x, y = pending.pop()
            rx, ry = find(x), find(y)
            if rx == ry:
                continue
            parent[rx] = ry
            node_x, node_y = self.node(x), self.node(y)
            if type(node_x) is not type(node_y):
                result = False
                break
            if isinstance(node_x, ChanNode):
                if (node_x.inp, node_x.out) != (node_y.inp, node_y.out):
                    result = False
                    break
            pending.extend(zip(children(node_x), children(node_y)))
        self._equal_memo[key] = result
        return result

    def coherent(self, a: TypeId, b: TypeId) -> bool:
        """True iff ``a`` and ``b`` can be combined."""
        seen: set[tuple[TypeId, TypeId]] = set()
        pending = [(a, b)]
        while pending:
            pair = pending.pop()
            if pair in seen:
                continue
            seen.add(pair)
            x, y = self.node(pair[0]), self.node(pair[1])
            if type(x) is not type(y):
                return False
            if isinstance(x, ChanNode):
                if not self.type_equal(x.payload, y.payload):
                    return False
                continue
            pending.extend(zip(children(x), children(y)))
        return True

    def type_combine(self, a: TypeId, b: TypeId) -> Optional[TypeId]:
        """The combination ``a + b``, or ``None`` when it is undefined.

        Results are memoized on the input pair; a pair met again while its
        own combination is still being built gets a reserved node, which is
        how cyclic inputs produce cyclic results.
        """
        key = (a, b)
        if key in self._combine_memo:
            return self._combine_memo[key]
        if not self.coherent(a, b):
            self._combine_memo[key] = None
            return None
        return self._combine(a, b, {})

    def _combine(
        self, a: TypeId, b: TypeId, in_progress: dict[tuple[TypeId, TypeId], Optional[TypeId]]
    ) -> TypeId:
        key = (a, b)
        cached = self._combine_memo.get(key)
        if cached is not None:
            return cached
        if key in in_progress:
            if in_progress[key] is None:
                in_progress[key] = self._reserve()
            return in_progress[key]  # type: ignore[return-value]
        in_progress[key] = None
        x, y = self.node(a), self.node(b)
        node: TypeNode
        if isinstance(x, IntNode):
            node = x
        elif isinstance(x, ChanNode):
            node = ChanNode(use_add(x.inp, y.inp), use_add(x.out, y.out), x.payload)
        else:
            left = self._combine(x.left, y.left, in_progress)  # type: ignore[union-attr]
            right = self._combine(x.right, y.right, in_progress)  # type: ignore[union-attr]
            node = type(x)(left, right)
        reserved = in_progress.pop(key)
        if reserved is None:
            result = self.intern(node)
        else:
            self._fill(reserved, node)
            result = reserved
        self._combine_memo[key] = result
        return result

    def is_unlimited(self, a: TypeId) -> bool:
        """``2a = a``: every channel reachable without crossing a payload is unlimited."""
        doubled = self.type_combine(a, a)
        return doubled is not None and self.type_equal(doubled, a)

    def reachable(self, a: TypeId) -> list[TypeId]:
        """Ids reachable from ``a`` (``a`` first), in depth-first pre-order."""
        order: list[TypeId] = []
        seen: set[TypeId] = set()
        stack = [a]
        while stack:
            t = stack.pop()
            if t in seen:
                continue
            seen.add(t)
            order.append(t)
            stack.extend(reversed(children(self.node(t))))
        return order

    # Rendering

    def render(self, a: TypeId) -> str:
        """Finite mu-notation for ``a``; binders are named in first-visit order."""
        path: dict[TypeId, int] = {}
        used: set[int] = set()
        counter = [0]

        def placeholder(slot: int) -> str:
            return f"\x00{slot}\x00"

        def go(t: TypeId) -> tuple[str, str]:
            if t in path:
                used.add(path[t])
                return placeholder(path[t]), "atom"
            slot = counter[0]
            counter[0] += 1
            path[t] = slot
            text, level = _render_node(self.node(t), go)
            del path[t]
            if slot in used:
                return f"rec {placeholder(slot)}. {text}", "rec"
            return text, level

        text, _ = go(a)
        for index, slot in enumerate(sorted(used)):
            text = text.replace(placeholder(slot), binder_name(index))
        return text


def _wrap(text: str, level: str, allowed: tuple[str, ...]) -> str:
    return text if level in allowed else f"({text})"


def _render_node(node: TypeNode, go) -> tuple[str, str]:  # type: ignore[no-untyped-def]
    if isinstance(node, IntNode):
        return "int", "atom"
    if isinstance(node, ChanNode):
        payload, _ = go(node.payload)
        return f"[{payload}]{{{node.inp},{node.out}}}", "atom"
    left = _wrap(*go(node.left), ("atom",) if isinstance(node, ProdNode) else ("atom", "prod"))
    if isinstance(node, ProdNode):
        right = _wrap(*go(node.right), ("atom", "prod"))
        return f"{left} * {right}", "prod"
    right = _wrap(*go(node.right), ("atom", "prod", "sum"))
    return f"{left} (+) {right}", "sum"
