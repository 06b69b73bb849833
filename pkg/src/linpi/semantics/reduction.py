"""Labelled one-step reduction of processes.

Processes are first brought to a normal form: parallel composition is
flattened, restrictions are extruded to the top with freshly minted channels,
and idle threads are dropped. Replicated threads are unfolded ``*P -> *P | P``
on demand, up to ``fuel_repl`` nested levels; an unfolded copy only appears in
a residual when one of its threads takes part in the step. The converse
folding ``*P | P -> *P`` is never applied.
"""

import logging
import random
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Optional

from linpi.errors import StuckExpression
from linpi.semantics.evaluation import eval_expression
from linpi.semantics.labels import TAU, Comm, Label
from linpi.syntax.ast import (
    Case,
    Expression,
    Idle,
    Inl,
    Inr,
    Input,
    Name,
    NameRef,
    New,
    Output,
    Pair,
    Par,
    Process,
    Repl,
    Split,
    new_all,
    par_all,
)
from linpi.syntax.names import free_names, fresh_text, substitute

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Redex:
    label: Label
    residual: Process


@dataclass
class _Unit:
    """Threads and restrictions of the source, or of one unfolded replica."""

    restricted: list[Name]
    threads: list[Process]
    parent: Optional[int] = None
    depth: int = 0


@dataclass
class _Pool:
    units: list[_Unit] = field(default_factory=list)
    taken: set[str] = field(default_factory=set)

    def add(self, p: Process, parent: Optional[int], depth: int) -> int:
        unit = _Unit([], [], parent, depth)
        self._flatten(p, unit)
        self.units.append(unit)
        return len(self.units) - 1

    def _flatten(self, p: Process, unit: _Unit) -> None:
        stack = [p]
        while stack:
            q = stack.pop()
            if isinstance(q, Idle):
                continue
            if isinstance(q, Par):
                stack.extend((q.right, q.left))
            elif isinstance(q, New):
                c = Name.chan(fresh_text(q.binder.text, self.taken))
                self.taken.add(c.text)
                unit.restricted.append(c)
                stack.append(substitute(q.body, q.binder, NameRef(c)))
            else:
                unit.threads.append(q)

    def candidates(self) -> Iterable[tuple[int, int, Process]]:
        for u, unit in enumerate(self.units):
            for i, thread in enumerate(unit.threads):
                yield u, i, thread

    def restricted(self) -> set[Name]:
        return {c for unit in self.units for c in unit.restricted}

    def residual(self, replaced: dict[tuple[int, int], Process]) -> Process:
        """Rebuild a process from the units involved in ``replaced`` and their ancestors."""
        needed = {0}
        for u, _ in replaced:
            while u is not None and u not in needed:
                needed.add(u)
                u = self.units[u].parent
        restricted: list[Name] = []
        threads: list[Process] = []
        for u in sorted(needed):
            unit = self.units[u]
            restricted.extend(unit.restricted)
            for i, thread in enumerate(unit.threads):
                thread = replaced.get((u, i), thread)
                if not isinstance(thread, Idle):
                    threads.append(thread)
        return new_all(restricted, par_all(threads))


def _normalize(p: Process, fuel_repl: int) -> _Pool:
    pool = _Pool(taken={n.text for n in free_names(p)})
    pool.add(p, None, 0)
    u = 0
    while u < len(pool.units):
        unit = pool.units[u]
        if unit.depth < fuel_repl:
            for thread in list(unit.threads):
                if isinstance(thread, Repl):
                    pool.add(thread.body, u, unit.depth + 1)
        u += 1
    return pool


def _value(e: Expression) -> Optional[Expression]:
    try:
        return eval_expression(e)
    except StuckExpression:
        return None


def _internal(thread: Process) -> Optional[Process]:
    """The continuation of a case or split whose scrutinee is a value of the right shape."""
    if isinstance(thread, Case):
        v = _value(thread.scrutinee)
        if isinstance(v, Inl):
            return substitute(thread.left_body, thread.left_binder, v.arg)
        if isinstance(v, Inr):
            return substitute(thread.right_body, thread.right_binder, v.arg)
    if isinstance(thread, Split):
        v = _value(thread.scrutinee)
        if isinstance(v, Pair):
            if thread.fst_binder == thread.snd_binder:
                return substitute(thread.body, thread.snd_binder, v.snd)
            body = substitute(thread.body, thread.fst_binder, v.fst)
            return substitute(body, thread.snd_binder, v.snd)
    return None


def _subject(thread: Process) -> Optional[Name]:
    v = _value(thread.subject)  # type: ignore[union-attr]
    if isinstance(v, NameRef) and v.id.is_channel:
        return v.id
    return None


def step(p: Process, fuel_repl: int = 1) -> list[Redex]:
    """All one-step successors of ``p``, in a deterministic order.

    Case and split threads contribute internal steps where they stand; every
    output is paired with every input on the same channel, outputs first in
    thread order. A communication on a restricted channel is internal.
    """
    pool = _normalize(p, fuel_repl)
    restricted = pool.restricted()
    candidates = list(pool.candidates())
    inputs = [(u, i, t) for u, i, t in candidates if isinstance(t, Input)]
    redexes: list[Redex] = []
    for u, i, thread in candidates:
        if isinstance(thread, (Case, Split)):
            continuation = _internal(thread)
            if continuation is not None:
                redexes.append(Redex(TAU, pool.residual({(u, i): continuation})))
            continue
        if not isinstance(thread, Output):
            continue
        channel = _subject(thread)
        payload = _value(thread.object)
        if channel is None or payload is None:
            continue
        for v, j, receiver in inputs:
            if _subject(receiver) != channel:
                continue
            body = substitute(receiver.body, receiver.binder, payload)  # type: ignore[union-attr]
            residual = pool.residual({(u, i): Idle(), (v, j): body})
            label: Label = TAU if channel in restricted else Comm(channel)
            redexes.append(Redex(label, residual))
    return redexes


def close_process(p: Process) -> Process:
    """Turn every free variable of ``p`` into the channel of the same spelling."""
    for u in sorted(free_names(p), key=lambda n: n.text):
        if not u.is_channel:
            p = substitute(p, u, NameRef(Name.chan(u.text)))
    return p


def run(
    p: Process, max_steps: int, seed: int, fuel_repl: int = 1
) -> list[tuple[Label, Process]]:
    """Reduce ``p`` by seeded random choice until no redex is left or ``max_steps`` is reached."""
    rng = random.Random(seed)
    trace: list[tuple[Label, Process]] = []
    current = close_process(p)
    for _ in range(max_steps):
        redexes = step(current, fuel_repl)
        if not redexes:
            break
        chosen = rng.choice(redexes)
        trace.append((chosen.label, chosen.residual))
        current = chosen.residual
    logger.debug("run stopped after %d steps", len(trace))
    return trace
