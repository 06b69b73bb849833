from collections import Counter

import pytest

from linpi.errors import LinpiError
from linpi.semantics.labels import TAU, Comm
from linpi.semantics.reduction import close_process, run, step
from linpi.shortcuts import infer
from linpi.syntax.ast import IntLit, Name, Output, channel
from linpi.syntax.parser import parse_process
from linpi.syntax.render import render_process
from linpi.typecheck.checker import check_process
from linpi.types.env import env_reduce, env_reduces_to
from linpi.types.parser import parse_type
from linpi.types.store import ChanNode, TypeStore
from linpi.types.uses import Use
from tests.corpus import REPLICA_READER
from tests.generators import random_processes


def closed(text: str):  # type: ignore[no-untyped-def]
    return close_process(parse_process(text))


class TestClose:
    def test_free_variables_become_channels(self) -> None:
        p = closed("a!x | b?(y). y!x")
        assert render_process(p) == "a!x | b?(y).y!x"
        assert p.left == Output(channel("a"), channel("x"))  # type: ignore[union-attr]


class TestStep:
    def test_communication_on_free_channel(self) -> None:
        [redex] = step(closed("a!3 | a?(x). b!x"))
        assert redex.label == Comm(Name.chan("a"))
        assert redex.residual == Output(channel("b"), IntLit(3))

    def test_communication_on_restricted_channel_is_internal(self) -> None:
        [redex] = step(closed("new a in (a!3 | a?(x). b!x)"))
        assert redex.label == TAU
        assert render_process(redex.residual) == "new a in b!3"

    def test_case(self) -> None:
        [redex] = step(closed("case inl 3 of { inl(n) => a!n; inr(m) => idle }"))
        assert redex.label == TAU
        assert render_process(redex.residual) == "a!3"

    def test_split(self) -> None:
        [redex] = step(closed("let (x, y) = (1, 2) in a!(x + y)"))
        assert redex.label == TAU
        assert render_process(redex.residual) == "a!1 + 2"

    def test_every_output_meets_every_input(self) -> None:
        redexes = step(closed("a!1 | a!2 | a?(x). b!x"))
        assert [render_process(r.residual) for r in redexes] == ["a!2 | b!1", "a!1 | b!2"]

    def test_stuck_processes(self) -> None:
        assert step(closed("a!fst 3 | a?(x). idle")) == []
        assert step(closed("a!3 | b?(x). idle")) == []
        assert step(closed("idle")) == []

    def test_replicated_input_is_unfolded(self) -> None:
        [redex] = step(closed("*a?(x). b!x | a!1"))
        assert redex.label == Comm(Name.chan("a"))
        assert render_process(redex.residual) == "*a?(x).b!x | b!1"

    def test_no_fuel_no_unfolding(self) -> None:
        assert step(closed("*a?(x). b!x | a!1"), fuel_repl=0) == []

    def test_two_replicas(self) -> None:
        [redex] = step(closed("*a!1 | *a?(x). idle"))
        assert render_process(redex.residual) == "*a!1 | *a?(x).idle"

    def test_variable_subjects_do_not_communicate(self) -> None:
        assert step(parse_process("a!3 | a?(x). idle")) == []


class TestRun:
    def test_runs_to_completion(self) -> None:
        trace = run(parse_process("new a in (a!3 | a?(x). b!x)"), max_steps=10, seed=0)
        assert [label for label, _ in trace] == [TAU]

    def test_step_bound(self) -> None:
        trace = run(parse_process("*a!1 | *a?(x). idle"), max_steps=7, seed=3)
        assert len(trace) == 7

    def test_deterministic_for_a_seed(self) -> None:
        text = "a!1 | a!2 | a?(x). b!x | a?(y). c!y"
        assert run(parse_process(text), 10, seed=5) == run(parse_process(text), 10, seed=5)

    def test_idle(self) -> None:
        assert run(parse_process("idle"), max_steps=10, seed=0) == []


class TestSubjectReduction:
    """Well-typed processes reduce to well-typed processes under the reduced environment."""

    def test_generated_processes(self) -> None:
        checked = 0
        for p in random_processes(200, seed=11, max_depth=6):
            q = close_process(p)
            try:
                inference = infer(q)
            except LinpiError:
                continue
            store = inference.store
            for redex in step(q):
                reduced = env_reduce(store, inference.env, redex.label)
                assert check_process(reduced, redex.residual, store) or env_reduces_to(
                    store, inference.env, redex.label, infer(redex.residual, store=store).env
                ), (render_process(q), str(redex.label), render_process(redex.residual))
                checked += 1
        assert checked > 0

    def test_copy_next_to_replicated_reader(self) -> None:
        """A copy beside its replicated original may keep a linear capability."""
        store = TypeStore()
        g = {
            Name.chan("a"): parse_type("[int]{w,1}", store),
            Name.chan("b"): parse_type("[int]{0,1}", store),
        }
        q = closed(f"*{REPLICA_READER} | {REPLICA_READER} | a!1")
        assert check_process(g, q, store)
        redexes = step(q)
        assert [r.label for r in redexes] == [Comm(Name.chan("a"))] * 2
        reduced = env_reduce(store, g, Comm(Name.chan("a")))
        for redex in redexes:
            assert check_process(reduced, redex.residual, store), render_process(redex.residual)


class TestUseCounters:
    """A run never communicates on a channel more often than its inferred uses allow."""

    @pytest.mark.parametrize("seed", [1, 2, 3])
    def test_generated_runs(self, seed: int) -> None:
        traced = 0
        for p in random_processes(60, seed=seed, max_depth=6):
            q = close_process(p)
            try:
                inference = infer(q)
            except LinpiError:
                continue
            store = inference.store
            g = inference.env
            counts: Counter[Name] = Counter()
            for label, _ in run(q, max_steps=20, seed=seed):
                g = env_reduce(store, g, label)
                if isinstance(label, Comm):
                    counts[label.channel] += 1
            for u, n in counts.items():
                node = store.node(inference.env[u])
                assert isinstance(node, ChanNode)
                assert node.inp is Use.OMEGA or n <= node.inp, u.text
                assert node.out is Use.OMEGA or n <= node.out, u.text
            traced += 1
        assert traced > 0
