import random

import pytest

from linpi.errors import NotSessionShaped
from linpi.sessions.session import SessionStore, TypeRef, decode
from linpi.shortcuts import describe_sessions
from linpi.syntax.ast import Name
from linpi.types.parser import parse_type
from linpi.types.store import ChanNode, TypeStore
from tests.generators import random_session_type


@pytest.fixture
def store() -> TypeStore:
    return TypeStore()


@pytest.fixture
def sessions(store: TypeStore) -> SessionStore:
    return SessionStore(store)


def render(sessions: SessionStore, text: str) -> str:
    return sessions.render_session(sessions.decode(parse_type(text, sessions.types)))


class TestDecode:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("[int * [int]{0,0}]{1,0}", "?int.end"),
            ("[int * [int]{0,0}]{0,1}", "!int.end"),
            ("[int]{0,0}", "end"),
            ("[[int]{1,0}]{0,0}", "end"),
            ("[(int * int) * [int]{0,0}]{1,0}", "?(int * int).end"),
            ("[[int * [int]{0,0}]{1,0} * [int]{0,0}]{0,1}", "!(?int.end).end"),
            ("rec X. [int * [int * X]{0,1}]{0,1}", "rec X. !int.?int.X"),
            ("rec X. [int * X]{1,0}", "rec X. ?int.X"),
        ],
    )
    def test_render(self, sessions: SessionStore, text: str, expected: str) -> None:
        assert render(sessions, text) == expected

    def test_output_continuation_is_the_peer_side(self, sessions: SessionStore) -> None:
        # the continuation of an output is encoded from the receiver's view
        assert render(sessions, "[int * [int * [int]{0,0}]{0,1}]{0,1}") == "!int.?int.end"

    @pytest.mark.parametrize(
        "text, reason",
        [
            ("int", "not a channel type"),
            ("[int]{1,1}", "not linear"),
            ("[int]{w,0}", "not linear"),
            ("[int]{1,0}", "not a pair"),
            ("[int * int]{1,0}", "not a channel type"),
        ],
    )
    def test_not_session_shaped(self, sessions: SessionStore, text: str, reason: str) -> None:
        with pytest.raises(NotSessionShaped, match=reason):
            render(sessions, text)

    def test_module_level_decode(self, store: TypeStore) -> None:
        sessions, s = decode(parse_type("[int * [int]{0,0}]{1,0}", store), store)
        assert sessions.render_session(s) == "?int.end"


class TestOperations:
    def test_dual(self, sessions: SessionStore, store: TypeStore) -> None:
        s = sessions.decode(parse_type("rec X. [int * [int * X]{0,1}]{0,1}", store))
        assert sessions.render_session(sessions.dual(s)) == "rec X. ?int.!int.X"

    def test_dual_keeps_payloads(self, sessions: SessionStore, store: TypeStore) -> None:
        s = sessions.decode(parse_type("[[int * [int]{0,0}]{1,0} * [int]{0,0}]{0,1}", store))
        assert sessions.render_session(sessions.dual(s)) == "?(?int.end).end"

    def test_constructors_encode(self, sessions: SessionStore, store: TypeStore) -> None:
        data = TypeRef(store.int_type())
        receive = sessions.receive(data, sessions.end())
        send = sessions.send(data, sessions.end())
        assert store.render(sessions.encode(receive)) == "[int * [int]{0,0}]{1,0}"
        assert store.render(sessions.encode(send)) == "[int * [int]{0,0}]{0,1}"
        assert store.render(sessions.encode(sessions.end())) == "[int]{0,0}"

    def test_session_equal(self, sessions: SessionStore, store: TypeStore) -> None:
        a = sessions.decode(parse_type("rec X. [int * X]{1,0}", store))
        b = sessions.decode(parse_type("[int * (rec Y. [int * Y]{1,0})]{1,0}", store))
        c = sessions.decode(parse_type("rec X. [(int * int) * X]{1,0}", store))
        assert sessions.session_equal(a, b)
        assert not sessions.session_equal(a, c)
        assert not sessions.session_equal(a, sessions.dual(a))

    def test_describe_sessions(self, store: TypeStore) -> None:
        env = {
            Name.var("s"): parse_type("[int * [int]{0,0}]{1,0}", store),
            Name.var("n"): store.int_type(),
        }
        described = describe_sessions(env, store)
        assert described == {Name.var("n"): None, Name.var("s"): "?int.end"}


class TestProperties:
    @pytest.fixture
    def generated(self, store: TypeStore) -> list[int]:
        rng = random.Random(17)
        return [random_session_type(rng, store, rng.randint(1, 5)) for _ in range(120)]

    def test_encode_inverts_decode(
        self, sessions: SessionStore, store: TypeStore, generated: list[int]
    ) -> None:
        for t in generated:
            assert store.type_equal(sessions.encode(sessions.decode(t)), t), store.render(t)

    def test_dual_is_an_involution(self, sessions: SessionStore, generated: list[int]) -> None:
        for t in generated:
            s = sessions.decode(t)
            assert sessions.session_equal(sessions.dual(sessions.dual(s)), s)

    def test_swapping_uses_dualizes(
        self, sessions: SessionStore, store: TypeStore, generated: list[int]
    ) -> None:
        for t in generated:
            node = store.node(t)
            assert isinstance(node, ChanNode)
            swapped = store.channel(node.out, node.inp, node.payload)
            assert sessions.session_equal(
                sessions.decode(swapped), sessions.dual(sessions.decode(t))
            ), store.render(t)
