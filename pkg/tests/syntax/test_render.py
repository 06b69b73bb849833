import pytest

from linpi.syntax.ast import Add, Fst, Inl, IntLit, Output, Par, name
from linpi.syntax.names import alpha_equal
from linpi.syntax.parser import parse_process
from linpi.syntax.render import render_expression, render_process
from tests.corpus import CLASHES, ODD_EVEN, WELL_TYPED
from tests.generators import random_processes


class TestRenderExpression:
    @pytest.mark.parametrize(
        "expression, expected",
        [
            (Add(IntLit(1), Add(IntLit(2), IntLit(3))), "1 + (2 + 3)"),
            (Add(Add(IntLit(1), IntLit(2)), IntLit(3)), "1 + 2 + 3"),
            (Fst(Add(name("x"), IntLit(1))), "fst (x + 1)"),
            (Inl(Fst(name("p"))), "inl fst p"),
        ],
    )
    def test_precedence(self, expression: object, expected: str) -> None:
        assert render_expression(expression) == expected  # type: ignore[arg-type]


class TestRenderProcess:
    def test_restriction(self) -> None:
        text = "new a in (a!3 | a?(x).idle)"
        assert render_process(parse_process(text)) == text

    def test_right_nested_parallel(self) -> None:
        a, b, c = (Output(name(t), IntLit(1)) for t in "abc")
        assert render_process(Par(a, Par(b, c))) == "a!1 | (b!1 | c!1)"
        assert render_process(Par(Par(a, b), c)) == "a!1 | b!1 | c!1"

    def test_case(self) -> None:
        text = "case v of { inl(n) => b!n; inr(m) => idle }"
        assert render_process(parse_process(text)) == text

    def test_collapses_nested_restrictions(self) -> None:
        assert render_process(parse_process("new a in new b in idle")) == "new a, b in idle"

    @pytest.mark.parametrize("text", [*WELL_TYPED, *CLASHES, ODD_EVEN])
    def test_corpus_round_trip(self, text: str) -> None:
        p = parse_process(text)
        assert alpha_equal(parse_process(render_process(p)), p)

    def test_generated_round_trip(self) -> None:
        for p in random_processes(200, seed=7):
            assert alpha_equal(parse_process(render_process(p)), p), render_process(p)
