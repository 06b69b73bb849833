import pytest

from linpi.constraints.exprs import IntT, ProdT, TComb, TVar, render_constraint, render_type_expr
from linpi.constraints.generate import (
    VarSupply,
    combine_envs,
    gen_expression,
    gen_process,
    merge_envs,
)
from linpi.errors import DomainMismatch
from linpi.syntax.ast import Add, IntLit, Name, Pair, name
from linpi.syntax.parser import parse_process
from tests.corpus import FORWARDER, PROJECTIONS, SIMPLE


def generate(text: str, unbalanced_new: bool = False) -> tuple[dict, list[str]]:
    delta, c = gen_process(parse_process(text), VarSupply(), unbalanced_new)
    rendered = {u.text: render_type_expr(t) for u, t in delta.items()}
    return rendered, [render_constraint(x) for x in c]


class TestVarSupply:
    def test_fresh_names(self) -> None:
        supply = VarSupply()
        assert supply.fresh_type() == TVar("a0")
        assert supply.fresh_type() == TVar("a1")
        assert str(supply.fresh_use()) == "r0"
        assert (supply.next_type_index, supply.next_use_index) == (2, 1)

    def test_instances_are_stable(self) -> None:
        supply = VarSupply()
        assert supply.instance("a0", "a1") == TVar("i(a0,a1)")
        assert supply.instance("a0", "a1") != supply.instance("a1", "a0")
        assert supply.instance("a0", "a1") == supply.instance("a0", "a1")


class TestEnvironments:
    def test_combine_shares_names(self) -> None:
        supply = VarSupply()
        supply.fresh_type()
        supply.fresh_type()
        a, b = Name.var("a"), Name.var("b")
        combined, c = combine_envs({a: TVar("a0")}, {a: TVar("a1"), b: IntT()}, supply)
        assert combined == {a: TVar("a2"), b: IntT()}
        assert list(c) == [TComb(TVar("a2"), TVar("a0"), TVar("a1"))]

    def test_merge_equates_types(self) -> None:
        a = Name.var("a")
        merged, c = merge_envs({a: TVar("a0")}, {a: TVar("a1")})
        assert merged == {a: TVar("a0")}
        assert [render_constraint(x) for x in c] == ["a0 = a1"]

    def test_merge_domain_mismatch(self) -> None:
        with pytest.raises(DomainMismatch, match="b"):
            merge_envs({Name.var("a"): TVar("a0")}, {Name.var("b"): TVar("a1")})


class TestGenExpression:
    def test_pair_of_the_same_name(self) -> None:
        t, delta, c = gen_expression(Pair(name("x"), name("x")), VarSupply())
        assert t == ProdT(TVar("a0"), TVar("a1"))
        assert delta == {Name.var("x"): TVar("a2")}
        assert [render_constraint(x) for x in c] == ["a2 = a0 + a1"]

    def test_addition_requires_integers(self) -> None:
        _, _, c = gen_expression(Add(name("x"), IntLit(1)), VarSupply())
        assert [render_constraint(x) for x in c] == ["a0 = int"]


class TestGenProcess:
    def test_restricted_channel(self) -> None:
        delta, constraints = generate(SIMPLE)
        assert delta == {}
        assert constraints == [
            "a0 = [int]{2r0,1+r1}",
            "a2 = a2 + a2",
            "a1 = [a2]{1+r2,2r3}",
            "a3 = a0 + a1",
            "a3 = [a4]{r4,r4}",
        ]

    def test_projections(self) -> None:
        delta, constraints = generate(PROJECTIONS)
        assert delta == {"x": "a7"}
        assert constraints == [
            "a0 = a1 * a2",
            "a2 = a2 + a2",
            "a3 = a4 * a5",
            "a4 = a4 + a4",
            "a6 = int",
            "a5 = [int]{2r2,1+r3}",
            "a7 = a0 + a3",
            "a1 = [a6]{1+r0,2r1}",
        ]

    def test_forwarder(self) -> None:
        delta, constraints = generate(FORWARDER)
        assert delta == {"a": "a0", "b": "a1"}
        assert constraints == ["a1 = [a2]{2r2,1+r3}", "a0 = [a2]{1+r0,2r1}"]

    def test_replication_combines_with_itself(self) -> None:
        delta, constraints = generate("*a!3")
        assert delta == {"a": "a1"}
        assert constraints == ["a0 = [int]{2r0,1+r1}", "a1 = a0 + a0"]

    def test_case_weakens_missing_names(self) -> None:
        delta, constraints = generate("case v of { inl(n) => b!n; inr(m) => idle }")
        assert delta == {"v": "a0", "b": "a1"}
        assert constraints == [
            "a1 = [a2]{2r0,1+r1}",
            "a3 = a3 + a3",
            "a4 = a4 + a4",
            "a1 = a4",
            "a0 = a2 (+) a3",
        ]

    def test_split(self) -> None:
        delta, constraints = generate("let (x, y) = p in y!x")
        assert delta == {"p": "a0"}
        assert constraints == ["a1 = [a2]{2r0,1+r1}", "a0 = a2 * a1"]

    def test_split_with_one_binder_twice(self) -> None:
        _, constraints = generate("let (x, x) = p in idle")
        assert constraints == ["a1 = a1 + a1", "a2 = a2 + a2", "a0 = a2 * a1"]

    @pytest.mark.parametrize(
        "unbalanced_new, expected", [(False, "a0 = [a1]{r0,r0}"), (True, "a0 = [a1]{r0,r1}")]
    )
    def test_restriction_uses(self, unbalanced_new: bool, expected: str) -> None:
        _, constraints = generate("new a in idle", unbalanced_new)
        assert constraints == ["a0 = a0 + a0", expected]

    def test_supply_is_advanced(self) -> None:
        supply = VarSupply()
        gen_process(parse_process(SIMPLE), supply)
        assert (supply.next_type_index, supply.next_use_index) == (5, 5)
