import pytest

from linpi.errors import IllFormedSystem, ParseError
from linpi.types.parser import parse_type
from linpi.types.store import ChanNode, IntNode, ProdNode, SumNode, TypeStore
from linpi.types.uses import Use


@pytest.fixture
def store() -> TypeStore:
    return TypeStore()


class TestParseType:
    def test_int(self, store: TypeStore) -> None:
        assert parse_type("int", store) == store.int_type()

    def test_channel(self, store: TypeStore) -> None:
        node = store.node(parse_type("[int]{1,w}", store))
        assert node == ChanNode(Use.ONE, Use.OMEGA, store.int_type())

    def test_product_is_right_associative(self, store: TypeStore) -> None:
        node = store.node(parse_type("int * int * int", store))
        assert isinstance(node, ProdNode)
        assert isinstance(store.node(node.left), IntNode)
        assert isinstance(store.node(node.right), ProdNode)

    def test_product_binds_tighter_than_sum(self, store: TypeStore) -> None:
        node = store.node(parse_type("int * int (+) int", store))
        assert isinstance(node, SumNode)
        assert isinstance(store.node(node.left), ProdNode)

    def test_rec_matches_equation(self, store: TypeStore) -> None:
        t = parse_type("rec X. int * X", store)
        node = store.node(t)
        assert isinstance(node, ProdNode)
        assert node.right == t

    def test_shadowing(self, store: TypeStore) -> None:
        t = parse_type("rec X. [rec X. int * X]{1,0} * X", store)
        assert store.render(t) == "rec X. [rec Y. int * Y]{1,0} * X"

    def test_nested_rec_aliases(self, store: TypeStore) -> None:
        a = parse_type("rec X. rec Y. int * X", store)
        assert store.type_equal(a, parse_type("rec Z. int * Z", store))

    def test_comments(self, store: TypeStore) -> None:
        assert parse_type("[int]{0,1} -- a sink", store) == parse_type("[int]{0,1}", store)


class TestParseTypeErrors:
    def test_unbound_variable(self, store: TypeStore) -> None:
        with pytest.raises(ParseError, match="not bound by rec") as excinfo:
            parse_type("int * X", store)
        assert (excinfo.value.line, excinfo.value.column) == (1, 7)

    @pytest.mark.parametrize("text", ["[int]{0,2}", "int *", "[int]{0}", ""])
    def test_syntax(self, store: TypeStore, text: str) -> None:
        with pytest.raises(ParseError):
            parse_type(text, store)

    @pytest.mark.parametrize("text", ["rec X. X", "rec X. rec Y. X"])
    def test_no_solution(self, store: TypeStore, text: str) -> None:
        with pytest.raises(IllFormedSystem):
            parse_type(text, store)
