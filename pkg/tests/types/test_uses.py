import pytest

from linpi.types.uses import Use, use_add, use_subtract_one, use_sum


class TestUse:
    def test_order(self) -> None:
        assert Use.ZERO < Use.ONE < Use.OMEGA

    @pytest.mark.parametrize(
        "use, text", [(Use.ZERO, "0"), (Use.ONE, "1"), (Use.OMEGA, "w")]
    )
    def test_string_forms(self, use: Use, text: str) -> None:
        assert str(use) == text
        assert Use.from_string(text) is use

    def test_from_string_is_lenient_about_case_and_spaces(self) -> None:
        assert Use.from_string(" W ") is Use.OMEGA

    def test_from_string_rejects(self) -> None:
        with pytest.raises(ValueError, match="not a use"):
            Use.from_string("2")


class TestArithmetic:
    @pytest.mark.parametrize(
        "k1, k2, expected",
        [
            (Use.ZERO, Use.ZERO, Use.ZERO),
            (Use.ZERO, Use.ONE, Use.ONE),
            (Use.ONE, Use.ZERO, Use.ONE),
            (Use.ONE, Use.ONE, Use.OMEGA),
            (Use.ONE, Use.OMEGA, Use.OMEGA),
            (Use.OMEGA, Use.ZERO, Use.OMEGA),
        ],
    )
    def test_use_add(self, k1: Use, k2: Use, expected: Use) -> None:
        assert use_add(k1, k2) is expected
        assert use_add(k2, k1) is expected

    def test_use_sum(self) -> None:
        assert use_sum() is Use.ZERO
        assert use_sum(Use.ZERO, Use.ONE, Use.ZERO) is Use.ONE
        assert use_sum(Use.ONE, Use.ZERO, Use.ONE) is Use.OMEGA

    def test_subtract_one(self) -> None:
        assert use_subtract_one(Use.ZERO) is None
        assert use_subtract_one(Use.ONE) is Use.ZERO
        assert use_subtract_one(Use.OMEGA) is Use.OMEGA
