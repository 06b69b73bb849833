"""Uses: how many times a channel may be used for input or output."""

from enum import IntEnum
from typing import Optional


class Use(IntEnum):
    """An element of ``{0, 1, w}``, ordered by precision ``0 <= 1 <= w``."""

    ZERO = 0
    ONE = 1
    OMEGA = 2

    def __str__(self) -> str:
        return "w" if self is Use.OMEGA else str(self.value)

    @classmethod
    def from_string(cls, text: str) -> "Use":
        """Parse ``"0"``, ``"1"`` or ``"w"``

        Raises:
            ValueError: If ``text`` is not a use.
        """
        for use in cls:
            if str(use) == text.strip().lower():
                return use
        raise ValueError(f"not a use: {text!r}")


def use_add(k1: Use, k2: Use) -> Use:
    """Combine two uses: 0 is neutral, anything else adds up to w."""
    if k2 is Use.ZERO:
        return k1
    if k1 is Use.ZERO:
        return k2
    return Use.OMEGA


def use_sum(*uses: Use) -> Use:
    total = Use.ZERO
    for use in uses:
        total = use_add(total, use)
    return total


def use_subtract_one(k: Use) -> Optional[Use]:
    """Partial inverse of adding 1: ``1-1 = 0``, ``w-1 = w``, ``0-1`` undefined."""
    if k is Use.ZERO:
        return None
    return Use.ZERO if k is Use.ONE else Use.OMEGA
