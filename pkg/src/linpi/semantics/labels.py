from dataclasses import dataclass
from typing import Union

from linpi.syntax.ast import Name


@dataclass(frozen=True)
class Tau:
    """Internal step"""

    def __str__(self) -> str:
        return "tau"


@dataclass(frozen=True)
class Comm:
    """Communication on a free channel"""

    channel: Name

    def __post_init__(self) -> None:
        if not self.channel.is_channel:
            raise ValueError(f"labels carry channels, not variables: {self.channel.text}")

    def __str__(self) -> str:
        return self.channel.text


Label = Union[Tau, Comm]
TAU = Tau()
