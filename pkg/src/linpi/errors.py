"""Exception hierarchy for linpi.

Every error raised on purpose by the library derives from :class:`LinpiError`,
so callers (and the command line) can separate user-facing failures from
programming errors.
"""

from collections.abc import Iterable
from typing import Any, Optional


class LinpiError(Exception):
    """Base class of all linpi errors"""

    pass


class ParseError(LinpiError):
    """Syntax error in a process, type or environment text"""

    def __init__(
        self,
        message: str,
        line: Optional[int] = None,
        column: Optional[int] = None,
        expected: Iterable[str] = (),
    ) -> None:
        self.line = line
        self.column = column
        self.expected = frozenset(expected)
        location = f"{line}:{column}: " if line is not None else ""
        hint = ""
        if self.expected:
            hint = f" (expected one of: {', '.join(sorted(self.expected))})"
        super().__init__(f"{location}{message}{hint}")


class NotAValue(LinpiError):
    """Substitution of an expression that is not a value"""

    pass


class StuckExpression(LinpiError):
    """Expression evaluation got stuck"""

    pass


class IllFormedSystem(LinpiError):
    """Equation system without a unique regular solution"""

    pass


class MissingChannel(LinpiError):
    """Environment reduction on a channel absent from the environment"""

    pass


class InsufficientUse(LinpiError):
    """Environment reduction on a channel with an exhausted use slot"""

    pass


class DomainMismatch(LinpiError):
    """Merging environments with different domains"""

    pass


class NotCovering(LinpiError):
    """Substitution leaves a variable of a constraint set unbound"""

    pass


class UnboundName(LinpiError):
    """Free name missing from a typing environment"""

    pass


class NotSessionShaped(LinpiError):
    """Channel type that does not encode a session type"""

    pass


class Unsatisfiable(LinpiError):
    """Constraint set whose closure contains a structural clash.

    Attributes:
        left: The first clashing type expression.
        right: The second clashing type expression.
    """

    def __init__(self, left: Any, right: Any) -> None:
        self.left = left
        self.right = right
        super().__init__(f"type clash: {left} ~ {right}")


class NoSolution(LinpiError):
    """Use constraints without a satisfying assignment"""

    def __init__(self, message: str, variables: Iterable[str] = ()) -> None:
        self.variables = tuple(variables)
        super().__init__(message)
