"""Exceptions raised by the library.

Each class carries the process exit code the command-line front-end uses
when the exception escapes a command.
"""

from typing import Optional


class BalanceError(Exception):
    """Base class for all errors raised by :mod:`balanced_sets`."""

    exit_code = 1


class InputError(BalanceError, ValueError):
    """Malformed or inconsistent input: bad vectors, widths, counts or ranges."""

    exit_code = 2


class GuardError(BalanceError):
    """A configured resource guard would be exceeded.

    Parameters
    ----------
    guard:
        Name of the guard, e.g. ``"rank"`` or ``"spectrum"``.
    limit:
        Configured limit.
    actual:
        Value that exceeded it.
    flag:
        Command-line flag that raises the limit, if there is one.
    hint:
        Extra advice appended to the message.
    """

    exit_code = 3

    def __init__(
        self,
        guard: str,
        limit: int,
        actual: int,
        flag: Optional[str] = None,
        hint: Optional[str] = None,
    ) -> None:
        self.guard = guard
        self.limit = limit
        self.actual = actual
        self.flag = flag
        message = f"{guard} guard exceeded: {actual} > {limit}"
        if flag:
            message += f" (raise it with {flag})"
        if hint:
            message += f"; {hint}"
        super().__init__(message)


class ConsistencyError(BalanceError, AssertionError):
    """Two independent computations of the same quantity disagree."""

    exit_code = 4
