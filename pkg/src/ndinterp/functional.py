"""Evaluation contract shared by all interpolators.

A functional of ``d`` dimensions reads ``d`` consecutive values from an
:class:`ArgumentCursor`.  An interpolating collection reads the first value,
evaluates its ordinates with the advanced cursor and combines the results;
ordinates that are not functionals terminate the recursion unchanged.
"""

from __future__ import annotations

from numbers import Real
from typing import Any, Sequence

from .errors import ArgumentCountError, InterpolationError


class ArgumentCursor:
    """Read position in a sequence of abscissa values.

    Cursors are immutable; :meth:`next` returns a new cursor one position further.
    When ``track=True`` every read index is recorded in :attr:`reads`, which is
    shared with all cursors derived from this one.
    """

    __slots__ = ("args", "index", "reads")

    def __init__(self, args: Sequence[float], index: int = 0, *, track: bool = False, _reads=None):
        if not 0 <= index <= len(args):
            raise ArgumentCountError(f"cursor index {index} outside of {len(args)} arguments")
        self.args = args
        self.index = index
        self.reads = _reads if _reads is not None else (set() if track else None)

    @property
    def x(self):
        i = self.index
        if i >= len(self.args):
            raise ArgumentCountError(f"argument {i} requested but only {len(self.args)} given")
        if self.reads is not None:
            self.reads.add(i)
        return self.args[i]

    @property
    def remaining(self) -> int:
        return len(self.args) - self.index

    def next(self) -> ArgumentCursor:
        return ArgumentCursor(self.args, self.index + 1, _reads=self.reads)

    def __repr__(self):
        return f"ArgumentCursor({list(self.args)!r}, index={self.index})"


class ErrorPolicy:
    """What a functional does when an interpolation error occurs."""

    def action(self, error: InterpolationError, functional: Functional):
        raise NotImplementedError


class RaisePolicy(ErrorPolicy):
    """Propagate the error (the default)."""

    def action(self, error, functional):
        raise error

    def __repr__(self):
        return "RaisePolicy()"


class DefaultResult(ErrorPolicy):
    """Return a fixed value instead of raising.

    A plain number is expanded to the result type of the failing functional
    as a constant function, i.e. with zero derivatives and integrals.  Any
    other value is returned as given.
    """

    def __init__(self, value: Any):
        self.value = value

    def action(self, error, functional):
        if isinstance(self.value, Real):
            return functional.constant_result(self.value)
        return self.value

    def __repr__(self):
        return f"DefaultResult({self.value!r})"


RAISE = RaisePolicy()


class Functional:
    """Base class of everything that maps abscissa values onto a result.

    Subclasses implement :meth:`evaluate` and usually :meth:`compile`.
    """

    dimensions: int = 1
    error_policy: ErrorPolicy = RAISE

    def evaluate(self, cursor: ArgumentCursor):
        raise NotImplementedError

    def compile(self) -> None:
        """Prepare for evaluation; nothing to do by default."""

    def _compile(self, key_path: tuple) -> None:
        self.compile()

    def __call__(self, *args):
        if len(args) != self.dimensions:
            raise ArgumentCountError(
                f"{type(self).__name__} takes {self.dimensions} arguments, got {len(args)}"
            )
        return self.evaluate(ArgumentCursor(args))

    def set_error_policy(self, policy: ErrorPolicy) -> None:
        self.error_policy = policy

    def constant_result(self, value):
        """Result this functional returns for a constant function of ``value``."""
        return value

    def empty_like(self) -> Functional:
        raise NotImplementedError

    @property
    def methods(self) -> tuple:
        return ()

    def _fail(self, error: InterpolationError):
        return self.error_policy.action(error, self)


def get_value(ordinate, cursor: ArgumentCursor):
    """Evaluate a nested functional, or return a terminal value as is."""
    if isinstance(ordinate, Functional):
        return ordinate.evaluate(cursor)
    return ordinate
