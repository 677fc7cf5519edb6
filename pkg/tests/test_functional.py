"""Argument cursors, the evaluation contract and error policies."""

from __future__ import annotations

import pytest

from ndinterp import (
    ArgumentCountError,
    ArgumentCursor,
    ConstantFunction1D,
    DefaultResult,
    GridAxis,
    MultiFunction,
    ResultHesse,
    ValueOutOfRangeError,
    polint,
)


def test_cursor_is_immutable():
    c = ArgumentCursor([1.0, 2.0])
    d = c.next()
    assert (c.x, d.x) == (1.0, 2.0)
    assert d.remaining == 1
    with pytest.raises(ArgumentCountError):
        d.next().x


def test_constant_consumes_nothing():
    cursor = ArgumentCursor([3.0], track=True)
    assert ConstantFunction1D(7.0).evaluate(cursor) == 7.0
    assert cursor.reads == set()


def test_linear_table():
    f = polint(1)
    f.fill([(0.0, 0.0), (1.0, 2.0)])
    assert f(0.5) == 1.0


def test_default_policy():
    f = polint(1, error_policy=DefaultResult(0.0))
    f.fill([(0.0, 0.0), (1.0, 2.0)])
    assert f(3.0) == 0.0
    f.set_error_policy(DefaultResult(-1.0))
    assert f(-3.0) == -1.0


def test_default_is_lifted_to_result_kind():
    f = polint(1, result="hesse", error_policy=DefaultResult(4.0))
    f.fill([(0.0, 0.0), (1.0, 2.0)])
    assert f(3.0) == ResultHesse(4.0, 0.0, 0.0)


def test_raise_policy():
    f = polint(1)
    f.fill([(0.0, 0.0), (1.0, 2.0)])
    with pytest.raises(ValueOutOfRangeError):
        f(1.5)


@pytest.mark.parametrize("dims", [1, 2, 3, 4])
def test_cursor_advances_by_dimension(dims):
    f = MultiFunction("gridpolint2", ["gridpolint1"] * (dims - 1)) if dims > 1 else polint(2, grid=True)
    if dims > 1:
        f.configure([GridAxis(4, 0.0, 1.0)] * dims, lambda k: sum(k))
    else:
        f.configure(GridAxis(4, 0.0, 1.0), lambda x: x)
    f.compile()
    # extra trailing arguments must stay untouched
    cursor = ArgumentCursor([0.3] * dims + [99.0], track=True)
    f.evaluate(cursor)
    assert cursor.reads == set(range(dims))


def test_argument_count():
    f = MultiFunction("polint1", ["polint1"])
    f.configure([GridAxis(2, 0.0, 1.0)] * 2, lambda k: 0.0)
    with pytest.raises(ArgumentCountError):
        f(0.5)
    with pytest.raises(ArgumentCountError):
        f(0.5, 0.5, 0.5)
