"""Elements stored in collections and the distance operator that orders them."""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Any


class Distance:
    """Signed distance between two abscissa values.

    The default metric is the arithmetic difference ``second - first``.
    Subclasses may override :meth:`__call__` for other abscissa types, provided
    the result is antisymmetric, zero for equal values and positive exactly
    when ``second`` sorts after ``first``.

    Parameters
    ----------
    precision : float
        Distances with an absolute value not above this threshold are treated
        as zero when matching abscissa values.  The default is the smallest
        positive normal double, i.e. effectively exact matching.
    """

    __slots__ = ("precision",)

    def __init__(self, precision: float = sys.float_info.min):
        if not precision >= 0.0:
            raise ValueError(f"precision must be non-negative, got {precision!r}")
        self.precision = precision

    def __call__(self, first, second) -> float:
        return second - first

    def __repr__(self):
        return f"{type(self).__name__}(precision={self.precision!r})"

    def __eq__(self, other):
        return type(self) is type(other) and self.precision == other.precision

    def __hash__(self):
        return hash((type(self), self.precision))


DEFAULT_DISTANCE = Distance()


@dataclass(slots=True)
class Element2D:
    """One (abscissa, ordinate) pair."""

    x: float
    y: Any = 0.0


@dataclass(slots=True)
class SplineElement(Element2D):
    """Element with room for the derivative computed by a spline compile."""

    d: Any = 0.0


@dataclass(slots=True)
class IntegralElement(SplineElement):
    """Element with derivative scratch and the cumulative integral up to ``x``."""

    v: Any = 0.0


def distance(first, second, metric: Distance = DEFAULT_DISTANCE) -> float:
    return metric(first, second)


def precedes(a: Element2D, b: Element2D, metric: Distance = DEFAULT_DISTANCE) -> bool:
    """Strict less-than on the abscissa values of two elements."""
    return metric(a.x, b.x) > 0.0
