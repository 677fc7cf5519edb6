"""Sorted one-dimensional collections of elements and abscissa axes."""

from __future__ import annotations

import bisect
import functools
import math
from operator import attrgetter
from typing import Any, Callable, Iterable, Iterator, Sequence

from .elements import DEFAULT_DISTANCE, Distance, Element2D
from .errors import AbscissaMismatchError, DuplicateAbscissaError

_get_x = attrgetter("x")

# Relative slack applied to the direct grid index so that exact nodes map to themselves.
_GRID_NODE_TOLERANCE = 1e-12


class Axis:
    """Ordered sequence of abscissa values used to configure a collection."""

    def values(self) -> list[float]:
        raise NotImplementedError

    def __iter__(self):
        return iter(self.values())

    def __len__(self):
        return len(self.values())


class GridAxis(Axis):
    """``n`` equidistant abscissa values from ``xmin`` to ``xmax`` inclusive."""

    def __init__(self, n: int, xmin: float, xmax: float):
        if int(n) != n or n < 2:
            raise ValueError(f"grid axis needs n >= 2, got {n!r}")
        if not xmin < xmax:
            raise ValueError(f"grid axis needs xmin < xmax, got [{xmin}, {xmax}]")
        self.n = int(n)
        self.xmin = float(xmin)
        self.xmax = float(xmax)

    def values(self):
        step = (self.xmax - self.xmin) / (self.n - 1)
        out = [self.xmin + i * step for i in range(self.n - 1)]
        out.append(self.xmax)
        return out

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"GridAxis({self.n}, {self.xmin!r}, {self.xmax!r})"


class SetAxis(Axis):
    """Explicit, possibly non-equidistant abscissa values."""

    def __init__(self, values: Iterable[float]):
        xs = sorted(float(v) for v in values)
        for a, b in zip(xs, xs[1:]):
            if a == b:
                raise DuplicateAbscissaError(f"set axis contains duplicate abscissa {a!r}")
        self._values = xs

    def values(self):
        return list(self._values)

    def __len__(self):
        return len(self._values)

    def __repr__(self):
        return f"SetAxis({self._values!r})"


class Collection:
    """Ordered sequence of elements with binary-search lookup.

    Indexing with an abscissa value follows map semantics: ``c[x]`` returns the
    ordinate of the element at ``x`` and inserts a new element with a default
    ordinate when there is none.  Positional access goes through
    :attr:`elements`.

    Arithmetic applies to the ordinates only and requires identical abscissa
    values.  Derivative and integral scratch fields are not carried over.
    """

    def __init__(
        self,
        elements: Iterable[Element2D] = (),
        *,
        metric: Distance | None = None,
        element_type: type = Element2D,
        default: Callable[[], Any] = float,
    ):
        self.elements: list = list(elements)
        self.metric = DEFAULT_DISTANCE if metric is None else metric
        self.element_type = element_type
        self.default = default
        self._version = 0

    @classmethod
    def from_pairs(cls, xs: Sequence[float], ys: Sequence[Any], **kwargs):
        c = cls(**kwargs)
        et = c.element_type
        c.elements = [et(x, y) for x, y in zip(xs, ys)]
        c.sort()
        return c

    @property
    def collection(self):
        return self

    @property
    def dimensions(self) -> int:
        return 1

    def touch(self):
        """Mark the contents as modified (invalidates compiled scratch of owners)."""
        self._version += 1

    # -- sequence protocol -------------------------------------------------

    def __len__(self):
        return len(self.elements)

    def __iter__(self) -> Iterator:
        return iter(self.elements)

    def __bool__(self):
        return bool(self.elements)

    def abscissas(self) -> list[float]:
        return [e.x for e in self.elements]

    def ordinates(self) -> list:
        return [e.y for e in self.elements]

    @property
    def xmin(self):
        return self.elements[0].x

    @property
    def xmax(self):
        return self.elements[-1].x

    # -- search ------------------------------------------------------------

    def lower_bound(self, x) -> int:
        """Position of the first element that does not precede ``x``."""
        metric = self.metric
        if type(metric) is Distance:
            return bisect.bisect_left(self.elements, x, key=_get_x)
        elements = self.elements
        lo, hi = 0, len(elements)
        while lo < hi:
            mid = (lo + hi) // 2
            if metric(elements[mid].x, x) > 0.0:
                lo = mid + 1
            else:
                hi = mid
        return lo

    def find(self, x):
        """Element within precision of ``x``, or ``None``."""
        i = self.lower_bound(x)
        return self._match(i, x)

    def _match(self, i, x):
        elements = self.elements
        metric = self.metric
        prec = metric.precision
        if i < len(elements) and abs(metric(x, elements[i].x)) <= prec:
            return elements[i]
        if i > 0 and abs(metric(elements[i - 1].x, x)) <= prec:
            return elements[i - 1]
        return None

    def __contains__(self, x):
        return self.find(x) is not None

    # -- building ----------------------------------------------------------

    def insert_or_get(self, x):
        """Element at ``x``; a new element with default ordinate is inserted if absent."""
        self._version += 1
        i = self.lower_bound(x)
        found = self._match(i, x)
        if found is not None:
            return found
        element = self.element_type(x, self.default())
        self.elements.insert(i, element)
        return element

    def __getitem__(self, x):
        return self.insert_or_get(x).y

    def __setitem__(self, x, value):
        self.insert_or_get(x).y = value

    def configure(self, axis: Axis | Iterable[float], fill: Callable[[float], Any] | None = None):
        """Replace the contents by the abscissa values of ``axis`` with ordinates ``fill(x)``."""
        xs = axis.values() if isinstance(axis, Axis) else sorted(float(v) for v in axis)
        metric = self.metric
        for a, b in zip(xs, xs[1:]):
            if metric(a, b) <= metric.precision:
                raise DuplicateAbscissaError(f"axis contains duplicate abscissa {b!r}")
        make = fill if fill is not None else (lambda _x: self.default())
        et = self.element_type
        self.elements = [et(x, make(x)) for x in xs]
        self._version += 1

    def sort(self):
        """Restore the order after direct modification of :attr:`elements`."""
        metric = self.metric

        def cmp(a, b):
            d = metric(a.x, b.x)
            return -1 if d > 0.0 else (1 if d < 0.0 else 0)

        self.elements.sort(key=functools.cmp_to_key(cmp))
        for a, b in zip(self.elements, self.elements[1:]):
            if metric(a.x, b.x) <= metric.precision:
                raise DuplicateAbscissaError(f"duplicate abscissa {b.x!r}")
        self._version += 1

    def is_sorted(self) -> bool:
        metric = self.metric
        return all(
            metric(a.x, b.x) > metric.precision for a, b in zip(self.elements, self.elements[1:])
        )

    def is_equidistant(self, rtol: float = 1e-9) -> bool:
        n = len(self.elements)
        if n < 2:
            return True
        metric = self.metric
        step = metric(self.xmin, self.xmax) / (n - 1)
        return all(
            abs(metric(a.x, b.x) - step) <= rtol * abs(step)
            for a, b in zip(self.elements, self.elements[1:])
        )

    # -- arithmetic --------------------------------------------------------

    def empty_like(self):
        return type(self)(metric=self.metric, element_type=self.element_type, default=self.default)

    def _with_ordinates(self, ys):
        out = self.empty_like()
        et = self.element_type
        out.elements = [et(e.x, y) for e, y in zip(self.elements, ys)]
        return out

    def _check_abscissas(self, other):
        if not isinstance(other, Collection):
            raise AbscissaMismatchError(f"cannot combine collection with {type(other).__name__}")
        if len(other.elements) != len(self.elements):
            raise AbscissaMismatchError(
                f"collections differ in size: {len(self.elements)} and {len(other.elements)}"
            )
        metric = self.metric
        prec = metric.precision
        for a, b in zip(self.elements, other.elements):
            if abs(metric(a.x, b.x)) > prec:
                raise AbscissaMismatchError(f"abscissa {a.x!r} does not match {b.x!r}")

    def __add__(self, other):
        self._check_abscissas(other)
        return self._with_ordinates([a.y + b.y for a, b in zip(self.elements, other.elements)])

    def __sub__(self, other):
        self._check_abscissas(other)
        return self._with_ordinates([a.y - b.y for a, b in zip(self.elements, other.elements)])

    def __mul__(self, factor):
        if isinstance(factor, Collection):
            return NotImplemented
        return self._with_ordinates([e.y * factor for e in self.elements])

    __rmul__ = __mul__

    def __truediv__(self, factor):
        return self._with_ordinates([e.y / factor for e in self.elements])

    def __neg__(self):
        return self._with_ordinates([-e.y for e in self.elements])

    def __iadd__(self, other):
        self._check_abscissas(other)
        for a, b in zip(self.elements, other.elements):
            a.y = a.y + b.y
        self._version += 1
        return self

    def __isub__(self, other):
        self._check_abscissas(other)
        for a, b in zip(self.elements, other.elements):
            a.y = a.y - b.y
        self._version += 1
        return self

    def __imul__(self, factor):
        for a in self.elements:
            a.y = a.y * factor
        self._version += 1
        return self

    def __eq__(self, other):
        if not isinstance(other, Collection):
            return NotImplemented
        return [(e.x, e.y) for e in self.elements] == [(e.x, e.y) for e in other.elements]

    __hash__ = None

    def tree_leaves(self):
        from .results import tree_leaves

        out = []
        for e in self.elements:
            out.extend(tree_leaves(e.y))
        return out

    def tree_rebuild(self, leaves):
        from .results import tree_rebuild

        return self._with_ordinates([tree_rebuild(e.y, leaves) for e in self.elements])

    def __repr__(self):
        body = ", ".join(f"({e.x!r}, {e.y!r})" for e in self.elements[:6])
        if len(self.elements) > 6:
            body += ", ..."
        return f"{type(self).__name__}([{body}])"


class GridCollection(Collection):
    """Collection with equidistant abscissa values and direct index computation."""

    def lower_bound(self, x) -> int:
        elements = self.elements
        n = len(elements)
        if n < 2:
            return super().lower_bound(x)
        metric = self.metric
        span = metric(elements[0].x, elements[-1].x)
        t = metric(elements[0].x, x) * (n - 1) / span
        if t <= 0.0:
            i = 0
        elif t >= n - 1:
            i = n - 1 if t <= (n - 1) * (1.0 + _GRID_NODE_TOLERANCE) else n
        else:
            i = math.ceil(t - _GRID_NODE_TOLERANCE * t)
        # Align with the comparator on the stored abscissas (at most a step or two).
        while i > 0 and not metric(elements[i - 1].x, x) > 0.0:
            i -= 1
        while i < n and metric(elements[i].x, x) > 0.0:
            i += 1
        return i
