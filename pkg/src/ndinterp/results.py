"""Composite result types and helpers for generic ordinate arithmetic.

Any ordinate that supports ``+``, ``-`` and multiplication by a float can be
interpolated.  The result types below carry derivatives or integrals
alongside the function value and nest freely, so that e.g. a
``ResultHesse`` of a ``ResultHesse`` holds the mixed second derivatives of a
two-dimensional interpolation.
"""

from __future__ import annotations

from numbers import Real
from typing import Any, Iterator

from .errors import ShapeMismatchError


class _Composite:
    """Fixed-field composite with componentwise arithmetic."""

    __slots__ = ()
    _fields: tuple = ()

    def _components(self):
        return [getattr(self, name) for name in self._fields]

    @classmethod
    def _make(cls, components):
        return cls(*components)

    def _check(self, other):
        if type(other) is not type(self):
            raise ShapeMismatchError(
                f"cannot combine {type(self).__name__} with {type(other).__name__}"
            )

    def __add__(self, other):
        self._check(other)
        return self._make([a + b for a, b in zip(self._components(), other._components())])

    def __sub__(self, other):
        self._check(other)
        return self._make([a - b for a, b in zip(self._components(), other._components())])

    def __mul__(self, factor):
        if not isinstance(factor, Real):
            return NotImplemented
        return self._make([a * factor for a in self._components()])

    __rmul__ = __mul__

    def __truediv__(self, factor):
        if not isinstance(factor, Real):
            return NotImplemented
        return self._make([a / factor for a in self._components()])

    def __neg__(self):
        return self._make([-a for a in self._components()])

    def __eq__(self, other):
        return type(other) is type(self) and self._components() == other._components()

    def __repr__(self):
        inner = ", ".join(f"{n}={v!r}" for n, v in zip(self._fields, self._components()))
        return f"{type(self).__name__}({inner})"

    def tree_leaves(self) -> list[float]:
        out = []
        for c in self._components():
            out.extend(tree_leaves(c))
        return out

    def tree_rebuild(self, leaves: Iterator[float]):
        return self._make([tree_rebuild(c, leaves) for c in self._components()])

    def labeled_leaves(self):
        for name, c in zip(self._fields, self._components()):
            for label, value in labeled_leaves(c):
                yield (name,) + label, value


class ResultHesse(_Composite):
    """Function value with first and second derivative."""

    __slots__ = ("f", "fp", "fpp")
    _fields = ("f", "fp", "fpp")

    def __init__(self, f, fp, fpp):
        self.f = f
        self.fp = fp
        self.fpp = fpp


class ResultPDF(_Composite):
    """Function value, first derivative, integral from xmin to x and total integral."""

    __slots__ = ("f", "fp", "v", "V")
    _fields = ("f", "fp", "v", "V")

    def __init__(self, f, fp, v, V):
        self.f = f
        self.fp = fp
        self.v = v
        self.V = V


class ResultPolynome(_Composite):
    """Function value followed by the first ``N`` derivatives."""

    __slots__ = ("y",)

    def __init__(self, y):
        self.y = list(y)

    @property
    def _fields(self):
        return tuple(f"y{i}" for i in range(len(self.y)))

    @property
    def degree(self) -> int:
        return len(self.y) - 1

    def _components(self):
        return self.y

    @classmethod
    def _make(cls, components):
        return cls(components)

    def _check(self, other):
        super()._check(other)
        if len(other.y) != len(self.y):
            raise ShapeMismatchError(
                f"cannot combine ResultPolynome of length {len(self.y)} and {len(other.y)}"
            )

    def __getitem__(self, i):
        return self.y[i]

    def __len__(self):
        return len(self.y)


def result_scale_add(a, s: float, b):
    """Return ``a + s*b``."""
    return a + b * s


def zero_like(value):
    """Additive identity with the same shape as ``value``."""
    return value * 0.0


def is_scalar(value) -> bool:
    return isinstance(value, Real)


def tree_leaves(value: Any) -> list[float]:
    """Flatten a (possibly nested) ordinate into its scalar leaves."""
    if isinstance(value, Real):
        return [float(value)]
    try:
        return value.tree_leaves()
    except AttributeError:
        raise TypeError(f"cannot flatten ordinate of type {type(value).__name__}") from None


def tree_rebuild(template: Any, leaves: Iterator[float]):
    """Inverse of :func:`tree_leaves`: build an ordinate shaped like ``template``."""
    if isinstance(template, Real):
        return next(leaves)
    return template.tree_rebuild(leaves)


def labeled_leaves(value: Any):
    """Yield ``(label_tuple, scalar)`` for every leaf of a composite result."""
    if isinstance(value, _Composite):
        yield from value.labeled_leaves()
    elif isinstance(value, Real):
        yield (), float(value)
    else:
        for i, leaf in enumerate(tree_leaves(value)):
            yield (f"[{i}]",), leaf


def scalar_value(value) -> float:
    """Function value of a result: descend through the first field of each level."""
    while isinstance(value, _Composite):
        value = value._components()[0]
    return float(value)
