"""One-dimensional interpolating collections.

Each interpolator owns a :class:`~ndinterp.collection.Collection` (binary
search) or :class:`~ndinterp.collection.GridCollection` (direct index) and
implements :meth:`evaluate`.  Ordinates are either terminal values, which may
be of any type with ``+``, ``-`` and scalar ``*``, or nested functionals of
the lower dimensions.  In the latter case the nested functionals are
evaluated first and their results are interpolated; derivative and integral
scratch is then computed on the fly from those results.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass, replace
from typing import Any, Callable, Iterable

import numpy as np

from .collection import Axis, Collection, GridCollection
from .elements import DEFAULT_DISTANCE, Distance, Element2D, IntegralElement, SplineElement
from .errors import (
    AbscissaMismatchError,
    NotCompiledError,
    TooFewPointsError,
    ValueOutOfRangeError,
)
from .functional import RAISE, ArgumentCursor, ErrorPolicy, Functional
from .results import (
    ResultHesse,
    ResultPDF,
    ResultPolynome,
    is_scalar,
    tree_leaves,
    tree_rebuild,
)

MAX_DEGREE = 7

KINDS = ("polint", "spline", "hermite")
RESULTS = ("scalar", "hesse", "pdf", "polynome")

_DESCRIPTOR = re.compile(
    r"^(?:(?P<search>grid|sorted)[-_:]?)?(?P<kind>polint(?P<degree>\d)|spline|hermite)"
    r"[-_:]?(?P<suffix>h|pdf|d(?P<order>\d))?$"
)


@dataclass(frozen=True)
class Method:
    """Search method, interpolation technique and result kind of one dimension.

    The string form is ``(grid|sorted)(polint0..7|spline|hermite)`` followed by
    an optional suffix ``h`` (value and two derivatives), ``pdf`` (value,
    derivative and integrals) or ``d<M>`` (value and ``M`` derivatives, polint
    only), e.g. ``"gridpolint3h"``.  Without a search prefix the sorted
    (binary search) collection is used.
    """

    kind: str = "polint"
    degree: int = 1
    grid: bool = False
    result: str = "scalar"
    order: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown interpolation kind {self.kind!r}")
        if self.result not in RESULTS:
            raise ValueError(f"unknown result kind {self.result!r}")
        if self.kind == "polint" and not 0 <= self.degree <= MAX_DEGREE:
            raise ValueError(f"polynomial degree must be in [0, {MAX_DEGREE}], got {self.degree}")
        if self.result == "polynome":
            if self.kind != "polint":
                raise ValueError("derivative-list results are only available for polint")
            if not 0 <= self.order <= self.degree:
                raise ValueError(f"derivative order {self.order} exceeds degree {self.degree}")

    @classmethod
    def parse(cls, text: str | Method) -> Method:
        if isinstance(text, Method):
            return text
        m = _DESCRIPTOR.match(text.strip().lower())
        if m is None:
            raise ValueError(f"invalid method descriptor {text!r}")
        kind = "polint" if m["degree"] is not None else m["kind"]
        suffix = m["suffix"]
        result = {None: "scalar", "h": "hesse", "pdf": "pdf"}.get(suffix, "polynome")
        return cls(
            kind=kind,
            degree=int(m["degree"]) if m["degree"] is not None else 0,
            grid=m["search"] == "grid",
            result=result,
            order=int(m["order"]) if m["order"] is not None else 0,
        )

    def __str__(self):
        name = "grid" if self.grid else "sorted"
        name += f"polint{self.degree}" if self.kind == "polint" else self.kind
        suffix = {"scalar": "", "hesse": "h", "pdf": "pdf"}.get(self.result, f"d{self.order}")
        return name + suffix

    @property
    def derivative_order(self) -> int:
        return {"scalar": 0, "hesse": 2, "pdf": 1, "polynome": self.order}[self.result]

    def with_result(self, result: str, order: int = 0) -> Method:
        return replace(self, result=result, order=order)

    def create(self, **kwargs) -> CollectionFunction:
        """New empty interpolator of this method."""
        cls = {"polint": PolintFunction, "spline": SplineFunction, "hermite": HermiteSplineFunction}[
            self.kind
        ]
        return cls(self, **kwargs)


def lift(method: Method, value):
    """Result of ``method`` for a constant function of ``value``."""
    if method.result == "scalar":
        return value
    zero = value * 0.0
    if method.result == "hesse":
        return ResultHesse(value, zero, zero)
    if method.result == "pdf":
        return ResultPDF(value, zero, zero, zero)
    return ResultPolynome([value] + [zero] * method.order)


def _assemble(method: Method, derivs: list, v=None, V=None):
    result = method.result
    if result == "scalar":
        return derivs[0]
    if result == "hesse":
        return ResultHesse(derivs[0], derivs[1], derivs[2])
    if result == "pdf":
        return ResultPDF(derivs[0], derivs[1], v, V)
    return ResultPolynome(derivs[: method.order + 1])


# -- numerical kernels -------------------------------------------------------


def neville(xs, ys, x, order: int = 0, metric: Distance = DEFAULT_DISTANCE) -> list:
    """Value and first ``order`` derivatives of the polynomial through ``(xs, ys)``.

    Neville's recurrence, differentiated term by term.  With
    ``w = (x - x_i) / (x_j - x_i)``::

        P[i..j]^(k) = P[i..j-1]^(k) + w (P[i+1..j]^(k) - P[i..j-1]^(k))
                      + k (P[i+1..j]^(k-1) - P[i..j-1]^(k-1)) / (x_j - x_i)

    Each step is written as an offset from the partial polynomial of the
    nearer node, so node values and constant data are reproduced exactly.
    Only ``+``, ``-``, ``*`` and ``/`` by floats are applied to the ordinates.
    """
    n = len(xs)
    offsets = [metric(xi, x) for xi in xs]
    if order:
        zero = ys[0] * 0.0
        table = [[y] + [zero] * order for y in ys]
    else:
        table = [[y] for y in ys]
    for m in range(1, n):
        for i in range(n - m):
            j = i + m
            left = table[i]
            right = table[i + 1]
            width = metric(xs[i], xs[j])
            w = offsets[i] / width
            near_left = w <= 0.5
            if near_left:
                base, step, weight = left, right, w
            else:
                base, step, weight = right, left, -offsets[j] / width
            row = [base[0] + (step[0] - base[0]) * weight]
            for k in range(1, order + 1):
                row.append(base[k] + (step[k] - base[k]) * weight + (right[k - 1] - left[k - 1]) * (k / width))
            table[i] = row
    return table[0]


@functools.lru_cache(maxsize=None)
def _gauss_legendre(m: int):
    t, w = np.polynomial.legendre.leggauss(m)
    return tuple(float(v) for v in t), tuple(float(v) for v in w)


def natural_second_derivatives(xs, ys, metric: Distance = DEFAULT_DISTANCE) -> list:
    """Second derivatives of the natural cubic spline (tridiagonal solve)."""
    n = len(xs)
    zero = ys[0] * 0.0
    c = [0.0] * n
    u = [zero] * n
    for i in range(1, n - 1):
        h0 = metric(xs[i - 1], xs[i])
        h1 = metric(xs[i], xs[i + 1])
        sig = h0 / (h0 + h1)
        p = sig * c[i - 1] + 2.0
        c[i] = (sig - 1.0) / p
        rhs = (ys[i + 1] - ys[i]) / h1 - (ys[i] - ys[i - 1]) / h0
        u[i] = (rhs * (6.0 / (h0 + h1)) - u[i - 1] * sig) / p
    d = [zero] * n
    for k in range(n - 2, -1, -1):
        d[k] = d[k + 1] * c[k] + u[k]
    return d


def limit_slopes(delta: np.ndarray, m: np.ndarray) -> np.ndarray:
    """Fritsch-Carlson limiter applied column by column.

    ``delta`` holds the secant slopes of the ``n-1`` intervals, ``m`` the
    ``n`` node slopes; both have one column per scalar leaf of the ordinates.
    """
    m = m.copy()
    m[0] = np.where(np.sign(m[0]) != np.sign(delta[0]), 0.0, m[0])
    m[-1] = np.where(np.sign(m[-1]) != np.sign(delta[-1]), 0.0, m[-1])
    if len(m) > 2:
        m[1:-1] = np.where(delta[:-1] * delta[1:] <= 0.0, 0.0, m[1:-1])
    with np.errstate(divide="ignore", invalid="ignore"):
        for k in range(len(delta)):
            dk = delta[k]
            flat = dk == 0.0
            m[k] = np.where(flat, 0.0, m[k])
            m[k + 1] = np.where(flat, 0.0, m[k + 1])
            alpha = np.where(flat, 0.0, m[k] / dk)
            beta = np.where(flat, 0.0, m[k + 1] / dk)
            s = alpha * alpha + beta * beta
            big = s > 9.0
            if big.any():
                tau = 3.0 / np.sqrt(np.where(big, s, 1.0))
                m[k] = np.where(big, tau * alpha * dk, m[k])
                m[k + 1] = np.where(big, tau * beta * dk, m[k + 1])
    return m


def hermite_slopes(xs, ys, metric: Distance = DEFAULT_DISTANCE) -> list:
    """Node slopes for monotone Hermite interpolation.

    Three-point differences in the interior and one-sided three-point
    differences at the ends, limited so that monotone data give a monotone
    interpolant.  Composite ordinates are treated leaf by leaf.
    """
    n = len(xs)
    template = ys[0]
    y = np.array([tree_leaves(v) for v in ys], dtype=float)
    h = np.array([metric(xs[i], xs[i + 1]) for i in range(n - 1)])[:, None]
    delta = np.diff(y, axis=0) / h
    m = np.empty_like(y)
    if n == 2:
        m[0] = m[1] = delta[0]
    else:
        h0, h1 = h[:-1], h[1:]
        m[1:-1] = (h0 * delta[1:] + h1 * delta[:-1]) / (h0 + h1)
        m[0] = ((2.0 * h[0] + h[1]) * delta[0] - h[0] * delta[1]) / (h[0] + h[1])
        m[-1] = ((2.0 * h[-1] + h[-2]) * delta[-1] - h[-1] * delta[-2]) / (h[-1] + h[-2])
    m = limit_slopes(delta, m)
    return [tree_rebuild(template, iter(row)) for row in m.tolist()]


def _spline_piece(method, x, xlo, xhi, ylo, yhi, dlo, dhi, vlo, V, metric):
    h = metric(xlo, xhi)
    a = metric(x, xhi) / h
    b = 1.0 - a
    h2 = h * h / 6.0
    dy = yhi - ylo
    bend = (dlo * (a * a * a - a) + dhi * (b * b * b - b)) * h2
    if b <= 0.5:
        derivs = [ylo + dy * b + bend]
    else:
        derivs = [yhi - dy * a + bend]
    order = method.derivative_order
    if order >= 1:
        derivs.append(
            dy / h - dlo * ((3.0 * a * a - 1.0) * h / 6.0) + dhi * ((3.0 * b * b - 1.0) * h / 6.0)
        )
    if order >= 2:
        derivs.append(dlo * a + dhi * b)
    if method.result == "pdf":
        return _assemble(method, derivs, vlo + _spline_partial(h, a, b, ylo, yhi, dlo, dhi), V)
    return _assemble(method, derivs)


def _spline_partial(h, a, b, ylo, yhi, dlo, dhi):
    """Integral of the cubic spline piece from its lower node to the point (a, b)."""
    c = h * h * h / 6.0
    return (
        ylo * (h * (1.0 - a * a) / 2.0)
        + yhi * (h * b * b / 2.0)
        + dlo * (c * ((1.0 - a ** 4) / 4.0 - (1.0 - a * a) / 2.0))
        + dhi * (c * (b ** 4 / 4.0 - b * b / 2.0))
    )


def _hermite_piece(method, x, x0, x1, y0, y1, m0, m1, v0, V, metric):
    h = metric(x0, x1)
    t = metric(x0, x) / h
    s = 1.0 - t
    dy = y1 - y0
    # offset from the nearer node: constants are reproduced exactly and
    # rounding cannot push a monotone piece past its end values
    bend = m0 * (h * t * s * s) - m1 * (h * t * t * s)
    if t <= 0.5:
        y = y0 + dy * (t * t * (3.0 - 2.0 * t)) + bend
    else:
        y = y1 - dy * (s * s * (3.0 - 2.0 * s)) + bend
    derivs = [y]
    order = method.derivative_order
    if order >= 1:
        derivs.append(dy * (6.0 * t * s / h) + m0 * (3.0 * t * t - 4.0 * t + 1.0) + m1 * (3.0 * t * t - 2.0 * t))
    if order >= 2:
        derivs.append(dy * ((6.0 - 12.0 * t) / (h * h)) + m0 * ((6.0 * t - 4.0) / h) + m1 * ((6.0 * t - 2.0) / h))
    if method.result == "pdf":
        return _assemble(method, derivs, v0 + _hermite_partial(h, t, y0, y1, m0, m1), V)
    return _assemble(method, derivs)


def _hermite_partial(h, t, y0, y1, m0, m1):
    t2 = t * t
    t3 = t2 * t
    t4 = t2 * t2
    return (
        y0 * (h * (t - t3 + t4 / 2.0))
        + y1 * (h * (t3 - t4 / 2.0))
        + m0 * (h * h * (t2 / 2.0 - 2.0 * t3 / 3.0 + t4 / 4.0))
        + m1 * (h * h * (t4 / 4.0 - t3 / 3.0))
    )


# -- interpolating collections ----------------------------------------------


class CollectionFunction(Functional):
    """Interpolating collection: shared bookkeeping of all 1D methods."""

    min_points = 1

    def __init__(
        self,
        method: Method | str,
        *,
        metric: Distance | None = None,
        child_dimensions: int = 0,
        default: Callable[[], Any] | None = None,
        error_policy: ErrorPolicy = RAISE,
    ):
        self.method = Method.parse(method)
        self.child_dimensions = child_dimensions
        self.error_policy = error_policy
        self._static = child_dimensions == 0
        if self._static and self._uses_integrals():
            element_type = IntegralElement
        elif self._static and self.method.kind != "polint":
            element_type = SplineElement
        else:
            element_type = Element2D
        cls = GridCollection if self.method.grid else Collection
        self.collection = cls(
            metric=metric, element_type=element_type, default=default if default is not None else float
        )
        self._compiled_version = None

    def _uses_integrals(self):
        return self.method.result == "pdf"

    @property
    def needs_compile(self) -> bool:
        """Whether evaluation relies on scratch filled by :meth:`compile`."""
        return self._static and (self.method.kind != "polint" or self._uses_integrals())

    @property
    def compiled(self) -> bool:
        return self._compiled_version == self.collection._version

    @property
    def dimensions(self) -> int:
        return 1 + self.child_dimensions

    @property
    def methods(self) -> tuple:
        if self._static or not self.collection.elements:
            return (self.method,)
        return (self.method,) + self.collection.elements[0].y.methods

    @property
    def metric(self) -> Distance:
        return self.collection.metric

    def empty_like(self):
        return type(self)(
            self.method,
            metric=self.collection.metric,
            child_dimensions=self.child_dimensions,
            default=self.collection.default,
            error_policy=self.error_policy,
        )

    # -- map-style building, delegated to the collection -------------------

    def __getitem__(self, x):
        return self.collection[x]

    def __setitem__(self, x, value):
        self.collection[x] = value

    def __len__(self):
        return len(self.collection)

    def __iter__(self):
        return iter(self.collection)

    def insert_or_get(self, x):
        return self.collection.insert_or_get(x)

    def lower_bound(self, x) -> int:
        return self.collection.lower_bound(x)

    def configure(self, axis: Axis | Iterable[float], fill: Callable | None = None):
        self.collection.configure(axis, fill)

    def fill(self, source):
        """Copy the elements of a one-dimensional collection or ``(x, y)`` pairs."""
        pairs = source.collection.elements if hasattr(source, "collection") else source
        coll = self.collection
        et = coll.element_type
        coll.elements = [et(*p) if isinstance(p, tuple) else et(p.x, p.y) for p in pairs]
        coll.sort()
        return self

    # -- compile ------------------------------------------------------------

    def compile(self):
        self._compile(())

    def _compile(self, key_path: tuple):
        coll = self.collection
        n = len(coll.elements)
        if self.method.kind != "polint" or self._uses_integrals():
            if n < self.min_points:
                raise TooFewPointsError(
                    f"{self.method} needs at least {self.min_points} points, got {n}", key_path
                )
        if self.method.grid and not coll.is_equidistant():
            raise AbscissaMismatchError(
                f"grid collection at key path {key_path} has non-equidistant abscissas"
            )
        if self._static:
            if self.needs_compile:
                self._prepare()
        else:
            for e in coll.elements:
                e.y._compile(key_path + (e.x,))
        self._compiled_version = coll._version

    def _prepare(self):
        """Fill derivative/integral scratch of terminal ordinates."""

    def set_error_policy(self, policy: ErrorPolicy):
        self.error_policy = policy
        if not self._static:
            for e in self.collection.elements:
                e.y.set_error_policy(policy)

    def constant_result(self, value):
        elements = self.collection.elements
        if not self._static and elements:
            value = elements[0].y.constant_result(value)
        return lift(self.method, value)

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, cursor: ArgumentCursor):
        coll = self.collection
        elements = coll.elements
        n = len(elements)
        if n < self.min_points:
            return self._fail(TooFewPointsError(f"{self.method} needs at least {self.min_points} points, got {n}"))
        if self._static and self.needs_compile and self._compiled_version != coll._version:
            raise NotCompiledError(f"{type(self).__name__} must be compiled before evaluation")
        x = cursor.x
        p = coll.lower_bound(x)
        metric = coll.metric
        prec = metric.precision
        if (p == 0 and metric(x, elements[0].x) > prec) or (
            p == n and metric(elements[-1].x, x) > prec
        ):
            return self._fail(
                ValueOutOfRangeError(f"abscissa {x!r} outside [{elements[0].x!r}, {elements[-1].x!r}]")
            )
        return self._interpolate(x, p, cursor.next())

    def _interpolate(self, x, p, rest):
        raise NotImplementedError

    def _values(self, rest):
        elements = self.collection.elements
        if self._static:
            return [e.y for e in elements]
        return [e.y.evaluate(rest) for e in elements]

    def __repr__(self):
        return f"{type(self).__name__}({str(self.method)!r}, size={len(self.collection)})"


class PolintFunction(CollectionFunction):
    """Polynomial interpolation of degree ``N`` over the ``N+1`` nearest nodes.

    ``N = 0`` is a look-up table returning the node at or below ``x``; ``N = 1``
    is linear interpolation; higher degrees use Neville's algorithm on a
    window centred on the bracketing interval and clamped at the edges.
    """

    @property
    def degree(self) -> int:
        return self.method.degree

    @property
    def min_points(self):
        return self.method.degree + 1

    def _window(self, p: int, n: int) -> int:
        N = self.method.degree
        return min(max(p - (N + 1) // 2, 0), n - N - 1)

    def _prepare(self):
        elements = self.collection.elements
        xs = [e.x for e in elements]
        ys = [e.y for e in elements]
        for e, v in zip(elements, self._cumulative(xs, ys)):
            e.v = v

    def _cumulative(self, xs, ys):
        v = [ys[0] * 0.0]
        for j in range(1, len(xs)):
            v.append(v[-1] + self._segment(xs, ys, j, xs[j - 1], xs[j]))
        return v

    def _segment(self, xs, ys, p, a, b):
        """Integral from ``a`` to ``b`` of the interpolant of interval ``(p-1, p)``."""
        metric = self.collection.metric
        N = self.method.degree
        width = metric(a, b)
        if N == 0:
            return ys[p - 1] * width
        start = self._window(p, len(xs))
        wx = xs[start : start + N + 1]
        wy = ys[start : start + N + 1]
        nodes, weights = _gauss_legendre(N // 2 + 1)
        half = width / 2.0
        total = None
        for t, w in zip(nodes, weights):
            term = neville(wx, wy, a + half * (1.0 + t), 0, metric)[0] * (w * half)
            total = term if total is None else total + term
        return total

    def _interpolate(self, x, p, rest):
        method = self.method
        elements = self.collection.elements
        metric = self.collection.metric
        n = len(elements)
        N = method.degree
        order = method.derivative_order
        pdf = method.result == "pdf"
        static = self._static

        if pdf:
            xs = [e.x for e in elements]
            ys = self._values(rest)
            value = ys.__getitem__
        elif static:
            value = lambda i: elements[i].y  # noqa: E731
        else:
            value = lambda i: elements[i].y.evaluate(rest)  # noqa: E731

        if N == 0:
            if p < n and abs(metric(x, elements[p].x)) <= metric.precision:
                i = p
            else:
                i = p - 1
            y = value(i)
            derivs = [y] + [y * 0.0] * order
            if not pdf:
                return _assemble(method, derivs)
            lo = min(max(p, 1), n - 1)
            return self._pdf(derivs, xs, ys, lo, x)

        p = min(max(p, 1), n - 1)
        if N == 1:
            q = p
            p = q - 1
            xl, xr = elements[p].x, elements[q].x
            yl, yr = value(p), value(q)
            dx = metric(xl, xr)
            a = metric(x, xr) / dx
            b = 1.0 - a
            dy = yr - yl
            derivs = [yl + dy * b if b <= 0.5 else yr - dy * a]
            if order >= 1:
                derivs.append(dy / dx)
            if order >= 2:
                derivs.append(derivs[0] * 0.0)
            if not pdf:
                return _assemble(method, derivs)
            return self._pdf(derivs, xs, ys, q, x)

        start = self._window(p, n)
        wx = [elements[i].x for i in range(start, start + N + 1)]
        wy = [value(i) for i in range(start, start + N + 1)]
        derivs = neville(wx, wy, x, order, metric)
        if not pdf:
            return _assemble(method, derivs)
        return self._pdf(derivs, xs, ys, p, x)

    def _pdf(self, derivs, xs, ys, p, x):
        elements = self.collection.elements
        if self._static:
            vlo = elements[p - 1].v
            V = elements[-1].v
        else:
            cum = self._cumulative(xs, ys)
            vlo = cum[p - 1]
            V = cum[-1]
        return _assemble(self.method, derivs, vlo + self._segment(xs, ys, p, xs[p - 1], x), V)


class SplineFunction(CollectionFunction):
    """Natural cubic spline; ``compile`` solves for the second derivatives."""

    min_points = 3

    def _prepare(self):
        elements = self.collection.elements
        metric = self.collection.metric
        xs = [e.x for e in elements]
        ys = [e.y for e in elements]
        d = natural_second_derivatives(xs, ys, metric)
        for e, di in zip(elements, d):
            e.d = di
        if self._uses_integrals():
            for e, v in zip(elements, self._cumulative(xs, ys, d)):
                e.v = v

    def _cumulative(self, xs, ys, d):
        metric = self.collection.metric
        v = [ys[0] * 0.0]
        for j in range(1, len(xs)):
            h = metric(xs[j - 1], xs[j])
            v.append(v[-1] + _spline_partial(h, 0.0, 1.0, ys[j - 1], ys[j], d[j - 1], d[j]))
        return v

    def _interpolate(self, x, p, rest):
        elements = self.collection.elements
        metric = self.collection.metric
        n = len(elements)
        hi = min(max(p, 1), n - 1)
        lo = hi - 1
        pdf = self.method.result == "pdf"
        if self._static:
            elo, ehi = elements[lo], elements[hi]
            vlo = elo.v if pdf else None
            V = elements[-1].v if pdf else None
            return _spline_piece(
                self.method, x, elo.x, ehi.x, elo.y, ehi.y, elo.d, ehi.d, vlo, V, metric
            )
        xs = [e.x for e in elements]
        ys = self._values(rest)
        d = natural_second_derivatives(xs, ys, metric)
        vlo = V = None
        if pdf:
            cum = self._cumulative(xs, ys, d)
            vlo, V = cum[lo], cum[-1]
        return _spline_piece(self.method, x, xs[lo], xs[hi], ys[lo], ys[hi], d[lo], d[hi], vlo, V, metric)


class HermiteSplineFunction(CollectionFunction):
    """Piecewise cubic Hermite interpolation with monotonicity-preserving slopes."""

    min_points = 2

    def _prepare(self):
        elements = self.collection.elements
        metric = self.collection.metric
        xs = [e.x for e in elements]
        ys = [e.y for e in elements]
        m = hermite_slopes(xs, ys, metric)
        for e, mi in zip(elements, m):
            e.d = mi
        if self._uses_integrals():
            for e, v in zip(elements, self._cumulative(xs, ys, m)):
                e.v = v

    def _cumulative(self, xs, ys, m):
        metric = self.collection.metric
        v = [ys[0] * 0.0]
        for j in range(1, len(xs)):
            h = metric(xs[j - 1], xs[j])
            v.append(v[-1] + _hermite_partial(h, 1.0, ys[j - 1], ys[j], m[j - 1], m[j]))
        return v

    def _interpolate(self, x, p, rest):
        elements = self.collection.elements
        metric = self.collection.metric
        n = len(elements)
        hi = min(max(p, 1), n - 1)
        lo = hi - 1
        pdf = self.method.result == "pdf"
        if self._static:
            elo, ehi = elements[lo], elements[hi]
            vlo = elo.v if pdf else None
            V = elements[-1].v if pdf else None
            return _hermite_piece(
                self.method, x, elo.x, ehi.x, elo.y, ehi.y, elo.d, ehi.d, vlo, V, metric
            )
        xs = [e.x for e in elements]
        ys = self._values(rest)
        m = hermite_slopes(xs, ys, metric)
        vlo = V = None
        if pdf:
            cum = self._cumulative(xs, ys, m)
            vlo, V = cum[lo], cum[-1]
        return _hermite_piece(self.method, x, xs[lo], xs[hi], ys[lo], ys[hi], m[lo], m[hi], vlo, V, metric)


class ConstantFunction1D(Functional):
    """One-dimensional function returning the value given at construction.

    The value may be anything, including a whole table; placed below a list
    of interpolating maps it makes those maps interpolate entire tables.
    """

    dimensions = 1

    def __init__(self, value: Any = 0.0):
        self.value = value
        self.error_policy = RAISE

    def evaluate(self, cursor: ArgumentCursor):
        return self.value

    def _compile(self, key_path):
        pass

    def constant_result(self, value):
        if is_scalar(self.value):
            return value
        leaves = tree_leaves(self.value)
        return tree_rebuild(self.value, iter([float(value)] * len(leaves)))

    def empty_like(self):
        return ConstantFunction1D(self.value)

    def __repr__(self):
        return f"ConstantFunction1D({self.value!r})"


def polint(degree: int, *, grid: bool = False, result: str = "scalar", order: int = 0, **kwargs):
    """Shorthand for ``Method("polint", degree, grid, result, order).create(**kwargs)``."""
    return Method("polint", degree, grid, result, order).create(**kwargs)


def spline(*, grid: bool = False, result: str = "scalar", **kwargs):
    return Method("spline", 0, grid, result).create(**kwargs)


def hermite(*, grid: bool = False, result: str = "scalar", **kwargs):
    return Method("hermite", 0, grid, result).create(**kwargs)
