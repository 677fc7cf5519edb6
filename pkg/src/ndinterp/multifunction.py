"""Multi-dimensional interpolation: a base function as a function of a list of maps."""

from __future__ import annotations

import functools
from typing import Callable, Sequence

from .elements import Distance
from .functional import RAISE, ArgumentCursor, ErrorPolicy, Functional
from .interpolators import ConstantFunction1D, Method
from .multimap import MultiMap, leaf_count, multi_configure, multi_get, multi_insert, super_items, to_multimap


def _base_factory(base, metric) -> Callable[[], Functional]:
    if isinstance(base, (str, Method)):
        method = Method.parse(base)
        return functools.partial(method.create, metric=metric)
    if isinstance(base, Functional):
        return base.empty_like
    if callable(base):
        return base
    raise TypeError(f"cannot use {base!r} as base function")


class MultiFunction(Functional):
    """Base function composed under a list of interpolating maps.

    ``maps`` holds one method per outer dimension, outermost first.  ``base`` is
    the function at the bottom of the recursion: a method descriptor for a
    one-dimensional interpolator, a functional used as prototype (e.g. another
    ``MultiFunction``), or a zero-argument factory.  The number of dimensions is
    ``len(maps) + base.dimensions``.

    Building uses map syntax, ``g[x0][x1][x2] = value``, and evaluation takes
    one argument per dimension, outermost first::

        g = MultiFunction("gridpolint3", ["gridpolint3", "gridpolint3"])
        g.configure([GridAxis(7, -1, 1)] * 3, lambda k: f(*k))
        g.compile()
        g(0.1, 0.2, 0.3)
    """

    def __init__(
        self,
        base,
        maps: Sequence[Method | str],
        *,
        metric: Distance | None = None,
        error_policy: ErrorPolicy = RAISE,
    ):
        self.maps = tuple(Method.parse(m) for m in maps)
        self.metric = metric
        self.error_policy = error_policy
        self._base = base
        self._new_base = _base_factory(base, metric)
        prototype = self._new_base()
        self.base_dimensions = prototype.dimensions
        self._base_methods = tuple(prototype.methods)
        self.root = self._make_level(0)

    def _make_level(self, level: int) -> Functional:
        if level == len(self.maps):
            node = self._new_base()
            if self.error_policy is not RAISE:
                node.set_error_policy(self.error_policy)
            return node
        return self.maps[level].create(
            metric=self.metric,
            child_dimensions=len(self.maps) - level - 1 + self.base_dimensions,
            default=functools.partial(self._make_level, level + 1),
            error_policy=self.error_policy,
        )

    @property
    def dimensions(self) -> int:
        return len(self.maps) + self.base_dimensions

    @property
    def methods(self) -> tuple:
        return self.maps + self._base_methods

    @property
    def collection(self):
        return self.root.collection

    def empty_like(self):
        return MultiFunction(self._base, self.maps, metric=self.metric, error_policy=self.error_policy)

    # -- building ------------------------------------------------------------

    def __getitem__(self, x):
        return self.root[x]

    def __setitem__(self, x, value):
        self.root[x] = value

    def insert(self, key: Sequence[float]):
        """Leaf element at ``key`` (one abscissa per dimension); ``.y`` is writable."""
        return multi_insert(self, key)

    def get(self, key: Sequence[float], default=None):
        return multi_get(self, key, default)

    def configure(self, axes: Sequence, fill: Callable | None = None):
        """Populate the tensor product of ``axes``; see :meth:`MultiMap.configure`."""
        multi_configure(self, axes, fill)

    def fill(self, source):
        """Insert every leaf of a nested structure with the same number of dimensions."""
        if source.dimensions != self.dimensions:
            raise ValueError(
                f"cannot fill a {self.dimensions}-dimensional function "
                f"from {source.dimensions}-dimensional data"
            )
        for key, value in super_items(source):
            multi_insert(self, key).y = value
        return self

    def super_items(self):
        return super_items(self)

    def count(self) -> int:
        return leaf_count(self)

    # -- functional ----------------------------------------------------------

    def compile(self):
        """Compile every level and every base function."""
        self.root._compile(())

    def _compile(self, key_path):
        self.root._compile(key_path)

    def evaluate(self, cursor: ArgumentCursor):
        return self.root.evaluate(cursor)

    def set_error_policy(self, policy: ErrorPolicy):
        self.error_policy = policy
        self.root.set_error_policy(policy)

    def constant_result(self, value):
        return self.root.constant_result(value)

    def reduce(self, *outer_args):
        return reduce(self, outer_args)

    def __repr__(self):
        spec = ",".join(str(m) for m in self.methods)
        return f"MultiFunction({spec!r}, leaves={self.count()})"


def compile_all(f: Functional) -> None:
    f.compile()


def expand(base, maps: Sequence[Method | str], **kwargs):
    """Compose ``base`` under ``maps``; an empty list returns ``base`` unchanged."""
    if not maps:
        return base
    return MultiFunction(base, maps, **kwargs)


def function_from_methods(
    methods: Sequence[Method | str], *, metric: Distance | None = None, error_policy: ErrorPolicy = RAISE
) -> Functional:
    """Empty interpolator with one method per dimension, outermost first."""
    methods = [Method.parse(m) for m in methods]
    if not methods:
        raise ValueError("at least one method is required")
    if len(methods) == 1:
        return methods[0].create(metric=metric, error_policy=error_policy)
    return MultiFunction(methods[-1], methods[:-1], metric=metric, error_policy=error_policy)


def interpolate_tables(f: Functional, outer_args: Sequence[float]) -> MultiMap:
    """Interpolate the whole table of the inner dimensions at fixed outer arguments.

    The outer ``k`` levels of ``f`` are rebuilt above constant functions that
    hold the inner tables, so the interpolation runs on entire tables at once.
    All inner tables must share their abscissa values.
    """
    outer_args = tuple(outer_args)
    k = len(outer_args)
    total = f.dimensions
    if not 0 < k < total:
        raise ValueError(f"cannot fix {k} of {total} dimensions")
    outer = [m.with_result("scalar") for m in f.methods[:k]]
    holder = MultiFunction(
        ConstantFunction1D(0.0), outer, metric=f.collection.metric, error_policy=f.error_policy
    )
    for key, sub in super_items(f, depth=k):
        node = holder
        for x in key[:-1]:
            node = node.collection.insert_or_get(x).y
        node.collection.insert_or_get(key[-1]).y = ConstantFunction1D(to_multimap(sub, total - k))
    # the constant leaf ignores its argument
    return holder.evaluate(ArgumentCursor(outer_args + (0.0,)))


def reduce(f: Functional, outer_args: Sequence[float]) -> Functional:
    """Standalone, compiled interpolator of the remaining dimensions at fixed outer arguments.

    Evaluating the result at ``(x_k, ...)`` equals evaluating ``f`` at
    ``(*outer_args, x_k, ...)``, but no outer-dimension work is repeated.
    """
    table = interpolate_tables(f, outer_args)
    g = function_from_methods(
        f.methods[len(outer_args):], metric=f.collection.metric, error_policy=f.error_policy
    )
    g.fill(table)
    g.compile()
    return g
