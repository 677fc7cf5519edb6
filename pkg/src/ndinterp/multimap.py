"""Multi-dimensional maps: a map of a map of a map, one level per dimension.

The traversal helpers in this module work on any nested structure whose
levels expose a ``collection`` attribute, i.e. plain multi-maps as well as
multi-dimensional functions.
"""

from __future__ import annotations

from typing import Any, Callable, Iterator, Sequence

from .collection import Axis, Collection
from .elements import Distance


class MultiMap(Collection):
    """Nested collections of depth ``dimensions``; the leaves hold the final ordinates.

    >>> m = MultiMap(2)
    >>> m[0.0][1.0] = 5.0
    >>> list(m.super_items())
    [((0.0, 1.0), 5.0)]
    """

    def __init__(self, dimensions: int, *, metric: Distance | None = None, leaf_default=float):
        if dimensions < 1:
            raise ValueError(f"a multi-map needs at least one dimension, got {dimensions}")
        self._dimensions = dimensions
        self.leaf_default = leaf_default
        if dimensions == 1:
            default = leaf_default
        else:
            default = lambda: MultiMap(dimensions - 1, metric=metric, leaf_default=leaf_default)  # noqa: E731
        super().__init__(metric=metric, default=default)

    @property
    def dimensions(self) -> int:
        return self._dimensions

    def empty_like(self):
        return MultiMap(self._dimensions, metric=self.metric, leaf_default=self.leaf_default)

    def insert(self, key: Sequence[float]):
        return multi_insert(self, key)

    def get(self, key: Sequence[float], default=None):
        return multi_get(self, key, default)

    def super_items(self):
        return super_items(self)

    def super_elements(self):
        return super_elements(self)

    def configure(self, axes, fill: Callable | None = None):
        """Populate the full tensor product of ``axes``.

        ``axes`` is a list with one entry per dimension.  An entry may be an
        :class:`Axis`, a sequence of abscissa values or a callable taking the
        tuple of outer abscissa values and returning either of those.  ``fill``
        receives the complete key tuple.
        """
        multi_configure(self, axes, fill)

    def count(self) -> int:
        """Total number of leaves."""
        return leaf_count(self)

    def __repr__(self):
        return f"MultiMap(dimensions={self._dimensions}, leaves={self.count()})"


def _depth(node) -> int:
    return node.dimensions


def super_items(node, depth: int | None = None) -> Iterator[tuple[tuple, Any]]:
    """Yield ``(key_tuple, ordinate)`` for every leaf in lexicographic order.

    With ``depth`` smaller than the number of dimensions the traversal stops
    early and yields the nested sub-structures.
    """
    if depth is None:
        depth = _depth(node)
    elements = node.collection.elements
    if depth == 1:
        for e in elements:
            yield (e.x,), e.y
        return
    for e in elements:
        x = e.x
        for key, value in super_items(e.y, depth - 1):
            yield (x,) + key, value


def super_elements(node, depth: int | None = None) -> Iterator[tuple[tuple, Any]]:
    """Like :func:`super_items` but yields the leaf elements, whose ``y`` is writable."""
    if depth is None:
        depth = _depth(node)
    coll = node.collection
    coll.touch()
    if depth == 1:
        for e in coll.elements:
            yield (e.x,), e
        return
    for e in coll.elements:
        for key, leaf in super_elements(e.y, depth - 1):
            yield (e.x,) + key, leaf


def leaf_count(node, depth: int | None = None) -> int:
    if depth is None:
        depth = _depth(node)
    elements = node.collection.elements
    if depth == 1:
        return len(elements)
    return sum(leaf_count(e.y, depth - 1) for e in elements)


def multi_insert(node, key: Sequence[float]):
    """Leaf element at ``key``, creating intermediate levels as needed."""
    depth = _depth(node)
    if len(key) != depth:
        raise ValueError(f"key of length {len(key)} for a {depth}-dimensional map")
    for x in key[:-1]:
        node = node.collection.insert_or_get(x).y
    return node.collection.insert_or_get(key[-1])


def multi_get(node, key: Sequence[float], default=None):
    """Ordinate at ``key`` using only lookups, or ``default`` when absent."""
    if len(key) != _depth(node):
        raise ValueError(f"key of length {len(key)} for a {_depth(node)}-dimensional map")
    for x in key:
        element = node.collection.find(x)
        if element is None:
            return default
        node = element.y
    return node


def multi_configure(node, axes: Sequence, fill: Callable | None = None):
    depth = _depth(node)
    if len(axes) != depth:
        raise ValueError(f"{len(axes)} axes for a {depth}-dimensional map")

    def resolve(axis, outer):
        if callable(axis) and not isinstance(axis, Axis):
            axis = axis(outer)
        return axis

    def build(level_node, level, outer):
        coll = level_node.collection
        axis = resolve(axes[level], outer)
        if level == depth - 1:
            if fill is None:
                Collection.configure(coll, axis)
            else:
                Collection.configure(coll, axis, lambda x: fill(outer + (x,)))
            return
        Collection.configure(coll, axis)
        for e in coll.elements:
            build(e.y, level + 1, outer + (e.x,))

    build(node, 0, ())


def level_collections(node, level: int) -> list[Collection]:
    """All collections found at nesting ``level`` (0 is the outermost)."""
    nodes = [node]
    for _ in range(level):
        nodes = [e.y for n in nodes for e in n.collection.elements]
    return [n.collection for n in nodes]


def to_multimap(node, depth: int | None = None, *, metric: Distance | None = None) -> MultiMap:
    """Copy the data of any nested structure into a plain :class:`MultiMap`."""
    if depth is None:
        depth = _depth(node)
    src = node.collection
    out = MultiMap(depth, metric=metric if metric is not None else src.metric)
    if depth == 1:
        out.elements = [out.element_type(e.x, e.y) for e in src.elements]
    else:
        out.elements = [
            out.element_type(e.x, to_multimap(e.y, depth - 1, metric=out.metric))
            for e in src.elements
        ]
    return out
