"""Binary table format shared by all search methods and interpolation techniques.

Layout, all little-endian::

    header      4s magic b"NDIT", u32 version, u32 dimensions,
                u8 abscissa width, u8 ordinate width           (14 bytes)
    collection  i64 count, then count x (f64 abscissa, ordinate)
    ordinate    f64 at the innermost level, a nested collection otherwise

Only abscissa and ordinate values are stored.  Derivatives and integrals
are recomputed by ``compile``.
"""

from __future__ import annotations

import io
import os
import struct
from typing import BinaryIO, Sequence

from .errors import TableFormatError
from .interpolators import Method
from .multifunction import function_from_methods
from .multimap import MultiMap

MAGIC = b"NDIT"
VERSION = 1
SCALAR_WIDTH = 8

_HEADER = struct.Struct("<4sIIBB")
_COUNT = struct.Struct("<q")
_FLOAT = struct.Struct("<d")

HEADER_SIZE = _HEADER.size


class _Writer:
    def __init__(self, sink: BinaryIO):
        self.sink = sink
        self.offset = 0

    def write(self, data: bytes):
        try:
            self.sink.write(data)
        except (OSError, ValueError) as exc:
            raise TableFormatError(f"write failed: {exc}", self.offset) from exc
        self.offset += len(data)


def _write_collection(out: _Writer, node, depth: int):
    elements = node.collection.elements
    n = len(elements)
    if depth == 1:
        flat = []
        for e in elements:
            flat.append(e.x)
            flat.append(e.y)
        try:
            out.write(struct.pack(f"<q{2 * n}d", n, *flat))
        except struct.error as exc:
            raise TableFormatError(f"ordinate is not a scalar: {exc}", out.offset) from exc
        return
    out.write(_COUNT.pack(n))
    for e in elements:
        out.write(_FLOAT.pack(e.x))
        _write_collection(out, e.y, depth - 1)


def write_table(table, sink: BinaryIO) -> int:
    """Write a multi-map or multi-dimensional function; returns the number of bytes."""
    depth = table.dimensions
    out = _Writer(sink)
    out.write(_HEADER.pack(MAGIC, VERSION, depth, SCALAR_WIDTH, SCALAR_WIDTH))
    _write_collection(out, table, depth)
    return out.offset


def dumps(table) -> bytes:
    buf = io.BytesIO()
    write_table(table, buf)
    return buf.getvalue()


def save(table, path: str | os.PathLike) -> int:
    with open(path, "wb") as fh:
        return write_table(table, fh)


class _Reader:
    def __init__(self, data: bytes):
        self.data = memoryview(data)
        self.offset = 0

    def take(self, fmt: struct.Struct, what: str):
        end = self.offset + fmt.size
        if end > len(self.data):
            raise TableFormatError(f"truncated table while reading {what}", self.offset)
        value = fmt.unpack_from(self.data, self.offset)
        self.offset = end
        return value

    def take_floats(self, n: int, what: str):
        end = self.offset + 8 * n
        if end > len(self.data):
            raise TableFormatError(f"truncated table while reading {what}", self.offset)
        values = struct.unpack_from(f"<{n}d", self.data, self.offset)
        self.offset = end
        return values


def _read_collection(src: _Reader, depth: int, level: int) -> MultiMap:
    at = src.offset
    (n,) = src.take(_COUNT, f"element count at level {level}")
    if n < 0:
        raise TableFormatError(f"negative element count {n} at level {level}", at)
    node = MultiMap(depth)
    et = node.element_type
    if depth == 1:
        flat = src.take_floats(2 * n, f"{n} elements at level {level}")
        node.elements = [et(flat[2 * i], flat[2 * i + 1]) for i in range(n)]
    else:
        elements = [None] * n
        for i in range(n):
            (x,) = src.take(_FLOAT, f"abscissa at level {level}")
            elements[i] = et(x, _read_collection(src, depth - 1, level + 1))
        node.elements = elements
    if not node.is_sorted():
        raise TableFormatError(f"abscissas not strictly increasing at level {level}", at)
    return node


def loads(data: bytes) -> MultiMap:
    src = _Reader(data)
    magic, version, depth, xw, yw = src.take(_HEADER, "header")
    if magic != MAGIC:
        raise TableFormatError(f"bad magic {bytes(magic)!r}", 0)
    if version != VERSION:
        raise TableFormatError(f"unsupported version {version}", 4)
    if depth < 1:
        raise TableFormatError(f"invalid dimension count {depth}", 8)
    if xw != SCALAR_WIDTH or yw != SCALAR_WIDTH:
        raise TableFormatError(f"unsupported scalar widths ({xw}, {yw})", 12)
    table = _read_collection(src, depth, 0)
    if src.offset != len(src.data):
        raise TableFormatError(f"{len(src.data) - src.offset} trailing bytes", src.offset)
    return table


def read_table(source: BinaryIO) -> MultiMap:
    """Read a table written by :func:`write_table` into a :class:`MultiMap`."""
    try:
        data = source.read()
    except OSError as exc:
        raise TableFormatError(f"read failed: {exc}", 0) from exc
    return loads(data)


def load(path: str | os.PathLike) -> MultiMap:
    try:
        with open(path, "rb") as fh:
            return read_table(fh)
    except OSError as exc:
        raise TableFormatError(f"cannot open {os.fspath(path)!r}: {exc.strerror}") from exc


def read_function(source, methods: Sequence[Method | str], **kwargs):
    """Read a table and load it into an interpolator with the given per-dimension methods.

    ``source`` is a binary stream, a path or an already loaded :class:`MultiMap`.
    The result is compiled and ready for evaluation.
    """
    if isinstance(source, MultiMap):
        table = source
    elif isinstance(source, (str, os.PathLike)):
        table = load(source)
    else:
        table = read_table(source)
    if len(methods) != table.dimensions:
        raise TableFormatError(
            f"table has {table.dimensions} dimensions but {len(methods)} methods were given"
        )
    f = function_from_methods(methods, **kwargs)
    f.fill(table)
    f.compile()
    return f
