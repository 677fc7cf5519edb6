"""Multi-dimensional interpolation by recursive composition of 1D functional collections."""

from .collection import Axis, Collection, GridAxis, GridCollection, SetAxis
from .elements import DEFAULT_DISTANCE, Distance, Element2D, IntegralElement, SplineElement, precedes
from .errors import (
    AbscissaMismatchError,
    ArgumentCountError,
    DuplicateAbscissaError,
    InterpolationError,
    NotCompiledError,
    ShapeMismatchError,
    TableFormatError,
    TooFewPointsError,
    ValueOutOfRangeError,
)
from .functional import RAISE, ArgumentCursor, DefaultResult, ErrorPolicy, Functional, RaisePolicy
from .interpolators import (
    CollectionFunction,
    ConstantFunction1D,
    HermiteSplineFunction,
    Method,
    PolintFunction,
    SplineFunction,
    hermite,
    neville,
    polint,
    spline,
)
from .multifunction import MultiFunction, compile_all, expand, function_from_methods, reduce
from .multimap import MultiMap, super_items
from .results import ResultHesse, ResultPDF, ResultPolynome, result_scale_add
from .table_io import dumps, load, loads, read_function, read_table, save, write_table

__version__ = "0.1.0"
