"""Built-in sample functions used by the CLI and the test-suite."""

from __future__ import annotations

import math


def sinsum(*x: float) -> float:
    """Sum of sines of all coordinates."""
    return sum(math.sin(v) for v in x)


def cubic(t: float) -> float:
    return 1.0 + t / 2.0 - t * t / 3.0 + t * t * t / 5.0


def polyprod(*x: float) -> float:
    """Product of the same cubic in every coordinate; reproduced exactly by degree-3 interpolation."""
    out = 1.0
    for v in x:
        out *= cubic(v)
    return out


def hesse3(x: float, y: float, z: float) -> float:
    """Quadratic with known Hessian: fxx=2, fxy=3, fxz=0, fyy=0, fyz=2, fzz=2."""
    return x * x + 3.0 * x * y + 2.0 * y * z + z * z


FUNCTIONS = {"sinsum": sinsum, "polyprod": polyprod, "hesse3": hesse3}
FIXED_DIMENSIONS = {"hesse3": 3}
