"""One-dimensional interpolating collections."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.polynomial import Polynomial
from scipy.interpolate import BarycentricInterpolator, CubicSpline

from ndinterp import (
    AbscissaMismatchError,
    ConstantFunction1D,
    GridAxis,
    Method,
    MultiFunction,
    MultiMap,
    NotCompiledError,
    ResultHesse,
    TooFewPointsError,
    hermite,
    neville,
    polint,
    spline,
)
from ndinterp.interpolators import hermite_slopes, natural_second_derivatives

SPECS = [f"polint{n}" for n in range(4)] + ["spline", "hermite"]


def build(method, xs, ys):
    f = Method.parse(method).create()
    f.fill(list(zip(map(float, xs), map(float, ys))))
    f.compile()
    return f


def sampled(method, fn, n, lo, hi, grid=True):
    prefix = "grid" if grid else "sorted"
    f = Method.parse(prefix + method).create()
    f.configure(GridAxis(n, lo, hi), fn)
    f.compile()
    return f


class TestMethodDescriptor:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("gridpolint3", Method("polint", 3, True)),
            ("sortedspline", Method("spline", 0, False)),
            ("gridhermiteh", Method("hermite", 0, True, "hesse")),
            ("gridpolint2pdf", Method("polint", 2, True, "pdf")),
            ("grid_polint3_d2", Method("polint", 3, True, "polynome", 2)),
            ("polint1", Method("polint", 1, False)),
        ],
    )
    def test_parse(self, text, expected):
        assert Method.parse(text) == expected
        assert Method.parse(str(expected)) == expected

    @pytest.mark.parametrize("text", ["gridpolint", "gridcubic", "gridspline_d2", "gridpolint2d3", ""])
    def test_reject(self, text):
        with pytest.raises(ValueError):
            Method.parse(text)


class TestPolint:
    def test_linear_midpoint(self):
        assert build("polint1", [0, 1], [0, 2])(0.5) == 1.0

    def test_quadratic_exact(self):
        assert build("polint2", [0, 1, 2], [0, 1, 4])(1.5) == 2.25

    def test_sin_cubic(self):
        xs = np.linspace(0.0, 3.2, 33)
        f = build("gridpolint3", xs, np.sin(xs))
        x = 1.234
        # independent oracle: Lagrange form through the same four nodes
        window = xs[11:15]
        oracle = BarycentricInterpolator(window, np.sin(window))(x)
        assert f(x) == pytest.approx(float(oracle), abs=1e-13)
        assert abs(f(x) - math.sin(x)) <= 2e-6

    def test_degree_zero_lower_lookup(self):
        f = build("polint0", [0, 1], [10, 20])
        assert f(0.4) == 10.0
        assert f(0.9) == 10.0
        assert f(1.0) == 20.0

    def test_window_is_clamped_at_edges(self):
        xs = np.linspace(0.0, 1.0, 6)
        p = Polynomial([0.5, -1.0, 2.0, 1.5])
        f = build("polint3", xs, p(xs))
        for x in (0.0, 0.01, 0.99, 1.0):
            assert f(x) == pytest.approx(p(x), abs=1e-13)

    @settings(max_examples=60, deadline=None)
    @given(
        degree=st.integers(0, 5),
        coeffs=st.lists(st.floats(-2, 2), min_size=6, max_size=6),
        extra=st.integers(0, 8),
        grid=st.booleans(),
        seed=st.integers(0, 2**32 - 1),
    )
    def test_polynomial_reproduction(self, degree, coeffs, extra, grid, seed):
        rng = np.random.default_rng(seed)
        p = Polynomial(coeffs[: degree + 1])
        n = degree + 1 + extra
        if grid:
            xs = np.linspace(-1.0, 1.0, n)
        else:
            xs = np.sort(rng.uniform(-1.0, 1.0, n))
            if n > 1 and np.min(np.diff(xs)) < 1e-3:
                return
        method = Method("polint", degree, grid, "polynome", min(degree, 3))
        f = method.create()
        f.fill(list(zip(xs, p(xs))))
        scale = max(1.0, float(np.max(np.abs(p(np.linspace(-1, 1, 201))))))
        for x in rng.uniform(xs[0], xs[-1], 100):
            r = f(float(x))
            assert abs(r[0] - p(x)) <= 1e-10 * scale
            for k in range(1, method.order + 1):
                dk = p.deriv(k)
                dscale = max(1.0, float(np.max(np.abs(dk(np.linspace(-1, 1, 201))))))
                # wide random node sets amplify rounding in high derivatives
                tol = 1e-8 if grid else 1e-6
                assert abs(r[k] - dk(x)) <= tol * dscale

    def test_neville_derivatives(self):
        p = Polynomial([1.0, -2.0, 0.5, 3.0])
        xs = [0.0, 0.3, 0.7, 1.0]
        out = neville(xs, [p(x) for x in xs], 0.45, 3)
        expected = [p(0.45), p.deriv(1)(0.45), p.deriv(2)(0.45), p.deriv(3)(0.45)]
        assert np.allclose(out, expected, rtol=1e-12, atol=1e-12)

    def test_too_few_points_is_policy_routed(self):
        f = polint(3)
        f.fill([(0.0, 0.0), (1.0, 1.0)])
        with pytest.raises(TooFewPointsError):
            f(0.5)


class TestSpline:
    def test_linear_data_has_zero_curvature(self):
        xs = np.linspace(-2.0, 3.0, 9)
        d = natural_second_derivatives(list(xs), list(3 * xs))
        assert np.allclose(d, 0.0, atol=1e-13)
        f = build("gridsplineh", xs, 3 * xs)
        r = f(0.77)
        assert r.f == pytest.approx(2.31, abs=1e-13)
        assert r.fp == pytest.approx(3.0, abs=1e-12)
        assert r.fpp == pytest.approx(0.0, abs=1e-12)

    def test_matches_scipy_natural_spline(self, rng):
        xs = np.sort(rng.uniform(0.0, 5.0, 15))
        ys = np.cos(xs) + xs
        f = build("sortedsplineh", xs, ys)
        cs = CubicSpline(xs, ys, bc_type="natural")
        for x in rng.uniform(xs[0], xs[-1], 100):
            r = f(float(x))
            assert r.f == pytest.approx(float(cs(x)), abs=1e-12)
            assert r.fp == pytest.approx(float(cs(x, 1)), abs=1e-10)
            assert r.fpp == pytest.approx(float(cs(x, 2)), abs=1e-9)

    def test_sin_convergence(self):
        dense = np.linspace(0.0, math.pi, 4001)
        errors = {}
        for n in (17, 33):
            f = sampled("spline", math.sin, n, 0.0, math.pi)
            errors[n] = max(abs(f(float(x)) - math.sin(x)) for x in dense)
        assert errors[33] <= 1e-4
        assert errors[17] / errors[33] >= 8.0

    def test_constant_pdf(self):
        f = sampled("splinepdf", lambda x: 1.0, 7, 0.0, 1.0)
        for x in np.linspace(0.0, 1.0, 23):
            r = f(float(x))
            assert r.V == pytest.approx(1.0, abs=1e-12)
            assert r.v == pytest.approx(x, abs=1e-12)

    def test_linear_pdf(self):
        f = sampled("splinepdf", lambda x: 2 * x, 5, 0.0, 1.0)
        r = f(0.5)
        assert abs(r.v - 0.25) <= 1e-9
        assert abs(r.V - 1.0) <= 1e-9

    def test_needs_three_points(self):
        f = spline()
        f.fill([(0.0, 0.0), (1.0, 1.0)])
        with pytest.raises(TooFewPointsError):
            f.compile()

    def test_must_compile(self):
        f = spline()
        f.fill([(0.0, 0.0), (1.0, 1.0), (2.0, 0.0)])
        with pytest.raises(NotCompiledError):
            f(0.5)
        f.compile()
        f(0.5)
        f[3.0] = 1.0
        with pytest.raises(NotCompiledError):
            f(0.5)


class TestHermite:
    def test_increasing_data_nonnegative_slopes(self, rng):
        xs = np.sort(rng.uniform(0, 10, 30))
        ys = np.cumsum(rng.exponential(1.0, 30) * (rng.uniform(size=30) > 0.3))
        assert all(m >= 0.0 for m in hermite_slopes(list(xs), list(ys)))

    def test_linear_data(self):
        xs = np.linspace(0.0, 2.0, 7)
        assert hermite_slopes(list(xs), list(3 * xs)) == pytest.approx([3.0] * 7, abs=1e-13)
        f = build("hermite", xs, 3 * xs)
        assert f(0.5) == pytest.approx(1.5, abs=1e-14)
        mid = (xs[2] + xs[3]) / 2
        assert f(float(mid)) == pytest.approx(3 * mid, abs=1e-14)

    def test_sigmoid_stays_in_bracket(self):
        xs = np.linspace(-6.0, 6.0, 13)
        ys = 1.0 / (1.0 + np.exp(-2.0 * xs))
        f = build("hermite", xs, ys)
        for i in range(len(xs) - 1):
            lo, hi = ys[i], ys[i + 1]
            for x in np.linspace(xs[i], xs[i + 1], 1000):
                y = f(float(x))
                assert lo <= y <= hi

    def test_derivative_vs_finite_difference(self, rng):
        xs = np.linspace(0.0, 3.0, 25)
        f = build("hermiteh", xs, np.exp(xs / 2))
        h = 1e-5
        for x in rng.uniform(0.1, 2.9, 50):
            fd = (f(x + h).f - f(x - h).f) / (2 * h)
            assert f(float(x)).fp == pytest.approx(fd, rel=1e-6)

    def test_flat_plateau(self):
        f = build("hermite", [0, 1, 2, 3], [0, 1, 1, 2])
        for x in np.linspace(1.0, 2.0, 50):
            assert f(float(x)) == pytest.approx(1.0, abs=1e-15)


class TestCommon:
    @pytest.mark.parametrize("name", ["spline", "hermite", "polint3", "polint1"])
    def test_node_hits(self, name, rng):
        xs = np.sort(rng.uniform(-3, 3, 12))
        ys = rng.normal(size=12)
        f = build(name, xs, ys)
        for x, y in zip(xs, ys):
            assert abs(f(float(x)) - y) <= 1e-12

    @pytest.mark.parametrize("name", SPECS)
    @pytest.mark.parametrize("suffix", ["", "h", "pdf"])
    def test_grid_equals_sorted(self, name, suffix, rng):
        fn = lambda x: math.sin(3 * x) + x * x  # noqa: E731
        g = sampled(name + suffix, fn, 21, -1.0, 2.0, grid=True)
        s = sampled(name + suffix, fn, 21, -1.0, 2.0, grid=False)
        for x in rng.uniform(-1.0, 2.0, 200):
            a, b = g(float(x)), s(float(x))
            if suffix:
                assert np.allclose(a.tree_leaves(), b.tree_leaves(), rtol=0, atol=1e-12)
            else:
                assert abs(a - b) <= 1e-12

    @pytest.mark.parametrize("name", ["polint3", "polint5", "spline", "hermite"])
    def test_hesse_finite_differences(self, name, rng):
        lo, hi = 0.0, 2.0
        f = sampled(name + "h", lambda x: math.exp(x) * math.cos(x), 41, lo, hi)
        h = 1e-4 * (hi - lo)
        for x in rng.uniform(lo + 0.05, hi - 0.05, 40):
            if name in ("spline", "hermite"):
                # stay inside one piece so the difference stencil sees one cubic
                step = (hi - lo) / 40
                cell = math.floor((x - lo) / step)
                x = min(max(x, lo + cell * step + 2 * h), lo + (cell + 1) * step - 2 * h)
            r = f(float(x))
            fd1 = (f(x + h).f - f(x - h).f) / (2 * h)
            fd2 = (f(x + h).fp - f(x - h).fp) / (2 * h)
            assert abs(r.fp - fd1) <= 1e-4 * max(1.0, abs(fd1))
            assert abs(r.fpp - fd2) <= 1e-4 * max(1.0, abs(fd2))

    @pytest.mark.parametrize("name", ["polint0", "polint1", "polint2", "polint3", "hermite", "spline"])
    def test_pdf_invariants(self, name, rng):
        fn = lambda x: 1.5 + math.sin(2 * x)  # noqa: E731
        f = sampled(name + "pdf", fn, 15, 0.0, 4.0)
        V = f(4.0).V
        assert abs(f(4.0).v - V) <= 1e-9
        assert f(0.0).v == 0.0
        vs = [f(float(x)).v for x in np.linspace(0.0, 4.0, 801)]
        assert all(b >= a for a, b in zip(vs, vs[1:]))

    @pytest.mark.parametrize("name", ["polint1", "hermite"])
    def test_pdf_nondecreasing_random_nonnegative(self, name, rng):
        xs = np.sort(rng.uniform(0, 5, 20))
        ys = rng.exponential(1.0, 20) * (rng.uniform(size=20) > 0.4)
        f = build(name + "pdf", xs, ys)
        vs = [f(float(x)).v for x in np.linspace(xs[0], xs[-1], 2000)]
        assert all(b >= a - 1e-12 * abs(a) for a, b in zip(vs, vs[1:]))

    def test_polint_pdf_exact_for_polynomials(self):
        f = sampled("polint2pdf", lambda x: x * x, 9, 0.0, 2.0)
        for x in np.linspace(0.0, 2.0, 17):
            assert f(float(x)).v == pytest.approx(x**3 / 3, abs=1e-13)
        assert f(1.0).V == pytest.approx(8 / 3, abs=1e-13)

    def test_grid_flag_rejects_uneven_data(self):
        f = Method.parse("gridpolint1").create()
        f.fill([(0.0, 0.0), (1.0, 1.0), (3.0, 0.0)])
        with pytest.raises(AbscissaMismatchError):
            f.compile()


class TestConstant:
    def test_value(self):
        assert ConstantFunction1D(7.5)(123.0) == 7.5

    def test_table_value(self):
        table = MultiMap(2)
        table.insert((0.0, 1.0)).y = 2.0
        assert ConstantFunction1D(table)(0.0) is table

    def test_under_three_maps(self):
        g = MultiFunction(ConstantFunction1D(4.0), ["polint1"] * 3)
        assert g.dimensions == 4
        for a in (0.0, 1.0):
            for b in (0.0, 1.0):
                for c in (0.0, 1.0):
                    assert isinstance(g[a][b][c], ConstantFunction1D)
        g.compile()
        assert g(0.5, 0.5, 0.5, 1e9) == 4.0


def test_shorthands():
    assert polint(3, grid=True).method == Method("polint", 3, True)
    assert spline(result="pdf").method == Method("spline", 0, False, "pdf")
    assert hermite(grid=True, result="hesse").method == Method("hermite", 0, True, "hesse")
    assert isinstance(polint(1, result="hesse").constant_result(1.0), ResultHesse)


@pytest.mark.parametrize("name", SPECS + ["polint5"])
def test_constants_and_nodes_are_exact(name, rng):
    xs = np.sort(rng.uniform(-2, 2, 9))
    c = build(name, xs, [0.1] * 9)
    for x in rng.uniform(xs[0], xs[-1], 200):
        assert c(float(x)) == 0.1
    ys = rng.normal(size=9)
    f = build(name, xs, ys)
    for x, y in zip(xs, ys):
        assert f(float(x)) == y
