"""Tests for the adaptive Gauss-Legendre integrators."""

import math

import numpy as np
import pytest

from softprob.errors import ConvergenceError, DomainError
from softprob.quadrature import (
    DEFAULT_1D,
    DEFAULT_2D,
    QuadratureConfig,
    integrate_1d,
    integrate_2d,
)


def phi(x: float) -> float:
    return math.exp(-0.5 * x * x) / math.sqrt(2.0 * math.pi)


def riemann_1d(f, a: float, b: float, cells: int = 10 ** 6) -> float:
    xs = a + (np.arange(cells) + 0.5) * ((b - a) / cells)
    return float(np.sum(f(xs)) * ((b - a) / cells))


class TestConfig:
    def test_defaults(self):
        assert DEFAULT_1D.rel_tol == 1e-9
        assert DEFAULT_2D.rel_tol == 1e-7

    def test_invalid_settings_rejected(self):
        with pytest.raises(DomainError):
            QuadratureConfig(rel_tol=-1.0)
        with pytest.raises(DomainError):
            QuadratureConfig(points_per_panel=1)
        with pytest.raises(DomainError):
            QuadratureConfig(max_depth=0)


class TestIntegrate1D:
    def test_monomial(self):
        assert abs(integrate_1d(lambda x: x * x, 0.0, 1.0) - 1.0 / 3.0) < 1e-12

    def test_constant(self):
        assert integrate_1d(lambda x: 1.0, 0.0, 1.0) == pytest.approx(1.0, abs=1e-13)

    def test_gaussian_density_vs_riemann(self):
        got = integrate_1d(phi, 1.0, 2.0)
        want = riemann_1d(lambda x: np.exp(-0.5 * x * x) / np.sqrt(2 * np.pi),
                          1.0, 2.0)
        assert abs(got - want) < 1e-6

    def test_linearity(self):
        f = lambda x: math.sin(x)
        g = lambda x: x ** 3
        lhs = integrate_1d(lambda x: 2.0 * f(x) + 3.0 * g(x), 0.0, 2.0)
        rhs = 2.0 * integrate_1d(f, 0.0, 2.0) + 3.0 * integrate_1d(g, 0.0, 2.0)
        assert math.isclose(lhs, rhs, rel_tol=1e-9, abs_tol=1e-12)

    def test_interval_additivity(self):
        whole = integrate_1d(phi, -1.0, 2.0)
        parts = integrate_1d(phi, -1.0, 0.5) + integrate_1d(phi, 0.5, 2.0)
        assert math.isclose(whole, parts, rel_tol=1e-9, abs_tol=1e-12)

    def test_deterministic_reruns(self):
        first = integrate_1d(lambda x: math.exp(math.sin(3 * x)), 0.0, 5.0)
        second = integrate_1d(lambda x: math.exp(math.sin(3 * x)), 0.0, 5.0)
        assert first == second

    def test_degenerate_bounds_rejected(self):
        with pytest.raises(DomainError):
            integrate_1d(phi, 1.0, 1.0)
        with pytest.raises(DomainError):
            integrate_1d(phi, 2.0, 1.0)

    def test_non_finite_sample_rejected(self):
        with pytest.raises(DomainError):
            integrate_1d(lambda x: float("nan"), 0.0, 1.0)

    def test_convergence_error_carries_best_estimate(self):
        cfg = QuadratureConfig(rel_tol=1e-15, max_depth=3)
        # |x - pi/8| has a kink no 3-level refinement resolves to 1e-15
        with pytest.raises(ConvergenceError) as err:
            integrate_1d(lambda x: abs(x - math.pi / 8.0), 0.0, 1.0, cfg)
        exact = ((math.pi / 8) ** 2 + (1 - math.pi / 8) ** 2) / 2.0
        assert err.value.best_estimate == pytest.approx(exact, rel=1e-3)


class TestIntegrate2D:
    def test_separable_polynomial(self):
        got = integrate_2d(lambda x, y: x * y, 0.0, 1.0, 0.0, 1.0)
        assert abs(got - 0.25) < 1e-12

    def test_unit_area(self):
        got = integrate_2d(lambda x, y: 1.0, 0.0, 1.0, 0.0, 1.0)
        assert got == pytest.approx(1.0, abs=1e-12)

    def test_product_factorizes(self):
        got = integrate_2d(lambda x, y: phi(x) * phi(y), 1.0, 2.0, 1.0, 2.0)
        one_dim = integrate_1d(phi, 1.0, 2.0)
        assert math.isclose(got, one_dim * one_dim, rel_tol=1e-7)

    def test_deterministic_reruns(self):
        f = lambda x, y: math.exp(-x * y) * math.cos(x + y)
        assert integrate_2d(f, 0.0, 2.0, 0.0, 2.0) == integrate_2d(f, 0.0, 2.0, 0.0, 2.0)

    def test_non_finite_sample_rejected(self):
        with pytest.raises(DomainError):
            integrate_2d(lambda x, y: math.inf, 0.0, 1.0, 0.0, 1.0)

    def test_degenerate_rectangle_rejected(self):
        with pytest.raises(DomainError):
            integrate_2d(lambda x, y: 1.0, 0.0, 1.0, 1.0, 1.0)
