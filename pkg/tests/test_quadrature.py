import math

import numpy as np
import pytest

from fracwave import _gk
from fracwave.errors import DivergentEndpoint, DomainError, MomentOutOfRange, QuadratureError
from fracwave.quadrature import (QuadConfig, QuadResult, cauchy_case_integral, default_config,
                                 integrate_finite, integrate_lalpha_power,
                                 integrate_semi_infinite, lalpha_power_window)

from conftest import rel_err


def test_gk15_weights_integrate_polynomials_exactly():
    assert math.isclose(_gk.W_KRONROD.sum(), 2.0, rel_tol=1e-15)
    assert math.isclose(_gk.W_GAUSS.sum(), 2.0, rel_tol=1e-15)
    # Kronrod is exact to degree 22, Gauss-7 to degree 13
    assert abs(np.dot(_gk.W_KRONROD, _gk.NODES ** 22) - 2.0 / 23) < 1e-15
    assert abs(np.dot(_gk.W_GAUSS, _gk.NODES ** 12) - 2.0 / 13) < 1e-15


def test_config_defaults_and_validation():
    cfg = QuadConfig()
    assert (cfg.rel_tol, cfg.abs_tol, cfg.max_subdivisions) == (1e-10, 1e-14, 2000)
    for bad in [dict(rel_tol=0.0), dict(abs_tol=-1.0), dict(max_subdivisions=0),
                dict(max_subdivisions=2.5)]:
        with pytest.raises(DomainError):
            QuadConfig(**bad)
    assert cfg.scaled(10).rel_tol == pytest.approx(1e-9)


def test_default_config_reads_environment(monkeypatch):
    monkeypatch.setenv("FRACWAVE_QUAD_TOL", "1e-7")
    assert default_config().rel_tol == 1e-7
    monkeypatch.setenv("FRACWAVE_QUAD_TOL", "abc")
    with pytest.raises(DomainError):
        default_config()
    monkeypatch.delenv("FRACWAVE_QUAD_TOL")
    assert default_config() == QuadConfig()


def test_semi_infinite_exponential():
    r = integrate_semi_infinite(lambda x: np.exp(-x), 0.0, -math.inf)
    assert r.converged and abs(r.value - 1.0) <= 1e-10


def test_semi_infinite_arctangent():
    r = integrate_semi_infinite(lambda x: 1.0 / (1.0 + x * x), 0.0, -2.0)
    assert r.converged and abs(r.value - math.pi / 2) <= 1e-10


def test_semi_infinite_cauchy_pulse_integrand():
    # tau^-1 L_1(tau)^2 with L_1(tau) = tau / (pi (1 + tau^2))
    r = integrate_semi_infinite(lambda u: u / (math.pi ** 2 * (1 + u * u) ** 2), 1.0, -3.0)
    assert abs(r.value - 1.0 / (2 * math.pi ** 2)) <= 1e-12


@pytest.mark.parametrize("e", [-0.6, -0.8, -0.9, -0.95])
def test_semi_infinite_strong_endpoint_singularity(e):
    # int_0^inf x^e / (1 + x)^2 dx = Gamma(1+e) Gamma(1-e)
    ref = math.gamma(1 + e) * math.gamma(1 - e)
    r = integrate_semi_infinite(lambda x: x ** e / (1 + x) ** 2, e, e - 2.0)
    assert r.converged
    assert rel_err(r.value, ref) <= 1e-9


@pytest.mark.parametrize("e", [-0.99, -0.999])
def test_semi_infinite_unresolvable_singularity_is_flagged(e):
    # a visible share of the mass sits below 1e-300, out of reach of doubles
    ref = math.gamma(1 + e) * math.gamma(1 - e)
    r = integrate_semi_infinite(lambda x: x ** e / (1 + x) ** 2, e, e - 2.0)
    assert not r.converged
    assert r.error_estimate >= abs(r.value - ref) / 10


def test_semi_infinite_split_scale():
    r = integrate_semi_infinite(lambda x: np.exp(-x / 1e4), 0.0, -math.inf, split=1e4)
    assert rel_err(r.value, 1e4) <= 1e-10


def test_semi_infinite_rejects_divergent_declaration():
    with pytest.raises(DivergentEndpoint):
        integrate_semi_infinite(lambda x: 1 / x, -1.0, -2.0)
    with pytest.raises(DivergentEndpoint):
        integrate_semi_infinite(lambda x: x, 0.0, -1.0)


def test_non_convergence_is_flagged_not_raised():
    cfg = QuadConfig(rel_tol=1e-15, abs_tol=1e-300, max_subdivisions=1)
    r = integrate_semi_infinite(lambda x: np.sin(40 * x) ** 2 * np.exp(-x), 0.0, -math.inf, cfg)
    assert isinstance(r, QuadResult) and not r.converged
    with pytest.raises(QuadratureError) as info:
        r.require("test")
    assert info.value.result is r


def test_converged_error_within_tolerance():
    cfg = QuadConfig()
    r = integrate_lalpha_power(1.5, -1.0, cfg)
    assert r.converged
    assert r.error_estimate <= max(cfg.rel_tol * abs(r.value), cfg.abs_tol)


def test_integrate_finite():
    r = integrate_finite(np.sin, [0.0, 1.0, math.pi])
    assert abs(r.value - 2.0) <= 1e-13
    with pytest.raises(DomainError):
        integrate_finite(np.sin, [1.0, 0.0])


def test_cauchy_case_closed_form():
    assert cauchy_case_integral(0.0) == pytest.approx(1 / (4 * math.pi), rel=1e-15)
    assert cauchy_case_integral(-2.0) == pytest.approx(1 / (4 * math.pi), rel=1e-15)
    assert cauchy_case_integral(-1.0) == 1 / (2 * math.pi ** 2)
    # the removable point is continuous with its neighbours
    assert cauchy_case_integral(-1.0 + 1e-7) == pytest.approx(1 / (2 * math.pi ** 2), rel=1e-6)
    for bad in (-3.0, 1.0, 5.0):
        with pytest.raises(MomentOutOfRange):
            cauchy_case_integral(bad)


@pytest.mark.parametrize("beta", [-2.5, -2.0, -1.5, -1.0, -0.5, 0.0, 0.5])
def test_lpow_alpha_one_matches_closed_form(beta):
    r = integrate_lalpha_power(1.0, beta)
    assert r.converged
    assert rel_err(r.value, cauchy_case_integral(beta)) <= 1e-8


def test_lpow_matches_mpmath_oracle(oracles):
    for alpha, beta, ref in oracles["lpow"]:
        r = integrate_lalpha_power(alpha, beta)
        assert r.converged, (alpha, beta)
        assert rel_err(r.value, ref) <= 1e-8, (alpha, beta)


@pytest.mark.parametrize("alpha", [1.0, 1.3, 1.7])
def test_lpow_tau_inversion_symmetry(alpha):
    # L(1/tau) = L(tau) maps beta to -beta - 2
    for beta in (-0.5, 0.3, 1.1 * alpha - 1.0):
        a = integrate_lalpha_power(alpha, beta).value
        b = integrate_lalpha_power(alpha, -beta - 2.0).value
        assert rel_err(a, b) <= 1e-9


@pytest.mark.parametrize("alpha", [1.0, 1.5, 1.9])
@pytest.mark.parametrize("delta", [0.0, 1e-12, 0.5])
def test_lpow_rejects_window_edges(alpha, delta):
    with pytest.raises(MomentOutOfRange):
        integrate_lalpha_power(alpha, 2 * alpha - 1 + delta)
    with pytest.raises(MomentOutOfRange):
        integrate_lalpha_power(alpha, -2 * alpha - 1 - delta)


def test_lpow_near_window_edge_converges():
    alpha = 1.5
    lo, hi = lalpha_power_window(alpha)
    r = integrate_lalpha_power(alpha, hi - 1e-2)
    assert r.converged and r.value > 0


@pytest.mark.parametrize("alpha", [0.9, 2.0, 1.9995])
def test_lpow_rejects_orders_outside_kernel_guard(alpha):
    with pytest.raises(DomainError):
        integrate_lalpha_power(alpha, 0.0)
