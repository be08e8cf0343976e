import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest

from fracwave import moments as mv
from fracwave.errors import DomainError, MomentOutOfRange, QuadratureError, UndefinedAtAlphaOne
from fracwave.quadrature import QuadConfig

from conftest import rel_err


def test_zeroth_moment_is_one_half():
    assert mv.moment_one_sided(1.5, 0.0, 7.0) == 0.5


def test_first_moment_value():
    ref = 1 / (1.5 * math.sin(2 * math.pi / 3))
    assert mv.moment_one_sided(1.5, 1.0, 1.0) == pytest.approx(ref, rel=1e-15)
    assert ref == pytest.approx(0.7698003589, rel=1e-10)


def test_half_moment_value_and_quadrature():
    closed = mv.moment_one_sided(1.5, 0.5, 2.0)
    ref = math.sqrt(2) * math.sin(math.pi / 4) / (1.5 * math.sin(math.pi / 3))
    assert closed == pytest.approx(ref, rel=1e-15)
    q = mv.moment_quadrature(1.5, 0.5, 2.0).require()
    assert rel_err(q, closed) <= 1e-8


@pytest.mark.parametrize("alpha", [1.2, 1.5, 1.8])
@pytest.mark.parametrize("beta", [0.25, 0.5, 1.0])
def test_moment_quadrature_matches_formula(alpha, beta):
    q = mv.moment_quadrature(alpha, beta, 1.0).require()
    assert rel_err(q, mv.moment_one_sided(alpha, beta, 1.0)) <= 1e-8


@pytest.mark.parametrize("alpha", [1.0, 1.5])
def test_moment_out_of_range(alpha):
    for beta in (alpha, -alpha, 2.5):
        with pytest.raises(MomentOutOfRange):
            mv.moment_one_sided(alpha, beta, 1.0)


@pytest.mark.parametrize("alpha", [1.1, 1.5, 1.9])
@pytest.mark.parametrize("t", [0.1, 1.0, 10.0])
def test_normalization(alpha, t):
    assert abs(mv.total_mass(alpha, t).require() - 1.0) <= 1e-8


@pytest.mark.parametrize("alpha", [1.2, 1.5, 1.8])
def test_mellin_identity(alpha):
    for s in (-0.9 * alpha, -0.5, 0.3, 0.9 * alpha):
        q = mv.mellin_laux(alpha, s).require()
        assert rel_err(q, mv.mellin_laux_closed(alpha, s)) <= 1e-8


def test_mellin_at_zero_and_guard():
    assert mv.mellin_laux_closed(1.5, 0.0) == 0.5
    with pytest.raises(MomentOutOfRange):
        mv.mellin_laux_closed(1.5, 1.5)


def test_gravity_center():
    assert mv.gravity_center(2.0, 1.0) == 1.0
    assert mv.gravity_center(1.5, 1.0) == pytest.approx(1.539600718, rel=1e-9)
    assert mv.gravity_center(1.5, 2.0) == 2 * mv.gravity_center(1.5, 1.0)
    with pytest.raises(UndefinedAtAlphaOne):
        mv.gravity_center(1.0, 1.0)


@pytest.mark.parametrize("alpha", [1.2, 1.5, 1.9])
def test_gravity_center_from_moments(alpha):
    t = 1.3
    ratio = 2 * mv.moment_one_sided(alpha, 1.0, t) / (2 * mv.moment_one_sided(alpha, 0.0, t))
    assert mv.gravity_center(alpha, t) == pytest.approx(ratio, rel=1e-12)


def test_mass_center_cauchy():
    assert mv.mass_center(1.0, 1.0) == pytest.approx(2 / math.pi, rel=1e-15)
    assert mv.mass_center(1.0, 3.0) == pytest.approx(6 / math.pi, rel=1e-15)


def test_mass_center_matches_direct_x_integral(oracles):
    ref = oracles["centers"]["mass_center_1.5_t1"]
    assert rel_err(mv.mass_center(1.5, 1.0), ref) <= 1e-6


def test_energy_location_matches_direct_t_integral(oracles):
    ref = oracles["centers"]["energy_time_1.5_x1"]
    assert rel_err(mv.energy_location(1.5, 1.0), ref) <= 1e-6
    assert mv.energy_location(1.5, 2.0) == pytest.approx(2 * mv.energy_location(1.5, 1.0),
                                                         rel=1e-15)
    with pytest.raises(UndefinedAtAlphaOne):
        mv.energy_location(1.0, 1.0)


def test_energy_location_near_two():
    assert abs(mv.energy_location(1.999, 1.0) - 1.0) < 0.01


def test_centers_linear_in_time():
    a = 1.5
    v = [mv.mass_center(a, t) / t for t in (0.5, 1.0, 2.0)]
    assert max(v) - min(v) <= 1e-9
    g = [mv.gravity_center(a, t) / t for t in (0.5, 1.0, 2.0)]
    assert max(g) - min(g) <= 1e-9


def test_phase_velocity():
    assert mv.velocity_phase(1.0) == 0.0
    assert mv.velocity_phase(2.0) == 1.0
    assert mv.velocity_phase(1.5) == pytest.approx(0.8703651925877162, rel=1e-14)


def test_closed_velocities_match_mpmath(oracles):
    for a, _, vp, vg, _ in oracles["closed_velocities"]:
        assert rel_err(mv.velocity_phase(a), vp) <= 1e-13
        assert rel_err(mv.velocity_gravity(a), vg) <= 1e-13


def test_gravity_velocity():
    assert mv.velocity_gravity(2.0) == 1.0
    assert mv.velocity_gravity(1.5) == pytest.approx(1.539600718, rel=1e-9)
    assert mv.velocity_gravity(1.01) > 10
    with pytest.raises(UndefinedAtAlphaOne):
        mv.velocity_gravity(1.0)


def test_pulse_velocity_alpha_one():
    assert mv.velocity_pulse(1.0) == 2 / math.pi
    q = mv.velocity_pulse_quadrature(1.0)
    assert rel_err(q, 2 / math.pi) <= 1e-6


def test_pulse_velocity_bounds():
    v = mv.velocity_pulse(1.5)
    assert mv.velocity_phase(1.5) < v < mv.velocity_gravity(1.5)
    assert abs(mv.velocity_pulse(1.999) - 1.0) < 0.01


def test_centro_velocity():
    assert 0 < mv.velocity_centro(1.05) < 0.2
    assert mv.velocity_centro(1.5) < mv.velocity_phase(1.5)
    assert mv.velocity_centro(1.5) == pytest.approx(0.75, rel=1e-9)
    assert abs(mv.velocity_centro(1.999) - 1.0) < 0.01
    with pytest.raises(UndefinedAtAlphaOne):
        mv.velocity_centro(1.0)
    with pytest.raises(DomainError):
        mv.velocity_centro(2.0)


@pytest.mark.parametrize("alpha", [1.1, 1.3, 1.5, 1.7, 1.9])
def test_velocity_ordering(alpha):
    r = mv.velocity_report(alpha)
    assert r.v_c < r.v_p < r.v_m < r.v_g
    assert r.ordered()
    assert r.v_1 == r.v_c and r.v_2 == r.v_m


def test_report_near_two_is_flat():
    r = mv.velocity_report(1.9)
    for v in (r.v_p, r.v_g, r.v_m, r.v_2, r.v_c, r.v_1):
        assert 0.8 <= v <= 1.2


def test_report_at_alpha_one():
    r = mv.velocity_report(1.0)
    assert r.v_p == 0.0 and r.v_c == 0.0 and r.v_1 == 0.0
    assert r.v_m == r.v_2 == 2 / math.pi
    assert r.v_g is None and r.undefined == ("v_g",)
    assert not r.ordered()


def test_monotone_in_alpha():
    grid = np.linspace(1.1, 1.9, 17)
    reports = [mv.velocity_report(a) for a in grid]
    for name in ("v_p", "v_m", "v_c"):
        assert np.all(np.diff([getattr(r, name) for r in reports]) > 0), name
    assert np.all(np.diff([r.v_g for r in reports]) < 0)


def test_report_failures():
    cfg = QuadConfig(rel_tol=1e-17, abs_tol=1e-300, max_subdivisions=5)
    with pytest.raises(QuadratureError):
        mv.velocity_report(1.5, cfg)
    r = mv.velocity_report(1.5, cfg, strict=False)
    assert math.isnan(r.v_m) and math.isnan(r.v_c)
    assert set(r.failed) == {"v_m", "v_c"}
    assert r.v_p == mv.velocity_phase(1.5)


def test_reports_thread_safe():
    alphas = list(np.linspace(1.1, 1.9, 9))
    serial = [mv.velocity_report(a) for a in alphas]
    with ThreadPoolExecutor(max_workers=4) as pool:
        threaded = list(pool.map(mv.velocity_report, alphas))
    assert threaded == serial
