"""Moments and centers of G_alpha and the six damped-wave velocities.

All centers are one-sided: integrals run over x in (0, inf), since G_alpha
is even and full-line first moments vanish.

* gravity center  ``x_g(t) = int x G dx / int G dx``           -> v_g
* pulse center    ``x_m(t) = int x G^2 dx / int G^2 dx``       -> v_m
* energy time     ``t_c(x) = int t G^2 dt / int G^2 dt``       -> v_c = x / t_c
* maximum         ``x*(t)``                                     -> v_p

The pulse and energy velocities reduce to ratios of
``int tau^beta L_alpha(tau)^2 dtau``; the first and second centrovelocities
coincide with v_c and v_m and are reported through the same computation.
"""
import math
from dataclasses import dataclass, field
from typing import Optional

from fracwave.errors import DomainError, MomentOutOfRange, QuadratureError, UndefinedAtAlphaOne
from fracwave.extrema import c_alpha
from fracwave.green import green_array, l_aux
from fracwave.quadrature import (EPS_KERNEL, QuadConfig, QuadResult, check_kernel_order,
                                 integrate_lalpha_power, integrate_semi_infinite)
from fracwave.special_fn import sinpi


def _check_t(t, name="t"):
    t = float(t)
    if not (t > 0 and math.isfinite(t)):
        raise DomainError(f"{name} must be positive and finite, got {t!r}")
    return t


def _check_closed_order(alpha, allow_one=True):
    alpha = float(alpha)
    if alpha == 1.0 and not allow_one:
        raise UndefinedAtAlphaOne("undefined at alpha = 1 (the Cauchy kernel has no first moment)")
    if not 1.0 <= alpha <= 2.0:
        raise DomainError(f"alpha must lie in [1, 2], got {alpha!r}")
    return alpha


# --- moments ------------------------------------------------------------------

def moment_one_sided(alpha, beta, t):
    """``int_0^inf x^beta G_alpha(x, t) dx = t^beta sin(pi beta/2) / (alpha sin(pi beta/alpha))``.

    Needs ``|beta| < alpha``; beta = 0 gives exactly 1/2.
    """
    alpha = _check_closed_order(alpha)
    beta = float(beta)
    t = _check_t(t)
    if not abs(beta) < alpha:
        raise MomentOutOfRange(f"|beta| must be < alpha={alpha}, got beta={beta!r}")
    if beta == 0.0:
        return 0.5
    return t ** beta * sinpi(0.5 * beta) / (alpha * sinpi(beta / alpha))


def moment_quadrature(alpha, beta, t, cfg=None):
    """Quadrature of ``int_0^inf x^beta G_alpha(x, t) dx`` (checks :func:`moment_one_sided`)."""
    alpha = check_kernel_order(alpha)
    beta = float(beta)
    t = _check_t(t)
    if not abs(beta) < alpha:
        raise MomentOutOfRange(f"|beta| must be < alpha={alpha}, got beta={beta!r}")
    return integrate_semi_infinite(
        lambda x: green_array(alpha, x, t) * x ** beta,
        alpha - 1.0 + beta, -alpha - 1.0 + beta, cfg, split=t)


def total_mass(alpha, t, cfg=None):
    """Quadrature of ``int_{-inf}^{inf} G_alpha(x, t) dx`` (equals 1)."""
    half = moment_quadrature(alpha, 0.0, t, cfg)
    return QuadResult(2.0 * half.value, 2.0 * half.error_estimate, half.converged,
                      half.n_subdivisions)


def mellin_laux_closed(alpha, s):
    """``int_0^inf L_alpha(tau) tau^(s-1) dtau = sin(pi s/2) / (alpha sin(pi s/alpha))``, |s| < alpha."""
    alpha = _check_closed_order(alpha)
    s = float(s)
    if not abs(s) < alpha:
        raise MomentOutOfRange(f"|s| must be < alpha={alpha}, got s={s!r}")
    if s == 0.0:
        return 0.5
    return sinpi(0.5 * s) / (alpha * sinpi(s / alpha))


def mellin_laux(alpha, s, cfg=None):
    """Quadrature of the Mellin transform of L_alpha at real ``s``, ``-alpha < s < alpha``."""
    alpha = check_kernel_order(alpha)
    s = float(s)
    if not abs(s) < alpha:
        raise MomentOutOfRange(f"|s| must be < alpha={alpha}, got s={s!r}")
    return integrate_semi_infinite(lambda tau: l_aux(alpha, tau) * tau ** (s - 1.0),
                                   alpha + s - 1.0, s - 1.0 - alpha, cfg)


# --- centers ------------------------------------------------------------------

def gravity_center(alpha, t):
    """``x_g(t) = 2t / (alpha sin(pi/alpha))`` for 1 < alpha <= 2."""
    return velocity_gravity(alpha) * _check_t(t)


def mass_center(alpha, t, cfg=None):
    """``x_m(t) = v_m(alpha) t``."""
    t = _check_t(t)
    return velocity_pulse(alpha, cfg) * t


def energy_location(alpha, x, cfg=None):
    """``t_c(x) = x / v_c(alpha)`` for 1 < alpha < 2."""
    x = _check_t(x, "x")
    return x / velocity_centro(alpha, cfg)


# --- velocities ---------------------------------------------------------------

def velocity_phase(alpha):
    """Speed of the maximum, ``c_alpha^(1/alpha)``; 0 at alpha = 1 and 1 at alpha = 2."""
    alpha = _check_closed_order(alpha)
    return c_alpha(alpha) ** (1.0 / alpha)


def velocity_gravity(alpha):
    """``v_g = 2 / (alpha sin(pi/alpha))``; diverges as alpha -> 1+."""
    alpha = _check_closed_order(alpha, allow_one=False)
    return 2.0 / (alpha * sinpi(1.0 / alpha))


def _lpow_ratio(alpha, beta_num, beta_den, cfg, what):
    num = integrate_lalpha_power(alpha, beta_num, cfg).require(f"{what} numerator")
    den = integrate_lalpha_power(alpha, beta_den, cfg).require(f"{what} denominator")
    return num / den


def velocity_pulse_quadrature(alpha, cfg=None):
    """``int tau^-1 L^2 / int tau^-2 L^2`` by quadrature, for 1 <= alpha <= 2 - 1e-3."""
    return _lpow_ratio(alpha, -1.0, -2.0, cfg, "pulse velocity")


def velocity_pulse(alpha, cfg=None):
    """Pulse velocity v_m (equal to the second centrovelocity); exactly 2/pi at alpha = 1."""
    alpha = check_kernel_order(alpha)
    if alpha == 1.0:
        return 2.0 / math.pi
    return velocity_pulse_quadrature(alpha, cfg)


def velocity_centro(alpha, cfg=None):
    """Smith centrovelocity v_c = ``int L^2 / int tau L^2`` (equal to the first centrovelocity)."""
    alpha = check_kernel_order(alpha)
    if alpha == 1.0:
        raise UndefinedAtAlphaOne("the energy integral diverges at alpha = 1")
    return _lpow_ratio(alpha, 0.0, 1.0, cfg, "centrovelocity")


@dataclass(frozen=True)
class VelocityReport:
    alpha: float
    v_p: float
    v_g: Optional[float]
    v_m: float
    v_2: float
    v_c: float
    v_1: float
    undefined: tuple = ()
    failed: tuple = field(default=(), compare=False)

    def ordered(self):
        """True when ``v_c < v_p < v_m < v_g``."""
        return self.v_g is not None and self.v_c < self.v_p < self.v_m < self.v_g


def velocity_report(alpha, cfg=None, strict=True):
    """All six velocities at one alpha in [1, 2 - 1e-3].

    At alpha = 1: v_p = 0, v_m = v_2 = 2/pi, v_c = v_1 = 0 and v_g is None
    (listed in ``undefined``). With ``strict=False`` a failed quadrature gives
    NaN in that field and its name in ``failed`` instead of raising.
    """
    alpha = check_kernel_order(alpha)
    failed = []

    def attempt(name, fn):
        try:
            return fn(alpha, cfg)
        except QuadratureError:
            if strict:
                raise
            failed.append(name)
            return math.nan

    v_p = velocity_phase(alpha)
    v_m = attempt("v_m", velocity_pulse)
    if alpha == 1.0:
        v_g, v_c, undefined = None, 0.0, ("v_g",)
    else:
        v_g = velocity_gravity(alpha)
        v_c = attempt("v_c", velocity_centro)
        undefined = ()
    return VelocityReport(alpha, v_p, v_g, v_m, v_m, v_c, v_c, undefined, tuple(failed))


__all__ = ["EPS_KERNEL", "QuadConfig", "VelocityReport", "energy_location", "gravity_center",
           "mass_center", "mellin_laux", "mellin_laux_closed", "moment_one_sided",
           "moment_quadrature", "total_mass", "velocity_centro", "velocity_gravity",
           "velocity_phase", "velocity_pulse", "velocity_pulse_quadrature", "velocity_report"]
