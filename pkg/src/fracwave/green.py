"""The fractional Cauchy kernel G_alpha(x, t) and its auxiliary profile L_alpha.

Closed form::

    G_alpha(x, t) = (1/pi) |x|^(alpha-1) t^alpha sin(pi alpha/2)
                    / (t^(2 alpha) + 2 |x|^alpha t^alpha cos(pi alpha/2) + |x|^(2 alpha))

with ``G_alpha(x, t) = L_alpha(t/|x|) / |x|`` and
``L_alpha(tau) = (1/pi) tau^alpha sin(pi alpha/2) / (tau^(2 alpha) + 2 tau^alpha cos(pi alpha/2) + 1)``.

Two independent routes reproduce it: the convergent power series in
``(t/|x|)^alpha`` (or its mirror) and the cosine transform of the
Mittag-Leffler function ``E_alpha(-(kappa t)^alpha)``.
"""
import functools
import math

import numpy as np

from fracwave import kernels, special_fn
from fracwave.errors import DomainError, SeriesNotApplicable
from fracwave.quadrature import (EPS_KERNEL, QuadConfig, QuadResult, check_kernel_order,
                                 integrate_finite, kernel_trig)

# Fourier route defaults: the check targets ~1e-6 absolute, we aim well below.
FOURIER_CONFIG = QuadConfig(rel_tol=1e-10, abs_tol=1e-10, max_subdivisions=4000)


def _check_t(t):
    t = float(t)
    if not (t > 0 and math.isfinite(t)):
        raise DomainError(f"t must be positive and finite, got {t!r}")
    return t


def green_array(alpha, x, t):
    """Closed-form G_alpha on broadcast arrays ``x`` and ``t``."""
    alpha = check_kernel_order(alpha)
    x = np.asarray(x, dtype=float)
    t = np.asarray(t, dtype=float)
    if np.any(~(t > 0)) or np.any(~np.isfinite(t)):
        raise DomainError("t must be positive and finite")
    if np.any(~np.isfinite(x)):
        raise DomainError("x must be finite")
    s, c = kernel_trig(alpha)
    xb, tb = np.broadcast_arrays(x, t)
    return kernels.green_kernel(alpha, s, c, xb, tb)


def green_closed(alpha, x, t):
    """Closed-form ``G_alpha(x, t)`` (non-negative; ``1/(pi t)`` at x = 0 for alpha = 1)."""
    return float(green_array(alpha, float(x), _check_t(t)))


def l_aux(alpha, tau):
    """Auxiliary profile ``L_alpha(tau)``; accepts scalars or arrays, ``tau >= 0``."""
    alpha = check_kernel_order(alpha)
    arr = np.asarray(tau, dtype=float)
    if np.any(~(arr >= 0)) or np.any(~np.isfinite(arr)):
        raise DomainError("tau must be non-negative and finite")
    s, c = kernel_trig(alpha)
    out = kernels.laux_kernel(alpha, s, c, np.atleast_1d(arr))
    return float(out[0]) if arr.ndim == 0 else out.reshape(arr.shape)


def green_series(alpha, x, t, n_terms):
    """Partial sum of the power series of G_alpha with ``n_terms`` terms.

    For ``t < |x|`` the series runs in ``-(t/|x|)^alpha``, otherwise in
    ``-(|x|/t)^alpha``; both carry the prefactor ``-1/(pi |x|)`` and the
    coefficients ``sin(pi alpha k / 2)``.
    """
    alpha = float(alpha)
    if not 1.0 < alpha < 2.0:
        raise DomainError(f"series needs 1 < alpha < 2, got {alpha!r}")
    x = abs(float(x))
    t = _check_t(t)
    n_terms = int(n_terms)
    if n_terms < 1:
        raise DomainError("n_terms must be >= 1")
    if x == 0.0 or t == x:
        raise SeriesNotApplicable(f"series does not converge at x={x!r}, t={t!r}")
    q = -((min(t, x) / max(t, x)) ** alpha)
    terms = []
    power = 1.0
    for k in range(1, n_terms + 1):
        power *= q
        if power == 0.0:
            break
        terms.append(special_fn.sinpi(0.5 * alpha * k) * power)
    return -math.fsum(terms) / (math.pi * x)


# --- cosine-transform route -------------------------------------------------

def _exp_pair(alpha):
    """(amplitude, decay, frequency) of the exponential part of E_alpha(-u^alpha)."""
    if alpha == 1.0:
        return 1.0, 1.0, 0.0
    return 2.0 / alpha, -math.cos(math.pi / alpha), math.sin(math.pi / alpha)


@functools.lru_cache(maxsize=256)
def _tail_cut(alpha, tol):
    """Cut U and truncation m beyond which the expansion is accurate to ``tol``."""
    u = 8.0
    while True:
        m, bound = special_fn.optimal_truncation(alpha, u ** alpha)
        if bound * u <= tol or u > 1e6:
            return u, m
        u *= 1.25


def _power_cos_tail(p, omega, u0):
    """``int_{u0}^inf u^(-p) cos(omega u) du`` for p > 1."""
    if omega == 0.0:
        return u0 ** (1.0 - p) / (p - 1.0)
    ctx = special_fn.mp_context(30)
    z = (-1j * ctx.mpf(omega)) ** (ctx.mpf(p) - 1) * ctx.gammainc(1 - ctx.mpf(p), -1j * omega * u0)
    return float(ctx.re(z))


def _fourier_tail(alpha, omega, u0, m):
    """``int_{u0}^inf cos(omega u) E_alpha(-u^alpha) du`` from the large-argument expansion."""
    rg = special_fn._asym_table(alpha)[0]
    total = []
    if alpha != 1.0:
        for k in range(1, m + 1):
            if rg[k] != 0.0:
                # -(-y)^-k rg_k with y = u^alpha
                total.append((1.0 if k % 2 else -1.0) * rg[k]
                             * _power_cos_tail(alpha * k, omega, u0))
    amp, a, b = _exp_pair(alpha)
    for freq in (omega + b, omega - b):
        z = complex(-a, freq)
        total.append(0.5 * amp * (-(np.exp(z * u0) / z)).real)
    return math.fsum(total)


def green_fourier(alpha, x, t, cfg=None):
    """G_alpha(x, t) as ``(1/(pi t)) int_0^inf cos((|x|/t) u) E_alpha(-u^alpha) du``.

    ``[0, U]`` is integrated adaptively with breakpoints at the zeros of the
    cosine; ``[U, inf)`` uses the large-argument expansion of E_alpha, whose
    terms integrate against the cosine in closed form. ``cfg`` tolerances
    refer to G itself. Non-convergence is flagged, not raised.
    """
    alpha = check_kernel_order(alpha)
    t = _check_t(t)
    x = abs(float(x))
    if not math.isfinite(x):
        raise DomainError("x must be finite")
    cfg = cfg or FOURIER_CONFIG
    scale = math.pi * t
    body_cfg = QuadConfig(cfg.rel_tol, cfg.abs_tol * scale, cfg.max_subdivisions)
    omega = x / t
    u0, m = _tail_cut(alpha, 1e-3 * body_cfg.abs_tol)
    if omega > 0.0:
        zeros = (np.arange(math.floor(u0 * omega / math.pi + 0.5)) + 0.5) * math.pi / omega
        zeros = zeros[(zeros > 0.0) & (zeros < u0)]
    else:
        zeros = np.empty(0)
    edges = np.concatenate([[0.0], zeros, [u0]])

    def integrand(u):
        return np.cos(omega * u) * special_fn.mittag_leffler_neg_array(alpha, u ** alpha)

    body = integrate_finite(integrand, edges, body_cfg)
    tail = _fourier_tail(alpha, omega, u0, m)
    return QuadResult((body.value + tail) / scale,
                      (body.error_estimate + 1e-3 * body_cfg.abs_tol) / scale,
                      body.converged, body.n_subdivisions)


__all__ = ["EPS_KERNEL", "FOURIER_CONFIG", "green_array", "green_closed", "green_fourier",
           "green_series", "l_aux"]
