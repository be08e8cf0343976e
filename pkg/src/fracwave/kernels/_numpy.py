"""Pure-numpy kernels (reference path, always available).

The denominators ``1 + 2 c r + r^2`` are evaluated as ``(r + c)^2 + s^2``
(with ``s, c = sin, cos(pi alpha/2)``): equal algebraically, but free of the
cancellation near r = 1 when alpha approaches 2 and c approaches -1.
"""
import math

import numpy as np

from fracwave import _gk


def green_kernel(alpha, s, c, x, t):
    """G_alpha(x, t) on flat float arrays; ``s, c = sin, cos(pi alpha/2)``."""
    ax = np.abs(x)
    out = np.zeros(np.broadcast(ax, t).shape)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        rho = ax / t
        r = rho ** alpha
        near = s * rho ** (alpha - 1.0) / (math.pi * t * ((r + c) * (r + c) + s * s))
        ir = 1.0 / r
        far = s * rho ** (-alpha - 1.0) / (math.pi * t * ((ir + c) * (ir + c) + s * s))
        out = np.where(r <= 1.0, near, far)
    zero = ax == 0.0
    if np.any(zero):
        origin = 1.0 / (math.pi * t) if alpha == 1.0 else 0.0 * t
        out = np.where(zero, origin, out)
    return out


def laux_kernel(alpha, s, c, tau):
    """L_alpha(tau) on a flat float array."""
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        r = tau ** alpha
        ir = 1.0 / r
        near = s * r / (math.pi * ((r + c) * (r + c) + s * s))
        far = s * ir / (math.pi * ((ir + c) * (ir + c) + s * s))
        return np.where(r <= 1.0, near, far)


def lpow_folded(alpha, s, c, beta, u):
    """Integrand of ``int tau**beta L**2`` folded onto u in [-1, 1].

    u >= 0 carries tau = w**p0 in [0, 1]; u < 0 carries tau = 1/w**p1 through
    L(1/tau) = L(tau). The power of w is collected analytically, so tau
    itself is never formed and neither end under- or overflows.
    """
    e0, e1 = beta + 2.0 * alpha, -beta - 2.0 + 2.0 * alpha
    p0, p1 = _gk.stretch_power(e0), _gk.stretch_power(e1)
    pos = u >= 0.0
    w = np.abs(u)
    e = np.where(pos, e0, e1)
    p = np.where(pos, p0, p1)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore", under="ignore"):
        r = w ** (p * alpha)
        q = s / (math.pi * ((r + c) * (r + c) + s * s))
        out = p * w ** (p * (1.0 + e) - 1.0) * q * q
    return np.where(w > 0.0, out, 0.0)


def lpow_integral(alpha, s, c, beta, rel_tol, abs_tol, max_subdivisions):
    """``int_0^inf tau**beta L_alpha(tau)**2`` -> (value, error, n_sub, converged)."""
    return _gk.adaptive_gk(lambda u: lpow_folded(alpha, s, c, beta, u), [-1.0, 0.0, 1.0],
                           rel_tol, abs_tol, max_subdivisions)
