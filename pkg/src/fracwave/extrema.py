"""Maximum of G_alpha on x > 0, the invariant product p_alpha and inverse problems.

For 1 < alpha < 2 the positive half of G_alpha(., t) has a single maximum at
``x* = c_alpha^(1/alpha) t`` where ``c_alpha`` is the positive root of
``(alpha+1) c^2 + 2 cos(pi alpha/2) c + (1 - alpha) = 0``. The product
``p_alpha = x* G*`` does not depend on t, and is strictly increasing in alpha,
so a measured p determines alpha.
"""
import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize

from fracwave.errors import DegenerateAtAlphaOne, DomainError, OutOfRange, SearchNoBracket
from fracwave.green import green_array, green_closed
from fracwave.special_fn import cospi, sinpi

ALPHA_CLIP = 1e-9
AMPLITUDE_WINDOW = (1.001, 1.999)


@dataclass(frozen=True)
class ExtremumReport:
    alpha: float
    t: float
    x_star: float
    g_star: float
    p: float
    c_alpha: float
    degenerate: bool = False


def _check_order(alpha, lo_open=False, hi=2.0, hi_open=True):
    alpha = float(alpha)
    ok_lo = alpha > 1.0 if lo_open else alpha >= 1.0
    ok_hi = alpha < hi if hi_open else alpha <= hi
    if not (ok_lo and ok_hi):
        lb = "(" if lo_open else "["
        rb = ")" if hi_open else "]"
        raise DomainError(f"alpha must lie in {lb}1, {hi}{rb}, got {alpha!r}")
    return alpha


def _check_t(t):
    t = float(t)
    if not (t > 0 and math.isfinite(t)):
        raise DomainError(f"t must be positive and finite, got {t!r}")
    return t


def c_alpha(alpha):
    """``(-cos(pi alpha/2) + sqrt(alpha^2 - sin^2(pi alpha/2))) / (alpha + 1)``, 1 <= alpha <= 2."""
    alpha = _check_order(alpha, hi_open=False)
    s = sinpi(0.5 * alpha)
    disc = (alpha - s) * (alpha + s)
    return (-cospi(0.5 * alpha) + math.sqrt(max(disc, 0.0))) / (alpha + 1.0)


def _profile_at_c(alpha, c):
    # (1/pi) c sin / (1 + 2 c cos + c^2), the peak value of L_alpha. The
    # denominator is written as (c + cos)^2 + sin^2 with c + cos rationalized,
    # which avoids the cancellation near alpha = 2 where c -> 1, cos -> -1.
    if c == 0.0:
        return 0.0
    s = sinpi(0.5 * alpha)
    co = cospi(0.5 * alpha)
    root = math.sqrt(max((alpha - s) * (alpha + s), 0.0))
    shift = s * s * (alpha - 1.0) / (root - alpha * co)
    return c * s / (math.pi * (shift * shift + s * s))


def product_p(alpha):
    """Time-invariant product ``p_alpha = x* G*``; 0 at alpha = 1, increasing on [1, 2)."""
    alpha = _check_order(alpha)
    return _profile_at_c(alpha, c_alpha(alpha))


def max_point(alpha, t, strict=False):
    """Location and value of the maximum of G_alpha(., t) on x > 0.

    At alpha = 1 the maximum sits at x = 0 with value 1/(pi t); this is
    returned with ``degenerate=True`` unless ``strict`` asks for an error.
    """
    alpha = _check_order(alpha)
    t = _check_t(t)
    if alpha == 1.0:
        if strict:
            raise DegenerateAtAlphaOne("at alpha = 1 the maximum is at x = 0")
        return ExtremumReport(alpha, t, 0.0, 1.0 / (math.pi * t), 0.0, 0.0, True)
    c = c_alpha(alpha)
    vp = c ** (1.0 / alpha)
    x_star = vp * t
    g_star = _profile_at_c(alpha, c) / (vp * t)
    return ExtremumReport(alpha, t, x_star, g_star, x_star * g_star, c)


def m_alpha(alpha, t=1.0):
    """Maximum value G*_alpha(t), with the boundary value 1/(pi t) at alpha = 1."""
    return max_point(alpha, t).g_star


def _parabolic_vertex(f, x, h):
    fm, f0, fp = f(x - h), f(x), f(x + h)
    curv = fp - 2.0 * f0 + fm
    if not curv < 0.0:
        return x
    step = 0.5 * h * (fm - fp) / curv
    return x + step if abs(step) <= h else x


def _refine_max(f, x, rel_steps=(1e-4, 1e-5)):
    # golden section stalls at ~sqrt(eps) on a flat top; fit parabolas instead
    for r in rel_steps:
        x = _parabolic_vertex(f, x, r * abs(x))
    return x


def _bracket_from_grid(f, grid):
    vals = np.array([f(g) for g in grid])
    i = int(np.argmax(vals))
    if i == 0 or i == grid.size - 1:
        raise SearchNoBracket("maximum sits on the edge of the search grid")
    return grid[i - 1], grid[i], grid[i + 1]


def argmax_numeric(alpha, t, tol=1e-8):
    """Maximum location of ``x -> G_alpha(x, t)`` found by golden-section search.

    The search bracket comes from sampling ``(0, 10 t v_g]``. Independent of
    the closed-form location; used to verify it.
    """
    alpha = _check_order(alpha, lo_open=True)
    t = _check_t(t)
    hi = 10.0 * t * 2.0 / (alpha * sinpi(1.0 / alpha))
    grid = hi * np.linspace(0.0, 1.0, 401)[1:]
    grid = np.concatenate([grid[:1] * np.logspace(-6, -0.001, 60), grid])
    a, b, c = _bracket_from_grid(lambda x: green_closed(alpha, x, t), grid)

    def neg(x):
        return -float(green_array(alpha, x, t))

    res = optimize.minimize_scalar(neg, bracket=(a, b, c), method="golden",
                                   options={"xtol": min(tol, 1e-6)})
    x = float(res.x)
    if not a <= x <= c:
        raise SearchNoBracket("golden-section left the bracket")
    return _refine_max(lambda z: float(green_array(alpha, z, t)), x)


def recover_alpha(p_measured, tol=1e-8):
    """Invert ``product_p`` by bisection on ``[1 + 1e-9, 2 - 1e-9]``."""
    p = float(p_measured)
    lo, hi = 1.0 + ALPHA_CLIP, 2.0 - ALPHA_CLIP
    p_lo, p_hi = product_p(lo), product_p(hi)
    if not (p_lo <= p <= p_hi):
        raise OutOfRange(f"p={p!r} is outside the achievable range [{p_lo:.6g}, {p_hi:.6g}]")
    if p == p_lo:
        return lo
    if p == p_hi:
        return hi
    # product_p is cheap, so bisect well past tol down to a few ulps
    return optimize.bisect(lambda a: product_p(a) - p, lo, hi, xtol=min(0.25 * tol, 1e-15),
                           maxiter=200)


def amplitude_minimum(tol=1e-6):
    """``(alpha_min, m_min)`` minimizing the peak height m_alpha at t = 1 over 1 < alpha < 2."""
    lo, hi = AMPLITUDE_WINDOW
    grid = np.linspace(lo, hi, 201)
    a, b, c = _bracket_from_grid(lambda al: -m_alpha(al), grid)
    res = optimize.minimize_scalar(m_alpha, bracket=(a, b, c), method="golden",
                                   options={"xtol": tol})
    x = float(res.x)
    if not a <= x <= c:
        raise SearchNoBracket("golden-section left the bracket")
    x = _refine_max(lambda al: -m_alpha(al), x, rel_steps=(1e-4,))
    return x, m_alpha(x)


__all__ = ["ExtremumReport", "amplitude_minimum", "argmax_numeric", "c_alpha", "m_alpha",
           "max_point", "product_p", "recover_alpha"]
