"""Numba-compiled kernels; same contracts as :mod:`fracwave.kernels._numpy`."""
import math
import sys

import numpy as np
from numba import njit

from fracwave._gk import NODES, W_GAUSS, W_KRONROD

_NODES = NODES.copy()
_WK = W_KRONROD.copy()
_WG = W_GAUSS.copy()
_TINY = sys.float_info.min  # below this r is subnormal and r/rho loses digits


@njit(nogil=True, cache=True)
def _green_scalar(alpha, s, c, x, t):
    ax = abs(x)
    if ax == 0.0:
        return 1.0 / (math.pi * t) if alpha == 1.0 else 0.0
    rho = ax / t
    r = rho ** alpha  # the only pow: rho^(alpha-1) = r/rho, rho^(-alpha-1) = 1/(r rho)
    if r <= 1.0:
        lead = r / rho if r >= _TINY else rho ** (alpha - 1.0)
        return s * lead / (math.pi * t * ((r + c) * (r + c) + s * s))
    ir = 1.0 / r
    lead = ir / rho if ir >= _TINY else rho ** (-alpha - 1.0)
    return s * lead / (math.pi * t * ((ir + c) * (ir + c) + s * s))


@njit(nogil=True, cache=True)
def _green_loop(alpha, s, c, x, t):
    out = np.empty(x.size)
    for i in range(x.size):
        out[i] = _green_scalar(alpha, s, c, x[i], t[i])
    return out


def green_kernel(alpha, s, c, x, t):
    x, t = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(t, dtype=float))
    return _green_loop(alpha, s, c, np.ascontiguousarray(x).ravel(),
                       np.ascontiguousarray(t).ravel()).reshape(x.shape)


@njit(nogil=True, cache=True)
def _laux_scalar(alpha, s, c, tau):
    if tau <= 0.0:
        return 0.0
    r = tau ** alpha
    if r <= 1.0:
        return s * r / (math.pi * ((r + c) * (r + c) + s * s))
    ir = 1.0 / r
    return s * ir / (math.pi * ((ir + c) * (ir + c) + s * s))


@njit(nogil=True, cache=True)
def _laux_loop(alpha, s, c, tau):
    out = np.empty(tau.size)
    for i in range(tau.size):
        out[i] = _laux_scalar(alpha, s, c, tau[i])
    return out


def laux_kernel(alpha, s, c, tau):
    tau = np.asarray(tau, dtype=float)
    return _laux_loop(alpha, s, c, np.ascontiguousarray(tau).ravel()).reshape(tau.shape)


@njit(nogil=True, cache=True)
def _folded(alpha, s, c, e0, p0, e1, p1, u):
    # u >= 0: tau in [0, 1];  u < 0: tau = 1/|u| in [1, inf), using L(1/tau) = L(tau)
    if u >= 0.0:
        e, p, w = e0, p0, u
    else:
        e, p, w = e1, p1, -u
    if w <= 0.0:
        return 0.0
    r = w ** (p * alpha)
    q = s / (math.pi * ((r + c) * (r + c) + s * s))
    return p * w ** (p * (1.0 + e) - 1.0) * q * q


@njit(nogil=True, cache=True)
def _panel(alpha, s, c, e0, p0, e1, p1, a, b):
    ctr = 0.5 * (a + b)
    h = 0.5 * (b - a)
    k = 0.0
    g = 0.0
    for i in range(15):
        f = _folded(alpha, s, c, e0, p0, e1, p1, ctr + h * _NODES[i])
        k += _WK[i] * f
        g += _WG[i] * f
    return h * k, abs(h * (k - g))


@njit(nogil=True, cache=True)
def lpow_integral(alpha, s, c, beta, rel_tol, abs_tol, max_subdivisions):
    e0 = beta + 2.0 * alpha
    e1 = -beta - 2.0 + 2.0 * alpha
    p0 = 2.0 / (1.0 + e0) if e0 < -0.5 else 1.0
    p1 = 2.0 / (1.0 + e1) if e1 < -0.5 else 1.0
    cap = max_subdivisions + 2
    lo = np.empty(cap)
    hi = np.empty(cap)
    val = np.empty(cap)
    err = np.empty(cap)
    lo[0], hi[0] = -1.0, 0.0
    lo[1], hi[1] = 0.0, 1.0
    for j in range(2):
        val[j], err[j] = _panel(alpha, s, c, e0, p0, e1, p1, lo[j], hi[j])
    n = 2
    n_sub = 0
    while True:
        total = 0.0
        etot = 0.0
        worst = 0
        for j in range(n):
            total += val[j]
            etot += err[j]
            if err[j] > err[worst]:
                worst = j
        tol = max(rel_tol * abs(total), abs_tol)
        if etot <= tol:
            return total, etot, n_sub, True
        if n_sub >= max_subdivisions or not math.isfinite(etot):
            return total, etot, n_sub, False
        mid = 0.5 * (lo[worst] + hi[worst])
        if not (lo[worst] < mid < hi[worst]):
            return total, etot, n_sub, False
        lo[n], hi[n] = mid, hi[worst]
        hi[worst] = mid
        val[worst], err[worst] = _panel(alpha, s, c, e0, p0, e1, p1, lo[worst], hi[worst])
        val[n], err[n] = _panel(alpha, s, c, e0, p0, e1, p1, lo[n], hi[n])
        n += 1
        n_sub += 1
