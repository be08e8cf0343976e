"""Mittag-Leffler function on the negative real axis.

``mittag_leffler_neg(alpha, x)`` returns ``E_alpha(-x)`` for ``0 < alpha < 2``
and ``x >= 0`` to about 1e-10 relative accuracy. It switches between

* the power series in double precision (small ``x``, mild cancellation),
* the algebraic asymptotic expansion, optimally truncated, plus the pair of
  exponentially damped oscillations that the expansion leaves out when
  ``1 < alpha < 2`` (large ``x``),
* the power series summed in ``decimal`` arithmetic with enough digits to
  absorb the cancellation (everything in between).

Reciprocal-gamma coefficients are computed once per order with mpmath and
rounded to double, so poles of ``Gamma`` give exact zeros.
"""
import math
import threading
from decimal import Context, Decimal
from functools import lru_cache

import mpmath
import numpy as np

from fracwave.errors import AccuracyUnattainable, DomainError, SeriesDomainExceeded

_LN_MAX = 709.0
_tls = threading.local()


def mp_context(dps):
    """Thread-local mpmath context set to ``dps`` digits."""
    ctx = getattr(_tls, "ctx", None)
    if ctx is None:
        ctx = _tls.ctx = mpmath.MPContext()
    ctx.dps = dps
    return ctx


def sinpi(z):
    """sin(pi*z), exact at integers and half-integers."""
    if z < 0:
        return -sinpi(-z)
    r = math.fmod(z, 2.0)
    if r <= 0.25:
        return math.sin(math.pi * r)
    if r < 0.75:
        return math.cos(math.pi * (r - 0.5))
    if r <= 1.25:
        return math.sin(math.pi * (1.0 - r))
    if r < 1.75:
        return -math.cos(math.pi * (r - 1.5))
    return -math.sin(math.pi * (2.0 - r))


def cospi(z):
    """cos(pi*z), exact at integers and half-integers."""
    r = math.fmod(abs(z), 2.0)
    if r <= 0.25:
        return math.cos(math.pi * r)
    if r < 0.75:
        return -math.sin(math.pi * (r - 0.5))
    if r <= 1.25:
        return -math.cos(math.pi * (r - 1.0))
    if r < 1.75:
        return math.sin(math.pi * (r - 1.5))
    return math.cos(math.pi * (2.0 - r))


def rgamma(z):
    """1/Gamma(z) correctly rounded to double; exactly 0.0 at z = 0, -1, -2, ..."""
    ctx = mp_context(40)
    return float(ctx.rgamma(ctx.mpf(z)))


def log_abs_rgamma(z):
    """log|1/Gamma(z)|, ``-inf`` at the poles."""
    ctx = mp_context(40)
    r = ctx.rgamma(ctx.mpf(z))
    return -math.inf if r == 0 else float(ctx.log(abs(r)))


def check_ml_order(alpha):
    alpha = float(alpha)
    if not 0.0 < alpha < 2.0:
        raise DomainError(f"Mittag-Leffler order must lie in (0, 2), got {alpha!r}")
    return alpha


# --- coefficient tables -----------------------------------------------------

@lru_cache(maxsize=64)
def _series_table(alpha, size):
    # c_k = 1/Gamma(1 + alpha k), k = 0 .. size-1, exact product alpha*k in mp
    ctx = mp_context(40)
    a = ctx.mpf(alpha)
    c = np.empty(size)
    logc = np.empty(size)
    for k in range(size):
        r = ctx.rgamma(1 + a * k)
        c[k] = float(r)
        logc[k] = float(ctx.log(r))
    return c, logc


def _series_coeffs(alpha, n):
    size = 64
    while size < n:
        size *= 2
    c, logc = _series_table(alpha, size)
    return c[:n], logc[:n]


_ASYM_TERMS = 400


@lru_cache(maxsize=64)
def _asym_table(alpha):
    # rg_k = 1/Gamma(1 - alpha k), k = 1 .. _ASYM_TERMS (index 0 unused);
    # nxt[k] = smallest j >= k with rg_j != 0 (_ASYM_TERMS + 1 if none)
    ctx = mp_context(40)
    a = ctx.mpf(alpha)
    rg = np.zeros(_ASYM_TERMS + 2)
    logrg = np.full(_ASYM_TERMS + 2, -np.inf)
    for k in range(1, _ASYM_TERMS + 1):
        r = ctx.rgamma(1 - a * k)
        if r != 0:
            logrg[k] = float(ctx.log(abs(r)))
            if logrg[k] < _LN_MAX:
                rg[k] = float(r)
            else:
                rg[k] = math.copysign(math.inf, float(ctx.sign(r)))
    nxt = np.empty(_ASYM_TERMS + 2, dtype=np.int64)
    nxt[-1] = _ASYM_TERMS + 1
    for k in range(_ASYM_TERMS, -1, -1):
        nxt[k] = k if logrg[k] > -np.inf else nxt[k + 1]
    return rg, logrg, nxt


@lru_cache(maxsize=256)
def _decimal_coeffs(alpha, n, digits):
    ctx = mp_context(digits + 10)
    a = ctx.mpf(alpha)
    return tuple(Decimal(ctx.nstr(ctx.rgamma(1 + a * k), digits + 5, min_fixed=-1, max_fixed=-1))
                 for k in range(n))


# --- power series -----------------------------------------------------------

def _series_terms(alpha, x, n_terms):
    c, logc = _series_coeffs(alpha, n_terms)
    if x == 0.0:
        out = np.zeros(n_terms)
        out[0] = 1.0
        return out
    k = np.arange(n_terms)
    logx = math.log(x)
    logt = k * logx + logc
    if np.max(logt) > _LN_MAX:
        raise SeriesDomainExceeded(
            f"series term overflows double precision at x={x!r} (alpha={alpha!r})")
    sign = np.where(k % 2 == 0, 1.0, -1.0)
    with np.errstate(over="ignore", under="ignore", invalid="ignore"):
        direct = sign * np.power(x, k.astype(float)) * c
    # coefficients or powers outside the normal range go through logs
    bad = ~np.isfinite(direct) | (np.abs(c) < 1e-290) | (k * abs(logx) > 690.0)
    if np.any(bad):
        direct[bad] = sign[bad] * np.exp(logt[bad])
    return direct


def ml_series(alpha, x, n_terms):
    """Partial sum ``sum_{k<n_terms} (-x)^k / Gamma(1 + alpha k)``.

    Terms are summed with :func:`math.fsum`, so the only rounding beyond the
    terms themselves is the final one.
    """
    alpha = check_ml_order(alpha)
    x = float(x)
    if x < 0.0 or not math.isfinite(x):
        raise DomainError(f"x must be finite and >= 0, got {x!r}")
    n_terms = int(n_terms)
    if n_terms < 1:
        raise DomainError("n_terms must be >= 1")
    terms = _series_terms(alpha, x, n_terms)
    total = math.fsum(terms)
    # each term carries ~1 ulp; cancellation multiplies that by sum|t| / |sum|
    spread = math.fsum(np.abs(terms))
    if spread <= 4.0 * abs(total):
        return total
    digits = 25 + int(math.log10(spread / max(abs(total), 1e-300)))
    return _decimal_partial_sum(alpha, x, n_terms, digits)


def _decimal_partial_sum(alpha, x, n_terms, digits):
    digits = -(-digits // 16) * 16
    coeffs = _decimal_coeffs(alpha, n_terms, digits)
    ctx = Context(prec=digits)
    mx = -Decimal(x)
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = ctx.fma(acc, mx, c)
    return float(acc)


def _series_length(alpha, x, log_cut):
    """Number of terms until the tail drops below exp(log_cut), past the peak."""
    logx = math.log(x)
    n = 64
    while True:
        _, logc = _series_coeffs(alpha, n)
        logt = np.arange(n) * logx + logc
        peak = int(np.argmax(logt))
        below = np.nonzero((np.arange(n) > peak) & (logt < log_cut))[0]
        if below.size:
            return int(below[0]) + 1, float(logt[peak])
        if n >= 1 << 16:
            raise AccuracyUnattainable(f"series does not settle at x={x!r}")
        n *= 2


# --- asymptotic expansion ---------------------------------------------------

def _asym_log_terms(alpha, x):
    _, logrg, _ = _asym_table(alpha)
    return logrg - np.arange(_ASYM_TERMS + 2) * math.log(x)


def _omitted_log_bound(alpha, logt):
    """log of the error bound after truncating at m, for m = 1 .. _ASYM_TERMS-1.

    The bound is twice the larger of the next two non-zero terms: a
    coefficient sitting next to a pole of Gamma can be tiny without the
    expansion having settled, and the remainder is not strictly alternating.
    """
    nxt = _asym_table(alpha)[2]
    j1 = nxt[2:_ASYM_TERMS + 1]
    j2 = nxt[np.minimum(j1 + 1, _ASYM_TERMS + 1)]
    inside = j2 <= _ASYM_TERMS
    lt = np.where(inside, np.maximum(logt[np.minimum(j1, _ASYM_TERMS)],
                                     logt[np.minimum(j2, _ASYM_TERMS)]), np.inf)
    return lt + math.log(2.0)


def optimal_truncation(alpha, x):
    """Truncation index m minimizing the omitted-term bound, and that bound."""
    if alpha == 1.0:
        # every coefficient vanishes: the algebraic part is identically zero
        return 1, 0.0
    cand = _omitted_log_bound(alpha, _asym_log_terms(alpha, x))
    m = int(np.argmin(cand)) + 1
    return m, math.exp(cand[m - 1])


def ml_asymptotic(alpha, x, m=None):
    """Algebraic expansion ``-sum_{k=1}^m (-x)^{-k} / Gamma(1 - alpha k)``.

    Returns ``(value, error_bound)`` where the bound is the magnitude of the
    larger of the next two omitted non-zero terms, doubled. ``m=None`` picks the
    optimal truncation.
    """
    alpha = check_ml_order(alpha)
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"asymptotic expansion needs x > 0, got {x!r}")
    if m is None:
        m, bound = optimal_truncation(alpha, x)
    else:
        m = int(m)
        if not 1 <= m < _ASYM_TERMS:
            raise DomainError(f"m must lie in [1, {_ASYM_TERMS - 1}]")
        if alpha == 1.0:
            bound = 0.0
        else:
            lb = _omitted_log_bound(alpha, _asym_log_terms(alpha, x))[m - 1]
            bound = math.exp(lb) if lb < _LN_MAX else math.inf
    rg, logrg, _ = _asym_table(alpha)
    logx = math.log(x)
    terms = []
    for k in range(1, m + 1):
        if rg[k] == 0.0:
            continue
        sign = math.copysign(1.0, rg[k]) * (-1.0 if k % 2 else 1.0)
        if abs(rg[k]) < math.inf and k * logx < 690.0:
            terms.append(sign * abs(rg[k]) / x ** k)
        else:
            terms.append(sign * math.exp(logrg[k] - k * logx))
    return -math.fsum(terms), bound


def ml_exponential_part(alpha, x):
    """Exponentially small part of ``E_alpha(-x)`` missing from the algebraic expansion.

    Zero for ``alpha < 1``, ``exp(-x)`` at ``alpha = 1`` and
    ``(2/alpha) exp(x^{1/alpha} cos(pi/alpha)) cos(x^{1/alpha} sin(pi/alpha))``
    for ``1 < alpha < 2``.
    """
    if alpha < 1.0:
        return 0.0
    if alpha == 1.0:
        return math.exp(-x)
    y = x ** (1.0 / alpha)
    damp = y * math.cos(math.pi / alpha)
    if damp < -745.0:
        return 0.0
    return 2.0 / alpha * math.exp(damp) * math.cos(y * math.sin(math.pi / alpha))


# --- dispatcher -------------------------------------------------------------

SERIES_X_MAX = 10.0
SERIES_Y_MAX = 9.0  # x^(1/alpha) bound; peak term is about exp(y)
ASYM_REL = 1e-12
DECIMAL_GUARD = 4000


def _ml_decimal(alpha, x):
    n, log_peak = _series_length(alpha, x, math.log(1e-40))
    digits = int(max(log_peak, 0.0) / math.log(10.0)) + 45
    digits = -(-digits // 16) * 16
    if digits > DECIMAL_GUARD:
        raise AccuracyUnattainable(
            f"E_{alpha}(-{x}) needs {digits} digits in the series regime")
    return _decimal_partial_sum(alpha, x, -(-n // 32) * 32, digits)


def ml_regime(alpha, x):
    """Name of the evaluation route ``mittag_leffler_neg`` takes at ``x``."""
    if x == 0.0:
        return "zero"
    if alpha == 1.0:
        return "exponential"
    if x <= SERIES_X_MAX and x ** (1.0 / alpha) <= SERIES_Y_MAX:
        return "series"
    alg, bound = ml_asymptotic(alpha, x)
    total = alg + ml_exponential_part(alpha, x)
    if bound <= ASYM_REL * max(abs(alg), abs(total)):
        return "asymptotic"
    return "decimal"


def mittag_leffler_neg(alpha, x):
    """``E_alpha(-x)`` for ``0 < alpha < 2``, ``x >= 0``."""
    alpha = check_ml_order(alpha)
    x = float(x)
    if x < 0.0 or math.isnan(x):
        raise DomainError(f"x must be >= 0, got {x!r}")
    if x == 0.0:
        return 1.0
    if math.isinf(x):
        return 0.0
    if alpha == 1.0:
        return math.exp(-x)
    if x <= SERIES_X_MAX and x ** (1.0 / alpha) <= SERIES_Y_MAX:
        n, _ = _series_length(alpha, x, math.log(1e-22))
        return ml_series(alpha, x, n)
    alg, bound = ml_asymptotic(alpha, x)
    total = alg + ml_exponential_part(alpha, x)
    if bound <= ASYM_REL * max(abs(alg), abs(total)):
        return total
    return _ml_decimal(alpha, x)


def mittag_leffler_neg_array(alpha, x):
    """Elementwise :func:`mittag_leffler_neg` over an array of ``x``."""
    x = np.asarray(x, dtype=float)
    out = np.empty(x.shape)
    flat = out.reshape(-1)
    for i, xi in enumerate(x.reshape(-1)):
        flat[i] = mittag_leffler_neg(alpha, xi)
    return out
