"""Semi-infinite adaptive quadrature for integrands with power-law endpoints.

``integrate_semi_infinite`` splits ``[0, inf)`` at ``split`` (default 1), maps
the outer piece by ``tau = split / u`` and runs a global-adaptive
Gauss-Kronrod (7, 15) rule on both pieces together. When a declared endpoint
exponent falls below -1/2, that piece is additionally stretched by
``w -> w**p`` so the integrand behaves like ``w`` at the endpoint.

``integrate_lalpha_power`` is the ``int_0^inf tau^beta L_alpha(tau)^2 dtau``
family behind the pulse and energy velocities; its hot loop lives in
:mod:`fracwave.kernels`.
"""
import math
import os
from dataclasses import dataclass

import numpy as np

from fracwave import _gk, kernels
from fracwave.errors import DivergentEndpoint, DomainError, MomentOutOfRange, QuadratureError
from fracwave.special_fn import cospi, sinpi

EPS_KERNEL = 1e-3
TOL_ENV = "FRACWAVE_QUAD_TOL"


@dataclass(frozen=True)
class QuadConfig:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_subdivisions: int = 2000

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise DomainError("quadrature tolerances must be positive")
        if int(self.max_subdivisions) != self.max_subdivisions or self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be a positive integer")

    def scaled(self, factor):
        """Copy with both tolerances multiplied by ``factor``."""
        return QuadConfig(self.rel_tol * factor, self.abs_tol * factor, self.max_subdivisions)


def default_config():
    """``QuadConfig()`` with ``rel_tol`` taken from ``$FRACWAVE_QUAD_TOL`` when set."""
    raw = os.environ.get(TOL_ENV, "").strip()
    if not raw:
        return QuadConfig()
    try:
        tol = float(raw)
    except ValueError:
        raise DomainError(f"{TOL_ENV}={raw!r} is not a number") from None
    return QuadConfig(rel_tol=tol)


@dataclass(frozen=True)
class QuadResult:
    value: float
    error_estimate: float
    converged: bool
    n_subdivisions: int = 0

    def require(self, what="integral"):
        """Return ``value``, raising :class:`QuadratureError` if not converged."""
        if not self.converged:
            raise QuadratureError(
                f"{what}: no convergence (value {self.value!r}, "
                f"error estimate {self.error_estimate!r})", result=self)
        return self.value


def _result(value, error, n_sub, converged):
    return QuadResult(float(value), float(error), bool(converged), int(n_sub))


def check_kernel_order(alpha):
    """Validate ``1 <= alpha <= 2 - EPS_KERNEL`` for pointwise kernel work."""
    alpha = float(alpha)
    if not 1.0 <= alpha <= 2.0 - EPS_KERNEL:
        raise DomainError(
            f"kernel order must satisfy 1 <= alpha <= {2.0 - EPS_KERNEL}, got {alpha!r}")
    return alpha


def kernel_trig(alpha):
    """``(sin(pi alpha/2), cos(pi alpha/2))``, exact at alpha = 1."""
    return sinpi(0.5 * alpha), cospi(0.5 * alpha)


def integrate_semi_infinite(f, zero_exponent, inf_exponent, cfg=None, split=1.0):
    """``int_0^inf f(tau) dtau`` for ``f ~ tau**zero_exponent`` (0) and ``tau**inf_exponent`` (inf).

    ``f`` must accept and return 1-D float arrays. ``inf_exponent`` may be
    ``-inf`` for exponentially decaying integrands. ``split`` moves the
    breakpoint to the natural scale of ``f``. Non-convergence is reported in
    the result flag rather than raised.
    """
    cfg = cfg or QuadConfig()
    if not zero_exponent > -1.0:
        raise DivergentEndpoint(f"zero_exponent {zero_exponent!r} <= -1: integral diverges at 0")
    if not inf_exponent < -1.0:
        raise DivergentEndpoint(f"inf_exponent {inf_exponent!r} >= -1: integral diverges at inf")
    if not split > 0:
        raise DomainError("split must be positive")
    return _result(*_gk.semi_infinite(
        f, float(zero_exponent), float(inf_exponent), float(split),
        cfg.rel_tol, cfg.abs_tol, int(cfg.max_subdivisions)))


def lalpha_power_window(alpha):
    """Open interval of beta where ``int tau^beta L_alpha^2`` converges."""
    return -2.0 * alpha - 1.0, 2.0 * alpha - 1.0


def integrate_lalpha_power(alpha, beta, cfg=None):
    """``int_0^inf tau^beta L_alpha(tau)^2 dtau`` for ``-2 alpha - 1 < beta < 2 alpha - 1``."""
    alpha = check_kernel_order(alpha)
    beta = float(beta)
    lo, hi = lalpha_power_window(alpha)
    if not lo < beta < hi:
        raise MomentOutOfRange(
            f"beta={beta!r} outside the convergence window ({lo}, {hi}) for alpha={alpha}")
    cfg = cfg or QuadConfig()
    s, c = kernel_trig(alpha)
    return _result(*kernels.lpow_integral(
        alpha, s, c, beta, cfg.rel_tol, cfg.abs_tol, int(cfg.max_subdivisions)))


def cauchy_case_integral(beta):
    """Closed form of ``int tau^beta L_1^2`` for ``-3 < beta < 1``: ``(1+beta)/(4 pi cos(pi beta/2))``."""
    beta = float(beta)
    if not -3.0 < beta < 1.0:
        raise MomentOutOfRange(f"beta={beta!r} outside (-3, 1)")
    if beta == -1.0:
        return 1.0 / (2.0 * math.pi ** 2)
    return (1.0 + beta) / (4.0 * math.pi * cospi(0.5 * beta))


def integrate_finite(f, breakpoints, cfg=None):
    """Adaptive GK15 over a finite interval with interior ``breakpoints``."""
    cfg = cfg or QuadConfig()
    edges = np.asarray(breakpoints, dtype=float)
    if edges.size < 2 or np.any(np.diff(edges) <= 0):
        raise DomainError("breakpoints must be strictly increasing with at least two entries")
    return _result(*_gk.adaptive_gk(f, edges, cfg.rel_tol, cfg.abs_tol,
                                    int(cfg.max_subdivisions)))
