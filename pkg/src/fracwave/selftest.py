"""Cross-check battery run by ``fracwave selftest``.

Each check compares two independent routes to the same quantity and reports
PASS/FAIL with the worst discrepancy. Thresholds loosen with the quadrature
tolerance: a check with base threshold ``b`` passes below ``max(b, 10 tol)``.
"""
import math
import time
from dataclasses import dataclass

from fracwave import extrema, green, moments
from fracwave.errors import FracwaveError
from fracwave.quadrature import QuadConfig

TRIPLE_POINTS = [(1.1, 0.3, 0.5), (1.1, 2.5, 1.7), (1.5, 1.0, 4.0), (1.5, 2.5, 0.5),
                 (1.9, 0.3, 1.7), (1.9, 1.0, 0.5)]
MELLIN_ALPHAS = (1.2, 1.5, 1.8)
MOMENT_PAIRS = [(a, b) for a in (1.2, 1.5, 1.8) for b in (0.25, 0.5, 1.0)]
ORDER_ALPHAS = (1.1, 1.3, 1.5, 1.7, 1.9)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self):
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail} ({self.seconds:.2f} s)"


def _rel(a, b):
    return abs(a - b) / abs(b) if b != 0 else abs(a)


def _check_triple(cfg, tol):
    lim_f = max(1e-6, 10 * tol)
    lim_s = max(1e-10, 10 * tol)
    fcfg = QuadConfig(cfg.rel_tol, max(green.FOURIER_CONFIG.abs_tol, 0.01 * tol),
                      cfg.max_subdivisions)
    worst_f = worst_s = 0.0
    for a, x, t in TRIPLE_POINTS:
        ref = green.green_closed(a, x, t)
        four = green.green_fourier(a, x, t, fcfg)
        four.require("Fourier inversion")
        worst_f = max(worst_f, abs(four.value - ref))
        worst_s = max(worst_s, abs(green.green_series(a, x, t, 200) - ref))
    ok = worst_f <= lim_f and worst_s <= lim_s
    return ok, f"max |fourier - closed| = {worst_f:.2e} (<= {lim_f:.0e}), " \
               f"max |series - closed| = {worst_s:.2e} (<= {lim_s:.0e})"


def _check_mellin(cfg, tol):
    lim = max(1e-8, 10 * tol)
    worst = 0.0
    for a in MELLIN_ALPHAS:
        for s in (-0.9 * a, -0.5, 0.3, 0.9 * a):
            q = moments.mellin_laux(a, s, cfg).require("Mellin transform")
            worst = max(worst, _rel(q, moments.mellin_laux_closed(a, s)))
    return worst <= lim, f"max rel err = {worst:.2e} (<= {lim:.0e})"


def _check_moments(cfg, tol):
    lim = max(1e-8, 10 * tol)
    worst = 0.0
    for a, b in MOMENT_PAIRS:
        q = moments.moment_quadrature(a, b, 1.0, cfg).require("moment")
        worst = max(worst, _rel(q, moments.moment_one_sided(a, b, 1.0)))
    mass = max(abs(moments.total_mass(a, 1.0, cfg).require("normalization") - 1.0)
               for a in MELLIN_ALPHAS)
    ok = worst <= lim and mass <= lim and moments.moment_one_sided(1.5, 0.0, 1.0) == 0.5
    return ok, f"max rel err = {worst:.2e}, |mass - 1| = {mass:.2e} (<= {lim:.0e})"


def _check_ordering(cfg, tol):
    bad = []
    for a in ORDER_ALPHAS:
        r = moments.velocity_report(a, cfg)
        if not (r.ordered() and r.v_1 == r.v_c and r.v_2 == r.v_m):
            bad.append(a)
    edges = (moments.velocity_phase(1.0) == 0.0 and moments.velocity_phase(2.0) == 1.0
             and moments.velocity_gravity(2.0) == 1.0)
    ok = not bad and edges
    return ok, "v_c < v_p < v_m < v_g on " + ", ".join(map(str, ORDER_ALPHAS)) \
        + (f"; violated at {bad}" if bad else "") + ("" if edges else "; endpoint values wrong")


def _check_product(cfg, tol):
    worst = 0.0
    for a in (1.1, 1.5, 1.9):
        p1 = extrema.max_point(a, 1.0).p
        for t in (0.1, 10.0):
            worst = max(worst, _rel(extrema.max_point(a, t).p, p1))
        worst = max(worst, _rel(extrema.product_p(a),
                                green.green_closed(a, 1.0, moments.velocity_phase(a))))
    return worst <= 1e-12, f"max rel deviation = {worst:.2e} (<= 1e-12)"


def _check_amplitude(cfg, tol):
    a_min, m_min = extrema.amplitude_minimum()
    m1 = extrema.m_alpha(1.0)
    ok = abs(a_min - 1.13) <= 0.02 and abs(m_min - 0.28) <= 0.01 and abs(m1 - 1 / math.pi) <= 1e-12
    return ok, f"alpha_min = {a_min:.6f}, m_min = {m_min:.6f}, m_1 = {m1:.12f}"


CHECKS = [
    ("triple consistency", _check_triple),
    ("Mellin identity", _check_mellin),
    ("moment formula", _check_moments),
    ("velocity ordering", _check_ordering),
    ("product invariance", _check_product),
    ("amplitude minimum", _check_amplitude),
]


def run_selftest(tol=None, max_subdivisions=None):
    """Run every check; returns a list of :class:`CheckResult`."""
    base = QuadConfig()
    tol = base.rel_tol if tol is None else float(tol)
    cfg = QuadConfig(tol, base.abs_tol,
                     base.max_subdivisions if max_subdivisions is None else max_subdivisions)
    out = []
    for name, fn in CHECKS:
        t0 = time.perf_counter()
        try:
            ok, detail = fn(cfg, tol)
        except (FracwaveError, ArithmeticError, ValueError) as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(name, bool(ok), detail, time.perf_counter() - t0))
    return out
