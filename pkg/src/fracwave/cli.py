"""Command-line front end: ``fracwave <command> [options]``.

Data commands write CSV to stdout: a ``# fracwave v<version> <args>`` line
echoing the fully resolved arguments, a column header, then rows with 15
significant digits. Exit codes: 0 success, 1 selftest failure, 2 bad
arguments, 3 some cells failed numerically (written as NaN), 4 value outside
the range reachable by the inverse problem.
"""
import argparse
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from fracwave import __version__, extrema, green, moments
from fracwave.errors import DomainError, FracwaveError, OutOfRange, QuadratureError
from fracwave.quadrature import QuadConfig, default_config
from fracwave.selftest import run_selftest

EXIT_OK, EXIT_SELFTEST, EXIT_ARGS, EXIT_NUMERIC, EXIT_RANGE = 0, 1, 2, 3, 4


@dataclass(frozen=True)
class GridSpec:
    start: float
    stop: float
    count: int

    def __post_init__(self):
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise DomainError("grid bounds must be finite")
        if not self.start < self.stop:
            raise DomainError(f"grid needs start < stop, got {self.start} >= {self.stop}")
        if self.count < 2:
            raise DomainError(f"grid needs at least 2 points, got {self.count}")

    def values(self):
        # the integer ratio makes grids symmetric about 0 mirror bit-exactly
        n = self.count - 1
        u = (2.0 * np.arange(self.count) - n) / n
        mid, half = 0.5 * (self.start + self.stop), 0.5 * (self.stop - self.start)
        out = mid + half * u
        out[0], out[-1] = self.start, self.stop
        return out

    def echo(self):
        return f"{self.start!r} {self.stop!r} {self.count}"


PROFILE_X = GridSpec(-0.5, 0.5, 401)
PROFILE_T = (0.1, 0.2, 0.3)
SURFACE_X = GridSpec(-0.5, 0.5, 101)
SURFACE_T = GridSpec(0.005, 0.3, 60)
VELOCITY_ALPHA = GridSpec(1.01, 1.99, 50)
PRODUCT_PANELS = {"coarse": GridSpec(1.0, 1.98, 197), "fine": GridSpec(1.0, 1.05, 101)}
MAX_ALPHA = GridSpec(1.001, 1.999, 200)
MOMENT_BETAS = (0.0, 0.25, 0.5, 1.0)


def fmt(v):
    if v is None or (isinstance(v, float) and math.isnan(v)):
        return "NaN"
    return format(float(v), ".15g")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EXIT_ARGS)


def _grid(text_triplet):
    start, stop, count = text_triplet
    try:
        n = int(count)
    except ValueError:
        raise DomainError(f"grid count must be an integer, got {count!r}") from None
    return GridSpec(float(start), float(stop), n)


class _Out:
    def __init__(self, stream, command, echo):
        self.stream = stream
        stream.write(f"# fracwave v{__version__} {command} {echo}".rstrip() + "\n")

    def comment(self, text):
        self.stream.write(f"# {text}\n")

    def row(self, *cells):
        self.stream.write(",".join(c if isinstance(c, str) else fmt(c) for c in cells) + "\n")


def _cfg(args):
    cfg = default_config()
    rel = getattr(args, "rel_tol", None)
    nsub = getattr(args, "max_subdivisions", None)
    return QuadConfig(cfg.rel_tol if rel is None else rel, cfg.abs_tol,
                      cfg.max_subdivisions if nsub is None else nsub)


# --- commands ----------------------------------------------------------------

def cmd_eval(args, out):
    out.write(fmt(green.green_closed(args.alpha, args.x, args.t)) + "\n")
    return EXIT_OK


def cmd_profile(args, out):
    xg = _grid(args.x_grid) if args.x_grid else PROFILE_X
    ts = tuple(args.t_list) if args.t_list else PROFILE_T
    for t in ts:
        if not t > 0:
            raise DomainError(f"t must be positive, got {t!r}")
    w = _Out(out, "profile", f"--alpha {args.alpha!r} --x-grid {xg.echo()} --t-list "
             + " ".join(repr(t) for t in ts))
    w.row("alpha", "t", "x", "G")
    xs = xg.values()
    for t in ts:
        for x, g in zip(xs, green.green_array(args.alpha, xs, t)):
            w.row(args.alpha, t, x, g)
    return EXIT_OK


def cmd_surface(args, out):
    xg = _grid(args.x_grid) if args.x_grid else SURFACE_X
    tg = _grid(args.t_grid) if args.t_grid else SURFACE_T
    if not tg.start > 0:
        raise DomainError("time grid must be strictly positive")
    w = _Out(out, "surface", f"--alpha {args.alpha!r} --x-grid {xg.echo()} --t-grid {tg.echo()}")
    w.row("x", "t", "G")
    xs = xg.values()
    for t in tg.values():
        for x, g in zip(xs, green.green_array(args.alpha, xs, t)):
            w.row(x, t, g)
    return EXIT_OK


def _parallel_map(fn, items, jobs):
    if jobs <= 1:
        return [fn(i) for i in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def cmd_velocities(args, out):
    ag = _grid(args.alpha_grid) if args.alpha_grid else VELOCITY_ALPHA
    cfg = _cfg(args)
    alphas = ag.values()
    for a in alphas:
        green.check_kernel_order(a)
    reports = _parallel_map(lambda a: moments.velocity_report(a, cfg, strict=False),
                            alphas, args.jobs)
    w = _Out(out, "velocities", f"--alpha-grid {ag.echo()} --rel-tol {cfg.rel_tol!r} "
             f"--max-subdivisions {cfg.max_subdivisions}")
    w.comment("v_1 equals v_c and v_2 equals v_m; both omitted")
    w.row("alpha", "v_p", "v_g", "v_m", "v_c")
    status = EXIT_OK
    for r in reports:
        if r.failed:
            status = EXIT_NUMERIC
        w.row(r.alpha, r.v_p, r.v_g, r.v_m, r.v_c)
    return status


def cmd_product(args, out):
    ag = _grid(args.alpha_grid) if args.alpha_grid else PRODUCT_PANELS[args.panel]
    w = _Out(out, "product", f"--alpha-grid {ag.echo()}")
    w.row("alpha", "p")
    for a in ag.values():
        w.row(a, extrema.product_p(a))
    return EXIT_OK


def cmd_max(args, out):
    if args.minimum:
        a_min, m_min = extrema.amplitude_minimum()
        w = _Out(out, "max", "--minimum")
        w.row("alpha_min", "m_min")
        w.row(a_min, m_min)
        return EXIT_OK
    if args.alpha is not None:
        alphas = [args.alpha]
        echo = f"--alpha {args.alpha!r} --t {args.t!r}"
    else:
        ag = _grid(args.alpha_grid) if args.alpha_grid else MAX_ALPHA
        alphas = ag.values()
        echo = f"--alpha-grid {ag.echo()} --t {args.t!r}"
    reports = [extrema.max_point(a, args.t) for a in alphas]
    w = _Out(out, "max", echo)
    w.row("alpha", "t", "x_star", "g_star", "p", "c_alpha")
    for r in reports:
        w.row(r.alpha, r.t, r.x_star, r.g_star, r.p, r.c_alpha)
    return EXIT_OK


def cmd_moments(args, out):
    cfg = _cfg(args)
    betas = tuple(args.beta) if args.beta else tuple(b for b in MOMENT_BETAS if b < args.alpha)
    rows = [(b, moments.moment_one_sided(args.alpha, b, args.t)) for b in betas]
    w = _Out(out, "moments", f"--alpha {args.alpha!r} --t {args.t!r} --beta "
             + " ".join(repr(b) for b in betas)
             + f" --rel-tol {cfg.rel_tol!r} --max-subdivisions {cfg.max_subdivisions}")
    w.row("alpha", "t", "beta", "moment_closed", "moment_quad")
    status = EXIT_OK
    for b, closed in rows:
        try:
            quad = moments.moment_quadrature(args.alpha, b, args.t, cfg).require("moment")
        except QuadratureError:
            quad = math.nan
            status = EXIT_NUMERIC
        w.row(args.alpha, args.t, b, closed, quad)
    return status


def cmd_recover(args, out):
    if not args.p > 0:
        raise OutOfRange(f"p must be positive (p = 0 corresponds to alpha = 1 exactly), got {args.p!r}")
    out.write(format(extrema.recover_alpha(args.p), ".10g") + "\n")
    return EXIT_OK


def cmd_selftest(args, out):
    results = run_selftest(args.tol, args.max_subdivisions)
    for r in results:
        out.write(r.line() + "\n")
    failed = [r.name for r in results if not r.passed]
    out.write(f"{len(results) - len(failed)}/{len(results)} checks passed\n")
    return EXIT_SELFTEST if failed else EXIT_OK


# --- parser ------------------------------------------------------------------

def _positive_int(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def build_parser():
    p = _Parser(prog="fracwave", description="Fractional Cauchy kernel: values, "
                "velocities, extrema and cross-checks (CSV on stdout).")
    p.add_argument("--version", action="version", version=f"fracwave {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def grid_opt(sp, name, help_):
        sp.add_argument(name, nargs=3, metavar=("START", "STOP", "COUNT"), help=help_)

    e = sub.add_parser("eval", help="closed-form G at one point")
    e.add_argument("--alpha", type=float, required=True)
    e.add_argument("--x", type=float, required=True)
    e.add_argument("--t", type=float, required=True)

    pr = sub.add_parser("profile", help="G(x) at several times")
    pr.add_argument("--alpha", type=float, default=1.5)
    grid_opt(pr, "--x-grid", "space grid (default -0.5 0.5 401)")
    pr.add_argument("--t-list", type=float, nargs="+", help="times (default 0.1 0.2 0.3)")

    su = sub.add_parser("surface", help="G over an (x, t) rectangle")
    su.add_argument("--alpha", type=float, default=1.5)
    grid_opt(su, "--x-grid", "space grid (default -0.5 0.5 101)")
    grid_opt(su, "--t-grid", "time grid (default 0.005 0.3 60)")

    v = sub.add_parser("velocities", help="v_p, v_g, v_m, v_c over an alpha grid")
    grid_opt(v, "--alpha-grid", "alpha grid (default 1.01 1.99 50)")
    v.add_argument("--rel-tol", type=float)
    v.add_argument("--max-subdivisions", type=_positive_int)
    v.add_argument("--jobs", type=_positive_int, default=1, help="worker threads")

    pd = sub.add_parser("product", help="p_alpha over an alpha grid")
    pd.add_argument("--panel", choices=sorted(PRODUCT_PANELS), default="coarse",
                    help="coarse: 1 .. 1.98, fine: 1 .. 1.05")
    grid_opt(pd, "--alpha-grid", "explicit alpha grid (overrides --panel)")

    m = sub.add_parser("max", help="maximum location/value, or the amplitude minimum")
    m.add_argument("--alpha", type=float)
    grid_opt(m, "--alpha-grid", "alpha grid when --alpha is absent (default 1.001 1.999 200)")
    m.add_argument("--t", type=float, default=1.0)
    m.add_argument("--minimum", action="store_true", help="locate the minimum of the peak height")

    mo = sub.add_parser("moments", help="one-sided moments, closed form vs quadrature")
    mo.add_argument("--alpha", type=float, required=True)
    mo.add_argument("--t", type=float, default=1.0)
    mo.add_argument("--beta", type=float, nargs="+")
    mo.add_argument("--rel-tol", type=float)
    mo.add_argument("--max-subdivisions", type=_positive_int)

    r = sub.add_parser("recover", help="alpha from a measured product p")
    r.add_argument("--p", type=float, required=True)

    st = sub.add_parser("selftest", help="run the cross-check battery")
    st.add_argument("--tol", type=float, help="quadrature relative tolerance")
    st.add_argument("--max-subdivisions", type=_positive_int)
    return p


COMMANDS = {
    "eval": cmd_eval, "profile": cmd_profile, "surface": cmd_surface,
    "velocities": cmd_velocities, "product": cmd_product, "max": cmd_max,
    "moments": cmd_moments, "recover": cmd_recover, "selftest": cmd_selftest,
}


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except OutOfRange as exc:
        sys.stderr.write(f"fracwave: error: {exc}\n")
        return EXIT_RANGE
    except FracwaveError as exc:
        # DomainError and friends are argument problems; anything else numeric
        code = EXIT_ARGS if isinstance(exc, DomainError) else EXIT_NUMERIC
        sys.stderr.write(f"fracwave: error: {exc}\n")
        return code
    except ValueError as exc:
        sys.stderr.write(f"fracwave: error: {exc}\n")
        return EXIT_ARGS
    except BrokenPipeError:
        # downstream reader (e.g. head) closed early; silence the flush at exit
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
