"""Command-line front end: verification suite, counterexample report, bound
tables and figure data as CSV.

Exit codes: 0 when every expectation is met, 1 when a mathematical
expectation fails, 2 for usage or domain errors.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import math
import sys
from collections.abc import Callable, Iterator
from dataclasses import dataclass

import numpy as np

from . import extremal as ex
from . import inequalities as ineq
from . import oracle
from .qcore import (
    LOG_TOL,
    QInterval,
    QParam,
    lattice_index_of,
    lattice_point,
    q_derivative,
    q_derivative_at_a,
    q_integral,
    sup_norm_qderiv,
)

EPS = float(np.finfo(float).eps)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

REF_Q, REF_X = 0.6, 0.8
FIGURE_SAMPLES = 2001


@dataclass(frozen=True)
class RunConfig:
    q: float = 0.5
    a: float = 0.0
    b: float = 1.0
    tol: float = 1e-12
    log_tol: float = LOG_TOL
    grid: int = 1000
    out: str | None = None

    def __post_init__(self):
        QParam(self.q)
        QInterval(self.a, self.b)
        if not self.tol > 0:
            raise ValueError("--tol must be positive")
        if not self.log_tol > 0:
            raise ValueError("--log-tol must be positive")
        if self.grid < 2:
            raise ValueError("--grid must be at least 2")

    @property
    def interval(self) -> QInterval:
        return QInterval(self.a, self.b)


def fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, str):
        return v
    if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
        return str(int(v))
    return f"{float(v):.17g}"


@contextlib.contextmanager
def _output(path: str | None) -> Iterator:
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _write_csv(path: str | None, header: list[str], rows) -> None:
    with _output(path) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([fmt(v) for v in row])


# -- verify -----------------------------------------------------------------------


@dataclass
class Row:
    id: str
    lhs: float
    rhs: float
    ok: bool
    expect_hold: bool = True

    @property
    def passed(self) -> bool:
        return self.ok == self.expect_hold


def _rows_counterexample(cfg: RunConfig) -> Iterator[Row]:
    f = ex.make_tent_counterexample()
    I = q_integral(f, 0.5, (0, 1), 1.0, 0.9, cfg.tol)
    yield Row("counterexample.integral", abs(I.value - 1 / 6), cfg.tol, abs(I.value - 1 / 6) <= cfg.tol)
    d = ineq.check_ostrowski(f, 0.9, 0.5, (0, 1), 1.0, "DISPROVED", tol=cfg.tol)
    yield Row("counterexample.disproved_violated", d.lhs, d.rhs, d.satisfied, expect_hold=False)
    full = ineq.check_ostrowski(f, 0.9, 0.5, (0, 1), 1.0, "FULL", tol=cfg.tol)
    yield Row("counterexample.full_holds", full.lhs, full.rhs, full.satisfied)
    norm = sup_norm_qderiv(f, 0.5)
    yield Row("counterexample.norm_is_one", norm.estimate, 1.0, norm.exact and norm.estimate == 1.0)
    worst = max(
        (ineq.check_ostrowski(f, lattice_point((0, 1), 0.5, m), 0.5, (0, 1), 1.0, "DISPROVED", tol=cfg.tol)
         for m in range(30)),
        key=lambda r: r.lhs - r.rhs,
    )
    yield Row("counterexample.disproved_holds_on_lattice", worst.lhs, worst.rhs, worst.satisfied)


def _rows_sharpness(cfg: RunConfig) -> Iterator[Row]:
    q, iv = cfg.q, cfg.interval
    for m in (0, 1, 2, 5):
        f = ex.make_absdev(m, q, iv)
        r = ineq.check_ostrowski(f, lattice_point(iv, q, m), q, iv, 1.0, "LATTICE", m=m, tol=cfg.tol)
        yield Row(f"sharp.lattice.m{m}", abs(r.margin), 1e-10, abs(r.margin) <= 1e-10)
    for qq, x in ((REF_Q, REF_X), (q, 0.5 * (1 + q))):
        f = ex.pullback(ex.make_selfsim_fx(x, qq), iv)
        xs = iv.a + x * iv.length
        r = ineq.check_ostrowski(f, xs, qq, iv, 1.0, "FULL", tol=cfg.tol)
        yield Row(f"sharp.off_lattice.q{qq:g}", abs(r.margin), 1e-10, abs(r.margin) <= 1e-10)
        I = q_integral(f, qq, iv, iv.b, None, cfg.tol)
        target = -iv.length**2 / (1 + qq)
        yield Row(f"sharp.fx_integral.q{qq:g}", abs(I.value - target), I.tail_bound + 1e-15,
                  abs(I.value - target) <= I.tail_bound + 1e-15)
        for eps in (0.2, 0.05, 0.01):
            g = ex.make_fx_eps(x, qq, eps)
            cert = ex.certify_unit_norm(g)
            yield Row(f"eps.certified.q{qq:g}.e{eps:g}", float(not cert), 0.0, cert)
            r = ineq.check_ostrowski(g, x, qq, (0, 1), 1.0, "FULL", tol=cfg.tol)
            yield Row(f"eps.margin.q{qq:g}.e{eps:g}", abs(r.margin - eps), 1e-10, abs(r.margin - eps) <= 1e-10)
            t = x * qq**g.m
            dq = q_derivative(g, t, qq, 0.0, 1.0)
            expect = (1 + qq - eps / t) / (1 - qq)
            yield Row(f"eps.special_derivative.q{qq:g}.e{eps:g}", abs(dq - expect), 1e-12,
                      abs(dq - expect) <= 1e-12 and -1 <= dq <= 1)


def _rows_closed_forms(cfg: RunConfig) -> Iterator[Row]:
    qs = sorted({round(0.1 * k, 10) for k in range(1, 10)} | {cfg.q})
    worst_gap, ok = 0.0, True
    for q in qs:
        K = max(1, math.ceil(math.log(1e-13 * (1 - q) / 2) / math.log(q)))
        for m in range(31):
            ps = oracle.series_abs_weighted_sum(m, q, K)
            gap = abs(ps.value - ineq.abs_weighted_sum_closed(m, q))
            worst_gap = max(worst_gap, gap)
            ok &= gap <= ps.remainder_bound + 64 * EPS / (1 - q) and ps.remainder_bound < 1e-12
    yield Row("closed_form.vs_partial_sums", worst_gap, 1e-12, ok)
    iv = cfg.interval
    worst = 0.0
    for q in qs:
        for m in range(61):
            lhs = ineq.lattice_ostrowski_bound(m, q, iv)
            rhs = (1 - q) * iv.length * ineq.abs_weighted_sum_closed(m, q)
            worst = max(worst, abs(lhs - rhs))
    yield Row("closed_form.lattice_identity", worst, 1e-13, worst <= 1e-13)
    worst, dominance = 0.0, True
    # beyond ~40 generations (or for tiny q) the two constants agree to the last bit
    for m in range(min(41, _resolvable_generations(cfg.q))):
        x = lattice_point(iv, cfg.q, m)
        lat = ineq.lattice_ostrowski_bound(m, cfg.q, iv)
        worst = max(worst, abs(ineq.disproved_bound(x, cfg.q, iv) - lat))
        dominance &= ineq.full_ostrowski_bound(x, cfg.q, iv) > lat
    yield Row("closed_form.disproved_equals_lattice", worst, 1e-12, worst <= 1e-12)
    yield Row("closed_form.full_dominates_lattice", float(not dominance), 0.0, dominance)
    xs = np.linspace(iv.a, iv.b, 101)
    worst = max(abs(ineq.disproved_bound(x, cfg.q, iv) - oracle.published_ostrowski_bound(x, cfg.q, iv)) for x in xs)
    yield Row("closed_form.published_form", worst, 1e-12, worst <= 1e-12 * max(1.0, iv.length))


def _resolvable_generations(q: float) -> int:
    # q^m still above 1e-12, so 2 q^m survives next to an O(1) constant
    return max(1, math.ceil(math.log(1e-12) / math.log(q)))


def midpoint_scan(q: float, interval=(0.0, 1.0), m_max: int | None = None) -> int:
    if m_max is None:
        m_max = max(100, math.ceil(3 / (1 - q)))
    vals = np.array([ineq.lattice_ostrowski_bound(m, q, interval) for m in range(m_max + 1)])
    best = vals.min()
    ties = np.flatnonzero(vals <= best + 1e-15 * max(1.0, abs(best)))
    return int(ties.max())


def _rows_midpoint(cfg: RunConfig) -> Iterator[Row]:
    m = ineq.midpoint_index(cfg.q)
    scan = midpoint_scan(cfg.q, cfg.interval)
    yield Row(f"midpoint.q{cfg.q:g}", m, scan, m == scan)
    bad = [q for q in np.linspace(0.01, 0.99, 99) if ineq.midpoint_index(q) != midpoint_scan(q)]
    yield Row("midpoint.grid99", len(bad), 0, not bad)


def random_pl(rng: np.random.Generator, interval: QInterval):
    k = int(rng.integers(1, 8))
    inner = np.sort(rng.uniform(interval.a, interval.b, k))
    ts = np.unique(np.concatenate([[interval.a], inner, [interval.b]]))
    ys = rng.normal(size=ts.size)
    return ex.PiecewiseLinearFn(tuple(zip(ts, ys)), interval)


def mvt_suite(q: float, interval: QInterval, count: int, seed: int = 20240101, tol: float = 1e-12):
    """Soundness sweep over random piecewise-linear functions.

    Returns ``(violations, worst_ratio)`` where the ratio is lhs/rhs over all
    checks (at most 1 when every inequality holds).
    """
    rng = np.random.default_rng(seed)
    violations, worst = 0, 0.0
    for _ in range(count):
        f = random_pl(rng, interval)
        norm = ex.certify_pl_norm(f, q, interval)
        if norm is None:
            violations += 1
            continue
        x = float(interval.a + interval.length * rng.uniform(1e-6, 1.0))
        n = int(rng.integers(0, 21))
        m = int(rng.integers(0, 21))
        reports = [
            ineq.check_mvt(f, x, n, q, interval, norm),
            ineq.check_ostrowski(f, x, q, interval, norm, "FULL", tol=tol),
            ineq.check_ostrowski(f, lattice_point(interval, q, m), q, interval, norm, "LATTICE", m=m, tol=tol),
        ]
        for r in reports:
            violations += not r.satisfied
            if r.rhs > 0:
                worst = max(worst, r.lhs / r.rhs)
    return violations, worst


def _rows_mvt(cfg: RunConfig) -> Iterator[Row]:
    q, iv = cfg.q, cfg.interval
    violations, worst = mvt_suite(q, iv, 500, tol=cfg.tol)
    yield Row("mvt.random_pl_soundness", violations, 0, violations == 0)
    step = ex.make_step_counterexample()
    # violating pairs are closer than 1 - q, so the grid has to resolve that
    grid = max(cfg.grid, math.ceil(4 / (1 - q)))
    pair = ineq.naive_mvt_violation_search(step, q, (0, 2), 1 / (1 - q), grid)
    excess = pair.excess if pair else 0.0
    yield Row("mvt.naive_step_violation", excess, 0.0, pair is None, expect_hold=False)
    sq = lambda t: t * t  # noqa: E731
    c = ineq.find_lagrange_witness(sq, 1.0, 1, q, (0, 1), 1e-10)
    res = abs(q_derivative(sq, c, q, 0.0, 1.0) * (1 - q) - (1 - q * q))
    yield Row("mvt.lagrange_witness", res, 1e-10, res <= 1e-10 and q <= c <= 1)


def _rows_limits(cfg: RunConfig) -> Iterator[Row]:
    I = q_integral(lambda t: t * t, 0.999, (0, 1), 1.0, 1.0, cfg.tol)
    yield Row("limit.q_to_1_t2", abs(I.value - 1 / 3), 5e-4, abs(I.value - 1 / 3) < 5e-4)
    iv = cfg.interval
    mid = ineq.classical_ostrowski_bound(0.5 * (iv.a + iv.b), iv)
    yield Row("limit.classical_midpoint", mid, iv.length / 4, mid == iv.length / 4)


def _rows_nondiff(cfg: RunConfig) -> Iterator[Row]:
    fx = ex.make_selfsim_fx(REF_X, REF_Q)
    p = q_derivative_at_a(fx, REF_Q, (0, 1))
    yield Row("nondiff.fx_not_converged", p.spread, 2 * min(REF_X, 1 - REF_X) - 1e-9,
              not p.converged and p.spread >= 2 * min(REF_X, 1 - REF_X) - 1e-9)
    fe = ex.make_fx_eps(REF_X, REF_Q, 0.2)
    p = q_derivative_at_a(fe, REF_Q, (0, 1))
    yield Row("nondiff.fx_eps_limit", abs(p.limit + 1), 1e-9, p.converged and abs(p.limit + 1) <= 1e-9)
    g = ex.make_gx(REF_X, REF_Q, 10.0)
    r = ineq.check_ostrowski(g, REF_X, REF_Q, (0, 1), 1.0, "FULL", tol=cfg.tol)
    yield Row("nondiff.gx_breaks_full_bound", r.lhs, r.rhs, r.satisfied, expect_hold=False)


SUITES: list[Callable[[RunConfig], Iterator[Row]]] = [
    _rows_counterexample,
    _rows_sharpness,
    _rows_closed_forms,
    _rows_midpoint,
    _rows_mvt,
    _rows_limits,
    _rows_nondiff,
]


def run_verify(cfg: RunConfig) -> list[Row]:
    return [row for suite in SUITES for row in suite(cfg)]


def cmd_verify(cfg: RunConfig, args) -> int:
    rows = run_verify(cfg)
    width = max(len(r.id) for r in rows)
    lines = [f"{'check':<{width}}  {'lhs':>24}  {'rhs':>24}  {'margin':>24}  status"]
    for r in rows:
        status = "PASS" if r.passed else "FAIL"
        if r.passed and not r.expect_hold:
            status += " (violated as expected)"
        lines.append(f"{r.id:<{width}}  {fmt(r.lhs):>24}  {fmt(r.rhs):>24}  {fmt(r.rhs - r.lhs):>24}  {status}")
    failed = sum(not r.passed for r in rows)
    lines.append(f"{len(rows) - failed}/{len(rows)} checks passed")
    with _output(cfg.out) as fh:
        fh.write("\n".join(lines) + "\n")
    return EXIT_OK if failed == 0 else EXIT_FAIL


# -- counterexample / bounds / figures -------------------------------------------------


def cmd_counterexample(cfg: RunConfig, args) -> int:
    x = 0.9 if args.x is None else args.x
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"--x must lie in [0, 1], got {x}")
    f = ex.make_tent_counterexample()
    d = ineq.check_ostrowski(f, x, 0.5, (0, 1), 1.0, "DISPROVED", tol=cfg.tol)
    full = ineq.check_ostrowski(f, x, 0.5, (0, 1), 1.0, "FULL", tol=cfg.tol)
    on_lattice = x > 0 and lattice_index_of(x, (0, 1), 0.5, cfg.log_tol) is not None
    verdict = lambda r: "HOLDS" if r.satisfied else "VIOLATED"  # noqa: E731
    with _output(cfg.out) as fh:
        fh.write(f"q = 0.5, [a, b] = [0, 1], x = {fmt(x)}\n")
        fh.write(f"lhs |f(x) - mean| = {d.lhs:.6f}\n")
        fh.write(f"disproved rhs     = {d.rhs:.6f}\n")
        fh.write(f"full rhs          = {full.rhs:.6f}\n")
        fh.write(f"DISPROVED: {verdict(d)}, FULL: {verdict(full)}\n")
    ok = full.satisfied
    if on_lattice:
        ok &= d.satisfied
    elif x == 0.9:
        ok &= not d.satisfied
    return EXIT_OK if ok else EXIT_FAIL


BOUNDS_HEADER = ["x", "lattice_m", "bound_lattice", "bound_full", "bound_disproved", "bound_M", "branch"]


def bounds_rows(cfg: RunConfig):
    iv, q = cfg.interval, cfg.q
    xs = [iv.a + iv.length * i / cfg.grid for i in range(cfg.grid + 1)]
    xs += [lattice_point(iv, q, m) for m in range(41)]
    for x in sorted(set(xs)):
        m = None if x == iv.a else lattice_index_of(x, iv, q, cfg.log_tol)
        cb = ineq.combined_bound_M(x, q, iv, cfg.log_tol)
        yield [
            x,
            m,
            ineq.lattice_ostrowski_bound(m, q, iv) if m is not None else None,
            ineq.full_ostrowski_bound(x, q, iv),
            ineq.disproved_bound(x, q, iv),
            cb.value,
            cb.branch.value,
        ]


def cmd_bounds(cfg: RunConfig, args) -> int:
    _write_csv(cfg.out, BOUNDS_HEADER, bounds_rows(cfg))
    return EXIT_OK


def _safe_dq(f, t: float, q: float) -> float:
    return q_derivative(f, t, q, 0.0, 1.0) if t > 0 else math.nan


def figure_table(fig: int, q: float | None = None, x: float | None = None,
                 eps: float = 0.2, C: float = 1.0, tol: float = 1e-12):
    """Header and rows for one of the four figures, sampled on ``[0, 1]``."""
    ts = [i / (FIGURE_SAMPLES - 1) for i in range(FIGURE_SAMPLES)]
    if fig == 1:
        q = 0.5 if q is None else q
        f = ex.make_tent_counterexample()
    else:
        q = REF_Q if q is None else q
        x = REF_X if x is None else x
        if fig == 2:
            f = ex.make_selfsim_fx(x, q)
        elif fig == 3:
            f = ex.make_gx(x, q, C)
        elif fig == 4:
            f = ex.make_fx_eps(x, q, eps)
        else:
            raise ValueError(f"unknown figure id {fig}; choose 1-4")
    mean = q_integral(f, q, (0, 1), 1.0, None, tol).value
    header = ["t", "value", "derivative", "deviation", "bound_full", "bound_disproved", "bound_M"]
    rows = []
    for t in ts:
        try:
            v = f(t)
        except ValueError:
            v = math.nan
        rows.append([
            t, v, _safe_dq(f, t, q), abs(v - mean),
            ineq.full_ostrowski_bound(t, q, (0, 1)),
            ineq.disproved_bound(t, q, (0, 1)),
            ineq.combined_bound_M(t, q, (0, 1)).value,
        ])
    return header, rows


def cmd_figure(cfg: RunConfig, args) -> int:
    if args.id not in (1, 2, 3, 4):
        raise ValueError(f"unknown figure id {args.id}; choose 1-4")
    header, rows = figure_table(
        args.id, args.q, args.x,
        0.2 if args.eps is None else args.eps,
        1.0 if args.C is None else args.C,
        cfg.tol,
    )
    _write_csv(cfg.out, header, rows)
    return EXIT_OK


# -- sharpness / midpoint --------------------------------------------------------------


@dataclass(frozen=True)
class SharpnessResult:
    lhs: float
    bound: float
    expected_margin: float
    witness: str

    @property
    def margin(self) -> float:
        return self.bound - self.lhs


def sharpness(cfg: RunConfig, x: float, eps: float | None = None, lattice: bool = False) -> SharpnessResult:
    iv, q = cfg.interval, cfg.q
    if not iv.a < x <= iv.b:
        raise ValueError(f"--x must lie in (a, b] = ({iv.a}, {iv.b}]")
    u = (x - iv.a) / iv.length
    m = lattice_index_of(x, iv, q, cfg.log_tol)
    if m is not None:
        if not lattice:
            raise ValueError(f"x={x} is the lattice point m={m}; pass --lattice to use |t - x|")
        f = ex.make_absdev(m, q, iv)
        r = ineq.check_ostrowski(f, x, q, iv, 1.0, "LATTICE", m=m, tol=cfg.tol, log_tol=cfg.log_tol)
        return SharpnessResult(r.lhs, r.rhs, 0.0, f"|t - x| (m={m})")
    if q < u < 1:
        n, xt = 0, u
    else:
        n, xt = ex.rescale_abscissa(u, q, cfg.log_tol)
    if eps is None:
        base, label, expected = ex.make_selfsim_fx(xt, q, cfg.log_tol), "f_x", 0.0
    else:
        eps_n = eps / iv.length
        if not 0 < eps_n <= 2 * u:
            raise ValueError(f"--eps must satisfy 0 < eps <= 2(x - a) = {2 * (x - iv.a)}")
        base, label, expected = ex.make_fx_eps(xt, q, eps_n, cfg.log_tol), "f_x_eps", eps
    f = ex.pullback(base, iv)
    r = ineq.check_ostrowski(f, x, q, iv, 1.0, "FULL", tol=cfg.tol, log_tol=cfg.log_tol)
    return SharpnessResult(r.lhs, r.rhs, expected, f"{label} (x~={xt:.17g}, n={n})")


def cmd_sharpness(cfg: RunConfig, args) -> int:
    if args.x is None:
        raise ValueError("sharpness needs --x")
    res = sharpness(cfg, args.x, args.eps, args.lattice)
    ok = abs(res.margin - res.expected_margin) <= 1e-8
    with _output(cfg.out) as fh:
        fh.write(f"witness = {res.witness}\n")
        fh.write(f"lhs     = {fmt(res.lhs)}\n")
        fh.write(f"bound   = {fmt(res.bound)}\n")
        fh.write(f"margin  = {fmt(res.margin)} (expected {fmt(res.expected_margin)})\n")
        fh.write("SHARP\n" if ok else "NOT SHARP\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_midpoint(cfg: RunConfig, args) -> int:
    m = ineq.midpoint_index(cfg.q)
    scan = midpoint_scan(cfg.q, cfg.interval)
    with _output(cfg.out) as fh:
        fh.write(f"m* = {m}\n")
        fh.write(f"point = {fmt(lattice_point(cfg.interval, cfg.q, m))}\n")
        fh.write(f"bound = {fmt(ineq.lattice_ostrowski_bound(m, cfg.q, cfg.interval))}\n")
        fh.write(f"argmin over m <= 100 = {scan} ({'agrees' if scan == m else 'DISAGREES'})\n")
    return EXIT_OK if scan == m else EXIT_FAIL


# -- argument parsing ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=float, default=None, help="deformation parameter in (0, 1) [0.5]")
    common.add_argument("--a", type=float, default=0.0)
    common.add_argument("--b", type=float, default=1.0)
    common.add_argument("--x", type=float, default=None)
    common.add_argument("--eps", type=float, default=None)
    common.add_argument("--C", type=float, default=None)
    common.add_argument("--tol", type=float, default=1e-12)
    common.add_argument("--log-tol", type=float, default=LOG_TOL)
    common.add_argument("--grid", type=int, default=1000)
    common.add_argument("--out", default=None, metavar="FILE")
    common.add_argument("--lattice", action="store_true")

    parser = argparse.ArgumentParser(prog="qostrowski", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in [
        ("verify", "run every check and print a pass/fail table"),
        ("counterexample", "evaluate the tent counterexample at q = 1/2"),
        ("bounds", "CSV of all bounds over an x-grid plus the lattice"),
        ("sharpness", "build the extremal function at --x and report its margin"),
        ("midpoint", "q-midpoint index and its argmin confirmation"),
    ]:
        sub.add_parser(name, parents=[common], help=help_)
    fig = sub.add_parser("figure", parents=[common], help="CSV data for figure 1-4")
    fig.add_argument("id", type=int)
    return parser


COMMANDS = {
    "verify": cmd_verify,
    "counterexample": cmd_counterexample,
    "bounds": cmd_bounds,
    "figure": cmd_figure,
    "sharpness": cmd_sharpness,
    "midpoint": cmd_midpoint,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(
            q=0.5 if args.q is None else args.q,
            a=args.a, b=args.b, tol=args.tol, log_tol=args.log_tol,
            grid=args.grid, out=args.out,
        )
        return COMMANDS[args.command](cfg, args)
    except ValueError as exc:
        parser.error(str(exc))
    except BrokenPipeError:
        sys.stderr.close()
        return EXIT_OK
    except ArithmeticError as exc:
        print(f"qostrowski: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_USAGE  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
