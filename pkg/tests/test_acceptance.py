"""Acceptance criteria, one test each.

Every test prints a single ``[ACCEPT n] PASS|FAIL ...`` line (shown even
under output capture) before asserting.
"""

import numpy as np
import pytest

from qostrowski import cli
from qostrowski import extremal as ex
from qostrowski import inequalities as ineq
from qostrowski import oracle
from qostrowski.qcore import (
    UNIT_INTERVAL,
    lattice_point,
    q_derivative,
    q_derivative_at_a,
    q_integral,
)

Q, X = 0.6, 0.8


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\n[ACCEPT {n:2d}] {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail

    return emit


def test_1_counterexample(report):
    f = ex.make_tent_counterexample()
    I = q_integral(f, 0.5, (0, 1), 1.0, 1.0, 1e-12)
    dis = ineq.check_ostrowski(f, 0.9, 0.5, (0, 1), 1.0, "DISPROVED")
    full = ineq.check_ostrowski(f, 0.9, 0.5, (0, 1), 1.0, "FULL")
    ok = (
        abs(I.value - 1 / 6) <= 1e-12
        and abs(dis.rhs - 23 / 75) <= 1e-12
        and abs(dis.lhs - 11 / 15) <= 1e-12
        and not dis.satisfied
        and abs(full.rhs - 47 / 30) <= 1e-12
        and full.satisfied
    )
    report(1, ok, f"integral={I.value:.15f} lhs={dis.lhs:.15f} disproved={dis.rhs:.15f} full={full.rhs:.15f}")


def test_2_lattice_sharpness(report):
    worst = 0.0
    for q in (0.3, 0.5, 0.7):
        for m in (0, 1, 2, 5):
            f = ex.make_absdev(m, q)
            r = ineq.check_ostrowski(f, lattice_point(UNIT_INTERVAL, q, m), q, (0, 1), 1.0, "LATTICE", m=m)
            worst = max(worst, abs(r.margin))
    report(2, worst <= 1e-10, f"max |margin| = {worst:.3e} over 12 (q, m) pairs")


def test_3_off_lattice_sharpness(report):
    f = ex.make_selfsim_fx(X, Q)
    r = ineq.check_ostrowski(f, X, Q, (0, 1), 1.0, "FULL")
    I = q_integral(f, Q, (0, 1), 1.0, 1.0, 1e-12)
    gap = abs(I.value + 1 / (1 + Q))
    ok = abs(r.margin) <= 1e-10 and gap <= I.tail_bound + 1e-15
    report(3, ok, f"|margin| = {abs(r.margin):.3e}, |integral + 0.625| = {gap:.3e} (tail {I.tail_bound:.1e})")


def test_4_eps_closeness(report):
    parts, ok = [], True
    for eps in (0.2, 0.05, 0.01):
        f = ex.make_fx_eps(X, Q, eps)
        cert = ex.certify_unit_norm(f)
        r = ineq.check_ostrowski(f, X, Q, (0, 1), 1.0, "FULL")
        t = X * Q**f.m
        dq = q_derivative(f, t, Q)
        special = (1 + Q - eps / t) / (1 - Q)
        ok &= cert and abs(r.margin - eps) <= 1e-10 and abs(dq - special) <= 1e-12 and -1 <= dq <= 1
        parts.append(f"eps={eps:g}: cert={cert} margin={r.margin:.12f} D={dq:.6f}")
    report(4, ok, "; ".join(parts))


def test_5_closed_form_vs_partial_sums(report):
    ok, worst, worst_rem = True, 0.0, 0.0
    for q in [round(0.1 * k, 10) for k in range(1, 10)]:
        K = int(np.ceil(np.log(1e-13 * (1 - q) / 2) / np.log(q)))
        for m in range(31):
            ps = oracle.series_abs_weighted_sum(m, q, K)
            gap = abs(ps.value - ineq.abs_weighted_sum_closed(m, q))
            ok &= gap <= ps.remainder_bound
            ok &= ps.remainder_bound < 1e-12
            worst, worst_rem = max(worst, gap), max(worst_rem, ps.remainder_bound)
    report(5, ok, f"max gap = {worst:.3e}, max remainder bound = {worst_rem:.3e}")


def test_6_midpoint_index(report):
    bad = [q for q in np.linspace(0.01, 0.99, 99) if ineq.midpoint_index(q) != cli.midpoint_scan(q, m_max=100)]
    spots = (ineq.midpoint_index(0.5), ineq.midpoint_index(0.9))
    ok = not bad and spots == (1, 6)
    report(6, ok, f"{99 - len(bad)}/99 grid values agree; q=1/2 -> {spots[0]}, q=0.9 -> {spots[1]}")


def test_7_mvt_property_suite(report):
    violations, worst = cli.mvt_suite(0.5, UNIT_INTERVAL, 500)
    pair = ineq.naive_mvt_violation_search(ex.make_step_counterexample(), 0.5, (0, 2), 2.0, 1000)
    ok = violations == 0 and pair is not None
    found = f"({pair.x:g}, {pair.y:g})" if pair else "none"
    report(7, ok, f"{violations} violations over 500 functions (max lhs/rhs {worst:.6f}); step pair {found}")


def test_8_lagrange_witness(report):
    sq = lambda t: t * t  # noqa: E731
    c = ineq.find_lagrange_witness(sq, 1.0, 1, 0.5, (0, 1), 1e-10)
    res = abs(q_derivative(sq, c, 0.5, 0.0, 1.0) * 0.5 - 0.75)
    report(8, res <= 1e-10 and 0.5 <= c <= 1.0, f"c = {c:.12f}, residual = {res:.3e}")


def test_9_q_to_one_limits(report):
    I = q_integral(lambda t: t * t, 0.999, (0, 1), 1.0, 1.0, 1e-12)
    err = abs(I.value - 1 / 3)
    mid = ineq.classical_ostrowski_bound(0.5, (0, 1))
    report(9, err < 5e-4 and mid == 0.25, f"|I - 1/3| = {err:.3e}, classical midpoint = {mid!r}")


def test_10_non_differentiability(report):
    p_fx = q_derivative_at_a(ex.make_selfsim_fx(X, Q), Q, (0, 1))
    p_fe = q_derivative_at_a(ex.make_fx_eps(X, Q, 0.2), Q, (0, 1))
    g = ineq.check_ostrowski(ex.make_gx(X, Q, 10.0), X, Q, (0, 1), 1.0, "FULL")
    ok = not p_fx.converged and p_fe.converged and abs(p_fe.limit + 1) <= 1e-9 and not g.satisfied
    report(
        10,
        ok,
        f"f_x spread {p_fx.spread:.3f} (diverges), f_x,eps limit {p_fe.limit:.12f}, "
        f"g_x lhs {g.lhs:.4f} > bound {g.rhs:.4f}",
    )
