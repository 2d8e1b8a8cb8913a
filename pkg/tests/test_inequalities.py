from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qostrowski import extremal as ex
from qostrowski import inequalities as ineq
from qostrowski import oracle
from qostrowski.qcore import DomainError, lattice_point, q_derivative

QS = [round(0.1 * k, 10) for k in range(1, 10)]


# -- closed forms --------------------------------------------------------------


def test_abs_weighted_sum_examples():
    assert ineq.abs_weighted_sum_closed(0, 0.5) == pytest.approx(2 / 3, abs=1e-15)
    assert ineq.abs_weighted_sum_closed(1, 0.5) == pytest.approx(2 / 3, abs=1e-15)
    assert ineq.abs_weighted_sum_closed(60, 0.5) == pytest.approx(4 / 3, abs=1e-15)
    # frozen partial sums (K=60, 60, 200)
    assert oracle.series_abs_weighted_sum(0, 0.5, 60).value == pytest.approx(0.6666666666666666, abs=1e-16)
    assert oracle.series_abs_weighted_sum(60, 0.5, 200).value == pytest.approx(1.3333333333333333, abs=1e-16)


@pytest.mark.parametrize("q", QS)
def test_abs_weighted_sum_positive_and_matches_series(q):
    for m in range(31):
        closed = ineq.abs_weighted_sum_closed(m, q)
        ps = oracle.series_abs_weighted_sum(m, q, 400)
        assert closed > 0
        assert abs(ps.value - closed) <= ps.remainder_bound + 64 * np.finfo(float).eps / (1 - q)


@pytest.mark.parametrize("q", QS)
def test_lattice_bound_identity(q):
    for m in range(61):
        lhs = ineq.lattice_ostrowski_bound(m, q, (0, 1))
        rhs = (1 - q) * ineq.abs_weighted_sum_closed(m, q)
        assert abs(lhs - rhs) <= 1e-13


def test_lattice_bound_examples():
    assert ineq.lattice_ostrowski_bound(0, 0.5, (0, 1)) == pytest.approx(1 / 3, abs=1e-15)
    assert ineq.lattice_ostrowski_bound(1, 0.5, (0, 1)) == pytest.approx(1 / 3, abs=1e-15)
    assert ineq.lattice_ostrowski_bound(40, 0.5, (0, 1)) == pytest.approx(2 / 3, abs=1e-11)
    with pytest.raises(ValueError):
        ineq.lattice_ostrowski_bound(-1, 0.5, (0, 1))


def test_full_bound_examples():
    assert ineq.full_ostrowski_bound(0.9, 0.5, (0, 1)) == pytest.approx(47 / 30, abs=1e-15)
    assert ineq.full_ostrowski_bound(2.0, 0.5, (2, 5)) == pytest.approx(2.0)
    assert ineq.full_ostrowski_bound(1.0, 0.5, (0, 1)) == pytest.approx(5 / 3)
    with pytest.raises(DomainError):
        ineq.full_ostrowski_bound(1.1, 0.5, (0, 1))


def test_disproved_bound_examples():
    assert ineq.disproved_bound(0.9, 0.5, (0, 1)) == pytest.approx(23 / 75, abs=1e-15)
    assert ineq.disproved_bound(3.0, 0.4, (1, 3)) == pytest.approx(0.4 * 2 / 1.4)
    with pytest.raises(DomainError):
        ineq.disproved_bound(-0.1, 0.5, (0, 1))


@pytest.mark.parametrize("q", [0.3, 0.5, 0.9])
@pytest.mark.parametrize("interval", [(0, 1), (1, 3), (-2, 5)])
def test_disproved_equals_lattice_on_lattice(q, interval):
    for m in range(41):
        x = lattice_point(interval, q, m)
        lat = ineq.lattice_ostrowski_bound(m, q, interval)
        assert abs(ineq.disproved_bound(x, q, interval) - lat) <= 1e-12


@pytest.mark.parametrize("q", [0.3, 0.5, 0.9])
def test_full_bound_strictly_dominates_lattice(q):
    # the gap is 2u(1 - qu/(1+q)) with u = q^m; keep u resolvable next to O(1)
    for m in range(41):
        if q**m < 1e-12:
            break
        x = lattice_point((0, 1), q, m)
        assert ineq.full_ostrowski_bound(x, q, (0, 1)) > ineq.lattice_ostrowski_bound(m, q, (0, 1))


@pytest.mark.parametrize("q", [0.2, 0.5, 0.75])
@pytest.mark.parametrize("interval", [(0, 1), (-1, 2.5)])
def test_disproved_matches_published_form(q, interval):
    for x in np.linspace(*interval, 41):
        assert ineq.disproved_bound(x, q, interval) == pytest.approx(
            oracle.published_ostrowski_bound(x, q, interval), abs=1e-12
        )


def test_combined_bound_examples():
    cb = ineq.combined_bound_M(0.25, 0.5, (0, 1))
    assert cb.branch is ineq.Branch.LATTICE
    assert cb.value == pytest.approx(float((1 + 2 * Fraction(1, 32)) / Fraction(3, 2) - Fraction(1, 4)))
    cb = ineq.combined_bound_M(0.9, 0.5, (0, 1))
    assert cb.branch is ineq.Branch.OFF_LATTICE and cb.value == pytest.approx(47 / 30)
    cb = ineq.combined_bound_M(1.0, 0.5, (0, 1))
    assert cb.branch is ineq.Branch.LATTICE and cb.value == pytest.approx(1 / 3)
    cb = ineq.combined_bound_M(0.0, 0.5, (0, 1))
    assert cb.branch is ineq.Branch.OFF_LATTICE and cb.value == pytest.approx(2 / 3)


def test_combined_bound_boundary_tie_goes_to_lattice():
    x = 0.25 * (1 + 1e-11)
    assert ineq.combined_bound_M(x, 0.5, (0, 1)).branch is ineq.Branch.LATTICE
    assert ineq.combined_bound_M(x, 0.5, (0, 1), log_tol=1e-14).branch is ineq.Branch.OFF_LATTICE


@pytest.mark.parametrize("q,m", [(0.5, 1), (0.9, 6), (0.1, 0), (0.7, 1), (0.25, 0)])
def test_midpoint_index_examples(q, m):
    assert ineq.midpoint_index(q) == m


@pytest.mark.parametrize("q", np.linspace(0.01, 0.99, 99))
def test_midpoint_index_minimises(q):
    m = ineq.midpoint_index(q)
    best = ineq.lattice_ostrowski_bound(m, q, (0, 1))
    for k in range(101):
        assert best <= ineq.lattice_ostrowski_bound(k, q, (0, 1)) + 1e-15


def test_classical_bound_examples():
    assert ineq.classical_ostrowski_bound(0.5, (0, 1)) == 0.25
    assert ineq.classical_ostrowski_bound(1.0, (0, 1)) == 0.5
    assert ineq.classical_ostrowski_bound(0.9, (0, 1)) == pytest.approx(0.41)
    assert ineq.classical_ostrowski_bound(2.0, (1, 3)) == 0.5


# -- mean value ----------------------------------------------------------------


def test_check_mvt_examples():
    r = ineq.check_mvt(lambda t: t, 0.7, 3, 0.5, (0, 1), 1.0)
    assert r.lhs == pytest.approx(r.rhs) and r.satisfied
    r = ineq.check_mvt(ex.make_tent_counterexample(), 0.9, 1, 0.5, (0, 1), 1.0)
    # y = 0.45 is on the rising edge, so the two sides coincide at 0.45
    assert r.lhs == pytest.approx(0.45) and r.rhs == pytest.approx(0.45) and r.satisfied
    r = ineq.check_mvt(ex.make_tent_counterexample(), 0.9, 0, 0.5, (0, 1), 1.0)
    assert r.lhs == 0 and r.rhs == 0 and r.satisfied
    with pytest.raises(DomainError):
        ineq.check_mvt(lambda t: t, 0.0, 1, 0.5, (0, 1), 1.0)


def test_naive_search_finds_step_violation():
    step = ex.make_step_counterexample()
    pair = ineq.naive_mvt_violation_search(step, 0.5, (0, 2), 2.0, 1000)
    assert pair is not None
    assert pair.x == 1.0 and 0.5 < pair.y < 1.0
    assert abs(step(pair.x) - step(pair.y)) > 2.0 * (pair.x - pair.y)


def test_naive_search_step_only_violates_above_q():
    # for y < q the inequality |f(1) - f(y)| <= (1 - y)/(1 - q) holds
    step = ex.make_step_counterexample()
    q = 0.5
    for y in np.linspace(0.0, q, 11):
        assert 1.0 <= (1 - y) / (1 - q) + 1e-12
    for y in np.linspace(0.51, 0.99, 11):
        assert 1.0 > (1 - y) / (1 - q)
    assert step(1.0) - step(0.75) == 1.0


def test_naive_search_no_violation():
    assert ineq.naive_mvt_violation_search(lambda t: t, 0.5, (0, 1), 1.0, 200) is None
    assert ineq.naive_mvt_violation_search(lambda t: 3.0, 0.5, (0, 1), 0.0, 200) is None
    with pytest.raises(ValueError):
        ineq.naive_mvt_violation_search(lambda t: t, 0.5, (0, 1), 1.0, 1)


def test_lagrange_witness_examples():
    c = ineq.find_lagrange_witness(lambda t: t * t, 1.0, 1, 0.5, (0, 1))
    assert c == pytest.approx(1.0, abs=1e-9)
    c = ineq.find_lagrange_witness(lambda t: t, 0.8, 2, 0.5, (0, 1))
    assert 0.2 <= c <= 0.8
    fx = ex.make_selfsim_fx(0.8, 0.6)
    c = ineq.find_lagrange_witness(fx, 1.0, 2, 0.6, (0, 1))
    y = 0.36
    assert y <= c <= 1.0
    assert abs(q_derivative(fx, c, 0.6) * (1 - y) - (fx(1.0) - fx(y))) <= 1e-10


def test_lagrange_witness_detects_discontinuity():
    # D_q f only takes the values 0 and 2/c on [y, x]; the chord slope 1/0.7875 is missed
    step = ex.make_step_counterexample()
    with pytest.raises(ineq.ConsistencyError):
        ineq.find_lagrange_witness(step, 1.05, 2, 0.5, (0, 2))


# -- Ostrowski -----------------------------------------------------------------


def test_check_ostrowski_counterexample():
    f = ex.make_tent_counterexample()
    r = ineq.check_ostrowski(f, 0.9, 0.5, (0, 1), 1.0, "DISPROVED")
    assert r.lhs == pytest.approx(11 / 15, abs=1e-12)
    assert r.rhs == pytest.approx(23 / 75, abs=1e-15)
    assert not r.satisfied
    r = ineq.check_ostrowski(f, 0.9, 0.5, (0, 1), 1.0, "FULL")
    assert r.rhs == pytest.approx(47 / 30) and r.satisfied
    r = ineq.check_ostrowski(f, 0.9, 0.5, (0, 1), 1.0, ineq.BoundKind.COMBINED)
    assert r.branch is ineq.Branch.OFF_LATTICE and r.satisfied


def test_check_ostrowski_lattice_equality():
    f = ex.make_absdev(1, 0.5)
    r = ineq.check_ostrowski(f, 0.5, 0.5, (0, 1), 1.0, "LATTICE", m=1)
    assert r.lhs == pytest.approx(1 / 3, abs=1e-11)
    assert abs(r.margin) <= 1e-11
    assert r.branch is ineq.Branch.LATTICE


def test_check_ostrowski_lattice_argument_errors():
    f = ex.make_absdev(1, 0.5)
    with pytest.raises(ValueError):
        ineq.check_ostrowski(f, 0.4, 0.5, (0, 1), 1.0, "LATTICE", m=1)
    with pytest.raises(ValueError):
        ineq.check_ostrowski(f, 0.5, 0.5, (0, 1), 1.0, "LATTICE")
    with pytest.raises(ValueError):
        ineq.check_ostrowski(f, 0.5, 0.5, (0, 1), 1.0, "NOPE")


def test_report_invariants():
    r = ineq.BoundCheckReport(1.0, 0.9, 0.2)
    assert r.satisfied and r.margin == pytest.approx(-0.1)
    assert not ineq.BoundCheckReport(1.0, 0.9, 0.05).satisfied


@settings(max_examples=50, deadline=None)
@given(
    st.lists(st.floats(-2, 2), min_size=2, max_size=7),
    st.sampled_from([0.2, 0.5, 0.8, 0.95]),
    st.floats(0.01, 1.0),
    st.integers(0, 20),
)
def test_inequalities_hold_for_certified_pl(ys, q, u, n):
    ts = np.linspace(0.0, 1.0, len(ys))
    f = ex.PiecewiseLinearFn(tuple(zip(ts, ys)), ex.UNIT_INTERVAL)
    norm = ex.certify_pl_norm(f, q)
    assert norm is not None
    assert ineq.check_mvt(f, u, n, q, (0, 1), norm).satisfied
    assert ineq.check_ostrowski(f, u, q, (0, 1), norm, "FULL").satisfied
    assert ineq.check_ostrowski(f, u, q, (0, 1), norm, "COMBINED").satisfied
    m = n % 8
    assert ineq.check_ostrowski(f, lattice_point((0, 1), q, m), q, (0, 1), norm, "LATTICE", m=m).satisfied
