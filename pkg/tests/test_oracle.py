import numpy as np
import pytest

from qostrowski import extremal as ex
from qostrowski import inequalities as ineq
from qostrowski import oracle
from qostrowski.qcore import q_integral


def test_series_abs_weighted_sum():
    ps = oracle.series_abs_weighted_sum(0, 0.5, 60)
    assert ps.value == pytest.approx(2 / 3, abs=1e-15)
    assert ps.remainder_bound < 2e-17
    ps = oracle.series_abs_weighted_sum(0, 0.5, 1)
    assert ps.value == 0.0 and ps.remainder_bound == pytest.approx(2 * 0.5 / 0.5)
    ps = oracle.series_abs_weighted_sum(3, 0.9, 400)
    assert abs(ps.value - ineq.abs_weighted_sum_closed(3, 0.9)) <= ps.remainder_bound + 1e-13
    with pytest.raises(ValueError):
        oracle.series_abs_weighted_sum(0, 0.5, 0)


def test_series_q_integral():
    r = oracle.series_q_integral(ex.make_tent_counterexample(), 0.5, (0, 1), 1.0, 1.0, 50)
    assert r.value == pytest.approx(1 / 6, abs=1e-15)
    r = oracle.series_q_integral(lambda t: 2.5, 0.5, (0, 1), 0.8, 2.5, 10)
    assert r.value == pytest.approx(2.5 * 0.8 * (1 - 0.5**10))
    r = oracle.series_q_integral(ex.make_selfsim_fx(0.8, 0.6), 0.6, (0, 1), 1.0, 1.0, 80)
    assert abs(r.value + 0.625) <= r.tail_bound


@pytest.mark.parametrize(
    "f, q, sup",
    [
        (ex.make_tent_counterexample(), 0.5, 1.0),
        (ex.make_selfsim_fx(0.8, 0.6), 0.6, 1.0),
        (ex.make_fx_eps(0.8, 0.6, 0.05), 0.6, 1.0),
        (ex.make_absdev(2, 0.3), 0.3, 1.0),
    ],
)
def test_adaptive_and_fixed_truncation_agree(f, q, sup):
    a = q_integral(f, q, (0, 1), 1.0, sup, 1e-12)
    b = oracle.series_q_integral(f, q, (0, 1), 1.0, sup, 120)
    assert abs(a.value - b.value) <= a.tail_bound + b.tail_bound + 1e-15


def test_grid_sup():
    assert oracle.grid_sup(lambda t: t, 0.0, 1.0, 11) == 1.0
    assert oracle.grid_sup(lambda t: t - t * t, 0.0, 1.0, 10001) == pytest.approx(0.25, abs=1e-8)
    assert oracle.grid_sup(lambda t: 0.0, 0.0, 1.0, 5) == 0.0
    with pytest.raises(ValueError):
        oracle.grid_sup(lambda t: t, 1.0, 0.0, 5)


def test_riemann_integral():
    assert oracle.riemann_integral(lambda t: t * t, (0, 1), 10**6) == pytest.approx(1 / 3, abs=1e-9)
    assert oracle.riemann_integral(lambda t: 3.0, (1, 3), 7) == 6.0
    # triangle of height 0.9 over [0, 1]: area 0.45 (the q-integral is 1/6)
    tent = ex.make_tent_counterexample()
    assert oracle.riemann_integral(tent, (0, 1), 10**6) == pytest.approx(0.45, abs=1e-6)


def test_riemann_integral_avoids_left_endpoint():
    g = ex.make_gx(0.8, 0.6, 1.0)
    assert np.isfinite(oracle.riemann_integral(g, (0, 1), 1000))


@pytest.mark.parametrize("p", [1, 2, 3])
@pytest.mark.parametrize("j", [2, 3])
def test_q_to_one_convergence(p, j):
    q = 1 - 10.0**-j
    f = lambda t: t**p  # noqa: E731
    qi = q_integral(f, q, (0, 1), 1.0, 1.0, 1e-13).value
    ri = oracle.riemann_integral(f, (0, 1), 200000)
    assert abs(qi - ri) < 3 * 10.0**-j


def test_dq_on_grid():
    assert oracle.dq_on_grid(lambda t: t * t, 0.5, (0, 1), 100) == pytest.approx(1.5)
