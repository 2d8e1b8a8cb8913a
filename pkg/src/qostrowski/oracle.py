"""Deliberately naive reference computations.

Nothing here reuses the closed forms or the adaptive truncation of the rest of
the package, so agreement between the two is evidence rather than tautology.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .qcore import (
    IntervalLike,
    QIntegralResult,
    QLike,
    RealFunction,
    as_interval,
    as_q,
)


@dataclass(frozen=True)
class PartialSum:
    value: float
    remainder_bound: float


def series_abs_weighted_sum(m: int, q: QLike, K: int) -> PartialSum:
    """Raw partial sum ``sum_{k<K} q^k |q^m - q^k|``."""
    q = as_q(q)
    if K < 1:
        raise ValueError("K must be at least 1")
    qm = q**m
    terms = [q**k * abs(qm - q**k) for k in range(K)]
    return PartialSum(math.fsum(terms), q**K * (1 + qm) / (1 - q))


def series_q_integral(
    f: RealFunction, q: QLike, interval: IntervalLike, x: float, sup_f: float, K: int
) -> QIntegralResult:
    """First ``K`` terms of the shifted Jackson series, no adaptivity."""
    q = as_q(q)
    iv = as_interval(interval)
    if K < 1:
        raise ValueError("K must be at least 1")
    h = x - iv.a
    total = 0.0
    for k in range(K):
        total += q**k * f(iv.a + q**k * h)
    return QIntegralResult((1 - q) * h * total, h * sup_f * q**K, K)


def _vectorised(f: RealFunction, ts: np.ndarray) -> np.ndarray:
    try:
        out = np.asarray(f(ts), dtype=float)
        if out.shape == ts.shape:
            return out
    except (TypeError, ValueError):
        pass
    return np.array([f(float(t)) for t in ts])


def grid_sup(f: RealFunction, lo: float, hi: float, n: int) -> float:
    """``max |f|`` over ``n`` equispaced points including both ends."""
    if not lo < hi:
        raise ValueError("need lo < hi")
    if n < 2:
        raise ValueError("n must be at least 2")
    ts = np.linspace(lo, hi, n)
    return float(np.max(np.abs(_vectorised(f, ts))))


def riemann_integral(f: RealFunction, interval: IntervalLike, n: int) -> float:
    """Composite midpoint rule with ``n`` cells (never samples the endpoints)."""
    iv = as_interval(interval)
    if n < 1:
        raise ValueError("n must be at least 1")
    h = iv.length / n
    mids = iv.a + h * (np.arange(n) + 0.5)
    return float(h * math.fsum(_vectorised(f, mids)))


def published_ostrowski_bound(x: float, q: QLike, interval: IntervalLike) -> float:
    """The off-lattice bound in the form it was originally published
    (a shifted parabola in ``x``), without the norm factor."""
    q = as_q(q)
    iv = as_interval(interval)
    a, b = iv.a, iv.b
    centre = ((3 * q - 1) * a + (1 + q) * b) / (4 * q)
    return (
        2 * q / (1 + q) * ((x - centre) / (b - a)) ** 2
        + (-q * q + 6 * q - 1) / (8 * q * (1 + q))
    ) * (b - a)


def dq_on_grid(f: RealFunction, q: QLike, interval: IntervalLike, n: int) -> float:
    """Brute-force ``max |D_q^a f|`` over an equispaced grid of ``(a, b]``."""
    q = as_q(q)
    iv = as_interval(interval)
    ts = iv.a + iv.length * np.arange(1, n + 1) / n
    ts[-1] = iv.b
    num = _vectorised(f, ts) - _vectorised(f, iv.a + q * (ts - iv.a))
    return float(np.max(np.abs(num / ((1 - q) * (ts - iv.a)))))
