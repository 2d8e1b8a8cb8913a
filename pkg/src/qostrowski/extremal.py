"""Counterexamples and sharpness witnesses for the q-Ostrowski inequalities,
plus the interpolation-lemma checker used to certify their derivative norms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .inequalities import BoundCheckReport
from .qcore import (
    LOG_TOL,
    UNIT_INTERVAL,
    DomainError,
    IntervalLike,
    LatticeFn,
    LatticeKind,
    PiecewiseLinearFn,
    QInterval,
    QLike,
    RealFunction,
    as_interval,
    as_q,
    lattice_point,
    pl_critical_points,
    q_derivative,
)

_LEMMA_SLACK = 1e-12
_EPS = float(np.finfo(float).eps)


def make_absdev(m: int, q: QLike, interval: IntervalLike = UNIT_INTERVAL) -> PiecewiseLinearFn:
    """``t -> |t - (a + q^m (b - a))|``, the equality case on the lattice."""
    iv = as_interval(interval)
    p = lattice_point(iv, q, m)
    pts = [(iv.a, p - iv.a), (p, 0.0), (iv.b, iv.b - p)]
    if p == iv.b:
        pts.pop()
    return PiecewiseLinearFn(tuple(pts), iv)


def make_tent_counterexample() -> PiecewiseLinearFn:
    """Tent on ``[0, 1]``: ``t`` up to ``9/10``, then ``-9t + 9``.

    With ``q = 1/2`` this breaks the extended (off-lattice) bound at ``9/10``.
    """
    return PiecewiseLinearFn(((0.0, 0.0), (0.9, 0.9), (1.0, 0.0)), UNIT_INTERVAL)


make_tari_counterexample = make_tent_counterexample


def _near_power(x: float, q: float, n: int, log_tol: float) -> bool:
    return abs(math.log(x) / math.log(q) - n) <= log_tol


def _check_x(x: float, q: float, log_tol: float) -> None:
    if not q < x < 1.0:
        raise ValueError(f"x must lie strictly between q={q} and 1, got {x}")
    if _near_power(x, q, 1, log_tol) or _near_power(x, q, 0, log_tol):
        raise ValueError(f"x={x} is too close to the lattice point q or 1")


def make_selfsim_fx(x: float, q: QLike, log_tol: float = LOG_TOL) -> LatticeFn:
    """Self-similar witness ``f_x``: ``-q^n`` at ``q^n``, ``x q^n`` at ``x q^n``.

    Attains the full bound at ``x`` with ``||D_q f|| = 1`` but is not
    q-differentiable at 0.
    """
    q = as_q(q)
    _check_x(x, q, log_tol)
    return LatticeFn(LatticeKind.SELFSIM_FX, float(x), q, log_tol=log_tol)


def eps_switch_index(x: float, q: float, eps: float) -> int:
    """``m`` with ``x q^{m+1} < eps/2 <= x q^m``."""
    target = eps / (2 * x)
    m = max(0, math.floor(math.log(target) / math.log(q)))
    while x * q ** (m + 1) >= eps / 2:
        m += 1
    while m > 0 and x * q**m < eps / 2:
        m -= 1
    return m


def make_fx_eps(x: float, q: QLike, eps: float, log_tol: float = LOG_TOL) -> LatticeFn:
    """q-differentiable witness coming within ``eps`` of the full bound.

    Upper nodes are ``max(x q^n - eps, -x q^n)``; from ``q^{m+1}`` down the
    function is exactly ``-t``.
    """
    q = as_q(q)
    _check_x(x, q, log_tol)
    if not 0 < eps <= 2 * x:
        raise ValueError(f"eps must satisfy 0 < eps <= 2x = {2 * x}, got {eps}")
    m = eps_switch_index(x, q, eps)
    return LatticeFn(LatticeKind.FX_EPS, float(x), q, eps=float(eps), m=m, log_tol=log_tol)


def make_gx(x: float, q: QLike, C: float, log_tol: float = LOG_TOL) -> LatticeFn:
    """``g_x``: like ``f_x`` but upper nodes shifted up by ``C``; no limit at 0."""
    q = as_q(q)
    _check_x(x, q, log_tol)
    if not C > 0:
        raise ValueError("C must be positive")
    return LatticeFn(LatticeKind.GX, float(x), q, C=float(C), log_tol=log_tol)


def make_step_counterexample() -> RealFunction:
    """Indicator of ``[1, 2]`` on ``[0, 2]``; breaks the naive mean value
    theorem even though ``||D_q f|| = 1/(1 - q)``."""

    def step(t: float) -> float:
        if not 0.0 <= t <= 2.0:
            raise DomainError(f"t={t} outside [0, 2]")
        return 1.0 if t >= 1.0 else 0.0

    step.domain = QInterval(0.0, 2.0)
    return step


@dataclass(frozen=True)
class Pullback:
    """``t -> L f((t - a) / L)`` on ``[a, b]`` with ``L = b - a``.

    Carries a witness built on ``[0, 1]`` to any interval while keeping
    ``D_q^a`` values (and so the derivative norm) unchanged.
    """

    f: RealFunction
    domain: QInterval

    def __call__(self, t):
        iv = self.domain
        return iv.length * self.f((t - iv.a) / iv.length)

    def sup_bound(self) -> float:
        return self.domain.length * self.f.sup_bound()


def pullback(f: RealFunction, interval: IntervalLike) -> RealFunction:
    iv = as_interval(interval)
    if iv == UNIT_INTERVAL:
        return f
    return Pullback(f, iv)


def rescale_abscissa(x: float, q: QLike, log_tol: float = LOG_TOL) -> tuple[int, float]:
    """Return ``(n, x / q^n)`` with ``q^{n+1} < x < q^n``."""
    q = as_q(q)
    if not 0 < x < 1:
        raise DomainError(f"x={x} outside (0, 1)")
    r = math.log(x) / math.log(q)
    if abs(r - round(r)) <= log_tol:
        raise ValueError(f"x={x} is a lattice point q^{round(r)}")
    n = math.floor(r)
    return n, x / q**n


def check_interpolation_lemma(
    f: RealFunction, c: float, d: float, q: QLike, samples: int = 257, a: float = 0.0
) -> BoundCheckReport:
    """Check that ``D_q^a f`` on ``[c, d]`` stays between its endpoint values.

    The hypothesis is that ``f`` is affine on ``[c, d]`` and on its image
    ``[a + q(c - a), a + q(d - a)]``, with those images disjoint from
    ``[c, d]``.  ``lhs`` is the largest signed excursion outside the
    endpoint envelope (negative means strictly inside), ``rhs`` is 0.
    """
    q = as_q(q)
    c0, d0 = c - a, d - a
    if not (0 < c0 < d0 and q * d0 < c0):
        raise ValueError(f"need 0 < qc < qd < c < d (shifted by a={a}), got c={c}, d={d}")
    ts = c + (d - c) * (np.arange(samples) / max(samples - 1, 1))
    ts[-1] = d
    fs = np.array([f(t) for t in ts])
    fq = np.array([f(a + q * (t - a)) for t in ts])
    ds = (fs - fq) / ((1 - q) * (ts - a))
    lo, hi = min(ds[0], ds[-1]), max(ds[0], ds[-1])
    excursion = float(np.max(np.maximum(ds - hi, lo - ds)))
    # cancellation in the quotient: a few ulps of |f|, plus the slope times
    # the rounding of t itself, divided by (1 - q)(t - a)
    lip = float(np.max(np.abs(f.slopes))) if isinstance(f, PiecewiseLinearFn) else 1.0
    noise = np.abs(fs) + np.abs(fq) + lip * (np.abs(ts) + np.abs(a))
    rounding = 16 * _EPS * noise / ((1 - q) * (ts - a))
    return BoundCheckReport(excursion, 0.0, _LEMMA_SLACK + 2 * float(rounding.max()))


def _lattice_pairs(f: LatticeFn, generations: int):
    q, x = f.q, f.x
    for n in range(generations + 1):
        qn = q**n
        yield x * qn, qn
        yield qn * q, x * qn


def certify_unit_norm(f: LatticeFn, generations: int = 50, samples: int = 33) -> bool:
    """Certify ``|D_q f| <= 1`` on ``(0, 1]`` for ``f_x`` or ``f_{x,eps}``.

    Checks every node ``q^n``, ``x q^n`` up to ``generations`` (extended past
    the switch index for ``f_{x,eps}``) and applies the interpolation lemma
    on each gap.  Below that the function is a scaled copy (``f_x``) or
    exactly ``-t`` (``f_{x,eps}``).
    """
    if f.kind not in (LatticeKind.SELFSIM_FX, LatticeKind.FX_EPS):
        return False
    if f.kind is LatticeKind.FX_EPS:
        generations = max(generations, f.m + 2)
    q, x = f.q, f.x
    try:
        for n in range(generations + 1):
            for t in (q**n, x * q**n):
                if abs(q_derivative(f, t, q, 0.0, 1.0)) > 1 + _LEMMA_SLACK:
                    return False
        for c, d in _lattice_pairs(f, generations):
            if not check_interpolation_lemma(f, c, d, q, samples).satisfied:
                return False
    except (ValueError, ArithmeticError):
        return False
    return True


def certify_pl_norm(
    f: PiecewiseLinearFn, q: QLike, interval: IntervalLike | None = None, samples: int = 17
) -> float | None:
    """``sup |D_q^a f|`` for a piecewise-linear ``f``, certified by the
    interpolation lemma.

    Between consecutive points where ``f(t)`` or ``f(a + q(t - a))`` has a
    kink both are affine, so each such gap (split until it is disjoint from
    its own image) satisfies the lemma and its extremes sit at endpoints.
    The first gap touching ``a`` has a constant quotient.  Returns ``None``
    when some gap fails the lemma check.
    """
    q = as_q(q)
    iv = as_interval(interval) if interval is not None else f.domain
    a = iv.a
    pts = pl_critical_points(f, q, a, iv.b)
    ratio = q**-0.9  # any ratio below 1/q keeps each cell clear of its image
    for c, d in zip(pts[:-1], pts[1:]):
        edges = [c]
        while (d - a) > (edges[-1] - a) * ratio:
            edges.append(a + (edges[-1] - a) * ratio)
        edges.append(d)
        for lo, hi in zip(edges[:-1], edges[1:]):
            if hi <= lo:
                continue
            if not check_interpolation_lemma(f, lo, hi, q, samples, a).satisfied:
                return None
    return float(max(abs(q_derivative(f, t, q, a, iv.b)) for t in pts))


def with_corrupted_eps(f: LatticeFn, eps: float) -> LatticeFn:
    """Copy of ``f`` with ``eps`` overwritten but the switch index kept.

    Bypasses validation on purpose; used as a negative control.
    """
    return replace(f, eps=float(eps))
