"""Closed-form Ostrowski-type bounds for the Jackson integral, and checkers
that evaluate both sides of an inequality on a concrete function.

All bounds are returned *without* the derivative norm factor; checkers
multiply by the supplied ``norm``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .qcore import (
    LOG_TOL,
    DomainError,
    IntervalLike,
    QLike,
    RealFunction,
    as_interval,
    as_q,
    lattice_index_of,
    lattice_point,
    q_derivative,
    q_integral,
)

_ULP_SLACK = 64 * np.finfo(float).eps


class Branch(str, enum.Enum):
    LATTICE = "LATTICE"
    OFF_LATTICE = "OFF_LATTICE"


class BoundKind(str, enum.Enum):
    LATTICE = "LATTICE"
    FULL = "FULL"
    DISPROVED = "DISPROVED"
    COMBINED = "COMBINED"


class ConsistencyError(ArithmeticError):
    """A numerically certified statement turned out false."""


@dataclass(frozen=True)
class BoundCheckReport:
    """Both sides of an inequality ``lhs <= rhs``.

    ``lhs_tail`` is the uncertainty in ``lhs`` (integral truncation plus a
    rounding allowance scaled by ``1/(1 - q)``, since norms come from
    q-difference quotients); ``satisfied`` is judged against it so that a
    truncated series can never manufacture a violation.
    """

    lhs: float
    rhs: float
    lhs_tail: float = 0.0
    branch: Branch | None = None

    @property
    def margin(self) -> float:
        return self.rhs - self.lhs

    @property
    def satisfied(self) -> bool:
        return self.lhs <= self.rhs + self.lhs_tail


def _check_x(x: float, a: float, b: float) -> None:
    if not a <= x <= b:
        raise DomainError(f"x={x} outside [{a}, {b}]")


# -- closed forms -----------------------------------------------------------------


def abs_weighted_sum_closed(m: int, q: QLike) -> float:
    """Closed form of ``sum_{k>=0} q^k |q^m - q^k|``."""
    q = as_q(q)
    return ((1 + 2 * q ** (2 * m + 1)) / (1 + q) - q**m) / (1 - q)


def lattice_ostrowski_bound(m: int, q: QLike, interval: IntervalLike) -> float:
    """Sharp constant at the lattice point ``a + q^m (b - a)``."""
    q = as_q(q)
    iv = as_interval(interval)
    if m < 0:
        raise ValueError("m must be non-negative")
    return iv.length * ((1 + 2 * q ** (2 * m + 1)) / (1 + q) - q**m)


def full_ostrowski_bound(x: float, q: QLike, interval: IntervalLike) -> float:
    """Bound valid at every ``x`` in ``[a, b]`` for ``f`` continuous at ``a``."""
    q = as_q(q)
    iv = as_interval(interval)
    _check_x(x, iv.a, iv.b)
    return (x - iv.a) + iv.length / (1 + q)


def disproved_bound(x: float, q: QLike, interval: IntervalLike) -> float:
    """The lattice constant extended to every ``x`` by substituting
    ``q^m -> (x - a)/(b - a)``.

    This extension is *not* a valid bound off the lattice; it is kept so the
    failure can be exhibited.
    """
    q = as_q(q)
    iv = as_interval(interval)
    _check_x(x, iv.a, iv.b)
    u = (x - iv.a) / iv.length
    return iv.length * ((1 + 2 * q * u * u) / (1 + q) - u)


@dataclass(frozen=True)
class CombinedBound:
    value: float
    branch: Branch


def combined_bound_M(
    x: float, q: QLike, interval: IntervalLike, log_tol: float = LOG_TOL
) -> CombinedBound:
    """The sharp, discontinuous bound: lattice constant on the lattice, the
    full bound elsewhere.  ``x = a`` uses the off-lattice limit."""
    q = as_q(q)
    iv = as_interval(interval)
    _check_x(x, iv.a, iv.b)
    m = lattice_index_of(x, iv, q, log_tol)
    if m is None:
        return CombinedBound(full_ostrowski_bound(x, q, iv), Branch.OFF_LATTICE)
    return CombinedBound(lattice_ostrowski_bound(m, q, iv), Branch.LATTICE)


def midpoint_index(q: QLike) -> int:
    """Lattice exponent ``floor(log_q 1/2)`` (at least 0) minimising the
    lattice constant; the q-analogue of the midpoint."""
    q = as_q(q)
    r = math.log(0.5) / math.log(q)
    n = round(r)
    m = n if abs(r - n) <= 1e-12 else math.floor(r)
    return max(0, int(m))


def classical_ostrowski_bound(x: float, interval: IntervalLike) -> float:
    iv = as_interval(interval)
    _check_x(x, iv.a, iv.b)
    mid = 0.5 * (iv.a + iv.b)
    return (0.25 + (x - mid) ** 2 / iv.length**2) * iv.length


# -- checkers -------------------------------------------------------------------


def check_mvt(
    f: RealFunction, x: float, n: int, q: QLike, interval: IntervalLike, norm: float
) -> BoundCheckReport:
    """Mean value inequality between ``x`` and its lattice image
    ``y = a + q^n (x - a)``."""
    q = as_q(q)
    iv = as_interval(interval)
    if not iv.a < x <= iv.b:
        raise DomainError(f"x={x} outside (a, b]")
    if n < 0:
        raise ValueError("n must be non-negative")
    y = iv.a + q**n * (x - iv.a)
    fx, fy = f(x), f(y)
    lhs = abs(fx - fy)
    rhs = abs(x - y) * norm
    slack = _ULP_SLACK / (1 - q) * max(abs(fx), abs(fy), rhs)
    return BoundCheckReport(lhs, rhs, float(slack))


@dataclass(frozen=True)
class ViolatingPair:
    x: float
    y: float
    excess: float


def naive_mvt_violation_search(
    f: RealFunction, q: QLike, interval: IntervalLike, norm: float, grid: int = 1000
) -> ViolatingPair | None:
    """Look for ``|f(x) - f(y)| > norm |x - y|`` on a uniform grid.

    Returns the grid pair with the largest excess (``x > y``), or ``None``.
    """
    as_q(q)
    iv = as_interval(interval)
    if grid < 2:
        raise ValueError("grid must be at least 2")
    ts = iv.a + iv.length * (np.arange(grid + 1) / grid)
    ts[-1] = iv.b
    fs = np.array([f(t) for t in ts])
    best = ViolatingPair(0.0, 0.0, -np.inf)
    for i in range(1, ts.size):
        row = np.abs(fs[i] - fs[:i]) - norm * (ts[i] - ts[:i])
        j = int(np.argmax(row))
        if row[j] > best.excess:
            best = ViolatingPair(float(ts[i]), float(ts[j]), float(row[j]))
    return best if best.excess > 1e-12 else None


def find_lagrange_witness(
    f: RealFunction,
    x: float,
    n: int,
    q: QLike,
    interval: IntervalLike,
    tol: float = 1e-10,
    grid: int = 1000,
) -> float:
    """Point ``c`` in ``[y, x]`` with ``D_q^a f(c) (x - y) = f(x) - f(y)``.

    Requires ``f`` continuous, so that the q-derivative is continuous on
    ``[y, x]`` and a sign change of the residual brackets a root.
    """
    q = as_q(q)
    iv = as_interval(interval)
    if not iv.a < x <= iv.b:
        raise DomainError(f"x={x} outside (a, b]")
    if n < 1:
        raise ValueError("n must be positive")
    y = iv.a + q**n * (x - iv.a)
    dx = x - y
    df = f(x) - f(y)

    def residual(c: float) -> float:
        return q_derivative(f, c, q, iv.a, iv.b) * dx - df

    cs = y + dx * (np.arange(grid + 1) / grid)
    cs[-1] = x
    rs = np.array([residual(c) for c in cs])
    hit = np.flatnonzero(np.abs(rs) <= tol)
    if hit.size:
        return float(cs[hit[0]])
    sign = np.flatnonzero(np.sign(rs[:-1]) * np.sign(rs[1:]) < 0)
    if sign.size:
        lo, hi = float(cs[sign[0]]), float(cs[sign[0] + 1])
        r_lo = rs[sign[0]]
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            r_mid = residual(mid)
            if abs(r_mid) <= tol or mid in (lo, hi):
                break
            if (r_mid < 0) == (r_lo < 0):
                lo, r_lo = mid, r_mid
            else:
                hi = mid
        c = mid
    else:
        c = float(cs[np.argmin(np.abs(rs))])
    if abs(residual(c)) > tol:
        raise ConsistencyError(
            f"no witness with residual <= {tol} in [{y}, {x}] (best {residual(c):.3e})"
        )
    return c


def _integral_sup(f: RealFunction, interval, norm: float) -> float:
    # Only lattice points toward a are sampled; on those |f| is controlled by
    # |f(b)| and the mean value inequality.
    bound = abs(f(interval.b)) + interval.length * norm
    if hasattr(f, "sup_bound"):
        bound = min(bound, f.sup_bound())
    return bound


def check_ostrowski(
    f: RealFunction,
    x: float,
    q: QLike,
    interval: IntervalLike,
    norm: float,
    bound: BoundKind | str = BoundKind.FULL,
    m: int | None = None,
    tol: float = 1e-12,
    log_tol: float = LOG_TOL,
    sup_f: float | None = None,
) -> BoundCheckReport:
    """Compare ``|f(x) - mean_q f|`` with one of the bounds times ``norm``.

    ``bound`` is one of ``LATTICE`` (needs ``m`` and ``x`` on the lattice),
    ``FULL``, ``DISPROVED`` or ``COMBINED``.
    """
    q = as_q(q)
    iv = as_interval(interval)
    _check_x(x, iv.a, iv.b)
    kind = BoundKind(bound)
    branch = None
    if kind is BoundKind.LATTICE:
        if m is None:
            raise ValueError("LATTICE bound needs m")
        idx = lattice_index_of(x, iv, q, log_tol)
        if idx != m and x != lattice_point(iv, q, m):
            raise ValueError(f"x={x} is not the lattice point with m={m}")
        const = lattice_ostrowski_bound(m, q, iv)
        branch = Branch.LATTICE
    elif kind is BoundKind.FULL:
        const = full_ostrowski_bound(x, q, iv)
    elif kind is BoundKind.DISPROVED:
        const = disproved_bound(x, q, iv)
    else:
        cb = combined_bound_M(x, q, iv, log_tol)
        const, branch = cb.value, cb.branch
    if sup_f is None:
        sup_f = _integral_sup(f, iv, norm)
    integral = q_integral(f, q, iv, iv.b, sup_f, tol)
    mean = integral.value / iv.length
    fx = f(x)
    lhs = abs(fx - mean)
    rhs = const * norm
    slack = integral.tail_bound / iv.length + _ULP_SLACK / (1 - q) * max(abs(fx), abs(mean), rhs)
    return BoundCheckReport(lhs, rhs, float(slack), branch)
