"""Core q-calculus operators on a finite interval ``[a, b]``.

Everything here works with the *shifted* operators anchored at the left
endpoint ``a``::

    D_q^a f(t)            = (f(t) - f(a + q (t - a))) / ((1 - q) (t - a))
    int_a^x f(t) d_q^a t  = (1 - q) (x - a) sum_k q^k f(a + q^k (x - a))

The Jackson series is truncated with a certified geometric tail bound, so every
integral comes back as a :class:`QIntegralResult` carrying both the value and
the worst-case remainder.
"""

from __future__ import annotations

import bisect
import enum
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from typing import Union

import numpy as np

RealFunction = Callable[[float], float]

#: Default tolerance for lattice membership decisions made in log domain.
LOG_TOL = 1e-9

#: Generation below which ``FX_EPS`` falls back to its asymptotic branch.


class DomainError(ValueError):
    """Raised when an argument lies outside the domain of an operator."""


@dataclass(frozen=True)
class QParam:
    """Deformation parameter ``0 < q < 1``."""

    q: float

    def __post_init__(self):
        q = float(self.q)
        if not (0.0 < q < 1.0) or math.isnan(q):
            raise ValueError(f"q must satisfy 0 < q < 1, got {self.q!r}")
        object.__setattr__(self, "q", q)

    def __float__(self) -> float:
        return self.q


@dataclass(frozen=True)
class QInterval:
    """Closed interval ``[a, b]`` with ``a < b``."""

    a: float
    b: float

    def __post_init__(self):
        a, b = float(self.a), float(self.b)
        if not a < b:
            raise ValueError(f"interval needs a < b, got [{self.a!r}, {self.b!r}]")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def length(self) -> float:
        return self.b - self.a

    def __contains__(self, t: float) -> bool:
        return self.a <= t <= self.b


QLike = Union[QParam, float]
IntervalLike = Union[QInterval, Sequence[float]]

UNIT_INTERVAL = QInterval(0.0, 1.0)


def as_q(q: QLike) -> float:
    """Validate ``q`` and return it as a plain float."""
    if isinstance(q, QParam):
        return q.q
    return QParam(q).q


def as_interval(interval: IntervalLike) -> QInterval:
    if isinstance(interval, QInterval):
        return interval
    a, b = interval
    return QInterval(a, b)


@dataclass(frozen=True)
class QIntegralResult:
    """Truncated Jackson series together with its certified remainder."""

    value: float
    tail_bound: float
    terms_used: int


# -- function representations -----------------------------------------------


@dataclass(frozen=True)
class PiecewiseLinearFn:
    """Continuous piecewise-linear function given by its breakpoints.

    The first and last abscissae must coincide with the endpoints of
    ``domain``.  Evaluation at a breakpoint returns the stored ordinate exactly.
    """

    breakpoints: tuple[tuple[float, float], ...]
    domain: QInterval
    _ts: np.ndarray = field(init=False, repr=False, compare=False)
    _ys: np.ndarray = field(init=False, repr=False, compare=False)
    _tlist: list = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        pts = tuple((float(t), float(y)) for t, y in self.breakpoints)
        if len(pts) < 2:
            raise ValueError("need at least two breakpoints")
        ts = np.array([p[0] for p in pts])
        if np.any(np.diff(ts) <= 0):
            raise ValueError("breakpoint abscissae must be strictly increasing")
        if ts[0] != self.domain.a or ts[-1] != self.domain.b:
            raise ValueError("breakpoints must start at a and end at b")
        object.__setattr__(self, "breakpoints", pts)
        object.__setattr__(self, "_ts", ts)
        object.__setattr__(self, "_ys", np.array([p[1] for p in pts]))
        object.__setattr__(self, "_tlist", [p[0] for p in pts])

    @classmethod
    def from_points(cls, points: Sequence[tuple[float, float]]) -> PiecewiseLinearFn:
        points = sorted(points)
        return cls(tuple(points), QInterval(points[0][0], points[-1][0]))

    def __call__(self, t):
        if isinstance(t, (float, int)):
            return self._eval_scalar(float(t))
        arr = np.asarray(t, dtype=float)
        if np.any(arr < self.domain.a) or np.any(arr > self.domain.b):
            raise DomainError(f"t outside [{self.domain.a}, {self.domain.b}]")
        out = np.interp(arr, self._ts, self._ys)
        return float(out) if out.ndim == 0 else out

    def _eval_scalar(self, t: float) -> float:
        pts = self.breakpoints
        if not pts[0][0] <= t <= pts[-1][0]:
            raise DomainError(f"t={t} outside [{self.domain.a}, {self.domain.b}]")
        i = bisect.bisect_left(self._tlist, t)
        t1, y1 = pts[i]
        if t == t1:
            return y1
        t0, y0 = pts[i - 1]
        return y0 + (y1 - y0) * (t - t0) / (t1 - t0)

    @property
    def abscissae(self) -> np.ndarray:
        return self._ts.copy()

    @property
    def slopes(self) -> np.ndarray:
        return np.diff(self._ys) / np.diff(self._ts)

    def sup_bound(self) -> float:
        """Exact ``max |f|`` (attained at a breakpoint)."""
        return float(np.max(np.abs(self._ys)))


class LatticeKind(enum.Enum):
    SELFSIM_FX = "f_x"
    FX_EPS = "f_x_eps"
    GX = "g_x"


@dataclass(frozen=True)
class LatticeFn:
    """Piecewise-linear function on ``[0, 1]`` defined on the two interleaved
    lattices ``{q^n}`` and ``{x q^n}``.

    At ``q^n`` the value is ``-q^n``; at ``x q^n`` it depends on ``kind``:

    * ``SELFSIM_FX``: ``x q^n``
    * ``FX_EPS``: ``x q^n - eps`` for ``n <= m`` and ``-x q^n`` afterwards,
      where ``m = floor(log_q(eps / 2x))``
    * ``GX``: ``x q^n + C``

    Between neighbouring nodes the function is linear.  ``f(0) = 0`` except
    for ``GX``, which has no limit at 0.  Build instances through the
    constructors in :mod:`qostrowski.extremal`, which validate parameters.
    """

    kind: LatticeKind
    x: float
    q: float
    eps: float = 0.0
    C: float = 0.0
    m: int = 0
    log_tol: float = LOG_TOL

    @property
    def domain(self) -> QInterval:
        return UNIT_INTERVAL

    def node_lower(self, n: int) -> float:
        """Value at ``q^n``."""
        return -(self.q**n)

    def node_upper(self, n: int) -> float:
        """Value at ``x q^n``."""
        xn = self.x * self.q**n
        if self.kind is LatticeKind.SELFSIM_FX:
            return xn
        if self.kind is LatticeKind.GX:
            return xn + self.C
        return xn - self.eps if n <= self.m else -xn

    def sup_bound(self) -> float:
        if self.kind is LatticeKind.GX:
            return 1.0 + self.C
        return max(1.0, self.x + self.eps)

    def _snap(self, value: float) -> int | None:
        r = round(value)
        return int(r) if abs(value - r) <= self.log_tol else None

    def _eval(self, t: float) -> float:
        if not 0.0 <= t <= 1.0:
            raise DomainError(f"t={t!r} outside [0, 1]")
        if t == 0.0:
            if self.kind is LatticeKind.GX:
                raise DomainError("g_x is undefined at 0")
            return 0.0
        q = self.q
        if self.kind is LatticeKind.FX_EPS:
            if t <= q ** (self.m + 1):
                return -t
        lq = math.log(q)
        pos = math.log(t) / lq
        n = self._snap(pos)
        if n is not None:
            return self.node_lower(n)
        upper = math.log(t / self.x) / lq
        k = self._snap(upper)
        if k is not None and k >= 0:
            return self.node_upper(k)
        n = math.floor(pos)  # q^{n+1} < t < q^n
        qn = q**n
        xqn = self.x * qn
        if t >= xqn:
            t0, y0, t1, y1 = xqn, self.node_upper(n), qn, self.node_lower(n)
        else:
            t0, y0, t1, y1 = qn * q, self.node_lower(n + 1), xqn, self.node_upper(n)
        return y0 + (y1 - y0) * (t - t0) / (t1 - t0)

    def __call__(self, t):
        if np.ndim(t) == 0:
            return self._eval(float(t))
        return np.array([self._eval(float(s)) for s in np.ravel(t)]).reshape(np.shape(t))


# -- operators ----------------------------------------------------------------


def _domain_of(f) -> QInterval | None:
    dom = getattr(f, "domain", None)
    return dom if isinstance(dom, QInterval) else None


def q_derivative(
    f: RealFunction, t: float, q: QLike, a: float = 0.0, b: float | None = None
) -> float:
    """Shifted q-derivative ``D_q^a f(t)`` for ``t`` in ``(a, b]``.

    ``b`` defaults to the right endpoint of ``f.domain`` when ``f`` has one.
    The value at ``a`` itself is a limit; see :func:`q_derivative_at_a`.
    """
    q = as_q(q)
    if b is None:
        dom = _domain_of(f)
        b = dom.b if dom is not None else math.inf
    if not t > a:
        raise DomainError(f"q-derivative needs t > a (got t={t}, a={a})")
    if t > b:
        raise DomainError(f"t={t} beyond right endpoint {b}")
    h = t - a
    return (f(t) - f(a + q * h)) / ((1.0 - q) * h)


@dataclass(frozen=True)
class LimitProbe:
    limit: float
    converged: bool
    spread: float


def q_derivative_at_a(
    f: RealFunction,
    q: QLike,
    interval: IntervalLike,
    depth: int = 60,
    tol: float = 1e-8,
    rays: Sequence[float] | None = None,
) -> LimitProbe:
    """Probe ``lim_{t -> a} D_q^a f(t)`` along several geometric rays.

    The probe points are ``a + q^j (b - a) s`` for ``j = 0..depth`` and each
    ray ``s``.  The default rays are ``1`` (the lattice itself), ``1/2`` and,
    for lattice functions, the second lattice ``x``.  Convergence is declared
    when the values over the last half of the generations agree to ``tol``.
    Offsets too small to be resolved relative to ``a`` are skipped.
    """
    q = as_q(q)
    iv = as_interval(interval)
    if depth < 2:
        raise ValueError("depth must be at least 2")
    if rays is None:
        rays = [1.0, 0.5]
        sx = getattr(f, "x", None)
        if isinstance(sx, float) and 0.0 < sx < 1.0:
            rays.append(sx)
    floor = 1e-8 * max(1.0, abs(iv.a))
    tail = []
    for j in range(depth // 2, depth + 1):
        for s in rays:
            h = q**j * iv.length * s
            if iv.a != 0.0 and h < floor:
                continue
            tail.append(q_derivative(f, iv.a + h, q, iv.a, iv.b))
    if not tail:
        raise DomainError("no resolvable probe points; reduce depth")
    spread = max(tail) - min(tail)
    last = tail[-len(rays):]
    return LimitProbe(float(np.mean(last)), spread < tol, spread)


def _terms_needed(scale: float, q: float, tol: float) -> int:
    if scale <= tol:
        return 0
    K = max(0, math.ceil(math.log(tol / scale) / math.log(q)))
    while scale * q**K > tol:
        K += 1
    return K


def q_integral(
    f: RealFunction,
    q: QLike,
    interval: IntervalLike,
    x: float | None = None,
    sup_f: float | None = None,
    tol: float = 1e-12,
) -> QIntegralResult:
    """Shifted Jackson integral ``int_a^x f(t) d_q^a t``.

    ``sup_f`` must bound ``|f|`` on ``[a, x]``; when omitted it is taken from
    ``f.sup_bound()``.  The series is cut at the first ``K`` with
    ``(x - a) sup_f q^K <= tol``, which bounds the discarded remainder.
    """
    q = as_q(q)
    iv = as_interval(interval)
    x = iv.b if x is None else float(x)
    if not iv.a <= x <= iv.b:
        raise DomainError(f"x={x} outside [{iv.a}, {iv.b}]")
    if not tol > 0:
        raise ValueError("tol must be positive")
    if sup_f is None:
        if not hasattr(f, "sup_bound"):
            raise ValueError("sup_f is required for functions without sup_bound()")
        sup_f = f.sup_bound()
    h = x - iv.a
    if h == 0.0:
        return QIntegralResult(0.0, 0.0, 0)
    K = _terms_needed(h * sup_f, q, tol)
    terms = [q**k * f(iv.a + q**k * h) for k in range(K)]
    value = (1.0 - q) * h * math.fsum(terms)
    return QIntegralResult(value, h * sup_f * q**K, K)


def q_integral_between(
    f: RealFunction,
    q: QLike,
    interval: IntervalLike,
    c: float,
    x: float,
    sup_f: float | None = None,
    tol: float = 1e-12,
) -> QIntegralResult:
    """``int_c^x f d_q^a t`` as the difference of two integrals anchored at ``a``.

    Requires ``a <= c <= x <= b``.  Note that the result still depends on the
    values of ``f`` inside ``[a, c]``.
    """
    iv = as_interval(interval)
    if not iv.a <= c <= x <= iv.b:
        raise DomainError(f"need a <= c <= x <= b, got c={c}, x={x} on [{iv.a}, {iv.b}]")
    if c == x:
        return QIntegralResult(0.0, 0.0, 0)
    upper = q_integral(f, q, iv, x, sup_f, tol)
    lower = q_integral(f, q, iv, c, sup_f, tol)
    return QIntegralResult(
        upper.value - lower.value,
        upper.tail_bound + lower.tail_bound,
        upper.terms_used + lower.terms_used,
    )


# -- lattice utilities ----------------------------------------------------------


def lattice_point(interval: IntervalLike, q: QLike, m: int) -> float:
    """``a + q^m (b - a)``; ``m = 0`` gives ``b`` exactly."""
    iv = as_interval(interval)
    q = as_q(q)
    if m < 0:
        raise ValueError("m must be non-negative")
    if m == 0:
        return iv.b
    return iv.a + q**m * iv.length


def lattice_index_of(
    x: float, interval: IntervalLike, q: QLike, log_tol: float = LOG_TOL
) -> int | None:
    """Return ``m`` if ``x = a + q^m (b - a)`` (decided in log domain), else ``None``.

    ``x = a`` is the accumulation point of the lattice and is not a member.
    """
    iv = as_interval(interval)
    q = as_q(q)
    if x == iv.a:
        return None
    if not iv.a < x <= iv.b:
        raise DomainError(f"x={x} outside (a, b] = ({iv.a}, {iv.b}]")
    m_real = math.log((x - iv.a) / iv.length) / math.log(q)
    m = round(m_real)
    if m >= 0 and abs(m_real - m) <= log_tol:
        return int(m)
    return None


# -- sup norm of the q-derivative -----------------------------------------------


@dataclass(frozen=True)
class SamplingPlan:
    """Where to look when estimating ``sup |D_q^a f|`` of an opaque function."""

    breakpoints: tuple[float, ...] = ()
    generations: int = 60
    grid: int = 2001


@dataclass(frozen=True)
class SupNorm:
    estimate: float
    exact: bool


def pl_critical_points(f: PiecewiseLinearFn, q: float, a: float, b: float) -> np.ndarray:
    """Points of ``(a, b]`` where ``D_q^a f`` may change its formula.

    On every gap between consecutive points both ``f(t)`` and
    ``f(a + q(t - a))`` are affine, so ``D_q^a f`` is monotone there and its
    extremes sit at the returned points.
    """
    ts = f.abscissae
    pre = a + (ts - a) / q
    pts = np.concatenate([ts, pre, [b]])
    pts = pts[(pts > a) & (pts <= b)]
    return np.unique(pts)


def sup_norm_qderiv(
    f: RealFunction,
    q: QLike,
    interval: IntervalLike | None = None,
    plan: SamplingPlan | None = None,
) -> SupNorm:
    """``sup_{t in (a, b]} |D_q^a f(t)|``.

    Exact for :class:`PiecewiseLinearFn` (checked at every point where the
    difference quotient can switch formula) and for the lattice families,
    whose norm is 1.  Any other callable gets a sampled lower estimate.
    """
    q = as_q(q)
    if interval is None:
        interval = _domain_of(f)
        if interval is None:
            raise ValueError("interval is required for functions without a domain")
    iv = as_interval(interval)
    if isinstance(f, LatticeFn):
        return SupNorm(1.0, True)
    if isinstance(f, PiecewiseLinearFn):
        pts = pl_critical_points(f, q, iv.a, iv.b)
        vals = [abs(q_derivative(f, t, q, iv.a, iv.b)) for t in pts]
        return SupNorm(float(max(vals)), True)
    plan = plan or SamplingPlan()
    bps = np.asarray(plan.breakpoints, dtype=float)
    cand = [
        bps,
        iv.a + (bps - iv.a) / q,
        iv.a + q ** np.arange(plan.generations + 1) * iv.length,
        np.linspace(iv.a, iv.b, plan.grid)[1:],
    ]
    pts = np.concatenate(cand)
    pts = np.unique(pts[(pts > iv.a) & (pts <= iv.b)])
    vals = [abs(q_derivative(f, t, q, iv.a, iv.b)) for t in pts]
    return SupNorm(float(max(vals)), False)
