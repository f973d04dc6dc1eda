"""Adaptive one-dimensional quadrature with declared endpoint singularities.

Interior work uses an embedded Gauss-Legendre pair (10 and 21 nodes) with
worst-panel bisection.  Panels adjacent to an endpoint flagged as singular
are integrated with a tanh-sinh (double exponential) rule instead, which
never samples the endpoint and absorbs inverse-square-root and logarithmic
singularities.  Cauchy principal values are reduced to regular integrals by
the standard pole subtraction.

Singularities are never auto-detected: callers declare them through
:class:`EndpointBehavior` because the call sites know the analytic structure
of their kernels.  The default tolerance is 1e-11 and the default budget is
2e6 integrand evaluations per integral; the environment variable
``HALLINT_EVAL_BUDGET`` overrides the budget globally.

Precision note: offsets from an endpoint at 0 are exact floats, so integrands
singular there evaluate at full accuracy.  A singular endpoint at a nonzero
abscissa is limited by the spacing of representable numbers around it; write
kernels in terms of the exact complement (e.g. ``complete_kprime(1 - t)``,
where ``1 - t`` is exact for t in [0.5, 1]) or substitute the integral so the
singularity sits at 0.
"""

from __future__ import annotations

import heapq
import itertools
import math
import os
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import AccuracyError, DomainError, EvaluationError

__all__ = [
    "Endpoint",
    "EndpointBehavior",
    "QuadResult",
    "DEFAULT_TOL",
    "DEFAULT_BUDGET",
    "gauss_legendre",
    "gauss_panel",
    "integrate",
    "cauchy_pv",
]

DEFAULT_TOL = 1e-11
DEFAULT_BUDGET = 2_000_000
MIN_TOL = 1e-14

_EPS = math.ulp(1.0)
_TINY = 1e-306

# tanh-sinh truncation: at |t| = 4 the relative endpoint offset is ~1e-37,
# so even an inverse-square-root tail (which scales like sqrt(offset))
# contributes < 1e-18 of the panel width
_TS_TMAX = 4.0
_TS_MAX_LEVEL = 11


class Endpoint(Enum):
    REGULAR = "regular"
    INVERSE_SQRT = "inverse_sqrt"
    LOG = "log"


@dataclass(frozen=True)
class EndpointBehavior:
    """Declared integrand behavior at the two interval endpoints."""

    left: Endpoint = Endpoint.REGULAR
    right: Endpoint = Endpoint.REGULAR

    @classmethod
    def flags(cls, left: str = "regular", right: str = "regular") -> "EndpointBehavior":
        return cls(Endpoint(left), Endpoint(right))

    @property
    def left_singular(self) -> bool:
        return self.left is not Endpoint.REGULAR

    @property
    def right_singular(self) -> bool:
        return self.right is not Endpoint.REGULAR


REGULAR = EndpointBehavior()


@dataclass(frozen=True)
class QuadResult:
    """Value, conservative absolute error estimate, and evaluation count."""

    value: float
    abs_error_estimate: float
    evaluations: int

    def __post_init__(self):
        if not self.abs_error_estimate >= 0.0:
            raise DomainError(
                f"error estimate must be nonnegative, got {self.abs_error_estimate!r}"
            )


class _BudgetExhausted(Exception):
    pass


class _Tally:
    """Shared evaluation counter enforcing the integrand budget."""

    __slots__ = ("count", "limit")

    def __init__(self, limit: int):
        self.count = 0
        self.limit = limit

    def wrap(self, f: Callable[[float], float]) -> Callable[[float], float]:
        def call(x: float) -> float:
            if self.count >= self.limit:
                raise _BudgetExhausted
            self.count += 1
            v = f(x)
            if not math.isfinite(v):
                raise EvaluationError(
                    f"integrand returned non-finite value {v!r} at t={x!r}", abscissa=x
                )
            return v

        return call


def default_budget() -> int:
    raw = os.environ.get("HALLINT_EVAL_BUDGET")
    if raw is None or raw.strip() == "":
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise DomainError(f"HALLINT_EVAL_BUDGET must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise DomainError(f"HALLINT_EVAL_BUDGET must be positive, got {value}")
    return value


@lru_cache(maxsize=None)
def gauss_legendre(n: int):
    """Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1]."""
    if n < 1:
        raise DomainError(f"rule order must be >= 1, got {n}")
    nodes, weights = np.polynomial.legendre.leggauss(n)
    return tuple(float(x) for x in nodes), tuple(float(w) for w in weights)


def gauss_panel(f: Callable[[float], float], a: float, b: float, n: int = 21) -> float:
    """Single fixed n-point Gauss-Legendre panel over [a, b].

    Exact for polynomials of degree <= 2n - 1.
    """
    nodes, weights = gauss_legendre(n)
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    acc = 0.0
    for x, w in zip(nodes, weights):
        acc += w * f(mid + half * x)
    return acc * half


_RULE_LO = tuple(zip(*gauss_legendre(10)))
_RULE_HI = tuple(zip(*gauss_legendre(21)))


def _gl_pair(fc, a: float, b: float):
    """21-node estimate with |G21 - G10| as a conservative error gauge."""
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    hi = 0.0
    for x, w in _RULE_HI:
        hi += w * fc(mid + half * x)
    lo = 0.0
    for x, w in _RULE_LO:
        lo += w * fc(mid + half * x)
    hi *= half
    lo *= half
    return hi, abs(hi - lo)


@lru_cache(maxsize=None)
def _ts_level_nodes(level: int):
    """New tanh-sinh nodes introduced at this refinement level (t > 0 only).

    Each entry is (relative endpoint offset 1 - tanh(u), weight density
    (pi/2) cosh t / cosh^2 u) with u = (pi/2) sinh t.
    """
    h = 2.0 ** (-level)
    if level == 0:
        ks = range(1, int(_TS_TMAX) + 1)
    else:
        ks = range(1, int(_TS_TMAX / h) + 1, 2)
    out = []
    for k in ks:
        t = k * h
        u = 0.5 * math.pi * math.sinh(t)
        ch = math.cosh(u)
        offset = 2.0 / (1.0 + math.exp(2.0 * u))
        weight = 0.5 * math.pi * math.cosh(t) / (ch * ch)
        out.append((offset, weight))
    return tuple(out)


def _tanh_sinh(fc, a: float, b: float, tol: float):
    """Double-exponential integration of fc over [a, b], endpoints untouched.

    Returns (value, error estimate).  Nodes whose abscissa rounds onto an
    endpoint are skipped; their true contribution is below the noise floor
    for any integrable declared singularity.
    """
    halfw = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    acc = 0.5 * math.pi * fc(mid)
    value = prev = None
    for level in range(_TS_MAX_LEVEL + 1):
        for offset, weight in _ts_level_nodes(level):
            delta = halfw * offset
            xp = b - delta
            if a < xp < b:
                acc += weight * fc(xp)
            xm = a + delta
            if a < xm < b:
                acc += weight * fc(xm)
        value = 2.0 ** (-level) * halfw * acc
        if prev is not None:
            err = abs(value - prev)
            floor = 4.0 * _EPS * abs(value) + _TINY
            if level >= 2 and err <= max(tol, floor):
                return value, max(err, 0.5 * floor)
        prev = value
    raise AccuracyError(
        f"tanh-sinh panel on [{a}, {b}] failed to reach tolerance {tol:.3e}",
        value=value,
        error_estimate=abs(value - prev) if prev is not None else None,
    )


def _adaptive_gl(fc, a: float, b: float, tol: float):
    """Globally adaptive Gauss-Legendre bisection over [a, b]."""
    seq = itertools.count()
    active = []  # heap of (-err, seq, a, b, value)
    state = {"fv": 0.0, "fe": 0.0, "av": 0.0, "ae": 0.0}

    def push(pa: float, pb: float):
        v, e = _gl_pair(fc, pa, pb)
        width_floor = (pb - pa) <= 64.0 * _EPS * max(abs(pa), abs(pb), 1.0)
        if e <= 50.0 * _EPS * (abs(v) + _TINY) or width_floor:
            state["fv"] += v
            state["fe"] += e
        else:
            heapq.heappush(active, (-e, next(seq), pa, pb, v))
            state["av"] += v
            state["ae"] += e

    try:
        push(a, b)
        while state["ae"] + state["fe"] > tol and active:
            neg_e, _, pa, pb, v = heapq.heappop(active)
            state["av"] -= v
            state["ae"] += neg_e
            mid = 0.5 * (pa + pb)
            push(pa, mid)
            push(mid, pb)
    except _BudgetExhausted:
        raise AccuracyError(
            f"evaluation budget exhausted on [{a}, {b}] before reaching {tol:.3e}",
            value=state["fv"] + state["av"],
            error_estimate=state["fe"] + state["ae"],
        ) from None
    return state["fv"] + state["av"], state["fe"] + state["ae"]


def _run_pieces(fc, a, b, behavior, tol):
    """Split [a, b] so flagged endpoints get tanh-sinh panels; sum the parts."""
    width = b - a
    if behavior.left_singular and behavior.right_singular:
        mid = a + 0.5 * width
        parts = [("ts", a, mid), ("ts", mid, b)]
    elif behavior.left_singular:
        cut = a + 0.25 * width
        parts = [("ts", a, cut), ("gl", cut, b)]
    elif behavior.right_singular:
        cut = b - 0.25 * width
        parts = [("gl", a, cut), ("ts", cut, b)]
    else:
        parts = [("gl", a, b)]
    alloc = tol / len(parts)
    value = 0.0
    err = 0.0
    for kind, pa, pb in parts:
        try:
            if kind == "ts":
                v, e = _tanh_sinh(fc, pa, pb, alloc)
            else:
                v, e = _adaptive_gl(fc, pa, pb, alloc)
        except _BudgetExhausted:
            raise AccuracyError(
                f"evaluation budget exhausted on [{pa}, {pb}] before reaching {alloc:.3e}",
                value=value,
                error_estimate=err,
            ) from None
        value += v
        err += e
    return value, err


def _check_interval(a: float, b: float, tol: float):
    a = float(a)
    b = float(b)
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError(f"integration limits must be finite, got [{a!r}, {b!r}]")
    if not a < b:
        raise DomainError(f"integration requires a < b, got [{a!r}, {b!r}]")
    tol = float(tol)
    if not (math.isfinite(tol) and tol >= MIN_TOL):
        raise DomainError(f"tolerance must be >= {MIN_TOL:g}, got {tol!r}")
    return a, b, tol


def integrate(
    f: Callable[[float], float],
    a: float,
    b: float,
    behavior: EndpointBehavior | None = None,
    tol: float = DEFAULT_TOL,
    budget: int | None = None,
) -> QuadResult:
    """Integrate f over [a, b] to absolute tolerance tol.

    ``behavior`` declares inverse-square-root or logarithmic endpoint
    singularities; the corresponding quarter of the interval is handled by a
    tanh-sinh panel and the endpoint itself is never evaluated.  Raises
    :class:`EvaluationError` on a non-finite sample and
    :class:`AccuracyError` when the tolerance cannot be met within the
    evaluation budget.
    """
    a, b, tol = _check_interval(a, b, tol)
    behavior = behavior or REGULAR
    tally = _Tally(budget if budget is not None else default_budget())
    fc = tally.wrap(f)
    value, err = _run_pieces(fc, a, b, behavior, tol)
    return QuadResult(value, err, tally.count)


def cauchy_pv(
    g: Callable[[float], float],
    a: float,
    b: float,
    c: float,
    behavior: EndpointBehavior | None = None,
    tol: float = DEFAULT_TOL,
    budget: int | None = None,
) -> QuadResult:
    """Cauchy principal value of integral_a^b g(t) / (c - t) dt, pole at c.

    Uses the subtraction g(t) = (g(t) - g(c)) + g(c): the regularized part is
    integrated adaptively on [a, c] and [c, b], and the remaining pole term
    contributes exactly g(c) * log((c - a) / (b - c)).  ``behavior`` describes
    g at the outer endpoints a and b; g must be smooth near c.
    """
    a, b, tol = _check_interval(a, b, tol)
    c = float(c)
    if not a < c < b:
        raise DomainError(
            f"principal-value pole must lie strictly inside ({a!r}, {b!r}), got {c!r}; "
            "use integrate() when the pole is outside"
        )
    behavior = behavior or REGULAR
    tally = _Tally(budget if budget is not None else default_budget())
    gc = tally.wrap(g)

    g_at_c = gc(c)
    # centered stencil for the removable-limit value -g'(c) near the pole
    step = max(1e-6, 1e-8 * (b - a))
    step = min(step, 0.5 * (c - a), 0.5 * (b - c))
    g_slope = (gc(c + step) - gc(c - step)) / (2.0 * step)

    def regularized(t: float) -> float:
        d = c - t
        if abs(d) <= step:
            return -g_slope
        return (g(t) - g_at_c) / d

    rc = tally.wrap(regularized)
    left_v, left_e = _run_pieces(
        rc, a, c, EndpointBehavior(behavior.left, Endpoint.REGULAR), 0.5 * tol
    )
    right_v, right_e = _run_pieces(
        rc, c, b, EndpointBehavior(Endpoint.REGULAR, behavior.right), 0.5 * tol
    )
    log_term = g_at_c * math.log((c - a) / (b - c))
    value = left_v + right_v + log_term
    err = left_e + right_e + 2.0 * _EPS * abs(log_term)
    return QuadResult(value, err, tally.count)
