"""Computable residuals for the K-kernel identities.

Each operation evaluates one identity's left- and right-hand sides
numerically and returns an :class:`IdentityReport` with absolute and
relative residuals against a caller-chosen tolerance.  Tolerances are
tiered: identities built purely from quadrature verify to 1e-8 or better,
while the differential-operator checks use finite differences in beta and
carry a 1e-5 budget dominated by stencil amplification of quadrature noise.

The operator under test is the hypergeometric-type

    L f = d/dm [ m (1 - m) df/dm ] - f / 4,

which annihilates both K(sqrt(m)) and K(sqrt(1-m)); their Wronskian is
-pi / (4 m (1-m)).  Applied to the kernel integral

    (1/pi) integral_0^b K(sqrt(1-b)) K(sqrt(t)) g(a, t) dt
  + (1/pi) integral_b^1 K(sqrt(b)) K(sqrt(1-t)) g(a, t) dt

it returns -g(a, b) / 4 for any kernel g smooth near the evaluation point
(the restriction to kernels smooth in a neighborhood of b is deliberate;
nothing wilder is needed or supported).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .elliptic import complete_k, complete_kprime, dk_dm
from .errors import DomainError
from .integrals import i_first_term
from .quadrature import EndpointBehavior, cauchy_pv, integrate

__all__ = [
    "IdentityReport",
    "make_report",
    "recip_residual",
    "vanishing_residual",
    "wronskian_residual",
    "hypergeometric_operator",
    "operator_residual_d1",
    "operator_residual_kernel",
]

_PI = math.pi

# quadrature identities vs finite-difference operator identities
TOL_QUADRATURE = 1e-8
TOL_OPERATOR = 1e-5
TOL_WRONSKIAN = 1e-10

# removable-singularity switch radius for difference-quotient kernels
_REMOVABLE_RADIUS = 1e-8

# inner quadrature request for operator checks; actual errors are far
# smaller, which the 1/h^2 stencil amplification relies on
_OPERATOR_QTOL = 1e-12

_LEFT_LOG = EndpointBehavior.flags(left="log")
_RIGHT_LOG = EndpointBehavior.flags(right="log")
_LEFT_SQRT = EndpointBehavior.flags(left="inverse_sqrt")


@dataclass(frozen=True)
class IdentityReport:
    """One verified identity: both sides, residuals, tolerance, verdict."""

    name: str
    lhs: float
    rhs: float
    abs_residual: float
    rel_residual: float
    tolerance: float
    passed: bool


def make_report(name: str, lhs: float, rhs: float, tolerance: float) -> IdentityReport:
    if not tolerance > 0.0:
        raise DomainError(f"tolerance must be positive, got {tolerance!r}")
    abs_residual = abs(lhs - rhs)
    scale = max(abs(lhs), abs(rhs))
    if scale > 0.0:
        rel_residual = abs_residual / scale
    else:
        rel_residual = 0.0 if abs_residual == 0.0 else math.inf
    passed = abs_residual <= tolerance or rel_residual <= tolerance
    return IdentityReport(name, lhs, rhs, abs_residual, rel_residual, tolerance, passed)


def _check_open_unit(name: str, v: float) -> float:
    v = float(v)
    if not (math.isfinite(v) and 0.0 < v < 1.0):
        raise DomainError(f"{name} must lie in the open interval (0, 1), got {v!r}")
    return v


def _pole_or_regular(g, a, b, c, tol):
    """P-integral of g(t)/(c-t) on [a, b]; plain adaptive when c is outside."""
    if a < c < b:
        return cauchy_pv(g, a, b, c, None, tol).value

    def shifted(t: float) -> float:
        return g(t) / (c - t)

    return integrate(shifted, a, b, None, tol).value


def recip_residual(alpha: float, beta: float, tol: float = TOL_QUADRATURE) -> IdentityReport:
    """Six-term reciprocity residual, formally symmetric under alpha <-> beta.

    P int_0^a K'(a) K(sqrt t)/(pi (b - t)) dt
      + P int_a^1 K(a) K(sqrt(1-t))/(pi (b - t)) dt
      + the same pair with a and b exchanged
      - K(a) K(b) + K'(a) K'(b)  == 0,

    writing K(x) for K(sqrt(x)) and K'(x) for K(sqrt(1-x)).  The poles sit at
    t = beta for the first pair and t = alpha for the second; each pair is
    split at the companion parameter, so a pole is interior to exactly one
    piece of its pair.
    """
    alpha = _check_open_unit("alpha", alpha)
    beta = _check_open_unit("beta", beta)
    if alpha == beta:
        raise DomainError(
            "reciprocity residual needs distinct parameters; "
            "use vanishing_residual on the diagonal"
        )
    k_a = complete_k(alpha)
    kp_a = complete_kprime(alpha)
    k_b = complete_k(beta)
    kp_b = complete_kprime(beta)
    qtol = min(1e-10, tol / 16.0)

    def low_a(t: float) -> float:
        return kp_a * complete_k(t) / _PI

    def high_a(t: float) -> float:
        return k_a * complete_kprime(t) / _PI

    def low_b(t: float) -> float:
        return kp_b * complete_k(t) / _PI

    def high_b(t: float) -> float:
        return k_b * complete_kprime(t) / _PI

    lhs = (
        _pole_or_regular(low_a, 0.0, alpha, beta, qtol)
        + _pole_or_regular(high_a, alpha, 1.0, beta, qtol)
        + _pole_or_regular(low_b, 0.0, beta, alpha, qtol)
        + _pole_or_regular(high_b, beta, 1.0, alpha, qtol)
        - k_a * k_b
        + kp_a * kp_b
    )
    return make_report("reciprocity", lhs, 0.0, tol)


def vanishing_residual(alpha: float, tol: float = TOL_QUADRATURE) -> IdentityReport:
    """Difference-quotient kernel integral that vanishes identically.

    (1/pi) int_0^a [K'(a) - K(sqrt(1-t))] K(sqrt t) / (a - t) dt
      + (1/pi) int_a^1 [K(a) - K(sqrt t)] K(sqrt(1-t)) / (a - t) dt  == 0.

    Both integrands extend smoothly across t = a; inside the removable
    radius they are replaced by their analytic limits built from dK/dm.
    """
    alpha = _check_open_unit("alpha", alpha)
    k_a = complete_k(alpha)
    kp_a = complete_kprime(alpha)
    # limits of the difference quotients at t -> alpha
    low_limit = -dk_dm(1.0 - alpha) * k_a
    high_limit = dk_dm(alpha) * kp_a
    qtol = min(1e-10, tol / 8.0)

    def low(t: float) -> float:
        if abs(alpha - t) < _REMOVABLE_RADIUS:
            return low_limit
        return (kp_a - complete_kprime(t)) * complete_k(t) / (alpha - t)

    def high(t: float) -> float:
        if abs(alpha - t) < _REMOVABLE_RADIUS:
            return high_limit
        return (k_a - complete_kprime(1.0 - t)) * complete_kprime(t) / (alpha - t)

    lhs = (
        integrate(low, 0.0, alpha, _LEFT_LOG, qtol).value
        + integrate(high, alpha, 1.0, _RIGHT_LOG, qtol).value
    ) / _PI
    return make_report("vanishing", lhs, 0.0, tol)


def wronskian_residual(lam: float, tol: float = TOL_WRONSKIAN) -> IdentityReport:
    """Wronskian of K(sqrt(m)) and K(sqrt(1-m)) against -pi/(4 m (1-m)).

    Both derivatives are analytic: dK/dm = (E - (1-m) K) / (2 m (1-m)) and
    d/dm K(sqrt(1-m)) = -dK/dm evaluated at 1-m.
    """
    lam = _check_open_unit("lambda", lam)
    k_val = complete_k(lam)
    kp_val = complete_kprime(lam)
    dk = dk_dm(lam)
    dkp = -dk_dm(1.0 - lam)
    lhs = k_val * dkp - kp_val * dk
    rhs = -_PI / (4.0 * lam * (1.0 - lam))
    return make_report("wronskian", lhs, rhs, tol)


def hypergeometric_operator(f: Callable[[float], float], m: float, h: float) -> float:
    """Apply L f = m(1-m) f'' + (1-2m) f' - f/4 by 5-point centered stencils.

    Fourth-order accurate in h; the stencil must stay inside (0, 1).
    """
    m = _check_open_unit("m", m)
    h = float(h)
    if not (math.isfinite(h) and h > 0.0):
        raise DomainError(f"stencil step must be positive, got {h!r}")
    if m - 2.0 * h <= 0.0 or m + 2.0 * h >= 1.0:
        raise DomainError(
            f"stencil [{m - 2.0 * h}, {m + 2.0 * h}] leaves the open unit interval"
        )
    fm2 = f(m - 2.0 * h)
    fm1 = f(m - h)
    f0 = f(m)
    fp1 = f(m + h)
    fp2 = f(m + 2.0 * h)
    d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h)
    d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h)
    return m * (1.0 - m) * d2 + (1.0 - 2.0 * m) * d1 - 0.25 * f0


def _default_step(beta: float) -> float:
    return 1e-3 * min(beta, 1.0 - beta)


def operator_residual_d1(
    alpha: float, beta: float, h: float | None = None, tol: float = TOL_OPERATOR
) -> IdentityReport:
    """The operator applied in beta to the first double integral of I.

    L_beta D1(alpha, .) = -1 / (4 (sqrt(alpha) + sqrt(beta)) sqrt(beta)),
    with the left side evaluated by finite differences on the quadrature
    route (default step 1e-3 * min(beta, 1-beta)).
    """
    alpha = _check_open_unit("alpha", alpha)
    beta = _check_open_unit("beta", beta)
    step = _default_step(beta) if h is None else float(h)

    def f(b: float) -> float:
        return i_first_term(alpha, b, _OPERATOR_QTOL)

    lhs = hypergeometric_operator(f, beta, step)
    rhs = -1.0 / (4.0 * (math.sqrt(alpha) + math.sqrt(beta)) * math.sqrt(beta))
    return make_report("operator-d1", lhs, rhs, tol)


def operator_residual_kernel(
    alpha: float,
    beta: float,
    g: Callable[[float, float], float],
    h: float | None = None,
    tol: float = TOL_OPERATOR,
) -> IdentityReport:
    """The operator applied to the split K-kernel integral of a kernel g.

    L_beta [ (1/pi) int_0^beta K(sqrt(1-beta)) K(sqrt t) g(alpha, t) dt
           + (1/pi) int_beta^1 K(sqrt(beta)) K(sqrt(1-t)) g(alpha, t) dt ]
        = -g(alpha, beta) / 4.

    g must be smooth near t = beta; integrable endpoint behavior of g at
    t = 0 or t = 1 (such as 1/sqrt(t)) is absorbed by endpoint-safe panels.
    """
    alpha = _check_open_unit("alpha", alpha)
    beta = _check_open_unit("beta", beta)
    step = _default_step(beta) if h is None else float(h)

    def f(b: float) -> float:
        kp_b = complete_kprime(b)
        k_b = complete_k(b)

        def low(t: float) -> float:
            return kp_b * complete_k(t) * g(alpha, t)

        def high(t: float) -> float:
            return k_b * complete_kprime(t) * g(alpha, t)

        lo = integrate(low, 0.0, b, _LEFT_SQRT, 0.5 * _OPERATOR_QTOL).value
        hi = integrate(high, b, 1.0, _RIGHT_LOG, 0.5 * _OPERATOR_QTOL).value
        return (lo + hi) / _PI

    lhs = hypergeometric_operator(f, beta, step)
    rhs = -g(alpha, beta) / 4.0
    return make_report("operator-kernel", lhs, rhs, tol)
