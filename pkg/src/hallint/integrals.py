"""The double integrals A(p, q) and I(alpha, beta) by two independent routes.

Direct route: each double integral collapses to a single adaptive pass whose
inner factor is an incomplete elliptic integral evaluated by the
special-function layer (never nested quadrature).  For

    A(p, q) = integral_0^pi (1 - p cos x)^(-1/2)
              * integral_0^x (1 + q cos y)^(-1/2) dy dx

the half-angle reduction 1 + q cos y = (1+q) (1 - (2q/(1+q)) sin^2(y/2))
turns the inner integral into (2/sqrt(1+q)) F(x/2 | 2q/(1+q)), and the outer
weight is evaluated in the cancellation-free form (1-p) + 2p sin^2(x/2).
A(p, q) equals A at the complementary moduli (sqrt(1-p^2), sqrt(1-q^2)).

    I(alpha, beta) = D1 - D2

is the difference of two weighted double integrals over theta in [0, pi/2]
with inner factors F(theta | 1-beta) and F(theta | 1-alpha); it satisfies
I(alpha, beta) = I(1-beta, 1-alpha) for 0 <= beta <= alpha <= 1 and vanishes
on the diagonal.  The second weight's radicand is evaluated as
(alpha - beta) + (1-alpha) beta sin^2(theta), which is exact algebra for
alpha(1-beta) - (1-alpha) beta cos^2(theta) and loses nothing as
beta -> alpha.

Kernel route: single integrals of products of complete integrals
K(sqrt(t)) K(sqrt(1-t)) against algebraic kernels, including a Cauchy
principal value.  K(sqrt(1-t)) is always evaluated as ``complete_kprime(t)``
so the logarithmic endpoint is sampled through the exact small complement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .elliptic import complete_k, complete_kprime, incomplete_f
from .errors import DomainError
from .quadrature import EndpointBehavior, cauchy_pv, integrate

__all__ = [
    "ModulusPair",
    "ParamPair",
    "a_double",
    "i_direct",
    "i_first_term",
    "i_second_term",
    "i1a_representation",
    "i1b_representation",
    "i2_representation",
    "i_representation",
]

_HALF_PI = 0.5 * math.pi
_BELOW_HALF_PI = math.nextafter(_HALF_PI, 0.0)
_PI = math.pi

DEFAULT_TOL = 1e-9

_LEFT_SQRT = EndpointBehavior.flags(left="inverse_sqrt")
_RIGHT_LOG = EndpointBehavior.flags(right="log")
_LEFT_LOG = EndpointBehavior.flags(left="log")


@dataclass(frozen=True)
class ModulusPair:
    """Four-contact moduli (p, q), each in [0, 1].

    ``complement()`` maps to (sqrt(1-p^2), sqrt(1-q^2)) and is an involution.
    """

    p: float
    q: float

    def __post_init__(self):
        for name, v in (("p", self.p), ("q", self.q)):
            if not (math.isfinite(v) and 0.0 <= v <= 1.0):
                raise DomainError(f"modulus {name} must lie in [0, 1], got {v!r}")

    def complement(self) -> "ModulusPair":
        return ModulusPair(math.sqrt(1.0 - self.p * self.p), math.sqrt(1.0 - self.q * self.q))


@dataclass(frozen=True)
class ParamPair:
    """Three-contact parameters (alpha, beta) with beta <= alpha.

    ``swap_complement()`` maps to (1-beta, 1-alpha); it is an involution and
    preserves the ordering.
    """

    alpha: float
    beta: float

    def __post_init__(self):
        for name, v in (("alpha", self.alpha), ("beta", self.beta)):
            if not (math.isfinite(v) and 0.0 <= v <= 1.0):
                raise DomainError(f"parameter {name} must lie in [0, 1], got {v!r}")
        if self.beta > self.alpha:
            raise DomainError(
                f"parameters must satisfy beta <= alpha, got ({self.alpha!r}, {self.beta!r})"
            )

    def swap_complement(self) -> "ParamPair":
        return ParamPair(1.0 - self.beta, 1.0 - self.alpha)


def _check_unit(name: str, v: float, lo_open: bool = False, hi_open: bool = False) -> float:
    v = float(v)
    if not (math.isfinite(v) and 0.0 <= v <= 1.0):
        raise DomainError(f"{name} must lie in [0, 1], got {v!r}")
    if lo_open and v == 0.0:
        raise DomainError(f"{name} must be strictly positive")
    if hi_open and v == 1.0:
        raise DomainError(f"{name} must be strictly below 1")
    return v


def _inner_f(phi: float, m: float) -> float:
    # quadrature abscissae can round onto pi/2; keep the amplitude interior
    if phi >= _HALF_PI:
        phi = _BELOW_HALF_PI
    return incomplete_f(phi, m)


def a_double(p: float, q: float, tol: float = DEFAULT_TOL) -> float:
    """The iterated cosine-kernel integral A(p, q) for moduli in [0, 1].

    Finite on the closed square; at p = 1 the outer weight is singular at
    x = 0 but the product with the inner factor stays bounded, and at q = 1
    the integrand has an integrable logarithmic singularity at x = pi.
    """
    p = _check_unit("p", p)
    q = _check_unit("q", q)
    m_inner = 2.0 * q / (1.0 + q)
    scale = 2.0 / math.sqrt(1.0 + q)

    def integrand(x: float) -> float:
        half = 0.5 * x
        s = math.sin(half)
        inner = scale * _inner_f(half, m_inner)
        return inner / math.sqrt((1.0 - p) + 2.0 * p * s * s)

    behavior = EndpointBehavior.flags(
        left="inverse_sqrt" if p > 0.9 else "regular",
        right="log" if q > 0.9 else "regular",
    )
    return integrate(integrand, 0.0, _PI, behavior, tol).value


def i_first_term(alpha: float, beta: float, tol: float = DEFAULT_TOL) -> float:
    """First weighted double integral of I (inner parameter 1 - beta).

    D1 = integral_0^{pi/2} F(theta | 1-beta) / sqrt(1 - (1-alpha) sin^2 theta)
    dtheta, finite for alpha > 0; D1(alpha, alpha) = K(sqrt(1-alpha))^2 / 2
    and D1(alpha, beta) + D1(beta, alpha) = K(sqrt(1-alpha)) K(sqrt(1-beta)).
    """
    alpha = _check_unit("alpha", alpha, lo_open=True)
    beta = _check_unit("beta", beta)
    m_inner = 1.0 - beta
    one_minus_alpha = 1.0 - alpha

    def integrand(theta: float) -> float:
        c = math.cos(theta)
        return _inner_f(theta, m_inner) / math.sqrt(alpha + one_minus_alpha * c * c)

    # the double-exponential panel at pi/2 also resolves the steep shoulder
    # when alpha or beta is small, and the true log singularity at beta = 0
    return integrate(integrand, 0.0, _HALF_PI, _RIGHT_LOG, tol).value


def i_second_term(alpha: float, beta: float, tol: float = DEFAULT_TOL) -> float:
    """Second weighted double integral of I (inner parameter 1 - alpha).

    Vanishes identically at alpha = 1 and collapses onto the first term at
    beta = alpha.  Requires beta <= alpha so the radicand
    (alpha - beta) + (1-alpha) beta sin^2(theta) stays nonnegative.
    """
    alpha = _check_unit("alpha", alpha, lo_open=True)
    beta = _check_unit("beta", beta)
    if beta > alpha:
        raise DomainError(f"second term requires beta <= alpha, got ({alpha!r}, {beta!r})")
    if alpha == 1.0:
        if beta == 1.0:
            raise DomainError("second term is indeterminate at alpha = beta = 1")
        return 0.0
    delta = alpha - beta
    shape = (1.0 - alpha) * beta
    coeff = math.sqrt(alpha * (1.0 - alpha))
    m_inner = 1.0 - alpha
    one_minus_alpha = 1.0 - alpha

    def integrand(theta: float) -> float:
        s = math.sin(theta)
        c = math.cos(theta)
        num = coeff * s * _inner_f(theta, m_inner)
        den = math.sqrt(delta + shape * s * s) * math.sqrt(alpha + one_minus_alpha * c * c)
        return num / den

    return integrate(integrand, 0.0, _HALF_PI, _RIGHT_LOG, tol).value


def i_direct(alpha: float, beta: float, tol: float = DEFAULT_TOL) -> float:
    """I(alpha, beta) = D1 - D2 for 0 <= beta <= alpha <= 1.

    The corner diagonal points (0, 0) and (1, 1), where the two terms are
    individually divergent or indeterminate, return the continuity limit 0.
    """
    alpha = _check_unit("alpha", alpha)
    beta = _check_unit("beta", beta)
    if beta > alpha:
        raise DomainError(f"I requires beta <= alpha, got ({alpha!r}, {beta!r})")
    if alpha == beta and (alpha == 0.0 or alpha == 1.0):
        return 0.0
    first = i_first_term(alpha, beta, 0.5 * tol)
    second = i_second_term(alpha, beta, 0.5 * tol)
    return first - second


def i1a_representation(alpha: float, beta: float, tol: float = DEFAULT_TOL) -> float:
    """D1 via K-kernel single integrals split at beta.

    (1/pi) integral_0^beta K(sqrt(1-beta)) K(sqrt(t)) dt / ((sqrt(t)+sqrt(alpha)) sqrt(t))
    + (1/pi) integral_beta^1 K(sqrt(beta)) K(sqrt(1-t)) dt / ((sqrt(t)+sqrt(alpha)) sqrt(t)).
    """
    alpha = _check_unit("alpha", alpha, lo_open=True, hi_open=True)
    beta = _check_unit("beta", beta, lo_open=True, hi_open=True)
    kp_beta = complete_kprime(beta)
    k_beta = complete_k(beta)
    root_alpha = math.sqrt(alpha)

    def low(t: float) -> float:
        rt = math.sqrt(t)
        return kp_beta * complete_k(t) / ((rt + root_alpha) * rt)

    def high(t: float) -> float:
        rt = math.sqrt(t)
        return k_beta * complete_kprime(t) / ((rt + root_alpha) * rt)

    part1 = integrate(low, 0.0, beta, _LEFT_SQRT, 0.5 * tol).value
    part2 = integrate(high, beta, 1.0, _RIGHT_LOG, 0.5 * tol).value
    return (part1 + part2) / _PI


def i1b_representation(alpha: float, beta: float, tol: float = DEFAULT_TOL) -> float:
    """D1 via the complementary K-kernel route.

    K(sqrt(1-alpha)) K(sqrt(1-beta)) minus the kernels of the first route
    with alpha and beta exchanged; equal to :func:`i1a_representation`.
    """
    alpha = _check_unit("alpha", alpha, lo_open=True, hi_open=True)
    beta = _check_unit("beta", beta, lo_open=True, hi_open=True)
    kp_alpha = complete_kprime(alpha)
    k_alpha = complete_k(alpha)
    root_beta = math.sqrt(beta)

    def low(t: float) -> float:
        rt = math.sqrt(t)
        return kp_alpha * complete_k(t) / ((rt + root_beta) * rt)

    def high(t: float) -> float:
        rt = math.sqrt(t)
        return k_alpha * complete_kprime(t) / ((rt + root_beta) * rt)

    part1 = integrate(low, 0.0, alpha, _LEFT_SQRT, 0.5 * tol).value
    part2 = integrate(high, alpha, 1.0, _RIGHT_LOG, 0.5 * tol).value
    return kp_alpha * complete_kprime(beta) - (part1 + part2) / _PI


def i2_representation(alpha: float, beta: float, tol: float = DEFAULT_TOL) -> float:
    """D2 via K-kernels: a principal value at alpha plus three regular pieces.

    - P-integral of -K(sqrt(beta)) K(sqrt(1-t)) / (pi (alpha - t)) over [0, 1];
    - the kernel difference [K(sqrt(1-beta)) K(sqrt(t)) -
      K(sqrt(beta)) K(sqrt(1-t))] / (alpha - t) over [0, beta], regular there
      because beta < alpha;
    - two sqrt(1-t)-kernel integrals, the second reflected to put its
      inverse-square-root endpoint at 0.

    Requires strictly 0 < beta < alpha < 1.
    """
    alpha = _check_unit("alpha", alpha, lo_open=True, hi_open=True)
    beta = _check_unit("beta", beta, lo_open=True, hi_open=True)
    if beta >= alpha:
        raise DomainError(f"D2 kernels require beta < alpha, got ({alpha!r}, {beta!r})")
    k_beta = complete_k(beta)
    kp_beta = complete_kprime(beta)
    root_comp_alpha = math.sqrt(1.0 - alpha)
    alloc = 0.25 * tol

    def pole_kernel(t: float) -> float:
        return k_beta * complete_kprime(t) / _PI

    term1 = -cauchy_pv(pole_kernel, 0.0, 1.0, alpha, _LEFT_LOG, alloc).value

    def difference_kernel(t: float) -> float:
        return (kp_beta * complete_k(t) - k_beta * complete_kprime(t)) / (alpha - t)

    term2 = -integrate(difference_kernel, 0.0, beta, _LEFT_LOG, alloc).value / _PI

    def low_weighted(t: float) -> float:
        root = math.sqrt(1.0 - t)
        return kp_beta * complete_k(t) / ((root + root_comp_alpha) * root)

    term3 = integrate(low_weighted, 0.0, beta, None, alloc).value / _PI

    # reflected: integral_beta^1 K(sqrt(beta)) K(sqrt(1-t)) dt
    #            / ((sqrt(1-t)+sqrt(1-alpha)) sqrt(1-t))  with u = 1 - t
    def high_weighted(u: float) -> float:
        ru = math.sqrt(u)
        return k_beta * complete_k(u) / ((ru + root_comp_alpha) * ru)

    term4 = integrate(high_weighted, 0.0, 1.0 - beta, _LEFT_SQRT, alloc).value / _PI
    return term1 + term2 + term3 + term4


def i_representation(alpha: float, beta: float, tol: float = DEFAULT_TOL) -> float:
    """I(alpha, beta) assembled purely from K-kernel single integrals.

    This is the combination that makes the swap-complement symmetry
    I(alpha, beta) = I(1-beta, 1-alpha) manifest; requires 0 < beta < alpha < 1.
    """
    alpha = _check_unit("alpha", alpha, lo_open=True, hi_open=True)
    beta = _check_unit("beta", beta, lo_open=True, hi_open=True)
    if beta >= alpha:
        raise DomainError(
            f"kernel representation requires beta < alpha, got ({alpha!r}, {beta!r})"
        )
    k_alpha = complete_k(alpha)
    kp_alpha = complete_kprime(alpha)
    k_beta = complete_k(beta)
    kp_beta = complete_kprime(beta)
    root_alpha = math.sqrt(alpha)
    root_beta = math.sqrt(beta)
    root_comp_alpha = math.sqrt(1.0 - alpha)
    alloc = tol / 6.0

    closed = kp_alpha * kp_beta

    def near_pole_low(t: float) -> float:
        return kp_beta * complete_k(t) / (alpha - t)

    t_b = integrate(near_pole_low, 0.0, beta, None, alloc).value / _PI

    def pole_kernel(t: float) -> float:
        return k_beta * complete_kprime(t) / _PI

    t_c = cauchy_pv(pole_kernel, beta, 1.0, alpha, None, alloc).value

    def sqrt_kernel_low(t: float) -> float:
        rt = math.sqrt(t)
        return kp_alpha * complete_k(t) / ((rt + root_beta) * rt)

    t_d = -integrate(sqrt_kernel_low, 0.0, alpha, _LEFT_SQRT, alloc).value / _PI

    def sqrt_kernel_high(t: float) -> float:
        rt = math.sqrt(t)
        return k_alpha * complete_kprime(t) / ((rt + root_beta) * rt)

    t_e = -integrate(sqrt_kernel_high, alpha, 1.0, _RIGHT_LOG, alloc).value / _PI

    def tail_high(s: float) -> float:
        rs = math.sqrt(s)
        return kp_beta * complete_kprime(s) / ((rs + root_comp_alpha) * rs)

    t_f = -integrate(tail_high, 1.0 - beta, 1.0, _RIGHT_LOG, alloc).value / _PI

    def tail_low(s: float) -> float:
        rs = math.sqrt(s)
        return k_beta * complete_k(s) / ((rs + root_comp_alpha) * rs)

    t_g = -integrate(tail_low, 0.0, 1.0 - beta, _LEFT_SQRT, alloc).value / _PI

    return closed + t_b + t_c + t_d + t_e + t_f + t_g
