"""Independent test oracles: nested adaptive 2-D quadrature and a
midpoint-pair principal-value rule with Richardson extrapolation.

Everything here goes through scipy (QUADPACK + scipy.special), never through
the package's own quadrature or special-function code, so agreement is a
genuine two-implementation cross-check.
"""

import math

from scipy.integrate import quad


def a_double_nested(p: float, q: float) -> float:
    """A(p, q) by brute-force nested adaptive quadrature."""

    def inner(x: float) -> float:
        v, _ = quad(
            lambda y: 1.0 / math.sqrt(1.0 + q * math.cos(y)),
            0.0,
            x,
            epsabs=1e-12,
            epsrel=1e-12,
            limit=200,
        )
        return v

    def outer(x: float) -> float:
        half = math.sin(0.5 * x)
        return inner(x) / math.sqrt((1.0 - p) + 2.0 * p * half * half)

    v, _ = quad(outer, 0.0, math.pi, epsabs=1e-10, epsrel=1e-10, limit=400)
    return v


def _amplitude_integral(t: float, m: float) -> float:
    v, _ = quad(
        lambda u: 1.0 / math.sqrt(1.0 - m * math.sin(u) ** 2),
        0.0,
        t,
        epsabs=1e-12,
        epsrel=1e-12,
        limit=200,
    )
    return v


def i_nested(alpha: float, beta: float) -> float:
    """I(alpha, beta) by brute-force nested adaptive quadrature."""

    def first(t: float) -> float:
        c = math.cos(t)
        return _amplitude_integral(t, 1.0 - beta) / math.sqrt(alpha + (1.0 - alpha) * c * c)

    def second(t: float) -> float:
        s = math.sin(t)
        c = math.cos(t)
        den = math.sqrt((alpha - beta) + (1.0 - alpha) * beta * s * s) * math.sqrt(
            alpha + (1.0 - alpha) * c * c
        )
        return math.sqrt(alpha * (1.0 - alpha)) * s * _amplitude_integral(t, 1.0 - alpha) / den

    half_pi = 0.5 * math.pi
    v1, _ = quad(first, 0.0, half_pi, epsabs=1e-10, epsrel=1e-10, limit=400)
    v2, _ = quad(second, 0.0, half_pi, epsabs=1e-10, epsrel=1e-10, limit=400)
    return v1 - v2


def pv_midpoint(g, a: float, b: float, c: float, n: int = 4096) -> float:
    """Principal value of integral_a^b g(t)/(c-t) dt by paired midpoints.

    The window [c-d, c+d] symmetric around the pole is summed as
    h * sum_k (g(c - u_k) - g(c + u_k)) / u_k over midpoints u_k, whose
    composite error is O(h^2); two mesh levels are combined by Richardson
    extrapolation.  The remaining outer pieces are pole-free and handled by
    adaptive quadrature.
    """
    d = min(c - a, b - c)

    def window(npts: int) -> float:
        h = d / npts
        acc = 0.0
        for k in range(npts):
            u = (k + 0.5) * h
            acc += (g(c - u) - g(c + u)) / u
        return acc * h

    coarse = window(n)
    fine = window(2 * n)
    win = (4.0 * fine - coarse) / 3.0

    tail = 0.0
    if c - d > a:
        v, _ = quad(lambda t: g(t) / (c - t), a, c - d, epsabs=1e-11, epsrel=1e-11, limit=400)
        tail += v
    if c + d < b:
        v, _ = quad(lambda t: g(t) / (c - t), c + d, b, epsabs=1e-11, epsrel=1e-11, limit=400)
        tail += v
    return win + tail


def g4c_nested(p: float, f: float) -> float:
    """4-contact geometry factor by brute-force nested quadrature."""
    from scipy.special import ellipk as ellipk_param

    kp = (1.0 - p) / (1.0 + p)
    kf = (1.0 - f) / (1.0 + f)
    norm = ellipk_param(1.0 - kp * kp) * ellipk_param(kf * kf)

    def inner(x: float) -> float:
        v, _ = quad(
            lambda y: 1.0 / (math.sqrt(1.0 - y * y) * math.sqrt(1.0 - kp * kp * y * y)),
            0.0,
            x,
            epsabs=1e-12,
            epsrel=1e-12,
            limit=200,
        )
        return v

    def outer(x: float) -> float:
        wt = math.sqrt(1.0 - x * x) * math.sqrt(1.0 - (1.0 - kf * kf) * (1.0 - x * x))
        return inner(x) / wt

    v, _ = quad(outer, 0.0, 1.0, epsabs=1e-10, epsrel=1e-10, limit=400)
    return v / norm
