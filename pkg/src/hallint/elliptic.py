"""Scalar elliptic integrals in the parameter convention m = k**2.

Every function in this module takes the *parameter* m (the squared modulus),
so ``complete_k(m)`` is K(sqrt(m)) in the modulus convention

    K(k) = integral_0^{pi/2} dt / sqrt(1 - k^2 sin^2 t).

Mixing the two conventions is the classic source of elliptic-integral bugs;
callers that start from a modulus k must pass ``k*k``.  The complementary
parameter is ``1 - m`` and ``complete_kprime(m) == complete_k(1 - m)``.

Evaluation routes: the complete integrals go through the arithmetic-geometric
mean (quadratically convergent, no quadrature involved), the incomplete
integral through the Carlson symmetric form R_F with the standard duplication
algorithm.  All routines are pure functions of their scalar inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import AccuracyError, DivergenceError, DomainError

__all__ = [
    "Parameter",
    "EllipticPair",
    "agm",
    "carlson_rf",
    "complete_k",
    "complete_kprime",
    "complete_e",
    "incomplete_f",
    "dk_dm",
    "kprime_over_k",
    "nome",
    "invert_ratio",
]

_EPS = math.ulp(1.0)
_HALF_PI = 0.5 * math.pi

# Parameters above this edge are treated as divergent: the complement 1 - m
# has lost all relative accuracy there, and a huge-but-finite K would
# silently poison downstream principal-value integrals.
K_DIVERGENCE_EDGE = 1.0 - 1e-12


@dataclass(frozen=True)
class Parameter:
    """An elliptic parameter m = k**2 restricted to [0, 1].

    ``complement()`` maps m to 1 - m and is an involution.  Instances coerce
    to float, so they can be passed anywhere a bare parameter is accepted.
    """

    m: float

    def __post_init__(self):
        object.__setattr__(self, "m", _check_param(self.m))

    def complement(self) -> "Parameter":
        return Parameter(1.0 - self.m)

    def __float__(self) -> float:
        return self.m


@dataclass(frozen=True)
class EllipticPair:
    """The value pair (K(sqrt(m)), K'(sqrt(m))) for one parameter.

    Both entries are strictly positive and finite; at m = 1/2 they coincide.
    """

    k_value: float
    kprime_value: float

    def __post_init__(self):
        for name, v in (("k_value", self.k_value), ("kprime_value", self.kprime_value)):
            if not (math.isfinite(v) and v > 0.0):
                raise DomainError(f"{name} must be positive and finite, got {v!r}")

    @classmethod
    def from_parameter(cls, m) -> "EllipticPair":
        m = _check_param(m)
        return cls(complete_k(m), complete_kprime(m))


def _check_param(m) -> float:
    m = float(m)
    if not math.isfinite(m):
        raise DomainError(f"elliptic parameter must be finite, got {m!r}")
    if not 0.0 <= m <= 1.0:
        raise DomainError(f"elliptic parameter must lie in [0, 1], got {m!r}")
    return m


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of a > 0 and b >= 0.

    Iterates (a, b) -> ((a+b)/2, sqrt(ab)) until the two agree to unit
    roundoff; convergence is quadratic.  agm(1, 0) collapses to 0.
    """
    a = float(a)
    b = float(b)
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError(f"agm arguments must be finite, got ({a!r}, {b!r})")
    if a <= 0.0 or b < 0.0:
        raise DomainError(f"agm requires a > 0 and b >= 0, got ({a!r}, {b!r})")
    if b == 0.0:
        return 0.0
    for _ in range(200):
        if abs(a - b) <= 4.0 * _EPS * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def carlson_rf(x: float, y: float, z: float) -> float:
    """Carlson symmetric integral R_F(x, y, z) for nonnegative arguments.

    R_F(x,y,z) = (1/2) * integral_0^inf dt / sqrt((t+x)(t+y)(t+z)), evaluated
    by the duplication theorem with a fifth-order Taylor tail.  At most one
    argument may be zero.
    """
    if not (math.isfinite(x) and math.isfinite(y) and math.isfinite(z)):
        raise DomainError(f"carlson_rf arguments must be finite, got ({x!r}, {y!r}, {z!r})")
    if x < 0.0 or y < 0.0 or z < 0.0:
        raise DomainError(f"carlson_rf requires nonnegative arguments, got ({x}, {y}, {z})")
    if (x == 0.0) + (y == 0.0) + (z == 0.0) > 1:
        raise DomainError("carlson_rf allows at most one zero argument")
    a0 = am = (x + y + z) / 3.0
    q = (3.0 * _EPS) ** (-1.0 / 6.0) * max(abs(a0 - x), abs(a0 - y), abs(a0 - z))
    xm, ym, zm = x, y, z
    pow4 = 1.0
    while pow4 * q >= abs(am):
        sx = math.sqrt(xm)
        sy = math.sqrt(ym)
        sz = math.sqrt(zm)
        lam = sx * (sy + sz) + sy * sz
        xm = 0.25 * (xm + lam)
        ym = 0.25 * (ym + lam)
        zm = 0.25 * (zm + lam)
        am = 0.25 * (am + lam)
        pow4 *= 0.25
    t = pow4 / am
    big_x = (a0 - x) * t
    big_y = (a0 - y) * t
    big_z = -big_x - big_y
    e2 = big_x * big_y - big_z * big_z
    e3 = big_x * big_y * big_z
    series = 9240.0 - 924.0 * e2 + 385.0 * e2 * e2 + 660.0 * e3 - 630.0 * e2 * e3
    return series / (9240.0 * math.sqrt(am))


def complete_k(m) -> float:
    """Complete elliptic integral of the first kind, K(sqrt(m)) = pi/(2 agm(1, sqrt(1-m))).

    Diverges logarithmically as m -> 1; parameters beyond ``K_DIVERGENCE_EDGE``
    raise :class:`DivergenceError` (use :func:`complete_kprime` with the small
    complementary parameter instead, which stays accurate arbitrarily close
    to the singularity).
    """
    m = _check_param(m)
    if m > K_DIVERGENCE_EDGE:
        raise DivergenceError(
            f"K diverges as the parameter approaches 1 (got m={m!r}); "
            "pass the small complement to complete_kprime instead"
        )
    return _HALF_PI / agm(1.0, math.sqrt(1.0 - m))


def complete_kprime(m) -> float:
    """Complementary integral K'(sqrt(m)) = K(sqrt(1-m)) = pi/(2 agm(1, sqrt(m))).

    Computed directly from m, so tiny parameters keep full relative accuracy
    (K'(sqrt(1e-30)) is fine); only m = 0 diverges.
    """
    m = _check_param(m)
    if m == 0.0:
        raise DivergenceError("K' diverges at parameter 0")
    return _HALF_PI / agm(1.0, math.sqrt(m))


def complete_e(m) -> float:
    """Complete elliptic integral of the second kind, parameter convention.

    E(m) = integral_0^{pi/2} sqrt(1 - m sin^2 t) dt, via the AGM run that
    also yields K, accumulating sum(2^(n-1) c_n^2) with c_0 = sqrt(m).
    """
    m = _check_param(m)
    if m == 0.0:
        return _HALF_PI
    if m == 1.0:
        return 1.0
    a = 1.0
    b = math.sqrt(1.0 - m)
    s = 0.5 * m  # 2^(-1) * c_0^2
    w = 1.0
    for _ in range(200):
        c = 0.5 * (a - b)
        if c <= 2.0 * _EPS * a:
            s += w * c * c
            break
        s += w * c * c
        w *= 2.0
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    k_val = _HALF_PI / (0.5 * (a + b))
    return k_val * (1.0 - s)


def incomplete_f(phi: float, m) -> float:
    """Incomplete elliptic integral F(phi | m) for 0 <= phi <= pi/2.

    F(phi | m) = integral_0^phi dt / sqrt(1 - m sin^2 t)
               = sin(phi) * R_F(cos^2 phi, 1 - m sin^2 phi, 1).

    At phi = pi/2 this reduces exactly to ``complete_k(m)``; at m = 1 it is
    asinh(tan(phi)), finite for phi < pi/2.
    """
    phi = float(phi)
    m = _check_param(m)
    if not math.isfinite(phi):
        raise DomainError(f"amplitude must be finite, got {phi!r}")
    if phi < 0.0 or phi > _HALF_PI:
        raise DomainError(f"amplitude must lie in [0, pi/2], got {phi!r}")
    if phi == 0.0:
        return 0.0
    if phi == _HALF_PI:
        return complete_k(m)
    if m == 1.0:
        return math.asinh(math.tan(phi))
    s = math.sin(phi)
    c = math.cos(phi)
    return s * carlson_rf(c * c, 1.0 - m * s * s, 1.0)


def dk_dm(m) -> float:
    """Analytic derivative dK/dm = (E(m) - (1-m) K(m)) / (2 m (1-m))."""
    m = _check_param(m)
    if m == 0.0 or m == 1.0:
        raise DomainError(f"dK/dm requires m in the open interval (0, 1), got {m!r}")
    return (complete_e(m) - (1.0 - m) * complete_k(m)) / (2.0 * m * (1.0 - m))


def kprime_over_k(m) -> float:
    """The period ratio K'(sqrt(m)) / K(sqrt(m)), strictly decreasing on (0, 1).

    Evaluated as agm(1, sqrt(1-m)) / agm(1, sqrt(m)), which stays finite and
    accurate over the whole open interval.
    """
    m = _check_param(m)
    if m == 0.0 or m == 1.0:
        raise DomainError(f"K'/K requires m in the open interval (0, 1), got {m!r}")
    return agm(1.0, math.sqrt(1.0 - m)) / agm(1.0, math.sqrt(m))


def nome(m) -> float:
    """The elliptic nome q = exp(-pi K'/K), in (0, 1) for m in (0, 1)."""
    m = _check_param(m)
    if m == 0.0 or m == 1.0:
        raise DomainError(f"nome requires m in the open interval (0, 1), got {m!r}")
    return math.exp(-math.pi * kprime_over_k(m))


def _lambda_from_nome(q: float) -> float:
    """Modular lambda (theta_2/theta_3)^4 from the nome, by truncated series.

    Converges extremely fast for q <= exp(-pi); terms are added until the
    increment drops below 1e-17.
    """
    th2 = 1.0  # leading 2*q^(1/4) factored out
    term_exp = 0
    n = 1
    while True:
        term_exp = n * (n + 1)
        term = q ** term_exp
        th2 += term
        if term < 1e-17:
            break
        n += 1
    th2 *= 2.0 * q ** 0.25
    th3 = 1.0
    n = 1
    while True:
        term = 2.0 * q ** (n * n)
        th3 += term
        if term < 1e-17:
            break
        n += 1
    r = th2 / th3
    return r * r * r * r


def invert_ratio(r: float) -> float:
    """Solve K'(sqrt(m)) / K(sqrt(m)) = r for the unique parameter m.

    The ratio is strictly decreasing, so the solution is unique; r = 1 gives
    the self-complementary point m = 1/2 and invert_ratio(1/r) = 1 - m by the
    complement symmetry (used internally to keep the nome small).  The seed
    comes from the theta-series inversion of the nome q = exp(-pi r) and is
    polished by Newton steps on the ratio; the returned m satisfies
    |K'/K - r| <= 1e-12 * max(1, r) wherever a double can express that.

    Representation limit: for small r the solution sits within a whisker of
    1, where doubles are spaced 2^-53.  The result is then the correctly
    rounded parameter (complement accurate to half an ulp of 1), but
    re-evaluating the ratio from it can deviate by more than the nominal
    residual bound once r drops below roughly 0.17; at r below ~0.08 the
    solution rounds to exactly 1 and an :class:`AccuracyError` is raised.
    """
    r = float(r)
    if not math.isfinite(r) or r <= 0.0:
        raise DomainError(f"period ratio must be positive and finite, got {r!r}")
    if r == 1.0:
        return 0.5
    if r < 1.0:
        m = 1.0 - invert_ratio(1.0 / r)
        if m >= 1.0:
            raise AccuracyError(
                f"solution for ratio {r!r} is within one ulp of 1 and cannot be "
                "represented in double precision",
                value=1.0,
            )
        return m
    q = math.exp(-math.pi * r)
    lam = _lambda_from_nome(q)
    if lam <= 0.0:
        raise AccuracyError(
            f"parameter underflows double precision for ratio {r!r}", value=0.0
        )
    for _ in range(6):
        k_val = _HALF_PI / agm(1.0, math.sqrt(1.0 - lam))
        resid = kprime_over_k(lam) - r
        if abs(resid) <= 1e-14 * max(1.0, r):
            break
        deriv = -math.pi / (4.0 * lam * (1.0 - lam) * k_val * k_val)
        step = resid / deriv
        lam -= step
        if lam <= 0.0 or lam >= 1.0:
            raise AccuracyError(f"ratio inversion left (0,1) for r={r!r}", value=lam)
    resid = kprime_over_k(lam) - r
    if abs(resid) > 1e-12 * max(1.0, r):
        raise AccuracyError(
            f"ratio inversion residual {resid:.3e} exceeds tolerance for r={r!r}",
            value=lam,
            error_estimate=abs(resid),
        )
    return lam
