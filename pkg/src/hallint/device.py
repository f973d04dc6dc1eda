"""Hall geometry factors and SNR for 3- and 4-contact devices.

Argument conventions, pinned per formula because the device formulas mix
them (writing K(k) for the modulus convention and m for the parameter
passed to the elliptic layer):

* 4-contact geometry factor: the printed arguments (1-p)/(1+p) and
  (1-f)/(1+f) are *moduli*, so m = ((1-p)/(1+p))**2 etc.
* 4-contact SNR ratio sqrt(K'(f) K(p) / (K(f) K'(p))): f and p themselves
  are moduli, so m = f**2 and m = p**2.
* 3-contact formulas: the printed arguments sqrt(alpha), sqrt(beta) are
  moduli, so alpha and beta are already parameters.

SNR values are proportionalities with the constant fixed to 1; every
symmetry claim is constant-independent, and the ``constant`` keyword scales
the output linearly for callers that want different units.

The equivalent-resistor-circuit map uses the period-ratio relations

    K'/K (alpha) = R_e R_d / ((R_e + 2 R_d) R_sh),    K'/K (beta) = R_d / R_sh.

The first ratio is strictly smaller than the second and K'/K is strictly
decreasing, so the recovered parameters always satisfy beta < alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .elliptic import complete_k, complete_kprime, incomplete_f, invert_ratio
from .errors import DivergenceError, DomainError
from .integrals import ParamPair, i_direct
from .quadrature import EndpointBehavior, integrate

__all__ = [
    "Resistances3C",
    "DeviceMetrics",
    "g_h0_4c",
    "g_h0_3c",
    "snr_3c",
    "snr_4c",
    "params_from_resistances",
    "complement_device",
]

_HALF_PI = 0.5 * math.pi
_BELOW_HALF_PI = math.nextafter(_HALF_PI, 0.0)

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class Resistances3C:
    """Equivalent-circuit resistances of a 3-contact device, all in ohms."""

    r_e: float
    r_d: float
    r_sh: float

    def __post_init__(self):
        for name, v in (("r_e", self.r_e), ("r_d", self.r_d), ("r_sh", self.r_sh)):
            if not (math.isfinite(v) and v > 0.0):
                raise DomainError(f"resistance {name} must be positive and finite, got {v!r}")


@dataclass(frozen=True)
class DeviceMetrics:
    """Geometry factor and SNR proportionality for one device."""

    geometry_factor: float
    snr_proportional: float

    def __post_init__(self):
        if not math.isfinite(self.geometry_factor):
            raise DomainError(f"geometry factor must be finite, got {self.geometry_factor!r}")
        if not math.isfinite(self.snr_proportional):
            raise DomainError(f"SNR must be finite, got {self.snr_proportional!r}")


def _check_open(name: str, v: float) -> float:
    v = float(v)
    if not (math.isfinite(v) and 0.0 < v < 1.0):
        raise DomainError(f"{name} must lie in the open interval (0, 1), got {v!r}")
    return v


def _check_ordered(alpha: float, beta: float):
    alpha = _check_open("alpha", alpha)
    beta = _check_open("beta", beta)
    if beta > alpha:
        raise DomainError(f"3-contact formulas require beta <= alpha, got ({alpha!r}, {beta!r})")
    return alpha, beta


def g_h0_4c(p: float, f: float, tol: float = DEFAULT_TOL) -> float:
    """Low-field geometry factor of the 4-contact device.

    With moduli k_p = (1-p)/(1+p) and k_f = (1-f)/(1+f),

        G = [K'(k_p) K(k_f)]^(-1) * integral_0^1
            F(arcsin x | k_p^2)
            / (sqrt(1-x^2) sqrt(1 - (1 - k_f^2)(1 - x^2))) dx,

    evaluated after the substitution x = sin(psi), which removes the
    1/sqrt(1-x^2) endpoint weight exactly:

        G = [K'(k_p) K(k_f)]^(-1) * integral_0^{pi/2}
            F(psi | k_p^2) / sqrt(k_f^2 + (1 - k_f^2) sin^2 psi) dpsi.

    As p -> 1 the modulus k_p -> 0 and the normalization K'(k_p) diverges
    (for any representable p < 1 it is still finite and computed accurately
    through the small complementary parameter); similarly K(k_f) diverges as
    f -> 0 and that divergence error propagates from the elliptic layer.
    """
    if float(p) == 1.0:
        raise DivergenceError(
            "normalization K'((1-p)/(1+p)) diverges at p = 1 (zero modulus)"
        )
    p = _check_open("p", p)
    f = _check_open("f", f)
    m_p = ((1.0 - p) / (1.0 + p)) ** 2
    m_f = ((1.0 - f) / (1.0 + f)) ** 2
    norm = complete_kprime(m_p) * complete_k(m_f)
    comp_f = 1.0 - m_f

    def integrand(psi: float) -> float:
        s = math.sin(psi)
        amp = psi if psi < _HALF_PI else _BELOW_HALF_PI
        return incomplete_f(amp, m_p) / math.sqrt(m_f + comp_f * s * s)

    behavior = EndpointBehavior.flags(left="inverse_sqrt" if m_f < 1e-6 else "regular")
    value = integrate(integrand, 0.0, _HALF_PI, behavior, tol * norm).value
    return value / norm


def g_h0_3c(alpha: float, beta: float, tol: float = DEFAULT_TOL) -> float:
    """Low-field geometry factor of the 3-contact device.

    G = 2 I(alpha, beta) / (K(sqrt(alpha)) K(sqrt(beta))); zero on the
    diagonal because I vanishes there.
    """
    alpha, beta = _check_ordered(alpha, beta)
    norm = complete_k(alpha) * complete_k(beta)
    return 2.0 * i_direct(alpha, beta, 0.5 * tol * norm) / norm


def snr_3c(alpha: float, beta: float, tol: float = DEFAULT_TOL, constant: float = 1.0) -> float:
    """SNR proportionality of the 3-contact device.

    I(alpha, beta) / sqrt(K(a) K'(a) K(b) K'(b)) in the parameter
    convention; invariant under the complement map
    (alpha, beta) -> (1-beta, 1-alpha).
    """
    alpha, beta = _check_ordered(alpha, beta)
    norm = math.sqrt(
        complete_k(alpha)
        * complete_kprime(alpha)
        * complete_k(beta)
        * complete_kprime(beta)
    )
    return constant * i_direct(alpha, beta, tol * norm) / norm


def snr_4c(p: float, f: float, tol: float = DEFAULT_TOL, constant: float = 1.0) -> float:
    """SNR proportionality of the 4-contact device.

    G_4C(p, f) * sqrt(K'(f) K(p)) / sqrt(K(f) K'(p)) with f and p read as
    moduli (parameters f**2, p**2).
    """
    p = _check_open("p", p)
    f = _check_open("f", f)
    ratio = math.sqrt(
        complete_kprime(f * f)
        * complete_k(p * p)
        / (complete_k(f * f) * complete_kprime(p * p))
    )
    return constant * g_h0_4c(p, f, tol) * ratio


def params_from_resistances(r: Resistances3C) -> ParamPair:
    """Recover (alpha, beta) from the equivalent-circuit resistances.

    beta solves K'/K = R_d / R_sh and alpha solves
    K'/K = R_e R_d / ((R_e + 2 R_d) R_sh); the result satisfies beta < alpha
    (equality only when the ratios collide in floating point, e.g. in the
    R_e -> infinity limit where alpha -> beta).
    """
    if not isinstance(r, Resistances3C):
        r = Resistances3C(*r)
    ratio_beta = r.r_d / r.r_sh
    ratio_alpha = r.r_e * r.r_d / ((r.r_e + 2.0 * r.r_d) * r.r_sh)
    alpha = invert_ratio(ratio_alpha)
    beta = invert_ratio(ratio_beta)
    return ParamPair(alpha, beta)


def complement_device(pair: ParamPair) -> ParamPair:
    """The complementary device (contacts and insulating boundaries swapped).

    Maps (alpha, beta) to (1-beta, 1-alpha); an involution that preserves
    the ordering constraint.
    """
    if not isinstance(pair, ParamPair):
        pair = ParamPair(*pair)
    return pair.swap_complement()
