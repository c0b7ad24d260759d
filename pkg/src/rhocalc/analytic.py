"""Floating-point lattice series and end-to-end numeric checks.

Covers the theta-type series E_nu and F_nu, the Kronecker-limit identity
tying the u-integral of F_nu to the sigma-derivative of E_nu, classical
and generalized log Dedekind-eta functions with their modular
transformation defects, the flat-torus Laplace spectrum, and numeric
re-derivations of the hyperbolic Eta/Rho quantities whose exact values
the rest of the package computes in rational arithmetic.

Conventions: sigma = sigma1 + i sigma2 with sigma2 > 0; q_sigma =
e^{2 pi i sigma}; z = nu1 sigma - nu2 and q_z = e^{2 pi i z}.  All series
terms are evaluated in forms whose factors stay bounded (for example
e^{i s}/sin(s) is rewritten as -2i q/(1-q) with q = e^{2 i s}), so no
intermediate overflows even far along the tail.  Logarithms take the
principal branch on the plane cut along the negative real axis, and
every argument is checked to stay off the cut.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from scipy.integrate import quad

from ._kernels import f_direct_sum, f_poisson_sum
from .bernoulli import RationalLike, periodic_bernoulli
from .dedekind import classical_sum, generalized_sum
from .errors import (
    AdmissibilityError,
    ConvergenceError,
    DomainError,
    QuadratureError,
    UnsupportedClassError,
)
from .moduli import connection_from_nu
from .sl2z import (
    Hyperbolic,
    SL2ZMatrix,
    UpperHalfPoint,
    classify,
    invariant_path_sigma,
    moebius_op_action,
)

__all__ = [
    "SeriesParams",
    "ComplexValue",
    "e_series",
    "e_series_with_count",
    "f_series",
    "f_series_direct",
    "f_series_poisson",
    "kronecker_integral",
    "kronecker_integral_info",
    "kronecker_closed",
    "log_eta",
    "log_eta_gen",
    "transform_defect",
    "transform_defect_gen",
    "torus_spectrum",
    "rho_form_hyp_numeric",
    "eta_untwisted_numeric",
]

_TWO_PI = 2.0 * math.pi


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class SeriesParams:
    """Truncation and quadrature policy for every series in this module."""

    tail_tolerance: float = 1e-14
    max_terms: int = 10**6
    quad_tolerance: float = 1e-9
    poisson_switch_u: float = 1.0

    def __post_init__(self) -> None:
        for name in ("tail_tolerance", "max_terms", "quad_tolerance", "poisson_switch_u"):
            if getattr(self, name) <= 0:
                raise DomainError(f"SeriesParams.{name} must be positive")


DEFAULT_SERIES_PARAMS = SeriesParams()


@dataclass(frozen=True)
class ComplexValue:
    re: float
    im: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise DomainError("ComplexValue components must be finite")

    @classmethod
    def from_complex(cls, value: complex) -> "ComplexValue":
        return cls(float(value.real), float(value.imag))

    def as_complex(self) -> complex:
        return complex(self.re, self.im)


def _params(params: Optional[SeriesParams]) -> SeriesParams:
    return DEFAULT_SERIES_PARAMS if params is None else params


def _reduce_nu1(nu1: RationalLike) -> Fraction:
    nu1 = Fraction(nu1)
    return nu1 - math.floor(nu1)


def _qz(sigma: complex, nu1: Fraction, nu2: Fraction) -> complex:
    z = float(nu1) * sigma - float(nu2)
    return cmath.exp(2j * math.pi * z)


# -- E series ---------------------------------------------------------------


def e_series_with_count(
    sigma: UpperHalfPoint,
    nu: Tuple[RationalLike, RationalLike],
    params: Optional[SeriesParams] = None,
    method: str = "cotangent",
) -> Tuple[ComplexValue, int]:
    """e_series plus the number of outer terms actually summed."""
    params = _params(params)
    if method not in ("cotangent", "double-sum"):
        raise DomainError("method must be 'cotangent' or 'double-sum'")
    sc = sigma.as_complex()
    nu1 = _reduce_nu1(nu[0])
    nu2 = Fraction(nu[1])
    q_sigma = cmath.exp(2j * math.pi * sc)
    q_z = _qz(sc, nu1, nu2)
    total = 0.0 + 0.0j
    terms = 0
    cut = params.tail_tolerance * 0.1

    if method == "double-sum":
        # literal truncation of the defining nested sum
        if nu1 != 0:
            abs_qz = abs(q_z)
            qn = q_z
            n = 1
            while True:
                total += qn / n
                terms += 1
                if abs_qz ** (n + 1) / ((n + 1) * (1.0 - abs_qz)) < cut:
                    break
                n += 1
                if n > params.max_terms:
                    raise ConvergenceError(
                        "e_series single sum: max_terms exceeded before tail bound"
                    )
                qn *= q_z
        qzn = 1.0 + 0.0j  # q_z^n
        rn = 1.0 + 0.0j  # (q_sigma / q_z)^n, stays bounded since nu1 < 1
        qsn = 1.0 + 0.0j
        ratio_r = q_sigma / q_z
        small = 0
        n = 0
        while small < 3:
            n += 1
            if n > params.max_terms:
                raise ConvergenceError("e_series double sum: max_terms exceeded")
            qzn *= q_z
            rn *= ratio_r
            qsn *= q_sigma
            coeff = (qzn * qsn + rn) / n  # (q_z^n + q_z^{-n}) q_sigma^{n} split
            # inner m-sum done literally: coeff * (1 + q_sigma^n + q_sigma^{2n} + ...)
            inner = 0.0 + 0.0j
            powm = 1.0 + 0.0j
            m = 0
            abs_qsn = abs(qsn)
            while True:
                inner += powm
                m += 1
                if abs_qsn**m / (1.0 - abs_qsn) < cut:
                    break
                if m > params.max_terms:
                    raise ConvergenceError("e_series inner sum: max_terms exceeded")
                powm *= qsn
            t = coeff * inner
            total += t
            terms += 1
            if n >= 8 and abs(t) < cut:
                small += 1
            else:
                small = 0
        return ComplexValue.from_complex(total), terms

    # cotangent resummation: per-n closed form of the inner geometric sum,
    # i cos(w - s)/sin(s)/n rewritten overflow-free
    qzn = 1.0 + 0.0j
    rn = 1.0 + 0.0j
    qsn = 1.0 + 0.0j
    ratio_r = q_sigma / q_z
    small = 0
    n = 0
    while small < 3:
        n += 1
        if n > params.max_terms:
            raise ConvergenceError("e_series cotangent sum: max_terms exceeded")
        qzn *= q_z
        rn *= ratio_r
        qsn *= q_sigma
        if nu1 == 0:
            t = (qzn + 1.0 / qzn) * qsn / ((1.0 - qsn) * n)
        else:
            t = (qzn + rn) / ((1.0 - qsn) * n)
        total += t
        terms += 1
        if n >= 8 and abs(t) < cut:
            small += 1
        else:
            small = 0
    return ComplexValue.from_complex(total), terms


def e_series(
    sigma: UpperHalfPoint,
    nu: Tuple[RationalLike, RationalLike],
    params: Optional[SeriesParams] = None,
    method: str = "cotangent",
) -> ComplexValue:
    """E_nu(sigma), with nu1 reduced mod Z; the nu1 = 0 branch omits the
    single sum over q_z."""
    value, _ = e_series_with_count(sigma, nu, params, method)
    return value


def _e_series_dsigma(
    sigma: UpperHalfPoint,
    nu: Tuple[RationalLike, RationalLike],
    params: SeriesParams,
) -> Tuple[complex, int]:
    """Term-wise d/dsigma of E_nu; every term an explicit exponential."""
    sc = sigma.as_complex()
    nu1 = _reduce_nu1(nu[0])
    nu2 = Fraction(nu[1])
    nu1f = float(nu1)
    q_sigma = cmath.exp(2j * math.pi * sc)
    q_z = _qz(sc, nu1, nu2)
    total = 0.0 + 0.0j
    terms = 0
    if nu1 != 0:
        total += 2j * math.pi * nu1f * q_z / (1.0 - q_z)
        terms += 1
    qzn = 1.0 + 0.0j
    rn = 1.0 + 0.0j
    qsn = 1.0 + 0.0j
    ratio_r = q_sigma / q_z
    cut = params.tail_tolerance * 0.1
    small = 0
    n = 0
    while small < 3:
        n += 1
        if n > params.max_terms:
            raise ConvergenceError("e_series derivative: max_terms exceeded")
        qzn *= q_z
        rn *= ratio_r
        qsn *= q_sigma
        g1 = qsn / (1.0 - qsn)
        g2 = qsn / (1.0 - qsn) ** 2
        if nu1 == 0:
            t = 2j * math.pi * (qzn + 1.0 / qzn) * g2
        else:
            # (q_z^n -+ q_z^{-n}) q_sigma^n written via rn = (q_sigma/q_z)^n
            t = 2j * math.pi * (
                nu1f * (qzn * qsn - rn) / (1.0 - qsn) + (qzn * qsn + rn) / (1.0 - qsn) ** 2
            )
        total += t
        terms += 1
        if n >= 8 and abs(t) < cut:
            small += 1
        else:
            small = 0
    return total, terms


# -- F series and the Kronecker limit identity ------------------------------


def _tail_cut(params: SeriesParams) -> float:
    return max(params.tail_tolerance * 1e-2, 1e-300)


def f_series_direct(
    sigma: UpperHalfPoint,
    u: float,
    nu: Tuple[RationalLike, RationalLike],
    params: Optional[SeriesParams] = None,
) -> ComplexValue:
    """Direct lattice sum sum_n (wbar_{n-nu})^2 e^{-u sigma2 |w_{n-nu}|^2}."""
    params = _params(params)
    if u <= 0:
        raise DomainError("f_series requires u > 0")
    s1, s2 = sigma.sigma1, sigma.sigma2
    nu1f, nu2f = float(Fraction(nu[0])), float(Fraction(nu[1]))
    gamma = u * math.pi * math.pi / s2
    big_l = -math.log(_tail_cut(params)) + 10.0
    x_max = math.sqrt(big_l / gamma)
    half = x_max / s2 + 1.0
    n1_lo = math.floor(nu1f - half)
    n1_hi = math.ceil(nu1f + half)
    value = f_direct_sum(s1, s2, u, nu1f, nu2f, n1_lo, n1_hi, x_max)
    return ComplexValue.from_complex(value)


def f_series_poisson(
    sigma: UpperHalfPoint,
    u: float,
    nu: Tuple[RationalLike, RationalLike],
    params: Optional[SeriesParams] = None,
) -> ComplexValue:
    """Poisson-resummed form (1/(pi sigma2^2)) u^-3 sum_{n != 0} ...; the
    n = 0 term is absent, so the value vanishes as u -> 0+."""
    params = _params(params)
    if u <= 0:
        raise DomainError("f_series requires u > 0")
    s1, s2 = sigma.sigma1, sigma.sigma2
    nu1f, nu2f = float(Fraction(nu[0])), float(Fraction(nu[1]))
    big_l = -math.log(_tail_cut(params)) + 10.0
    x_max = math.sqrt(big_l * u * s2)
    half = x_max / s2 + 1.0
    n2_lo = math.floor(-half)
    n2_hi = math.ceil(half)
    raw = f_poisson_sum(s1, s2, u, nu1f, nu2f, n2_lo, n2_hi, x_max)
    if raw == 0:
        return ComplexValue(0.0, 0.0)  # deep-tail underflow; exact limit is 0
    value = raw / (math.pi * s2 * s2 * u**3)
    return ComplexValue.from_complex(value)


def f_series(
    sigma: UpperHalfPoint,
    u: float,
    nu: Tuple[RationalLike, RationalLike],
    params: Optional[SeriesParams] = None,
) -> ComplexValue:
    """F_nu(sigma, u): direct lattice sum for u >= poisson_switch_u, the
    Poisson-dual form below it; both truncated by the Gaussian tail bound."""
    params = _params(params)
    if u >= params.poisson_switch_u:
        return f_series_direct(sigma, u, nu, params)
    return f_series_poisson(sigma, u, nu, params)


def _min_lattice_dist2(sigma: UpperHalfPoint, nu1f: float, nu2f: float) -> float:
    """min over m in Z^2 - nu, m != 0, of |m2 - sigma m1|^2 (decay rate of
    the direct sum's slowest surviving term)."""
    s1, s2 = sigma.sigma1, sigma.sigma2
    best = 16.0 * s2 * s2  # any |m1| >= 4 row is at least this far out
    for n1 in range(-3, 4):
        m1 = n1 - nu1f
        center = nu2f + s1 * m1
        for n2 in (math.floor(center), math.ceil(center), math.floor(center) - 1, math.ceil(center) + 1):
            m2 = n2 - nu2f
            d2 = (m2 - s1 * m1) ** 2 + s2 * s2 * m1 * m1
            if d2 > 1e-18 and d2 < best:
                best = d2
    return best


def kronecker_integral_info(
    sigma: UpperHalfPoint,
    nu: Tuple[RationalLike, RationalLike],
    params: Optional[SeriesParams] = None,
) -> Tuple[ComplexValue, Dict[str, float]]:
    """(1/2 pi) integral_0^inf F_nu(sigma, u) du with quadrature diagnostics."""
    params = _params(params)
    switch = params.poisson_switch_u
    nu1f, nu2f = float(Fraction(nu[0])), float(Fraction(nu[1]))
    rate = (math.pi**2 / sigma.sigma2) * _min_lattice_dist2(sigma, nu1f, nu2f)
    scale = abs(f_series(sigma, switch, nu, params).as_complex()) + 1.0
    u_max = switch + max(1.0, math.log(20.0 * math.pi * scale / (rate * params.quad_tolerance)) / rate)

    def integrand(u: float, take_im: bool) -> float:
        value = f_series(sigma, u, nu, params).as_complex()
        return value.imag if take_im else value.real

    total = 0.0 + 0.0j
    achieved = 0.0
    neval = 0
    for lo, hi in ((0.0, switch), (switch, u_max)):
        for take_im in (False, True):
            out = quad(
                integrand,
                lo,
                hi,
                args=(take_im,),
                epsabs=params.quad_tolerance / 8.0,
                epsrel=1e-12,
                limit=200,
                full_output=1,
            )
            if len(out) > 3:
                raise QuadratureError(
                    f"quadrature failed on [{lo:g}, {hi:g}]: {out[3]} "
                    f"(achieved abs error {out[1]:.3e})"
                )
            piece, abserr, info = out
            total += (1j * piece) if take_im else piece
            achieved += abserr
            neval += int(info["neval"])
    total /= _TWO_PI
    achieved /= _TWO_PI
    if achieved > params.quad_tolerance:
        raise QuadratureError(
            f"quadrature achieved only {achieved:.3e}, requested {params.quad_tolerance:.3e}"
        )
    diagnostics = {"neval": float(neval), "achieved_tolerance": achieved, "u_max": u_max}
    return ComplexValue.from_complex(total), diagnostics


def kronecker_integral(
    sigma: UpperHalfPoint,
    nu: Tuple[RationalLike, RationalLike],
    params: Optional[SeriesParams] = None,
) -> ComplexValue:
    value, _ = kronecker_integral_info(sigma, nu, params)
    return value


def kronecker_closed(
    sigma: UpperHalfPoint,
    nu: Tuple[RationalLike, RationalLike],
    params: Optional[SeriesParams] = None,
) -> ComplexValue:
    """P_2(nu_1) + (i/pi) d/dsigma E_nu(sigma); for nu in Z^2 the constant
    term becomes 1/6 - 1/(2 pi sigma2)."""
    params = _params(params)
    nu1 = _reduce_nu1(nu[0])
    integral_nu = nu1 == 0 and Fraction(nu[1]).denominator == 1
    base = float(periodic_bernoulli(2, nu1))
    if integral_nu:
        base -= 1.0 / (_TWO_PI * sigma.sigma2)
    deriv, _ = _e_series_dsigma(sigma, nu, params)
    value = base + (1j / math.pi) * deriv
    return ComplexValue.from_complex(value)


# -- log Dedekind eta and transformation defects ----------------------------


def log_eta(sigma: UpperHalfPoint, params: Optional[SeriesParams] = None) -> ComplexValue:
    """log eta(sigma) = pi i sigma/12 - sum_{n>0} q_sigma^n / (n (1 - q_sigma^n))."""
    params = _params(params)
    sc = sigma.as_complex()
    q_sigma = cmath.exp(2j * math.pi * sc)
    abs_q = abs(q_sigma)
    total = 1j * math.pi * sc / 12.0
    qsn = 1.0 + 0.0j
    n = 0
    while True:
        n += 1
        if n > params.max_terms:
            raise ConvergenceError("log_eta: max_terms exceeded before tail bound")
        qsn *= q_sigma
        total -= qsn / (n * (1.0 - qsn))
        if abs_q ** (n + 1) / ((n + 1) * (1.0 - abs_q)) < params.tail_tolerance:
            break
    return ComplexValue.from_complex(total)


def log_eta_gen(
    g: RationalLike,
    h: RationalLike,
    sigma: UpperHalfPoint,
    params: Optional[SeriesParams] = None,
) -> ComplexValue:
    """Generalized log eta_{g,h}(sigma) for (g, h) not in Z^2, g reduced
    mod Z:

    pi i phi(g,h) + pi i sigma P_2(g) - S1 - S2,  phi = -P_1(h) iff g in Z,
    S1 = sum q_z^n / n = -Log(1 - q_z)  (z = g sigma + h, principal branch),
    S2 = sum (q_z^n + q_z^{-n}) q_sigma^n / (n (1 - q_sigma^n)).
    """
    params = _params(params)
    g = Fraction(g)
    h = Fraction(h)
    if g.denominator == 1 and h.denominator == 1:
        raise DomainError("log_eta_gen is undefined at lattice points (g, h) in Z^2")
    g -= math.floor(g)
    sc = sigma.as_complex()
    z = float(g) * sc + float(h)
    q_z = cmath.exp(2j * math.pi * z)
    q_sigma = cmath.exp(2j * math.pi * sc)
    phi = -float(periodic_bernoulli(1, h)) if g == 0 else 0.0
    total = 1j * math.pi * phi + 1j * math.pi * sc * float(periodic_bernoulli(2, g))
    total += cmath.log(1.0 - q_z)  # minus S1
    qzn = 1.0 + 0.0j
    rn = 1.0 + 0.0j  # (q_sigma / q_z)^n; bounded since 0 <= g < 1
    qsn = 1.0 + 0.0j
    ratio_r = q_sigma / q_z
    cut = params.tail_tolerance * 0.1
    small = 0
    n = 0
    while small < 3:
        n += 1
        if n > params.max_terms:
            raise ConvergenceError("log_eta_gen: max_terms exceeded before tail bound")
        qzn *= q_z
        rn *= ratio_r
        qsn *= q_sigma
        t = (qzn * qsn + rn) / ((1.0 - qsn) * n)
        total -= t
        small = small + 1 if (n >= 8 and abs(t) < cut) else 0
    return ComplexValue.from_complex(total)


def transform_defect(
    M: SL2ZMatrix, sigma: UpperHalfPoint, params: Optional[SeriesParams] = None
) -> ComplexValue:
    """LHS - RHS of the classical transformation law

    log eta(M^op sigma) - log eta(sigma)
      = (1/2) Log((c sigma + a)/(sgn(c) i)) + pi i ((a+d)/(12c) - sgn(c) s(a,c)).
    """
    params = _params(params)
    if M.c == 0:
        raise DomainError("transform_defect requires c != 0")
    sc = sigma.as_complex()
    lhs = (
        log_eta(moebius_op_action(M, sigma), params).as_complex()
        - log_eta(sigma, params).as_complex()
    )
    arg = (M.c * sc + M.a) / (_sgn(M.c) * 1j)
    assert arg.real > 0  # off the branch cut whenever sigma2 > 0
    rhs = 0.5 * cmath.log(arg) + 1j * math.pi * float(
        Fraction(M.a + M.d, 12 * M.c) - _sgn(M.c) * classical_sum(M.a, M.c)
    )
    return ComplexValue.from_complex(lhs - rhs)


def transform_defect_gen(
    M: SL2ZMatrix,
    g: RationalLike,
    h: RationalLike,
    sigma: UpperHalfPoint,
    params: Optional[SeriesParams] = None,
) -> ComplexValue:
    """LHS - RHS of the generalized transformation law with
    (g', h') = (a g - c h, -b g + d h):

    log eta_{g',h'}(M^op sigma) - log eta_{g,h}(sigma)
      = pi i ((a/c) P_2(g) + (d/c) P_2(g') - 2 sgn(c) s_{g',h'}(d, c)).
    """
    params = _params(params)
    if M.c == 0:
        raise DomainError("transform_defect_gen requires c != 0")
    g = Fraction(g)
    h = Fraction(h)
    if g.denominator == 1 and h.denominator == 1:
        raise DomainError("transform_defect_gen requires (g, h) not in Z^2")
    gp = M.a * g - M.c * h
    hp = -M.b * g + M.d * h
    lhs = (
        log_eta_gen(gp, hp, moebius_op_action(M, sigma), params).as_complex()
        - log_eta_gen(g, h, sigma, params).as_complex()
    )
    rhs = 1j * math.pi * float(
        Fraction(M.a, M.c) * periodic_bernoulli(2, g)
        + Fraction(M.d, M.c) * periodic_bernoulli(2, gp)
        - 2 * _sgn(M.c) * generalized_sum(gp, hp, M.d, M.c)
    )
    return ComplexValue.from_complex(lhs - rhs)


# -- spectrum ---------------------------------------------------------------


def torus_spectrum(
    sigma: UpperHalfPoint,
    nu: Tuple[RationalLike, RationalLike],
    max_lattice_norm: int,
) -> List[Tuple[float, int]]:
    """Sorted 1-form Laplace eigenvalues 4 sigma2 |w_{n-nu}|^2 over lattice
    points |n|_inf <= max_lattice_norm, each with doubled multiplicity."""
    if max_lattice_norm < 0:
        raise DomainError("max_lattice_norm must be nonnegative")
    s1, s2 = sigma.sigma1, sigma.sigma2
    nu1f, nu2f = float(Fraction(nu[0])), float(Fraction(nu[1]))
    raw: List[float] = []
    for n1 in range(-max_lattice_norm, max_lattice_norm + 1):
        m1 = n1 - nu1f
        for n2 in range(-max_lattice_norm, max_lattice_norm + 1):
            m2 = n2 - nu2f
            t = m2 - s1 * m1
            raw.append((4.0 * math.pi**2 / s2) * (t * t + s2 * s2 * m1 * m1))
    raw.sort()
    out: List[Tuple[float, int]] = []
    for lam in raw:
        if out and abs(lam - out[-1][0]) <= 1e-9 * max(1.0, abs(lam)):
            out[-1] = (out[-1][0], out[-1][1] + 2)
        else:
            out.append((lam, 2))
    return out


# -- numeric-vs-exact end-to-end paths --------------------------------------


def rho_form_hyp_numeric(
    M: SL2ZMatrix,
    nu: Tuple[RationalLike, RationalLike],
    params: Optional[SeriesParams] = None,
) -> float:
    """Eta-form integral along the invariant path, via the primitive
    (1/pi) Re[pi sigma P_2(nu_1) + i E_nu(sigma)] evaluated between
    sigma(0) and sigma(1)."""
    params = _params(params)
    if not isinstance(classify(M), Hyperbolic):
        raise UnsupportedClassError("rho_form_hyp_numeric requires a hyperbolic matrix")
    conn = connection_from_nu(M, nu)
    if conn.restriction_trivial:
        raise AdmissibilityError("rho_form_hyp_numeric requires nu not in Z^2")
    p2 = float(periodic_bernoulli(2, conn.nu[0]))

    def primitive(t: float) -> float:
        point = invariant_path_sigma(M, t)
        e_val = e_series(point, conn.nu, params).as_complex()
        return (math.pi * point.as_complex() * p2 + 1j * e_val).real / math.pi

    return primitive(1.0) - primitive(0.0)


def eta_untwisted_numeric(M: SL2ZMatrix, params: Optional[SeriesParams] = None) -> float:
    """Untwisted Eta by quadrature: twice the difference of the boundary
    log-eta term and the arc integral (1/2 pi) int_0^1 sigma1'/sigma2 dt
    along the invariant path."""
    params = _params(params)
    cls = classify(M)
    if not isinstance(cls, Hyperbolic):
        raise UnsupportedClassError("eta_untwisted_numeric requires a hyperbolic matrix")
    sigma0 = invariant_path_sigma(M, 0.0)
    dlog = (
        log_eta(moebius_op_action(M, sigma0), params).as_complex()
        - log_eta(sigma0, params).as_complex()
    )
    alpha, beta, kappa = cls.alpha, cls.beta, cls.kappa
    big_l = math.log(abs(kappa))
    gap = abs(alpha - beta)

    def arc_integrand(t: float) -> float:
        hh = math.exp(2.0 * big_l * t)
        den = hh + 1.0 / hh
        num = alpha * hh + beta / hh
        dnum = 2.0 * big_l * (alpha * hh - beta / hh)
        dden = 2.0 * big_l * (hh - 1.0 / hh)
        # sigma1'/sigma2 with sigma2 = gap/den
        return (dnum * den - num * dden) / (den * gap)

    arc, arc_err = quad(arc_integrand, 0.0, 1.0, epsabs=1e-12, epsrel=1e-10, limit=200)
    if arc_err > 1e-8:
        raise QuadratureError(f"arc integral achieved only {arc_err:.3e}")
    return 2.0 * ((2.0 / math.pi) * dlog.imag - arc / _TWO_PI)
