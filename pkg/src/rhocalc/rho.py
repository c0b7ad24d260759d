"""Closed-form Rho, Eta and Chern-Simons invariants.

Circle bundles over surfaces and torus mapping tori, the latter split by
monodromy class.  Everything here is exact rational arithmetic; the only
floats are the deliberately transcendental intermediates of
:func:`parabolic_intermediates`, whose pi-terms cancel in the assembled
value.

Sign conventions.  For a hyperbolic mapping torus with monodromy
M = [[a, b], [c, d]] and admissible twist nu (so m = (Id - M^t) nu is
integral, nu not integral), the invariant is the six-term form

    rho = (2(a+d) - 4)/c * (P_2(nu_1) - 1/6)
          - 4 * sum_{k=1}^{|c|-r} P_1(d k / c)
          + sgn(c (a+d))
          - sgn(c) [nu_1 not in Z] (1 - [m_1/c not in Z])
          - 2 P_1(d m_1 / c)
          - 2 [nu_1 not in Z] (P_1(m_1/c) - P_1(d m_1/c))

with r = m_1 mod |c|.  An independent evaluation path through the
generalized Dedekind sums (:func:`rho_hyperbolic_prep`) must agree with
it exactly; the tests enforce this two-path equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Tuple

from .bernoulli import RationalLike, periodic_bernoulli
from .dedekind import classical_sum, generalized_sum
from .errors import AdmissibilityError, DomainError, UnsupportedClassError
from .moduli import (
    CircleFlatConnection,
    TorusFlatConnection,
    transport_nu_to_normal_form,
)
from .sl2z import Elliptic, Hyperbolic, Identity, Parabolic, SL2ZMatrix, classify

__all__ = [
    "RhoBranch",
    "RhoValue",
    "EigenphaseData",
    "ParabolicIntermediates",
    "rho_circle",
    "eta_truncated_circle",
    "dai_correction_circle",
    "rho_torus",
    "rho_hyperbolic_prep",
    "eta_untwisted_torus",
    "rho_finite_order_generic",
    "chern_simons_mod1",
    "parabolic_intermediates",
]


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def _p2(x: RationalLike) -> Fraction:
    return periodic_bernoulli(2, x)


def _p1(x: RationalLike) -> Fraction:
    return periodic_bernoulli(1, x)


_SIXTH = Fraction(1, 6)


class RhoBranch(str, Enum):
    """Names the theorem branch that produced a RhoValue."""

    CIRCLE_ZERO_DEGREE = "circle-zero-degree"
    CIRCLE_TRIVIAL = "circle-trivial"
    CIRCLE_NONTRIVIAL = "circle-nontrivial"
    ELLIPTIC_TWISTED = "elliptic-twisted"
    ELLIPTIC_TRIVIAL_RESTRICTION = "elliptic-trivial-restriction"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"
    HYPERBOLIC_PREP = "hyperbolic-prep"


@dataclass(frozen=True)
class RhoValue:
    value: Fraction
    branch: RhoBranch


@dataclass(frozen=True)
class EigenphaseData:
    """Eigenphase input for the generic finite-order mapping-torus formula.

    plus_phases / minus_phases are the phases (in [0,1)) of the unitarized
    pullback on the two chirality halves of the twisted harmonic 1-forms;
    untwisted_plus_phases are the phases of the plain pullback on the
    untwisted half; rank_k is the rank of the flat bundle.
    """

    plus_phases: Tuple[Fraction, ...]
    minus_phases: Tuple[Fraction, ...]
    untwisted_plus_phases: Tuple[Fraction, ...]
    rank_k: int

    def __post_init__(self) -> None:
        for name in ("plus_phases", "minus_phases", "untwisted_plus_phases"):
            phases = tuple(Fraction(p) for p in getattr(self, name))
            object.__setattr__(self, name, phases)
            if any(not 0 <= p < 1 for p in phases):
                raise DomainError(f"{name} must lie in [0, 1)")
        if len(self.plus_phases) != len(self.minus_phases):
            raise DomainError(
                "eigenphase data requires equally many plus and minus phases"
            )
        if self.rank_k < 1:
            raise DomainError("rank_k must be a positive integer")


@dataclass(frozen=True)
class ParabolicIntermediates:
    form_integral: float
    cohom_rho: float
    assembled: float


def rho_circle(conn: CircleFlatConnection) -> RhoValue:
    """Rho invariant of a flat U(1) connection on a circle bundle over a
    surface, degree l with fiber holonomy exponent q = k/l.

    Zero degree (a product) and the trivial connection both give 0;
    otherwise 2l(P_2(q) - 1/6) + sgn(l).
    """
    l = conn.degree_l
    if l == 0:
        return RhoValue(Fraction(0), RhoBranch.CIRCLE_ZERO_DEGREE)
    if conn.is_trivial:
        return RhoValue(Fraction(0), RhoBranch.CIRCLE_TRIVIAL)
    value = 2 * l * (_p2(conn.q) - _SIXTH) + _sgn(l)
    return RhoValue(value, RhoBranch.CIRCLE_NONTRIVIAL)


def eta_truncated_circle(conn: CircleFlatConnection) -> Fraction:
    """Eta invariant of the even truncated signature operator: 2 l P_2(k/l)."""
    if conn.degree_l == 0:
        raise DomainError("eta_truncated_circle requires degree l != 0")
    return 2 * conn.degree_l * _p2(conn.q)


def dai_correction_circle(degree_l: int, connection_trivial: bool) -> int:
    """Topological correction term over a circle bundle: -sgn(l) for the
    trivial connection, 0 otherwise."""
    if degree_l == 0:
        raise DomainError("dai_correction_circle requires degree l != 0")
    return -_sgn(degree_l) if connection_trivial else 0


def _rho_hyperbolic_sixterm(M: SL2ZMatrix, nu1: Fraction, m1: int) -> Fraction:
    a, c, d = M.a, M.c, M.d
    cabs = abs(c)
    r = m1 % cabs
    delta_nu1 = nu1.denominator != 1
    value = Fraction(2 * (a + d) - 4, c) * (_p2(nu1) - _SIXTH)
    value -= 4 * sum(
        (_p1(Fraction(d * k, c)) for k in range(1, cabs - r + 1)), Fraction(0)
    )
    value += _sgn(c * (a + d))
    if delta_nu1 and m1 % c == 0:
        value -= _sgn(c)
    value -= 2 * _p1(Fraction(d * m1, c))
    if delta_nu1:
        value -= 2 * (_p1(Fraction(m1, c)) - _p1(Fraction(d * m1, c)))
    return value


def _require_twisted(conn: TorusFlatConnection, what: str) -> None:
    if conn.restriction_trivial:
        raise UnsupportedClassError(
            f"{what} has no closed form for nu in Z^2 (out of scope)"
        )


def rho_torus(M: SL2ZMatrix, conn: TorusFlatConnection) -> RhoValue:
    """Rho invariant of the mapping torus of M with flat twist conn.

    Dispatches on the monodromy class:

    * elliptic, nu not integral: (2 - 4 theta) sgn(c);
    * elliptic, trivial restriction with gauge phase lambda:
      0, sgn(c) or 2 sgn(c) according as dist(lambda, Z) >, =, < theta
      (exact rational comparison standing in for Re(u) vs Re(kappa));
    * parabolic: transported to the normal form eps*[[1, l], [0, 1]],
      then 2l(P_2(nu_1) - 1/6) plus sgn(l) for eps = +1;
    * hyperbolic: the six-term closed form (module docstring).
    """
    cls = classify(M)
    if isinstance(cls, Identity):
        raise UnsupportedClassError("rho_torus is undefined for M = +-Id")
    if isinstance(cls, Elliptic):
        sc = _sgn(M.c)
        if not conn.restriction_trivial:
            return RhoValue((2 - 4 * cls.theta) * sc, RhoBranch.ELLIPTIC_TWISTED)
        lam = conn.gauge_lambda
        if lam is None:
            raise DomainError(
                "elliptic trivial-restriction rho requires the gauge phase lambda"
            )
        dist = min(lam, 1 - lam)
        if dist > cls.theta:
            value = Fraction(0)
        elif dist == cls.theta:
            value = Fraction(sc)
        else:
            value = Fraction(2 * sc)
        return RhoValue(value, RhoBranch.ELLIPTIC_TRIVIAL_RESTRICTION)
    if isinstance(cls, Parabolic):
        _require_twisted(conn, "parabolic rho_torus")
        eps, l, nup = transport_nu_to_normal_form(M, conn.nu)
        if l == 0:
            return RhoValue(Fraction(0), RhoBranch.PARABOLIC)
        value = 2 * l * (_p2(nup[0]) - _SIXTH)
        if eps == 1:
            value += _sgn(l)
        return RhoValue(value, RhoBranch.PARABOLIC)
    _require_twisted(conn, "hyperbolic rho_torus")
    value = _rho_hyperbolic_sixterm(M, conn.nu[0], conn.m[0])
    return RhoValue(value, RhoBranch.HYPERBOLIC)


def rho_hyperbolic_prep(M: SL2ZMatrix, conn: TorusFlatConnection) -> RhoValue:
    """Independent evaluation of the hyperbolic rho through Dedekind sums.

    2(a+d)/c (P_2(nu_1) - 1/6) - 4 sgn(c)(s_{nu_1,nu_2}(a,c) - s(a,c))
    + sgn(c(a+d)).  Must equal :func:`rho_torus` exactly; the bridging
    identity is the generalized-Dedekind-sum difference formula.
    """
    cls = classify(M)
    if not isinstance(cls, Hyperbolic):
        raise UnsupportedClassError("rho_hyperbolic_prep requires a hyperbolic matrix")
    _require_twisted(conn, "rho_hyperbolic_prep")
    a, c, d = M.a, M.c, M.d
    nu1, nu2 = conn.nu
    value = Fraction(2 * (a + d), c) * (_p2(nu1) - _SIXTH)
    value -= 4 * _sgn(c) * (generalized_sum(nu1, nu2, a, c) - classical_sum(a, c))
    value += _sgn(c * (a + d))
    return RhoValue(value, RhoBranch.HYPERBOLIC_PREP)


def eta_untwisted_torus(M: SL2ZMatrix) -> Fraction:
    """Untwisted Eta invariant of the mapping torus of M.

    Elliptic: (4 theta - 2) sgn(c); hyperbolic:
    (a+d)/(3c) - 4 sgn(c) s(a,c) - sgn(c(a+d)).  No closed form is
    available for parabolic or +-Id monodromy.
    """
    cls = classify(M)
    if isinstance(cls, Elliptic):
        assert M.c != 0  # elliptic trace forces c != 0
        return (4 * cls.theta - 2) * _sgn(M.c)
    if isinstance(cls, Hyperbolic):
        a, c, d = M.a, M.c, M.d
        return (
            Fraction(a + d, 3 * c)
            - 4 * _sgn(c) * classical_sum(a, c)
            - _sgn(c * (a + d))
        )
    raise UnsupportedClassError(
        "eta_untwisted_torus supports only elliptic and hyperbolic monodromy"
    )


def rho_finite_order_generic(data: EigenphaseData) -> Fraction:
    """Generic eigenphase formula for mapping tori of finite-order maps.

    2 sum(theta+) - #{theta+ != 0} - 2 sum(theta-) + #{theta- != 0}
    - 4k sum(theta0) + 2k #{theta0 != 0},  all phases in [0, 1).
    """
    k = data.rank_k
    value = 2 * sum(data.plus_phases, Fraction(0))
    value -= sum(1 for p in data.plus_phases if p != 0)
    value -= 2 * sum(data.minus_phases, Fraction(0))
    value += sum(1 for p in data.minus_phases if p != 0)
    value -= 4 * k * sum(data.untwisted_plus_phases, Fraction(0))
    value += 2 * k * sum(1 for p in data.untwisted_plus_phases if p != 0)
    return Fraction(value)


def chern_simons_mod1(M: SL2ZMatrix, conn: TorusFlatConnection) -> Fraction:
    """Chern-Simons invariant 2(nu_2 m_1 - nu_1 m_2) mod Z, in [0, 1)."""
    nu1, nu2 = conn.nu
    m1, m2 = conn.m
    value = 2 * (nu2 * m1 - nu1 * m2)
    return value - math.floor(value)


def parabolic_intermediates(
    epsilon: int, l: int, nu1: RationalLike
) -> ParabolicIntermediates:
    """The two halves of the parabolic rho assembly, as floats.

    form_integral carries the eta-form integral l(P_2(nu_1) - 1/6) + l/(2 pi);
    cohom_rho the cohomological circle contribution (0 for l = 0,
    -l/pi + sgn(l) for eps = +1, -l/pi for eps = -1).  In
    assembled = 2*form_integral + cohom_rho the transcendental l/pi terms
    cancel, leaving the exact theorem value up to roundoff.
    """
    if epsilon not in (1, -1):
        raise DomainError("epsilon must be +1 or -1")
    nu1 = Fraction(nu1)
    if epsilon == 1 and (l * nu1).denominator != 1:
        raise AdmissibilityError(
            "parabolic eps=+1 admissibility requires l*nu1 in Z"
        )
    if epsilon == -1 and (2 * nu1).denominator != 1:
        raise AdmissibilityError(
            "parabolic eps=-1 admissibility requires 2*nu1 in Z"
        )
    form_integral = float(l * (_p2(nu1) - _SIXTH)) + l / (2 * math.pi)
    if l == 0:
        cohom = 0.0
    elif epsilon == 1:
        cohom = -l / math.pi + _sgn(l)
    else:
        cohom = -l / math.pi
    return ParabolicIntermediates(
        form_integral=form_integral,
        cohom_rho=cohom,
        assembled=2.0 * form_integral + cohom,
    )
