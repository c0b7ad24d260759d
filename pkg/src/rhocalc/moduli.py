"""Moduli of flat U(1) connections: torus mapping tori and circle bundles.

A gauge class on the mapping torus of M is a pair nu in [0,1)^2 with
(Id - M^t) nu integral; the integer vector m = (Id - M^t) nu classifies
the restriction to a fiber-transverse torus, and m lying in the integer
image of (Id - M^t) decides triviality of the flat bundle itself.  All
lattice work runs through one Smith-normal-form kernel with the
unimodular transforms retained.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .bernoulli import RationalLike
from .errors import AdmissibilityError, DomainError, UnsupportedClassError
from .sl2z import Identity, Parabolic, SL2ZMatrix, classify, parabolic_normal_form

__all__ = [
    "TorusFlatConnection",
    "CircleFlatConnection",
    "ParabolicFamily",
    "TorusModuliSet",
    "CircleModuliSummary",
    "smith_normal_form",
    "enumerate_torus_connections",
    "connection_from_nu",
    "is_bundle_trivial",
    "circle_moduli_summary",
    "transport_nu_to_normal_form",
    "transport_nu_from_normal_form",
]

Mat2 = Tuple[Tuple[int, int], Tuple[int, int]]


def _one_minus_mt(M: SL2ZMatrix) -> Mat2:
    """(Id - M^t) as an integer matrix."""
    return ((1 - M.a, -M.c), (-M.b, 1 - M.d))


def _mat_mul(A: Mat2, B: Mat2) -> Mat2:
    return (
        (A[0][0] * B[0][0] + A[0][1] * B[1][0], A[0][0] * B[0][1] + A[0][1] * B[1][1]),
        (A[1][0] * B[0][0] + A[1][1] * B[1][0], A[1][0] * B[0][1] + A[1][1] * B[1][1]),
    )


def _mat_vec(A: Mat2, v: Sequence) -> Tuple:
    return (A[0][0] * v[0] + A[0][1] * v[1], A[1][0] * v[0] + A[1][1] * v[1])


def _det(A: Mat2) -> int:
    return A[0][0] * A[1][1] - A[0][1] * A[1][0]


def smith_normal_form(A: Mat2) -> Tuple[Mat2, Mat2, Mat2]:
    """Smith normal form of an integer 2x2 matrix.

    Returns (U, S, V) with U, V in GL(2, Z), S = U A V = diag(d1, d2),
    d1, d2 >= 0 and d1 | d2.
    """
    a = [list(A[0]), list(A[1])]
    u = [[1, 0], [0, 1]]
    v = [[1, 0], [0, 1]]

    def row_op(i, j, k):  # row_i += k * row_j, tracked in U
        for t in range(2):
            a[i][t] += k * a[j][t]
            u[i][t] += k * u[j][t]

    def col_op(i, j, k):  # col_i += k * col_j, tracked in V
        for t in range(2):
            a[t][i] += k * a[t][j]
            v[t][i] += k * v[t][j]

    def row_swap():
        a[0], a[1] = a[1], a[0]
        u[0], u[1] = u[1], u[0]

    def col_swap():
        for t in range(2):
            a[t][0], a[t][1] = a[t][1], a[t][0]
            v[t][0], v[t][1] = v[t][1], v[t][0]

    def reduce_once() -> None:
        # Euclidean clearing of the off-diagonal entries around pivot (0,0);
        # terminates because every swap strictly shrinks |pivot|
        while True:
            if a[0][0] == 0:
                if a[1][0] != 0:
                    row_swap()
                elif a[0][1] != 0:
                    col_swap()
                elif a[1][1] != 0:
                    row_swap()
                    col_swap()
                else:
                    return
                continue
            if a[1][0] != 0:
                row_op(1, 0, -(a[1][0] // a[0][0]))
                if a[1][0] != 0:
                    row_swap()
                continue
            if a[0][1] != 0:
                col_op(1, 0, -(a[0][1] // a[0][0]))
                if a[0][1] != 0:
                    col_swap()
                continue
            return

    reduce_once()
    # enforce d1 | d2 (0 % d == 0, so a zero corner needs no fix)
    if a[0][0] != 0 and a[1][1] % a[0][0] != 0:
        col_op(0, 1, 1)
        reduce_once()

    # sign normalization of the diagonal, pushed into V
    for i in range(2):
        if a[i][i] < 0:
            for t in range(2):
                a[t][i] = -a[t][i]
                v[t][i] = -v[t][i]

    assert a[0][1] == 0 and a[1][0] == 0
    assert a[1][1] == 0 or (a[0][0] != 0 and a[1][1] % a[0][0] == 0)

    U = (tuple(u[0]), tuple(u[1]))
    S = (tuple(a[0]), tuple(a[1]))
    V = (tuple(v[0]), tuple(v[1]))
    return U, S, V


@dataclass(frozen=True)
class TorusFlatConnection:
    """A gauge class of flat U(1) connections on the mapping torus of M."""

    nu: Tuple[Fraction, Fraction]
    m: Tuple[int, int]
    gauge_lambda: Optional[Fraction]
    restriction_trivial: bool
    bundle_trivial: bool


@dataclass(frozen=True)
class CircleFlatConnection:
    """A flat U(1) connection datum on a degree-l circle bundle.

    The fiber holonomy is e^{2 pi i q} with q = chern_k / degree_l; the
    connection can only be trivial when that holonomy is 1, i.e. q in Z
    (or l = 0 with the trivial base holonomy).
    """

    degree_l: int
    chern_k: int
    is_trivial: bool = False

    def __post_init__(self) -> None:
        if self.degree_l != 0 and self.is_trivial and self.chern_k % self.degree_l != 0:
            raise DomainError(
                "CircleFlatConnection cannot be trivial with fractional q = k/l"
            )

    @property
    def q(self) -> Fraction:
        if self.degree_l == 0:
            raise DomainError("q = k/l is undefined for degree 0")
        return Fraction(self.chern_k, self.degree_l)


@dataclass(frozen=True)
class ParabolicFamily:
    """One connected family nu1 = const, nu2 free (normal-form coordinates)."""

    nu1: Fraction
    nu2_free: bool


@dataclass(frozen=True)
class TorusModuliSet:
    isolated: Tuple[TorusFlatConnection, ...]
    families: Tuple[ParabolicFamily, ...]


@dataclass(frozen=True)
class CircleModuliSummary:
    torus_rank: int
    torsion_order: int


def _reduce_mod1(x: RationalLike) -> Fraction:
    x = Fraction(x)
    return x - math.floor(x)


def is_bundle_trivial(M: SL2ZMatrix, m: Tuple[int, int]) -> bool:
    """Is m in the image of (Id - M^t) acting on Z^2?

    Decided through U A V = diag(d1, d2): m = A z has an integer solution
    iff each component of U m is divisible by the matching d (zero d
    demands a zero component).
    """
    A = _one_minus_mt(M)
    U, S, _ = smith_normal_form(A)
    w = _mat_vec(U, m)
    for i in range(2):
        if S[i][i] == 0:
            if w[i] != 0:
                return False
        elif w[i] % S[i][i] != 0:
            return False
    return True


def connection_from_nu(
    M: SL2ZMatrix,
    nu: Tuple[RationalLike, RationalLike],
    gauge_lambda: Optional[RationalLike] = None,
) -> TorusFlatConnection:
    """Validate and normalize a connection datum on the mapping torus of M.

    nu is reduced into [0,1)^2; the admissibility condition is that
    (Id - M^t) nu is integral.  The constant gauge phase lambda only
    exists when the fiber restriction is trivial (nu in Z^2).
    """
    nu1 = _reduce_mod1(nu[0])
    nu2 = _reduce_mod1(nu[1])
    A = _one_minus_mt(M)
    m_frac = _mat_vec(A, (nu1, nu2))
    if m_frac[0].denominator != 1 or m_frac[1].denominator != 1:
        raise AdmissibilityError(
            "connection requires (Id - M^t) nu in Z^2; got "
            f"({m_frac[0]}, {m_frac[1]}) for nu = ({nu1}, {nu2})"
        )
    m = (int(m_frac[0]), int(m_frac[1]))
    restriction_trivial = nu1 == 0 and nu2 == 0
    lam: Optional[Fraction] = None
    if gauge_lambda is not None:
        if not restriction_trivial:
            raise DomainError(
                "gauge phase lambda is only defined when nu is integral"
            )
        lam = _reduce_mod1(gauge_lambda)
    return TorusFlatConnection(
        nu=(nu1, nu2),
        m=m,
        gauge_lambda=lam,
        restriction_trivial=restriction_trivial,
        bundle_trivial=is_bundle_trivial(M, m),
    )


def enumerate_torus_connections(M: SL2ZMatrix) -> TorusModuliSet:
    """All gauge classes of flat U(1) connections on the mapping torus of M.

    For tr M != 2 the classes are the |det(Id - M^t)| = |2 - tr M|
    isolated solutions of (Id - M^t) nu in Z^2, enumerated through the
    Smith normal form and listed in [0,1)^2, sorted by nu.  For a
    parabolic M with trace 2 the solution set is a disjoint union of
    circles; the returned families are expressed in the coordinates of
    the normal form eps*[[1, l], [0, 1]] as nu1 = j/|l| with nu2 free.
    """
    cls = classify(M)
    if isinstance(cls, Identity):
        raise UnsupportedClassError(
            "enumerate_torus_connections requires M != +-Id"
        )
    A = _one_minus_mt(M)
    det = _det(A)
    if det == 0:
        # trace 2: parabolic with eps = +1
        eps, l, _ = parabolic_normal_form(M)
        assert eps == 1 and l != 0
        families = tuple(
            ParabolicFamily(Fraction(j, abs(l)), True) for j in range(abs(l))
        )
        return TorusModuliSet(isolated=(), families=families)
    _, S, V = smith_normal_form(A)
    d1, d2 = S[0][0], S[1][1]
    seen = set()
    conns: List[TorusFlatConnection] = []
    for i in range(d1):
        for j in range(d2):
            w = (Fraction(i, d1), Fraction(j, d2))
            nu = _mat_vec(V, w)
            nu = (_reduce_mod1(nu[0]), _reduce_mod1(nu[1]))
            if nu in seen:
                continue
            seen.add(nu)
            conns.append(connection_from_nu(M, nu))
    assert len(conns) == abs(det)
    conns.sort(key=lambda conn: conn.nu)
    return TorusModuliSet(isolated=tuple(conns), families=())


def circle_moduli_summary(genus: int, degree_l: int) -> CircleModuliSummary:
    """Moduli of flat U(1) connections on a degree-l circle bundle over a
    genus-g surface: U(1)^{2g} x Z_{|l|} (torsion order 0 encodes the
    extra free circle factor at l = 0)."""
    if genus < 0:
        raise DomainError("circle_moduli_summary requires genus >= 0")
    return CircleModuliSummary(torus_rank=2 * genus, torsion_order=abs(degree_l))


def transport_nu_to_normal_form(
    M: SL2ZMatrix, nu: Tuple[Fraction, Fraction]
) -> Tuple[int, int, Tuple[Fraction, Fraction]]:
    """Transport a connection on the mapping torus of parabolic M to the
    normal-form coordinates.

    With g the conjugator (g^{-1} M g = N the normal form), constant
    1-forms pull back through the transpose, so nu' = g^t nu mod Z^2;
    then (Id - N^t) nu' = g^t (Id - M^t) nu, and admissibility carries
    over.  Returns (eps, l, nu').
    """
    eps, l, conj = parabolic_normal_form(M)
    nup = conj.transpose_apply(nu)
    return eps, l, (_reduce_mod1(nup[0]), _reduce_mod1(nup[1]))


def transport_nu_from_normal_form(
    M: SL2ZMatrix, nu_prime: Tuple[Fraction, Fraction]
) -> Tuple[Fraction, Fraction]:
    """Inverse of transport_nu_to_normal_form (normal form back to M)."""
    _, _, conj = parabolic_normal_form(M)
    inv_t = conj.inverse()
    nu = (
        inv_t.a * nu_prime[0] + inv_t.c * nu_prime[1],
        inv_t.b * nu_prime[0] + inv_t.d * nu_prime[1],
    )
    return (_reduce_mod1(nu[0]), _reduce_mod1(nu[1]))
