"""SL(2, Z) matrices: classification, parabolic normal form, the op-action
on the upper half-plane, and the invariant path of a hyperbolic element.

The classification payload is the only place floats appear (kappa, alpha,
beta for hyperbolic elements); every exact formula downstream consumes
integers and rationals only, so the float payload cannot contaminate
exact results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Tuple, Union

from .errors import DomainError, UnsupportedClassError

__all__ = [
    "SL2ZMatrix",
    "UpperHalfPoint",
    "Elliptic",
    "Parabolic",
    "Hyperbolic",
    "Identity",
    "MonodromyClass",
    "classify",
    "parabolic_normal_form",
    "moebius_op_action",
    "invariant_path_sigma",
]

#: exact elliptic rotation numbers, keyed by trace
_ELLIPTIC_THETA = {1: Fraction(1, 6), 0: Fraction(1, 4), -1: Fraction(1, 3)}


@dataclass(frozen=True)
class SL2ZMatrix:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if self.a * self.d - self.b * self.c != 1:
            raise DomainError("SL2ZMatrix requires determinant ad - bc = 1")

    @classmethod
    def identity(cls) -> "SL2ZMatrix":
        return cls(1, 0, 0, 1)

    @classmethod
    def from_rows(cls, rows) -> "SL2ZMatrix":
        (a, b), (c, d) = rows
        return cls(int(a), int(b), int(c), int(d))

    @property
    def trace(self) -> int:
        return self.a + self.d

    @property
    def discriminant(self) -> int:
        """(tr M)^2 - 4, the classifying quantity."""
        return self.trace * self.trace - 4

    def op(self) -> "SL2ZMatrix":
        """The op-involution M -> [[d, b], [c, a]]."""
        return SL2ZMatrix(self.d, self.b, self.c, self.a)

    def __matmul__(self, other: "SL2ZMatrix") -> "SL2ZMatrix":
        return SL2ZMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "SL2ZMatrix":
        return SL2ZMatrix(self.d, -self.b, -self.c, self.a)

    def neg(self) -> "SL2ZMatrix":
        return SL2ZMatrix(-self.a, -self.b, -self.c, -self.d)

    def transpose_apply(self, v: Tuple[Fraction, Fraction]) -> Tuple[Fraction, Fraction]:
        """M^t v for a rational column vector v."""
        return (self.a * v[0] + self.c * v[1], self.b * v[0] + self.d * v[1])


@dataclass(frozen=True)
class UpperHalfPoint:
    """A point sigma = sigma1 + i*sigma2 of the upper half-plane."""

    sigma1: float
    sigma2: float

    def __post_init__(self) -> None:
        if not self.sigma2 > 0:
            raise DomainError("UpperHalfPoint requires sigma2 > 0")

    def as_complex(self) -> complex:
        return complex(self.sigma1, self.sigma2)


@dataclass(frozen=True)
class Elliptic:
    theta: Fraction


@dataclass(frozen=True)
class Parabolic:
    epsilon: int
    l: int
    conjugator: SL2ZMatrix


@dataclass(frozen=True)
class Hyperbolic:
    kappa: float
    alpha: float
    beta: float


@dataclass(frozen=True)
class Identity:
    epsilon: int


MonodromyClass = Union[Elliptic, Parabolic, Hyperbolic, Identity]


def _extend_to_sl2z(p: int, q: int) -> SL2ZMatrix:
    """An SL2Z matrix with first column (p, q), for coprime (p, q)."""
    g, r, s = _xgcd(p, q)
    # p*r + q*s = 1, so [[p, -s], [q, r]] has determinant p*r + q*s = 1
    return SL2ZMatrix(p, -s, q, r)


def _xgcd(p: int, q: int) -> Tuple[int, int, int]:
    """(g, u, v) with u*p + v*q = g = gcd(p, q)."""
    old_r, r = p, q
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r != 0:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_u, u = u, old_u - quot * u
        old_v, v = v, old_v - quot * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def parabolic_normal_form(M: SL2ZMatrix) -> Tuple[int, int, SL2ZMatrix]:
    """Conjugate a parabolic M != +-Id into eps * [[1, l], [0, 1]].

    Returns (eps, l, g) with g in SL2Z and g^{-1} M g = eps*[[1, l], [0, 1]].
    The conjugator's first column spans the unique fixed line of eps*M:
    for trace-2 N, the column (p, q) = ((a - d)/g0, 2c/g0) with
    g0 = gcd(a - d, 2c) is killed by N - Id, and any SL2Z extension of it
    triangularizes N.
    """
    tr = M.trace
    if tr * tr != 4:
        raise UnsupportedClassError("parabolic_normal_form requires a parabolic matrix")
    eps = 1 if tr == 2 else -1
    N = M if eps == 1 else M.neg()
    if N.a == 1 and N.c == 0:
        # already upper triangular (c = 0 and det = 1 force a = d = 1)
        return eps, N.b, SL2ZMatrix.identity()
    if N == SL2ZMatrix.identity():
        raise UnsupportedClassError("parabolic_normal_form requires M != +-Id")
    if N.c == 0:
        # a = d = -1 cannot happen for trace 2
        raise UnsupportedClassError("parabolic_normal_form requires M != +-Id")
    g0 = gcd(N.a - N.d, 2 * N.c)
    p, q = (N.a - N.d) // g0, (2 * N.c) // g0
    conj = _extend_to_sl2z(p, q)
    normal = conj.inverse() @ N @ conj
    if normal.c != 0 or normal.a != 1 or normal.d != 1:
        raise AssertionError("parabolic normal form failed to triangularize")
    return eps, normal.b, conj


def classify(M: SL2ZMatrix) -> MonodromyClass:
    """Monodromy classification of M by the sign of (tr M)^2 - 4.

    Elliptic rotation numbers come from the exact trace lookup
    {1: 1/6, 0: 1/4, -1: 1/3}; kappa is the eigenvalue with |kappa| > 1,
    so the invariant path below flows toward the attracting fixed point.
    """
    if M == SL2ZMatrix.identity():
        return Identity(1)
    if M == SL2ZMatrix.identity().neg():
        return Identity(-1)
    disc = M.discriminant
    if disc < 0:
        return Elliptic(_ELLIPTIC_THETA[M.trace])
    if disc == 0:
        eps, l, conj = parabolic_normal_form(M)
        return Parabolic(eps, l, conj)
    tr = M.trace
    root = math.sqrt(disc)
    kappa = (tr + root) / 2.0 if tr > 0 else (tr - root) / 2.0
    kappa_inv = tr - kappa  # kappa + 1/kappa = tr, avoids cancellation
    alpha = (kappa - M.a) / M.c
    beta = (kappa_inv - M.a) / M.c
    return Hyperbolic(kappa, alpha, beta)


def moebius_op_action(M: SL2ZMatrix, sigma: UpperHalfPoint) -> UpperHalfPoint:
    """M^op sigma = (d sigma + b) / (c sigma + a)."""
    z = sigma.as_complex()
    w = (M.d * z + M.b) / (M.c * z + M.a)
    return UpperHalfPoint(w.real, w.imag)


def invariant_path_sigma(M: SL2ZMatrix, t: float) -> UpperHalfPoint:
    """The M-invariant circular path sigma(t) of a hyperbolic M.

    sigma(t) = (alpha |k|^{2t} + beta |k|^{-2t} + i |alpha - beta|)
               / (|k|^{2t} + |k|^{-2t})

    traverses the half-circle over the segment [alpha, beta] and satisfies
    M^op sigma(t) = sigma(t + 1).
    """
    cls = classify(M)
    if not isinstance(cls, Hyperbolic):
        raise UnsupportedClassError("invariant_path_sigma requires a hyperbolic matrix")
    h = math.exp(2.0 * t * math.log(abs(cls.kappa)))
    denom = h + 1.0 / h
    s1 = (cls.alpha * h + cls.beta / h) / denom
    s2 = abs(cls.alpha - cls.beta) / denom
    return UpperHalfPoint(s1, s2)
