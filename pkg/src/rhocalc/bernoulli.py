"""Bernoulli polynomials, their periodic extensions, and special zeta values.

Everything in this module is exact: inputs are integers or
`fractions.Fraction`, outputs are `Fraction`.  Float approximations of the
same quantities live in the numerical layer, never here.

Conventions.  Bernoulli numbers use B_1 = -1/2, so

    B_n(x) = sum_{k=0}^{n} C(n, k) B_k x^{n-k}

and the periodic extension P_n(x) = B_n(x - floor(x)) is patched to 0 at
integer x for odd n (the symmetric, Fourier-side convention: P_1 is the
sawtooth with midpoint value 0).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, floor
from typing import Union

from .errors import DomainError

__all__ = [
    "Rational",
    "RationalLike",
    "bernoulli_number",
    "bernoulli_poly",
    "periodic_bernoulli",
    "hurwitz_zeta_nonpos",
    "periodic_eta_zero",
    "periodic_zeta_at",
]

Rational = Fraction
RationalLike = Union[Fraction, int]


@lru_cache(maxsize=None)
def bernoulli_number(n: int) -> Fraction:
    """Bernoulli number B_n (B_1 = -1/2) as an exact Fraction.

    Uses the recursion sum_{k=0}^{n} C(n+1, k) B_k = 0 coming from the
    generating function t/(e^t - 1); values are memoized.
    """
    if n < 0:
        raise DomainError("bernoulli_number requires n >= 0")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2 == 1:
        return Fraction(0)
    acc = Fraction(0)
    for k in range(n):
        acc += comb(n + 1, k) * bernoulli_number(k)
    return -acc / (n + 1)


def bernoulli_poly(n: int, x: RationalLike) -> Fraction:
    """Bernoulli polynomial B_n(x), exactly.

    B_n(x) = sum_{k=0}^{n} C(n, k) B_k x^{n-k}.
    """
    if n < 0:
        raise DomainError("bernoulli_poly requires n >= 0")
    x = Fraction(x)
    acc = Fraction(0)
    power = Fraction(1)
    # accumulate highest power first: coefficient of x^{n-k} is C(n,k) B_k
    for k in range(n, -1, -1):
        acc += comb(n, k) * bernoulli_number(k) * power
        if k > 0:
            power *= x
    return acc


def periodic_bernoulli(n: int, x: RationalLike) -> Fraction:
    """Periodic Bernoulli function P_n(x) = B_n(x - floor(x)), exactly.

    For odd n the value at integer x is 0 (for n = 1 this is the sawtooth
    midpoint convention; for odd n >= 3 it agrees with B_n(0) = 0 anyway).
    """
    if n < 1:
        raise DomainError("periodic_bernoulli requires n >= 1")
    x = Fraction(x)
    frac_part = x - floor(x)
    if n % 2 == 1 and frac_part == 0:
        return Fraction(0)
    return bernoulli_poly(n, frac_part)


def hurwitz_zeta_nonpos(n: int, q: RationalLike) -> Fraction:
    """Hurwitz zeta value zeta(-n, q) = -B_{n+1}(q) / (n+1), exactly.

    Requires n >= 0 and 0 < q <= 1, the range on which the analytic
    continuation in the first argument is taken with the standard branch.
    """
    if n < 0:
        raise DomainError("hurwitz_zeta_nonpos requires n >= 0")
    q = Fraction(q)
    if not 0 < q <= 1:
        raise DomainError("hurwitz_zeta_nonpos requires 0 < q <= 1")
    return -bernoulli_poly(n + 1, q) / (n + 1)


def periodic_eta_zero(q: RationalLike) -> Fraction:
    """Value at s = 0 of the periodic eta series for parameter q: 2 P_1(q)."""
    return 2 * periodic_bernoulli(1, q)


def periodic_zeta_at(s0: int, q: RationalLike) -> Fraction:
    """Periodic zeta function of parameter q at s0 in {0, -1}, exactly.

    At s0 = 0 the value is 0 for q not an integer and -1 for integer q;
    at s0 = -1 it is -P_2(q).  Other evaluation points are not supported.
    """
    q = Fraction(q)
    if s0 == 0:
        return Fraction(-1) if q.denominator == 1 else Fraction(0)
    if s0 == -1:
        return -periodic_bernoulli(2, q)
    raise DomainError("periodic_zeta_at supports only s0 in {0, -1}")
