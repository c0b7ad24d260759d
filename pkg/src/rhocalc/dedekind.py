"""Classical and generalized Dedekind sums, exactly, plus their finite
Fourier toolkit.

The exact sums are evaluated in pure integer arithmetic over a common
denominator (no per-term gcd reduction), so moduli of order 10^4 stay
cheap and denominators can grow past machine-word size without harm.
Float paths (cotangent formula, discrete Fourier transforms) are strictly
separate and never feed back into exact results.

Notation.  P_1 is the sawtooth from :mod:`rhocalc.bernoulli`,

    s(a, c)       = sum_{k=1}^{|c|-1} P_1(a k / c) P_1(k / c)
    s_{x,y}(a, c) = sum_{k=0}^{|c|-1} P_1(a (k+x)/c + y) P_1((k+x)/c)

and d denotes the inverse of a modulo c, least nonnegative residue.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence, Tuple

import numpy as np

from .bernoulli import RationalLike, periodic_bernoulli
from .errors import DomainError
from .sl2z import SL2ZMatrix

__all__ = [
    "CoprimePair",
    "PeriodicFunctionTable",
    "classical_sum",
    "generalized_sum",
    "cotangent_sum",
    "finite_fourier_transform",
    "p1_closed_fourier",
    "sum_difference_closed",
]

#: default comparison tolerance for the float Fourier/cotangent paths
DEFAULT_FLOAT_TOL = 1e-10


def _inverse_mod(a: int, c: int) -> int:
    """Least nonnegative d with a*d = 1 (mod |c|)."""
    m = abs(c)
    if m == 1:
        return 0
    return pow(a % m, -1, m)


@dataclass(frozen=True)
class CoprimePair:
    """A pair (a, c) with c != 0 and gcd(a, c) = 1; carries d = a^{-1} mod c."""

    a: int
    c: int
    d: int = field(init=False)

    def __post_init__(self) -> None:
        if self.c == 0:
            raise DomainError("CoprimePair requires c != 0")
        if gcd(self.a, self.c) != 1:
            raise DomainError("CoprimePair requires gcd(a, c) = 1")
        object.__setattr__(self, "d", _inverse_mod(self.a, self.c))


@dataclass(frozen=True)
class PeriodicFunctionTable:
    """A function on Z/|c| given by its |c| sampled complex values.

    The signed modulus c is retained: the transform below uses the root
    of unity exp(2*pi*i/c), whose orientation depends on sign(c).
    """

    c: int
    values: Tuple[complex, ...]

    def __post_init__(self) -> None:
        if self.c == 0:
            raise DomainError("PeriodicFunctionTable requires c != 0")
        vals = tuple(complex(v) for v in self.values)
        if len(vals) != abs(self.c):
            raise DomainError(
                "PeriodicFunctionTable requires exactly |c| values"
            )
        object.__setattr__(self, "values", vals)

    def __call__(self, k: int) -> complex:
        return self.values[k % abs(self.c)]


def _p1_int(n: int, den: int) -> Tuple[int, bool]:
    """2*den*P_1(n/den) as an integer, plus an is-integer flag (den > 0)."""
    r = n % den
    if r == 0:
        return 0, True
    return 2 * r - den, False


def classical_sum(a: int, c: int) -> Fraction:
    """Classical Dedekind sum s(a, c), exactly.

    Equal to s(a, |c|) (both sawtooth factors flip sign with c), so the
    loop runs over the positive modulus.
    """
    if c == 0:
        raise DomainError("classical_sum requires a nonzero modulus c")
    if gcd(a, c) != 1:
        raise DomainError("classical_sum requires gcd(a, c) = 1")
    m = abs(c)
    a0 = a % m
    acc = 0
    for k in range(1, m):
        # both arguments are nonintegral: gcd(a0, m) = 1 and 0 < k < m
        acc += (2 * ((a0 * k) % m) - m) * (2 * k - m)
    return Fraction(acc, 4 * m * m)


def generalized_sum(x: RationalLike, y: RationalLike, a: int, c: int) -> Fraction:
    """Generalized Dedekind sum s_{x,y}(a, c), exactly.

    Depends on (x, y) only mod Z^2; inputs are reduced first.  The k-loop
    runs in integer arithmetic over the common denominators
    |c|*den(x) and |c|*den(x)*den(y).
    """
    if c == 0:
        raise DomainError("generalized_sum requires a nonzero modulus c")
    if gcd(a, c) != 1:
        raise DomainError("generalized_sum requires gcd(a, c) = 1")
    x = Fraction(x)
    y = Fraction(y)
    x -= math.floor(x)
    y -= math.floor(y)
    m = abs(c)
    s = 1 if c > 0 else -1
    px, qx = x.numerator, x.denominator
    py, qy = y.numerator, y.denominator
    den1 = m * qx           # (k+x)/c = s*(k*qx + px) / den1
    den2 = m * qx * qy      # a(k+x)/c + y = s*(a*qy*(k*qx+px) + c*qx*py) / den2
    acc = 0
    cqxpy = c * qx * py
    for k in range(m):
        n1 = s * (k * qx + px)
        n2 = s * (a * qy * (k * qx + px) + cqxpy)
        v1, int1 = _p1_int(n1, den1)
        if int1:
            continue
        v2, int2 = _p1_int(n2, den2)
        if int2:
            continue
        acc += v1 * v2
    return Fraction(acc, 4 * den1 * den2)


def cotangent_sum(a: int, c: int) -> float:
    """Dedekind sum via the cotangent formula, in double precision.

    (1/(4|c|)) * sum_{p=1}^{|c|-1} cot(pi d p / c) cot(pi p / c); the two
    sign flips for c < 0 cancel, so the positive modulus is used.
    """
    pair = CoprimePair(a, c)
    m = abs(c)
    if m == 1:
        return 0.0
    p = np.arange(1, m, dtype=np.float64)
    ang = np.pi * p / m
    base = np.cos(ang) / np.sin(ang)
    # cot(pi d p / c) = cot(pi ((d p) mod |c|) / |c|) by pi-periodicity;
    # (d p) mod |c| is never 0 since gcd(d, c) = 1 and 0 < p < |c|
    idx = (pair.d * np.arange(1, m, dtype=np.int64)) % m
    lhs = np.cos(np.pi * idx / m) / np.sin(np.pi * idx / m)
    return float(np.dot(lhs, base) / (4.0 * m))


def finite_fourier_transform(table: PeriodicFunctionTable) -> PeriodicFunctionTable:
    """Finite Fourier transform: fhat(p) = sum_k f(k) xi^{-kp}, xi = e^{2 pi i/c}.

    The sign of c is honored through xi, so tables on c and -c transform
    with opposite orientation.
    """
    m = abs(table.c)
    k = np.arange(m)
    vals = np.asarray(table.values, dtype=np.complex128)
    xi_pow = np.exp(-2j * np.pi * np.outer(k, k) / table.c)
    hat = xi_pow.T @ vals  # row p: sum_k f(k) xi^{-kp}
    return PeriodicFunctionTable(table.c, tuple(hat.tolist()))


def p1_closed_fourier(
    x: RationalLike, y: RationalLike, a: int, c: int, p: int
) -> complex:
    """Closed form of the Fourier transform of k -> P_1(a(k+x)/c + y).

    With x' = a x + c y, d = a^{-1} mod c and xi = exp(2 pi i / c):

        p = 0 (mod c):  sgn(c) * P_1(x')
        otherwise:      sgn(c)/2 * (i cot(pi d p / c) - [x' not in Z]) * xi^{d floor(x') p}
    """
    pair = CoprimePair(a, c)
    x = Fraction(x)
    y = Fraction(y)
    xp = a * x + c * y
    sign = 1.0 if c > 0 else -1.0
    if p % abs(c) == 0:
        return complex(sign * float(periodic_bernoulli(1, xp)))
    delta = 0.0 if xp.denominator == 1 else 1.0
    cot = 1.0 / math.tan(math.pi * pair.d * p / c)
    phase = cmath.exp(2j * math.pi * pair.d * math.floor(xp) * p / c)
    return sign * 0.5 * (1j * cot - delta) * phase


def sum_difference_closed(x: RationalLike, y: RationalLike, M: SL2ZMatrix) -> Fraction:
    """Exact closed form of s_{x,y}(a, c) - s(a, c) for admissible (x, y).

    Requires x in [0,1) and (x - x', y - y') in Z^2 where (x', y') is the
    transpose action (a x + c y, b x + d y); writes m = x - x' and reduces
    m to r in {0, ..., |c|-1}.  The value is

        (P_2(x) - 1/6)/|c| + sum_{k=1}^{|c|-r} P_1(d k/|c|) + P_1(d m/|c|)/2
        + [x not in Z] * (P_1(m/|c|) - P_1(d m/|c|))/2
        + [x not in Z] * (1 - [m/|c| not in Z])/4
    """
    x = Fraction(x)
    y = Fraction(y)
    a, c = M.a, M.c
    if c == 0:
        raise DomainError("sum_difference_closed requires c != 0")
    if gcd(a, c) != 1:
        raise DomainError("sum_difference_closed requires gcd(a, c) = 1")
    if not 0 <= x < 1:
        raise DomainError("sum_difference_closed requires x in [0, 1)")
    xp = a * x + c * y
    yp = M.b * x + M.d * y
    mm = x - xp
    if mm.denominator != 1 or (y - yp).denominator != 1:
        raise DomainError(
            "sum_difference_closed requires (x - x', y - y') in Z^2"
        )
    m_int = mm.numerator
    cabs = abs(c)
    d = _inverse_mod(a, c)
    r = m_int % cabs
    acc = (periodic_bernoulli(2, x) - Fraction(1, 6)) / cabs
    acc += sum(
        (periodic_bernoulli(1, Fraction(d * k, cabs)) for k in range(1, cabs - r + 1)),
        Fraction(0),
    )
    acc += periodic_bernoulli(1, Fraction(d * m_int, cabs)) / 2
    if x.denominator != 1:
        acc += (
            periodic_bernoulli(1, Fraction(m_int, cabs))
            - periodic_bernoulli(1, Fraction(d * m_int, cabs))
        ) / 2
        if m_int % cabs == 0:
            acc += Fraction(1, 4)
    return acc
