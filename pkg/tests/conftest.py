"""Shared helpers for the test suite: seeded random SL2(Z) generators.

All randomness is drawn from explicitly seeded `random.Random` instances so
every run exercises the same matrices.
"""

from __future__ import annotations

import random

from rhocalc import SL2ZMatrix


def random_sl2z(rng: random.Random, bound: int) -> SL2ZMatrix:
    """A uniform-ish random element of SL2(Z) with |entries| <= bound."""
    while True:
        a = rng.randint(-bound, bound)
        b = rng.randint(-bound, bound)
        c = rng.randint(-bound, bound)
        if a == 0:
            if b * c == -1:
                return SL2ZMatrix(a, b, c, rng.randint(-bound, bound))
            continue
        num = 1 + b * c
        if num % a != 0:
            continue
        d = num // a
        if abs(d) <= bound:
            return SL2ZMatrix(a, b, c, d)


def random_hyperbolic(rng: random.Random, bound: int) -> SL2ZMatrix:
    """A random hyperbolic element (|trace| > 2) with |entries| <= bound."""
    while True:
        m = random_sl2z(rng, bound)
        if abs(m.a + m.d) > 2:
            return m


def random_parabolic(rng: random.Random, shear_bound: int, conj_bound: int) -> SL2ZMatrix:
    """A random parabolic element: a conjugate of +-[[1, l], [0, 1]], l != 0."""
    l = 0
    while l == 0:
        l = rng.randint(-shear_bound, shear_bound)
    eps = rng.choice((1, -1))
    g = random_sl2z(rng, conj_bound)
    n = SL2ZMatrix(eps, eps * l, 0, eps)
    return g @ n @ g.inverse()
