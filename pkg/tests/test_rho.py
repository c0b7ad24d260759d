"""Rho, eta, and Chern-Simons invariants, every monodromy class.

Hyperbolic reference values are asserted against the closed theorems, with
the defining formulas restated locally as oracles.  The `-2/5` family of
anchors below records what the closed six-term formula actually yields for
the degree-five example; see the acceptance suite for the corresponding
tabulated reference comparison.
"""

from __future__ import annotations

import random
from fractions import Fraction as F

import pytest

from conftest import random_hyperbolic, random_parabolic, random_sl2z
from rhocalc import (
    AdmissibilityError,
    CircleFlatConnection,
    DomainError,
    EigenphaseData,
    RhoBranch,
    SL2ZMatrix,
    UnsupportedClassError,
    chern_simons_mod1,
    classical_sum,
    classify,
    connection_from_nu,
    dai_correction_circle,
    enumerate_torus_connections,
    eta_truncated_circle,
    eta_untwisted_torus,
    generalized_sum,
    parabolic_intermediates,
    periodic_bernoulli,
    rho_circle,
    rho_finite_order_generic,
    rho_hyperbolic_prep,
    rho_torus,
)


def sgn(x: int) -> int:
    return (x > 0) - (x < 0)


class TestRhoCircle:
    def test_zero_degree(self):
        v = rho_circle(CircleFlatConnection(0, 3))
        assert v.value == 0
        assert v.branch == RhoBranch.CIRCLE_ZERO_DEGREE

    def test_trivial_connection(self):
        v = rho_circle(CircleFlatConnection(3, 6, is_trivial=True))
        assert v.value == 0
        assert v.branch == RhoBranch.CIRCLE_TRIVIAL

    def test_nontrivial_closed_form(self):
        # 2l(P_2(k/l) - 1/6) + sgn(l)
        v = rho_circle(CircleFlatConnection(3, 2))
        want = 2 * 3 * (periodic_bernoulli(2, F(2, 3)) - F(1, 6)) + 1
        assert v.value == want == F(-1, 3)
        assert v.branch == RhoBranch.CIRCLE_NONTRIVIAL
        v = rho_circle(CircleFlatConnection(-3, 2))
        want = 2 * -3 * (periodic_bernoulli(2, F(-2, 3)) - F(1, 6)) - 1
        assert v.value == want
        v = rho_circle(CircleFlatConnection(5, 1))
        assert v.value == 2 * 5 * (periodic_bernoulli(2, F(1, 5)) - F(1, 6)) + 1

    def test_integer_holonomy_nontrivial(self):
        # q integral but connection not marked trivial: P_2 term is B_2
        v = rho_circle(CircleFlatConnection(3, 6))
        assert v.value == sgn(3)


class TestEtaTruncatedCircle:
    def test_closed_form(self):
        assert eta_truncated_circle(CircleFlatConnection(3, 2)) == 2 * 3 * periodic_bernoulli(2, F(2, 3))
        assert eta_truncated_circle(CircleFlatConnection(-4, 3)) == -8 * periodic_bernoulli(2, F(-3, 4))

    def test_rejects_degree_zero(self):
        with pytest.raises(DomainError):
            eta_truncated_circle(CircleFlatConnection(0, 1))


class TestDaiCorrectionCircle:
    def test_values(self):
        assert dai_correction_circle(3, True) == -1
        assert dai_correction_circle(-3, True) == 1
        assert dai_correction_circle(3, False) == 0
        with pytest.raises(DomainError):
            dai_correction_circle(0, True)


class TestRhoTorusElliptic:
    @pytest.mark.parametrize(
        "mat,theta",
        [
            (SL2ZMatrix(0, -1, 1, 1), F(1, 6)),
            (SL2ZMatrix(0, -1, 1, 0), F(1, 4)),
            (SL2ZMatrix(-1, -1, 1, 0), F(1, 3)),
        ],
    )
    def test_twisted_closed_form(self, mat, theta):
        for conn in enumerate_torus_connections(mat).isolated:
            if conn.nu == (F(0), F(0)):
                continue
            v = rho_torus(mat, conn)
            assert v.value == (2 - 4 * theta) * sgn(mat.c)
            assert v.branch == RhoBranch.ELLIPTIC_TWISTED

    def test_twisted_negative_c(self):
        mat = SL2ZMatrix(0, 1, -1, 1)  # inverse-type element with c < 0
        cls = classify(mat)
        for conn in enumerate_torus_connections(mat).isolated:
            if conn.nu == (F(0), F(0)):
                continue
            v = rho_torus(mat, conn)
            assert v.value == (2 - 4 * cls.theta) * sgn(mat.c)

    def test_trivial_restriction_branches(self):
        mat = SL2ZMatrix(0, -1, 1, 0)  # theta = 1/4
        conn = connection_from_nu(mat, (F(0), F(0)), gauge_lambda=F(1, 3))
        # dist(1/3, Z) = 1/3 > 1/4: rho = 0
        assert rho_torus(mat, conn).value == 0
        conn = connection_from_nu(mat, (F(0), F(0)), gauge_lambda=F(1, 4))
        # dist = theta: sgn(c)
        assert rho_torus(mat, conn).value == 1
        conn = connection_from_nu(mat, (F(0), F(0)), gauge_lambda=F(1, 5))
        # dist = 1/5 < 1/4: 2 sgn(c)
        assert rho_torus(mat, conn).value == 2

    def test_trivial_restriction_requires_lambda(self):
        mat = SL2ZMatrix(0, -1, 1, 0)
        conn = connection_from_nu(mat, (F(0), F(0)))
        with pytest.raises(DomainError):
            rho_torus(mat, conn)


class TestRhoTorusParabolic:
    def test_closed_form_positive_eps(self):
        mat = SL2ZMatrix(1, 3, 0, 1)
        # families: nu1 in {0, 1/3, 2/3}, nu2 free; choose nu2 = 1/2
        for j in range(3):
            nu = (F(j, 3), F(1, 2))
            if j == 0:
                # nu1 = 0 with nu2 not integral is still twisted
                conn = connection_from_nu(mat, nu)
                v = rho_torus(mat, conn)
                assert v.value == 2 * 3 * (periodic_bernoulli(2, F(0)) - F(1, 6)) + 1
                continue
            conn = connection_from_nu(mat, nu)
            v = rho_torus(mat, conn)
            assert v.value == 2 * 3 * (periodic_bernoulli(2, F(j, 3)) - F(1, 6)) + 1
            assert v.branch == RhoBranch.PARABOLIC

    def test_negative_eps_no_unit_term(self):
        mat = SL2ZMatrix(-1, 5, 0, -1)
        mod = enumerate_torus_connections(mat)
        for conn in mod.isolated:
            if conn.nu == (F(0), F(0)):
                continue
            v = rho_torus(mat, conn)
            cls = classify(mat)
            _, l, nu_prime = (cls.epsilon, cls.l, None)
            assert v.branch == RhoBranch.PARABOLIC

    def test_rejects_untwisted(self):
        mat = SL2ZMatrix(1, 3, 0, 1)
        conn = connection_from_nu(mat, (F(0), F(0)))
        with pytest.raises(UnsupportedClassError):
            rho_torus(mat, conn)

    def test_conjugation_invariance(self):
        rng = random.Random(50)
        for _ in range(30):
            mat = random_parabolic(rng, 5, 4)
            cls = classify(mat)
            if cls.epsilon != 1:
                continue
            from rhocalc import transport_nu_from_normal_form

            for j in range(1, abs(cls.l)):
                nu_prime = (F(j, abs(cls.l)), F(1, 2))
                nu = transport_nu_from_normal_form(mat, nu_prime)
                conn = connection_from_nu(mat, nu)
                v = rho_torus(mat, conn)
                want = 2 * cls.l * (
                    periodic_bernoulli(2, nu_prime[0]) - F(1, 6)
                ) + sgn(cls.l)
                assert v.value == want


class TestRhoTorusHyperbolic:
    def test_degree_five_closed_form_anchors(self):
        # what the six-term closed formula yields on the 5-class example
        mat = SL2ZMatrix(-2, 1, 1, -1)
        values = {}
        for conn in enumerate_torus_connections(mat).isolated:
            if conn.nu == (F(0), F(0)):
                continue
            values[conn.nu] = rho_torus(mat, conn).value
        assert values == {
            (F(1, 5), F(3, 5)): F(-2, 5),
            (F(2, 5), F(1, 5)): F(2, 5),
            (F(3, 5), F(4, 5)): F(2, 5),
            (F(4, 5), F(2, 5)): F(-2, 5),
        }

    def test_trace_six_anchors(self):
        mat = SL2ZMatrix(3, 2, 4, 3)
        got = {
            conn.nu: rho_torus(mat, conn).value
            for conn in enumerate_torus_connections(mat).isolated
            if conn.nu != (F(0), F(0))
        }
        assert got == {
            (F(0), F(1, 2)): F(0),
            (F(1, 2), F(0)): F(-1),
            (F(1, 2), F(1, 2)): F(1),
        }

    def test_two_path_identity(self):
        rng = random.Random(51)
        checked = 0
        while checked < 200:
            mat = random_hyperbolic(rng, 30)
            for conn in enumerate_torus_connections(mat).isolated:
                if conn.nu == (F(0), F(0)):
                    continue
                a = rho_torus(mat, conn)
                b = rho_hyperbolic_prep(mat, conn)
                assert a.value == b.value, (mat, conn.nu)
                checked += 1

    def test_prep_path_formula_shape(self):
        # prep path equals the assembled Dedekind-difference expression
        mat = SL2ZMatrix(3, 2, 4, 3)
        conn = connection_from_nu(mat, (F(1, 2), F(1, 2)))
        v = rho_hyperbolic_prep(mat, conn)
        a, c, d = mat.a, mat.c, mat.d
        want = (
            F(2 * (a + d), c) * (periodic_bernoulli(2, F(1, 2)) - F(1, 6))
            - 4 * sgn(c) * (generalized_sum(F(1, 2), F(1, 2), a, c) - classical_sum(a, c))
            + sgn(c * (a + d))
        )
        assert v.value == want

    def test_rejects_untwisted(self):
        mat = SL2ZMatrix(3, 2, 4, 3)
        conn = connection_from_nu(mat, (F(0), F(0)))
        with pytest.raises(UnsupportedClassError):
            rho_torus(mat, conn)
        with pytest.raises(UnsupportedClassError):
            rho_hyperbolic_prep(mat, conn)

    def test_nu_periodicity(self):
        rng = random.Random(52)
        for _ in range(20):
            mat = random_hyperbolic(rng, 20)
            for conn in enumerate_torus_connections(mat).isolated:
                if conn.nu == (F(0), F(0)):
                    continue
                shifted = connection_from_nu(
                    mat, (conn.nu[0] + 3, conn.nu[1] - 2)
                )
                assert rho_torus(mat, shifted).value == rho_torus(mat, conn).value


class TestRhoTorusRejections:
    def test_identity_rejected(self):
        conn_mat = SL2ZMatrix(1, 0, 0, 1)
        with pytest.raises(UnsupportedClassError):
            rho_torus(conn_mat, connection_from_nu(conn_mat, (F(0), F(0))))

    def test_minus_identity_rejected(self):
        mat = SL2ZMatrix(-1, 0, 0, -1)
        conn = connection_from_nu(mat, (F(1, 2), F(1, 2)))
        with pytest.raises(UnsupportedClassError):
            rho_torus(mat, conn)


class TestEtaUntwisted:
    @pytest.mark.parametrize(
        "mat,want",
        [
            (SL2ZMatrix(0, -1, 1, 1), F(-4, 3)),
            (SL2ZMatrix(-1, -1, 1, 0), F(-2, 3)),
            (SL2ZMatrix(0, -1, 1, 0), F(-1)),
        ],
    )
    def test_elliptic_pins(self, mat, want):
        assert eta_untwisted_torus(mat) == want

    def test_hyperbolic_closed_form(self):
        rng = random.Random(53)
        for _ in range(50):
            mat = random_hyperbolic(rng, 25)
            a, c, d = mat.a, mat.c, mat.d
            want = F(a + d, 3 * c) - 4 * sgn(c) * classical_sum(a, c) - sgn(c * (a + d))
            assert eta_untwisted_torus(mat) == want

    def test_hyperbolic_pin_vanishes(self):
        assert eta_untwisted_torus(SL2ZMatrix(3, 2, 4, 3)) == 0

    def test_parabolic_rejected(self):
        with pytest.raises(UnsupportedClassError):
            eta_untwisted_torus(SL2ZMatrix(1, 3, 0, 1))


class TestChernSimons:
    def test_congruence_hyperbolic(self):
        rng = random.Random(54)
        checked = 0
        while checked < 150:
            mat = random_hyperbolic(rng, 25)
            for conn in enumerate_torus_connections(mat).isolated:
                if conn.nu == (F(0), F(0)):
                    continue
                rho = rho_torus(mat, conn).value
                cs = chern_simons_mod1(mat, conn)
                assert (rho - cs).denominator == 1, (mat, conn.nu)
                assert 0 <= cs < 1
                checked += 1

    def test_congruence_parabolic(self):
        rng = random.Random(55)
        checked = 0
        while checked < 60:
            mat = random_parabolic(rng, 6, 5)
            mod = enumerate_torus_connections(mat)
            for conn in mod.isolated:
                if conn.nu == (F(0), F(0)):
                    continue
                rho = rho_torus(mat, conn).value
                cs = chern_simons_mod1(mat, conn)
                assert (rho - cs).denominator == 1
                checked += 1
            cls = classify(mat)
            if cls.epsilon == 1:
                from rhocalc import transport_nu_from_normal_form

                for j in range(1, abs(cls.l)):
                    nu = transport_nu_from_normal_form(
                        mat, (F(j, abs(cls.l)), F(1, 2))
                    )
                    conn = connection_from_nu(mat, nu)
                    rho = rho_torus(mat, conn).value
                    cs = chern_simons_mod1(mat, conn)
                    assert (rho - cs).denominator == 1
                    checked += 1

    def test_parabolic_normal_form_value(self):
        # CS = 2 l nu1^2 mod 1 for the shear itself
        mat = SL2ZMatrix(1, 3, 0, 1)
        conn = connection_from_nu(mat, (F(1, 3), F(1, 2)))
        cs = chern_simons_mod1(mat, conn)
        want = 2 * 3 * F(1, 3) ** 2
        assert cs == want - (want // 1)


class TestParabolicCircleCoincidence:
    def test_all_shears_small_degree(self):
        for l in range(-6, 7):
            if l == 0:
                continue
            mat = SL2ZMatrix(1, l, 0, 1)
            for k in range(abs(l)):
                nu = (F(k, l) - (F(k, l) // 1), F(1, 2))
                conn = connection_from_nu(mat, nu)
                torus_value = rho_torus(mat, conn).value
                circle_conn = CircleFlatConnection(l, k, is_trivial=False)
                circle_value = rho_circle(circle_conn).value
                assert torus_value == circle_value, (l, k)


class TestFiniteOrderGeneric:
    def test_matches_elliptic_closed_form(self):
        for theta in (F(1, 6), F(1, 4), F(1, 3)):
            # c > 0 orientation: untwisted phase theta
            data = EigenphaseData(
                plus_phases=(), minus_phases=(), untwisted_plus_phases=(theta,), rank_k=1
            )
            assert rho_finite_order_generic(data) == 2 - 4 * theta
            # c < 0 orientation: untwisted phase 1 - theta
            data = EigenphaseData(
                plus_phases=(),
                minus_phases=(),
                untwisted_plus_phases=(1 - theta,),
                rank_k=1,
            )
            assert rho_finite_order_generic(data) == 4 * theta - 2

    def test_twisted_phases_contribute(self):
        data = EigenphaseData(
            plus_phases=(F(1, 3),),
            minus_phases=(F(1, 4),),
            untwisted_plus_phases=(),
            rank_k=1,
        )
        want = (2 * F(1, 3) - 1) - (2 * F(1, 4) - 1)
        assert rho_finite_order_generic(data) == want

    def test_validation(self):
        with pytest.raises(DomainError):
            EigenphaseData(
                plus_phases=(F(1, 3),),
                minus_phases=(),
                untwisted_plus_phases=(),
                rank_k=1,
            )
        with pytest.raises(DomainError):
            EigenphaseData(
                plus_phases=(), minus_phases=(), untwisted_plus_phases=(F(3, 2),), rank_k=1
            )


class TestParabolicIntermediates:
    def test_assembled_pins(self):
        inter = parabolic_intermediates(1, 3, F(1, 3))
        assert abs(inter.assembled - (-1 / 3)) < 1e-12
        inter = parabolic_intermediates(-1, 4, F(1, 2))
        assert abs(inter.assembled - (-2.0)) < 1e-12

    def test_assembled_matches_exact_theorem(self):
        # eps = +1: assembled = 2l(P_2(nu1) - 1/6) + ... pi-cancellation
        for l in (-4, -1, 2, 5):
            for j in range(abs(l)):
                nu1 = F(j, abs(l))
                inter = parabolic_intermediates(1, l, nu1)
                want = float(2 * l * (periodic_bernoulli(2, nu1) - F(1, 6)) + sgn(l))
                assert abs(inter.assembled - want) < 1e-12

    def test_admissibility(self):
        with pytest.raises(AdmissibilityError):
            parabolic_intermediates(1, 3, F(1, 2))
        with pytest.raises(AdmissibilityError):
            parabolic_intermediates(-1, 3, F(1, 3))
        with pytest.raises(DomainError):
            parabolic_intermediates(2, 3, F(1, 3))


class TestOrientationReversal:
    def test_inverse_negates_rho_pin(self):
        mat = SL2ZMatrix(3, 2, 4, 3)
        inv = mat.inverse()
        nu = (F(1, 2), F(1, 2))
        v = rho_torus(mat, connection_from_nu(mat, nu)).value
        w = rho_torus(inv, connection_from_nu(inv, nu)).value
        assert v == 1 and w == -1

    def test_inverse_negates_rho_random(self):
        rng = random.Random(56)
        for _ in range(40):
            mat = random_hyperbolic(rng, 20)
            inv = mat.inverse()
            for conn in enumerate_torus_connections(mat).isolated:
                if conn.nu == (F(0), F(0)):
                    continue
                v = rho_torus(mat, conn).value
                w = rho_torus(inv, connection_from_nu(inv, conn.nu)).value
                assert w == -v, (mat, conn.nu)
