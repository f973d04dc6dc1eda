"""Double integrals: frozen nested-quadrature oracle values, the
complementary-moduli and swap-complement symmetries, diagonal vanishing,
and agreement between the direct and kernel routes."""

import math

import pytest

from hallint import integrals as ig
from hallint.elliptic import complete_k, complete_kprime
from hallint.errors import DomainError

# frozen offline oracle values (nested adaptive quadrature at 30 dps)
A_03_07 = 4.368810792722321513043528
A_06_08 = 4.256712938732822793208574
A_10_05 = 4.702863323969191789311111
I_07_02 = 0.9417663413476577264000284
I_05_03 = 0.5452247922841022524953816
I_06_02 = 0.8402084391012156009166119
I_07_03 = 0.8168308766576078843933826
I_10_00 = 1.83193118835443803010920702986477  # 2 * Catalan
D1_05_03 = 1.825431041589422038024328
D1_06_02 = 1.786920766687964688181311
D1_025_025 = 2.325279868955402759766029  # K(sqrt(0.75))^2 / 2
D2_06_02 = 0.9467123275867490872646995
D2_05_049 = 1.667162192498439431667533
D2_06_0001 = 0.8324914613949528323359107
KP04_KP06 = 3.465394441314824135445127  # K(sqrt(0.6)) K(sqrt(0.4))


class TestADouble:
    def test_unit_integrands(self):
        assert ig.a_double(0.0, 0.0) == pytest.approx(math.pi**2 / 2.0, abs=1e-12)

    def test_complementary_moduli_symmetry(self):
        p, q = 0.6, 0.8
        lhs = ig.a_double(p, q)
        rhs = ig.a_double(math.sqrt(1.0 - p * p), math.sqrt(1.0 - q * q))
        assert lhs == pytest.approx(rhs, abs=1e-9)

    def test_nested_oracle_value(self):
        assert ig.a_double(0.3, 0.7) == pytest.approx(A_03_07, abs=1e-8)
        assert ig.a_double(0.6, 0.8) == pytest.approx(A_06_08, abs=1e-8)

    def test_unit_modulus_endpoints(self):
        # singular-but-integrable endpoints, flagged internally
        assert ig.a_double(1.0, 0.5) == pytest.approx(A_10_05, abs=1e-8)
        assert ig.a_double(1.0, 1.0) == pytest.approx(math.pi**2 / 2.0, abs=1e-8)

    def test_shape_in_p_single_interior_minimum(self):
        # At fixed q the value is not monotone in p: the outer weight grows
        # with p where cos x > 0 but shrinks where cos x < 0, and the net
        # effect is a dip with one interior minimum (confirmed against the
        # independent nested oracle).
        for q in (0.0, 0.4, 0.8):
            values = [ig.a_double(p, q) for p in (0.1, 0.3, 0.5, 0.7, 0.9)]
            signs = [hi > lo for lo, hi in zip(values, values[1:])]
            assert signs.count(True) >= 1 and signs.count(False) >= 1
            switch = signs.index(True)
            assert all(not s for s in signs[:switch]) and all(signs[switch:])

    @pytest.mark.parametrize("p,q", [(-0.1, 0.5), (0.5, 1.2), (math.nan, 0.5)])
    def test_domain(self, p, q):
        with pytest.raises(DomainError):
            ig.a_double(p, q)


class TestIDirect:
    @pytest.mark.parametrize("alpha", [0.2, 0.5, 0.9])
    def test_diagonal_vanishes(self, alpha):
        assert abs(ig.i_direct(alpha, alpha, 1e-10)) <= 1e-9

    def test_swap_complement_symmetry(self):
        assert ig.i_direct(0.7, 0.2) == pytest.approx(ig.i_direct(0.8, 0.3), abs=1e-8)

    def test_nested_oracle_values(self):
        assert ig.i_direct(0.7, 0.2) == pytest.approx(I_07_02, abs=1e-8)
        assert ig.i_direct(0.5, 0.3) == pytest.approx(I_05_03, abs=1e-8)

    def test_corner_value_catalan(self):
        assert ig.i_direct(1.0, 0.0) == pytest.approx(I_10_00, abs=1e-9)

    def test_corner_diagonals_by_continuity(self):
        assert ig.i_direct(0.0, 0.0) == 0.0
        assert ig.i_direct(1.0, 1.0) == 0.0

    def test_zero_beta_edge(self):
        # log-singular inner factor at the right endpoint, flagged internally
        value = ig.i_direct(0.6, 0.0)
        assert math.isfinite(value) and value > 0.0

    def test_ordering_enforced(self):
        with pytest.raises(DomainError):
            ig.i_direct(0.2, 0.7)


class TestFirstTerm:
    def test_nested_oracle_value(self):
        assert ig.i_first_term(0.5, 0.3) == pytest.approx(D1_05_03, abs=1e-9)

    def test_diagonal_reduces_to_half_squared_complement(self):
        # D1(a, a) = K(sqrt(1-a))^2 / 2; at a = 1/2 the complement is itself
        assert ig.i_first_term(0.5, 0.5) == pytest.approx(
            complete_k(0.5) ** 2 / 2.0, abs=1e-9
        )
        assert ig.i_first_term(0.25, 0.25) == pytest.approx(D1_025_025, abs=1e-9)

    def test_symmetric_sum(self):
        total = ig.i_first_term(0.4, 0.6) + ig.i_first_term(0.6, 0.4)
        assert total == pytest.approx(KP04_KP06, abs=1e-9)
        assert total == pytest.approx(
            complete_kprime(0.4) * complete_kprime(0.6), abs=1e-9
        )


class TestKernelRouteD1:
    def test_matches_direct_first_term(self):
        assert ig.i1a_representation(0.5, 0.3) == pytest.approx(D1_05_03, abs=1e-9)
        assert ig.i1a_representation(0.5, 0.3) == pytest.approx(
            ig.i_first_term(0.5, 0.3), abs=1e-9
        )

    def test_diagonal_half_squared(self):
        assert ig.i1a_representation(0.5, 0.5) == pytest.approx(
            complete_k(0.5) ** 2 / 2.0, abs=1e-9
        )

    def test_symmetric_sum(self):
        total = ig.i1a_representation(0.4, 0.6) + ig.i1a_representation(0.6, 0.4)
        assert total == pytest.approx(KP04_KP06, abs=1e-9)

    def test_alternate_route_agrees(self):
        assert ig.i1b_representation(0.5, 0.3) == pytest.approx(
            ig.i1a_representation(0.5, 0.3), abs=1e-9
        )

    def test_alternate_route_diagonal(self):
        assert ig.i1b_representation(0.25, 0.25) == pytest.approx(D1_025_025, abs=1e-9)

    def test_alternate_route_near_divergent_factors(self):
        value = ig.i1b_representation(0.9, 0.1)
        assert math.isfinite(value)
        assert value == pytest.approx(ig.i1a_representation(0.9, 0.1), abs=1e-9)

    @pytest.mark.parametrize("alpha,beta", [(0.0, 0.5), (0.5, 0.0), (1.0, 0.5), (0.5, 1.0)])
    def test_open_interval_required(self, alpha, beta):
        with pytest.raises(DomainError):
            ig.i1a_representation(alpha, beta)


class TestKernelRouteD2:
    def test_matches_direct_second_term(self):
        assert ig.i2_representation(0.6, 0.2) == pytest.approx(D2_06_02, abs=1e-8)
        assert ig.i2_representation(0.6, 0.2) == pytest.approx(
            ig.i_second_term(0.6, 0.2), abs=1e-8
        )

    def test_near_diagonal(self):
        assert ig.i2_representation(0.5, 0.49) == pytest.approx(D2_05_049, abs=1e-7)
        assert ig.i2_representation(0.5, 0.49) == pytest.approx(
            ig.i_second_term(0.5, 0.49), abs=1e-7
        )

    def test_small_beta_balance(self):
        # individually large kernel pieces cancel to a finite total
        assert ig.i2_representation(0.6, 1e-3) == pytest.approx(D2_06_0001, abs=1e-7)
        assert ig.i2_representation(0.6, 1e-3) == pytest.approx(
            ig.i_second_term(0.6, 1e-3), abs=1e-7
        )

    def test_strict_ordering_required(self):
        with pytest.raises(DomainError):
            ig.i2_representation(0.3, 0.3)
        with pytest.raises(DomainError):
            ig.i2_representation(0.3, 0.5)


class TestAssembledRepresentation:
    def test_matches_direct(self):
        assert ig.i_representation(0.7, 0.3) == pytest.approx(
            ig.i_direct(0.7, 0.3), abs=1e-8
        )
        assert ig.i_representation(0.7, 0.3) == pytest.approx(I_07_03, abs=1e-8)

    def test_swap_complement_symmetry(self):
        lhs = ig.i_representation(0.8, 0.5)
        rhs = ig.i_representation(1.0 - 0.5, 1.0 - 0.8)
        assert lhs == pytest.approx(rhs, abs=1e-8)

    def test_near_diagonal_finite(self):
        assert ig.i_representation(0.51, 0.5) == pytest.approx(
            ig.i_direct(0.51, 0.5), abs=1e-7
        )

    def test_strict_ordering_required(self):
        with pytest.raises(DomainError):
            ig.i_representation(0.5, 0.5)


class TestPairTypes:
    def test_modulus_complement_involution(self):
        pair = ig.ModulusPair(0.6, 0.8)
        comp = pair.complement()
        assert comp.p == pytest.approx(0.8, abs=1e-15)
        assert comp.q == pytest.approx(0.6, abs=1e-15)
        back = comp.complement()
        assert back.p == pytest.approx(0.6, abs=1e-15)
        assert back.q == pytest.approx(0.8, abs=1e-15)

    def test_param_swap_complement_involution(self):
        pair = ig.ParamPair(0.7, 0.2)
        swapped = pair.swap_complement()
        assert (swapped.alpha, swapped.beta) == (pytest.approx(0.8), pytest.approx(0.3))
        assert swapped.beta <= swapped.alpha
        back = swapped.swap_complement()
        assert back.alpha == pytest.approx(0.7, abs=1e-15)
        assert back.beta == pytest.approx(0.2, abs=1e-15)

    def test_param_ordering_enforced(self):
        with pytest.raises(DomainError):
            ig.ParamPair(0.2, 0.7)

    def test_field_validation(self):
        with pytest.raises(DomainError):
            ig.ModulusPair(1.5, 0.5)
        with pytest.raises(DomainError):
            ig.ParamPair(0.5, -0.1)
