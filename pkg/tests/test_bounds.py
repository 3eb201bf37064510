import math
from fractions import Fraction as F

import pytest

from tiltwall.bounds import (
    A,
    B,
    Regime,
    ReflexiveCase,
    Remainder,
    bound_E,
    bound_E_tilde,
    conj_bound_rangeB,
    delta_c,
    eps,
    eps1,
    eps_tilde,
    hartshorne_reflexive,
    max_ch3_rank0,
    max_ch3_rank1,
    max_ch3_rank2,
    sections_bound_curve,
    sections_bound_points,
)
from tiltwall.geometry import P3, genus_from_ch3


class TestErrorTerms:
    def test_eps1(self):
        assert eps1(7) == 0
        assert eps1(F(7, 2)) == F(1, 24)
        assert eps1(0) == 0
        with pytest.raises(ValueError):
            eps1(F(1, 3))

    def test_eps_tilde(self):
        assert Remainder.of(7, 2).f == 1
        assert eps_tilde(7, 2) == F(1, 4)
        for m in range(1, 6):
            assert eps_tilde(3 * m, 3) == 0
        for d in (F(5, 2), 4, F(-7, 2)):
            assert eps_tilde(d, 1) == 0

    def test_eps_tilde_symmetry(self):
        # the residue term only depends on f(k - f); f and k - f agree
        for k in range(2, 12):
            for twice_d in range(-30, 30):
                d = F(twice_d, 2)
                assert eps_tilde(d, k) == eps_tilde(-d, k)

    def test_residue_cap(self):
        # exhaustive over one residue period for k <= 50
        for k in range(1, 51):
            for twice_f in range(0, 2 * k):
                d = -F(twice_f, 2)
                assert eps_tilde(d, k) <= F(k * k - k, 8)


class TestBoundE:
    def test_values(self):
        assert bound_E(4, 1) == 10
        assert bound_E(7, 2) == 19
        assert genus_from_ch3(bound_E(7, 2), 7, P3) == 6  # non-planar degree seven
        assert max_ch3_rank1(4) == bound_E(4, 1)

    def test_sixth_integrality(self):
        for k in range(1, 7):
            for twice_d in range(1, 80):
                d = F(twice_d, 2)
                assert (6 * bound_E(d, k)).denominator == 1
                if d.denominator == 1 and k == 1:
                    assert bound_E(d, 1).denominator == 1

    def test_strictly_decreasing_in_k(self):
        for h in range(2, 13):
            for k in range(1, h):
                for twice_d in range(2 * h * (h - 1) + 1, 2 * 60):
                    d = F(twice_d, 2)
                    assert bound_E_tilde(d, k) > bound_E_tilde(d, h)


class TestRankBounds:
    def test_rank1(self):
        assert max_ch3_rank1(0) == 0
        assert max_ch3_rank1(F(1, 2)) == F(1, 3)
        assert max_ch3_rank1(4) == 10
        with pytest.raises(ValueError):
            max_ch3_rank1(-1)

    def test_rank0(self):
        assert max_ch3_rank0(1, 0) == 0
        assert max_ch3_rank0(2, 0) == F(1, 3)
        d = F(5, 2)
        assert max_ch3_rank0(1, d) == F(1, 24) + d * d / 2 - eps(d + F(1, 2), 1)
        with pytest.raises(ValueError):
            max_ch3_rank0(0, 1)

    def test_rank2(self):
        assert max_ch3_rank2(0, 0) == 0
        assert max_ch3_rank2(0, F(-1, 2)) == F(1, 6)
        assert max_ch3_rank2(-1, 0) == F(1, 6)
        assert max_ch3_rank2(0, -1) == F(1, 2) + F(5, 24) - F(1, 24)
        assert max_ch3_rank2(0, 1) is None
        assert max_ch3_rank2(-1, F(1, 2)) is None
        with pytest.raises(ValueError):
            max_ch3_rank2(3, 0)


class TestDeltaAndThresholds:
    def test_delta_c(self):
        assert delta_c(1) == 3 and delta_c(3) == 3
        assert delta_c(5) == 1 and delta_c(2) == 1 and delta_c(-1) == 1
        assert delta_c(0) == 0 and delta_c(4) == 0 and delta_c(-2) == 0

    def test_A_B_values(self):
        assert A(5, 4) == 17
        assert A(5, 5) == 21
        assert B(5, 4) == 19
        assert A(31, 51) == 31 * 31 - 7 * 31 + 19

    def test_endpoint_identities(self):
        for k in range(5, 61):
            assert A(k, k - 1) == math.ceil(F(k * k + 4 * k + 6, 3))
            assert A(k, 2 * k - 5) == k * (k - 1) + 1

    def test_interlacing(self):
        for k in range(5, 61):
            for f in range(k - 1, 2 * k - 5):
                assert A(k, f) < B(k, f) <= A(k, f + 1)

    def test_range_errors(self):
        with pytest.raises(ValueError):
            A(4, 3)
        with pytest.raises(ValueError):
            A(5, 6)


class TestConjecture:
    def test_example(self):
        rb = conj_bound_rangeB(17, 5)
        assert (rb.E, rb.f, rb.h, rb.regime) == (68, 4, 0, Regime.A_TO_B)
        assert genus_from_ch3(rb.E, 17, P3) == 35

    def test_special_slice_value(self):
        assert conj_bound_rangeB(763, 31).E == 31**3 - F(21, 2) * 31**2 + F(87, 2) * 31 - 65

    def test_h_boundary(self):
        assert conj_bound_rangeB(B(5, 4), 5).h == 0
        nxt = conj_bound_rangeB(B(5, 4) + 1, 5)
        assert nxt.h == 1 and nxt.regime is Regime.B_TO_A

    def test_two_formulations_agree(self):
        # ch3 statement vs genus statement, under the genus conversion
        for k in range(5, 21):
            for f in range(k - 1, 2 * k - 6):
                for d in range(A(k, f), A(k, f + 1)):
                    rb = conj_bound_rangeB(d, k)
                    genus_form = (
                        d * (k - 1) + 1 - math.comb(k + 2, 3) + math.comb(rb.f - k + 4, 3) + rb.h
                    )
                    assert genus_from_ch3(rb.E, d, P3) == genus_form

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            conj_bound_rangeB(A(5, 4) - 1, 5)
        with pytest.raises(ValueError):
            conj_bound_rangeB(5 * 4 + 1, 5)


class TestReflexive:
    def test_case1_example(self):
        rep = hartshorne_reflexive(-1, -1)
        assert rep.case is ReflexiveCase.CASE1
        assert rep.e_bound == F(11, 6)
        assert rep.d_max == F(-1, 2)

    def test_out_of_range(self):
        rep = hartshorne_reflexive(0, 0)
        assert rep.case is ReflexiveCase.OUT_OF_RANGE
        assert rep.d_max == -1

    def test_case_boundary_consistency(self):
        # at the case split the quartic bound degenerates to the linear one,
        # and the h^2 bound vanishes
        for c in range(-1, 8):
            split = F(c * c, 6) - c - F(8, 3) - F(delta_c(c - 1), 3)
            den = split.denominator
            if den <= 2:  # lies on the half-integer lattice
                r1 = hartshorne_reflexive(c, split)
                assert r1.case is ReflexiveCase.CASE1
                r2 = hartshorne_reflexive(c, split - F(1, 2))
                assert r2.case is ReflexiveCase.CASE2
                # h2 bound is tiny just below the split: (g-10)(g-16)/72 with g = 19
                assert r2.h2_bound == F(9 * 3, 72)

    def test_case2_quartic(self):
        rep = hartshorne_reflexive(0, -5)
        assert rep.case is ReflexiveCase.CASE2
        g = 0 - 0 - 6 * (-5) - 2 * delta_c(-1)
        assert rep.h2_bound == F((g - 10) * (g - 16), 72)
        assert rep.e_bound == F(0) - 0 + 0 + 0 - 0 + 0 + F(25, 2) + F(-5, 6) + F(2, 9) - F(
            delta_c(-1), 18
        ) * (0 - 0 + 30 - delta_c(-1) - 13)

    def test_unsupported_c(self):
        with pytest.raises(ValueError):
            hartshorne_reflexive(-2, 0)


def test_sections_bounds():
    assert sections_bound_curve(3) == 10
    assert sections_bound_points(3) == 6
    assert sections_bound_curve(0) == 0
    assert sections_bound_curve(-1) == 0
    assert sections_bound_points(-2) == 0
