import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tiltwall.exactnum import (
    Interval,
    Poly,
    SignClass,
    Surd,
    count_roots,
    rat_str,
    parse_rat,
    sturm_sign,
    surd_ceil,
    surd_cmp,
    surd_floor,
)

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=12)


def test_rat_strings():
    assert rat_str(F(3, 1)) == "3"
    assert rat_str(F(-7, 2)) == "-7/2"
    assert parse_rat("-7/2") == F(-7, 2)
    assert parse_rat("5") == 5


class TestSurd:
    def test_sqrt2_below_three_halves(self):
        assert surd_cmp(Surd.sqrt(2), Surd(F(3, 2))) < 0

    def test_identity_equal(self):
        assert surd_cmp(Surd(1), Surd(1)) == 0

    def test_canonical_form_equality(self):
        # -sqrt(8) and -2 sqrt(2) are the same number and the same canonical form
        a, b = Surd(0, -1, 8), Surd(0, -2, 2)
        assert a == b
        assert surd_cmp(a, b) == 0

    def test_perfect_square_radicand_folds(self):
        assert Surd(1, 2, 9).is_rational
        assert Surd(1, 2, 9).rational_value() == 7

    def test_rational_radicand(self):
        s = Surd.sqrt(F(505, 196))
        assert (s.a, s.b, s.c) == (0, F(1, 14), 505)

    def test_negative_radicand_rejected(self):
        with pytest.raises(ValueError):
            Surd(0, 1, -2)

    def test_distinct_radicands(self):
        assert surd_cmp(Surd(1, 1, 2), Surd(0, 1, 5)) > 0  # 2.414... vs 2.236...
        assert surd_cmp(Surd(0, 1, 2), Surd(0, 1, 3)) < 0
        assert surd_cmp(Surd(-1, 1, 2), Surd(1, -1, 3)) > 0  # 0.414 vs -0.732

    def test_floor_ceil(self):
        assert surd_floor(Surd.sqrt(2)) == 1
        assert surd_ceil(Surd.sqrt(2)) == 2
        assert surd_floor(Surd(3)) == 3
        assert surd_ceil(Surd(3)) == 3
        assert surd_floor(-Surd.sqrt(2)) == -2

    def test_arithmetic(self):
        s = Surd(F(1, 2)) + Surd.sqrt(2) * F(3, 2)
        assert (s.a, s.b, s.c) == (F(1, 2), F(3, 2), 2)
        assert (s - s).sign() == 0
        assert (-s).sign() == -1

    @given(rationals, rationals)
    @settings(max_examples=200)
    def test_embedded_rationals_agree(self, q1, q2):
        c = surd_cmp(Surd(q1), Surd(q2))
        assert c == (q1 > q2) - (q1 < q2)

    @given(rationals, rationals, st.sampled_from([2, 3, 5, 6, 7, 10]))
    @settings(max_examples=200)
    def test_antisymmetry(self, a, b, c):
        x = Surd(a, b, c)
        y = Surd(b, a, c)
        assert surd_cmp(x, y) == -surd_cmp(y, x)

    @given(rationals, rationals, st.sampled_from([2, 3, 5, 7]))
    @settings(max_examples=200)
    def test_sign_matches_float(self, a, b, c):
        x = Surd(a, b, c)
        f = float(x)
        if abs(f) > 1e-9:
            assert x.sign() == (1 if f > 0 else -1)


class TestPoly:
    def test_eval_and_arith(self):
        p = Poly([1, 2, 3])  # 1 + 2x + 3x^2
        assert p(2) == 17
        q = Poly.from_roots([1, -1])
        assert q(1) == 0 and q(-1) == 0 and q(0) == -1
        assert (p * q).degree == 4
        assert (p - p).is_zero

    def test_divmod(self):
        p = Poly.from_roots([1, 2, 3])
        q, r = p.divmod(Poly.from_roots([2]))
        assert r.is_zero
        assert q == Poly.from_roots([1, 3])

    def test_square_free_part(self):
        p = Poly.from_roots([1, 1, 2])
        assert p.square_free_part() == Poly.from_roots([1, 2])


class TestSturm:
    def test_quartic_positive_on_ray(self):
        p = Poly([-1, -8, 20, -24, 12])  # 12x^4 - 24x^3 + 20x^2 - 8x - 1
        rep = sturm_sign(p, Interval.at_least(2))
        assert rep.classification is SignClass.STRICTLY_POSITIVE
        # it is genuinely mixed on the whole line
        rep2 = sturm_sign(p, Interval.whole_line())
        assert rep2.classification is SignClass.MIXED

    def test_parabola_nonpositive_with_root(self):
        p = Poly([0, -3, 1])  # x^2 + x - 4x
        rep = sturm_sign(p, Interval.closed(0, F(3, 2)))
        assert rep.classification is SignClass.NON_POSITIVE_WITH_ROOTS
        assert rep.roots == ((F(0), F(0)),)

    def test_boundary_root_point_interval(self):
        rep = sturm_sign(Poly([0, 1]), Interval.closed(0, 0))
        assert rep.classification is SignClass.NON_NEGATIVE_WITH_ROOTS
        assert rep.roots == ((F(0), F(0)),)

    def test_zero_polynomial_distinct_variant(self):
        rep = sturm_sign(Poly([]), Interval.whole_line())
        assert rep.classification is SignClass.IDENTICALLY_ZERO

    def test_positive_scaling_invariance(self):
        p = Poly([-6, 1, 1])
        for iv in (Interval.closed(-10, 10), Interval.at_least(3), Interval.at_most(-4)):
            assert (
                sturm_sign(p, iv).classification
                is sturm_sign(p * F(7, 3), iv).classification
            )

    def test_open_endpoints_exclude_roots(self):
        p = Poly.from_roots([1, 3])
        rep = sturm_sign(p, Interval(F(1), F(3), False, False))
        assert rep.classification is SignClass.STRICTLY_NEGATIVE
        rep2 = sturm_sign(p, Interval.closed(1, 3))
        assert rep2.classification is SignClass.NON_POSITIVE_WITH_ROOTS
        assert len(rep2.roots) == 2

    def test_double_root_nonnegative(self):
        p = Poly.from_roots([2, 2])
        rep = sturm_sign(p, Interval.whole_line())
        assert rep.classification is SignClass.NON_NEGATIVE_WITH_ROOTS
        assert len(rep.roots) == 1

    def test_asymptotic_signs(self):
        p = Poly([0, 0, 0, 1])  # x^3
        assert sturm_sign(p, Interval.at_least(1)).classification is SignClass.STRICTLY_POSITIVE
        assert sturm_sign(p, Interval.at_most(-1)).classification is SignClass.STRICTLY_NEGATIVE
        assert sturm_sign(p, Interval.whole_line()).classification is SignClass.MIXED

    def test_root_counts_match_brute_force(self):
        rng = random.Random(7)
        for _ in range(60):
            n = rng.randint(1, 5)
            roots = sorted(
                set(F(rng.randint(-8, 8), rng.randint(1, 4)) for _ in range(n))
            )
            p = Poly.from_roots(roots, lead=rng.choice([1, -2, F(1, 3)]))
            lo = F(rng.randint(-12, 0))
            hi = F(rng.randint(1, 12))
            expected = sum(1 for r in roots if lo <= r <= hi)
            assert count_roots(p, Interval.closed(lo, hi)) == expected
            expected_open = sum(1 for r in roots if lo < r < hi)
            assert count_roots(p, Interval(lo, hi, False, False)) == expected_open

    def test_isolating_intervals_isolate(self):
        roots = [F(-3), F(1, 2), F(2)]
        p = Poly.from_roots(roots)
        rep = sturm_sign(p, Interval.whole_line())
        assert rep.classification is SignClass.MIXED
        assert len(rep.roots) == 3
        for (lo, hi), r in zip(rep.roots, roots):
            assert lo <= r <= hi
