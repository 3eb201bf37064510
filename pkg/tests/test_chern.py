from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tiltwall.chern import (
    ChernVec,
    discriminant,
    dual_class,
    ideal_sheaf_class,
    lattice_check,
    line_bundle_class,
    parse_class,
    parse_class2,
    tensor_O,
    twist,
)
from tiltwall.geometry import P3, PPAV

rationals = st.fractions(min_value=-8, max_value=8, max_denominator=6)


def classes():
    return st.builds(ChernVec, rationals, rationals, rationals, rationals)


def test_twist_examples():
    assert twist(ChernVec(1, 0, 0, 0), -1) == ChernVec(1, 1, F(1, 2), F(1, 6))
    v = ChernVec(2, -1, F(7, 2), F(5, 6))
    assert twist(v, 0) == v


@given(classes(), rationals, rationals)
@settings(max_examples=150)
def test_twist_group_action(v, a, b):
    assert twist(twist(v, a), b) == twist(v, a + b)


def test_tensor_examples():
    assert tensor_O(ChernVec(1, 0, 0, 0), -2) == ChernVec(1, -2, 2, F(-4, 3))
    v = ChernVec(3, 1, F(-5, 2), F(1, 3))
    assert tensor_O(v, 0) == v
    assert tensor_O(tensor_O(v, 4), -4) == v
    assert tensor_O(ChernVec(1, 0, 0, 0), -2) == line_bundle_class(-2)


def test_dual_examples():
    assert dual_class(ChernVec(-1, 0, 5, F(7, 6))) == ChernVec(1, 0, -5, F(7, 6))
    assert dual_class(ChernVec(1, -2, 2, F(-4, 3))) == ChernVec(-1, -2, -2, F(-4, 3))
    v = ChernVec(2, -1, F(1, 2), F(-5, 6))
    assert dual_class(dual_class(v)) == v


def test_discriminant_examples():
    for d in (1, 4, F(7, 2)):
        assert discriminant(ChernVec(1, 0, -d, 0)) == 2 * d
    for n in range(-4, 5):
        assert discriminant(line_bundle_class(n)) == 0


@given(classes(), rationals)
@settings(max_examples=150)
def test_discriminant_invariance(v, b):
    assert discriminant(twist(v, b)) == discriminant(v)
    assert discriminant(dual_class(v)) == discriminant(v)


def test_lattice_check():
    assert lattice_check(ChernVec(1, 0, F(-7, 2), F(1, 6)), PPAV)
    assert lattice_check(ChernVec(1, 0, F(-7, 2), F(1, 6)), P3)  # class lattice allows it
    assert not lattice_check(ChernVec(1, F(1, 2), 0, 0), P3)
    assert not lattice_check(ChernVec(F(1, 2), 0, 0, 0), P3)
    assert not lattice_check(ChernVec(1, 0, F(1, 3), 0), P3)
    assert not lattice_check(ChernVec(1, 0, 0, F(1, 12)), P3)


def test_lattice_preserved_by_tensor():
    v = ChernVec(2, -1, F(3, 2), F(-5, 6))
    assert lattice_check(v, P3)
    for n in range(-3, 4):
        assert lattice_check(tensor_O(v, n), P3)


def test_ideal_sheaf_class():
    assert ideal_sheaf_class(4, 10, P3) == ChernVec(1, 0, -4, 10)
    assert ideal_sheaf_class(F(7, 2), 0, PPAV) == ChernVec(1, 0, F(-7, 2), 0)
    with pytest.raises(ValueError):
        ideal_sheaf_class(F(7, 2), 0, P3)  # degrees on projective space are integers
    with pytest.raises(ValueError):
        ideal_sheaf_class(-1, 0, P3)
    with pytest.raises(ValueError):
        ideal_sheaf_class(2, F(1, 7), P3)


def test_parse_and_json_roundtrip():
    v = parse_class("(1, 0, -7/2, 19/6)")
    assert v == ChernVec(1, 0, F(-7, 2), F(19, 6))
    assert ChernVec.from_json(v.to_json()) == v
    assert parse_class2("(2, -1, 1/2)").d == F(1, 2)
    assert parse_class2("(1,0,-7,19)").d == -7
    with pytest.raises(ValueError):
        parse_class("(1,2)")
