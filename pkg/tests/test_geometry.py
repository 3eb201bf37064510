from fractions import Fraction as F

import pytest

from tiltwall.geometry import (
    P3,
    PPAV,
    Profile,
    builtin_profiles,
    ch3_from_genus,
    genus_from_ch3,
    profile_by_name,
)


def test_builtin_profiles():
    names = {p.name for p in builtin_profiles()}
    assert {"P3", "PPAV", "FANO_IDX2_DEG1", "FANO_IDX2_DEG2"} <= names
    assert P3.canonical_coeff == -4
    assert P3.den3 == 6 and P3.den2 == 2
    assert PPAV.canonical_coeff == 0 and PPAV.h3 == 6
    f1 = profile_by_name("FANO_IDX2_DEG1")
    f2 = profile_by_name("FANO_IDX2_DEG2")
    assert f1.canonical_coeff == f2.canonical_coeff == -2
    assert (f1.h3, f2.h3) == (1, 2)
    assert all(p.assumption_B and p.assumption_C for p in builtin_profiles())


def test_profile_validation():
    with pytest.raises(ValueError):
        Profile("bad", h3=0, canonical_coeff=0)
    with pytest.raises(ValueError):
        Profile("bad", h3=1, canonical_coeff=0, den2=3)
    with pytest.raises(KeyError):
        profile_by_name("nope")


def test_genus_examples():
    assert genus_from_ch3(10, 4, P3) == 3  # plane quartic
    assert genus_from_ch3(0, 1, PPAV) == 1
    for d in (1, 5, 17):
        assert genus_from_ch3(2 * d - 1, d, P3) == 0
    assert genus_from_ch3(19, 7, P3) == 6


def test_genus_roundtrip():
    for profile in (P3, PPAV):
        den = profile.degree_den
        for dd in range(1, 8):
            d = F(dd, den)
            for ee in range(-6, 7):
                e = F(ee, profile.den3)
                assert ch3_from_genus(genus_from_ch3(e, d, profile), d, profile) == e


def test_genus_lattice_errors():
    with pytest.raises(ValueError):
        genus_from_ch3(0, F(7, 2), P3)
    with pytest.raises(ValueError):
        genus_from_ch3(0, -2, P3)
    with pytest.raises(ValueError):
        ch3_from_genus(0, F(1, 3), PPAV)
    # half-integer degrees are fine off projective space
    assert genus_from_ch3(0, F(7, 2), PPAV) == 1


def test_profile_json_roundtrip():
    for p in builtin_profiles():
        assert Profile.from_json(p.to_json()) == p
    # absent curve_den defaults to den2
    obj = PPAV.to_json()
    del obj["curve_den"]
    assert Profile.from_json(obj).degree_den == 2
