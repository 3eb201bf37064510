"""Acceptance suite: one test per formal criterion, all exact arithmetic.

Each test prints a single PASS line (visible with pytest -s) after its
assertions hold.  Statements about actual curves or sheaves (existence of
curves attaining the bounds, semistability of specific ideal sheaves,
sharpness of the reflexive-sheaf bounds) are out of scope by design and are
covered only by the property-based suites.
"""

import math
import random
import time
from fractions import Fraction as F

from tiltwall.bounds import (
    A,
    B,
    bound_E,
    bound_E_tilde,
    eps_tilde,
)
from tiltwall.chern import ChernVec, ChernVec2, discriminant, lattice_check
from tiltwall.exactnum import SignClass
from tiltwall.fixtures import certify_all
from tiltwall.geometry import P3, PPAV, genus_from_ch3
from tiltwall.rangeb import heart_check, rank_cap_check, special_case_2k11
from tiltwall.tiltplane import (
    Point,
    QRegionKind,
    WallShape,
    nu,
    q_aux_class,
    q_region,
    wall,
)
from tiltwall.wallsearch import (
    SearchConstraints,
    Verdict,
    brute_force_oracle,
    default_box,
    enumerate_candidates,
    refute_ch3,
)
from tiltwall.wallsearch import _q_disk_of


def _report(n, text):
    print(f"criterion {n}: PASS - {text}")


def test_criterion_1_classical_genus_reproduction():
    for d in range(1, 201):
        assert genus_from_ch3(bound_E(d, 1), d, P3) == F((d - 1) * (d - 2), 2)
    assert bound_E(7, 2) == 19
    assert genus_from_ch3(bound_E(7, 2), 7, P3) == 6
    _report(1, "plane-curve genus for d=1..200 and the non-planar degree-7 value")


def _lattice_class2(rng, profile):
    return ChernVec2(
        rng.randint(-5, 5),
        rng.randint(-8, 8),
        F(rng.randint(-16, 16), profile.den2),
    )


def test_criterion_2_structure_theorem_identity():
    rng = random.Random(2023)
    count = 0
    while count < 10**4:
        v = _lattice_class2(rng, P3)
        w = _lattice_class2(rng, P3)
        if discriminant(v) < 0 or discriminant(w) < 0:
            continue
        wk = wall(v, w)
        if wk.shape is not WallShape.SEMICIRCLE:
            continue
        count += 1
        s, rho2 = wk.wall.center, wk.wall.radius_sq
        assert v.r**2 * rho2 + discriminant(v) == (v.r * s - v.c) ** 2
        assert w.r**2 * rho2 + discriminant(w) == (w.r * s - w.c) ** 2
        top = Point(s, rho2)
        assert nu(v, top) == 0
        assert nu(w, top) == 0
    _report(2, "radius/center identity and hyperbola-top slope on 10^4 seeded wall pairs")


def test_criterion_3_q_wall_coincidence():
    rng = random.Random(3031)
    count = 0
    while count < 10**3:
        v = ChernVec(
            rng.randint(-5, 5),
            rng.randint(-8, 8),
            F(rng.randint(-16, 16), 2),
            F(rng.randint(-40, 40), 6),
        )
        reg = q_region(v)
        wk = wall(v.truncate(), q_aux_class(v))
        if wk.shape is WallShape.SEMICIRCLE:
            count += 1
            assert reg.kind is QRegionKind.DISK
            assert (reg.center, reg.radius_sq) == (wk.wall.center, wk.wall.radius_sq)
        elif wk.shape is WallShape.VERTICAL:
            count += 1
            assert reg.kind is QRegionKind.HALF_PLANE
            assert reg.boundary_beta == wk.beta
    # ideal-sheaf classes: symbolic center/radius formulas on 100 (d, e) pairs
    pairs = 0
    for dd in range(1, 11):
        for ee in range(-5, 5):
            d, e = F(dd), F(ee * 6 + 1, 6)
            reg = q_region(ChernVec(1, 0, -d, e))
            assert reg.center == -3 * e / (2 * d)
            assert reg.radius_sq == (9 * e * e - 8 * d**3) / (4 * d * d)
            pairs += 1
    assert pairs == 100
    _report(3, "quadratic locus equals the auxiliary wall on 10^3 classes + 100 ideal classes")


def test_criterion_4_refutation_grid():
    t0 = time.time()
    for k in (2, 3, 4):
        for d in range(k * (k - 1) + 1, 31):
            E = bound_E(d, k)
            cons = SearchConstraints(section_vanishing_k=k)
            above = refute_ch3(ChernVec(1, 0, -d, E + F(1, 6)), P3, cons)
            assert above.verdict is Verdict.REFUTED, (d, k)
            at = refute_ch3(ChernVec(1, 0, -d, E), P3, cons)
            assert at.verdict is Verdict.WALLS_REMAIN, (d, k)
    elapsed = time.time() - t0
    assert elapsed < 60
    _report(4, f"refuted above / walls at the bound for 2<=k<=4, d<=30 in {elapsed:.1f}s")


def _sample_oracle_class(rng, profile):
    while True:
        v = ChernVec(
            rng.randint(0, 3),
            rng.randint(-6, 6),
            F(rng.randint(-24, 24), profile.den2),
            F(rng.randint(-30, 30), profile.den3),
        )
        if not lattice_check(v, profile):
            continue
        if not (1 <= discriminant(v) <= 40):
            continue
        if _q_disk_of(v) is None:
            continue
        return v


def test_criterion_5_oracle_equivalence():
    def key(c):
        return (
            c.wall.center,
            c.wall.radius_sq,
            tuple(sorted(tuple(p.prefix) for p in c.prefixes)),
        )

    rng = random.Random(5057)
    total = 0
    for profile in (P3, PPAV):
        for _ in range(100):
            v = _sample_oracle_class(rng, profile)
            total += 1
            enum = sorted(key(c) for c in enumerate_candidates(v, profile))
            orc = sorted(key(c) for c in brute_force_oracle(v, profile, default_box(v, profile)))
            assert enum == orc, v
    assert total >= 200
    _report(5, f"enumerator matches the raw-definition oracle on {total} classes")


def test_criterion_6_bound_library_identities():
    for k in range(1, 51):
        for twice_f in range(0, 2 * k):
            assert eps_tilde(-F(twice_f, 2), k) <= F(k * k - k, 8)
    for h in range(2, 13):
        for k in range(1, h):
            for twice_d in range(2 * h * (h - 1) + 1, 801):
                assert bound_E_tilde(F(twice_d, 2), k) > bound_E_tilde(F(twice_d, 2), h)
    for k in range(5, 61):
        assert A(k, k - 1) == math.ceil(F(k * k + 4 * k + 6, 3))
        assert A(k, 2 * k - 5) == k * (k - 1) + 1
        for f in range(k - 1, 2 * k - 5):
            assert A(k, f) < B(k, f) <= A(k, f + 1)
    _report(6, "residue cap, monotone bound, and threshold identities up to k=60")


def test_criterion_7_intermediate_range_checks():
    for k in range(5, 41):
        for f in range(k - 1, 2 * k - 5):
            top = A(k, f + 1) if f < 2 * k - 6 else A(k, 2 * k - 5)
            for d in range(A(k, f), top):
                assert heart_check(d, f)
            for d in range(A(k, f), B(k, f) + 1):
                assert rank_cap_check(d, f, k)
    for k in range(31, 101):
        rep = special_case_2k11(k)
        assert rep.passed
        assert rep.d == k * k - 7 * k + 19
        assert F(rep.E) == k**3 - F(21, 2) * k * k + F(87, 2) * k - 65
    _report(7, "heart/rank-cap grids for k<=40 and the special slice for 31<=k<=100")


def test_criterion_8_fixture_certification():
    results = certify_all()
    assert len(results) >= 25
    assert all(r.ok for r in results)
    by_id = {r.fixture.id: r for r in results}
    flagship = by_id["rk2sq-psi-quartic"]
    assert flagship.report.classification is SignClass.STRICTLY_POSITIVE
    assert by_id["linebundle-extremum"].report.classification is (
        SignClass.NON_NEGATIVE_WITH_ROOTS
    )
    _report(8, f"all {len(results)} polynomial sign fixtures certified by Sturm sequences")
