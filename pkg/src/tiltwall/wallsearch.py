"""Finite enumeration of candidate destabilizing walls, and the refutation engine.

For a class v = (r, c, d, e) with r >= 0 and positive discriminant, the
quadratic semidisk is a forbidden region: no semistable object of class v
exists strictly inside it.  Any object of class v that is semistable
somewhere must therefore be destabilized along a numerical wall containing
that semidisk.  Walls come from a subobject prefix (r', x, y); the raw
conditions a prefix must satisfy are

  * the wall against v is a semicircle of positive radius,
  * twisted ch_1 of both the prefix and its complement is nonnegative at the
    wall's axis endpoints,
  * both discriminants are nonnegative and their sum is at most Delta(v),
  * the wall contains the quadratic semidisk,

plus optional constraints (a section-vanishing hypothesis excluding rank-one
prefixes of large slope, a minimal wall, a rank override).  These confine
(r', x, y) to a finite window.  The refuter then bounds ch_3 of both sides of
each candidate with the closed forms from `bounds`; if every candidate forces
e below its actual value, no destabilizing wall can exist and the class is
refuted.

`brute_force_oracle` re-derives the same candidate set over an explicit box
using only the raw definitions and surd endpoint arithmetic, with no window
shortcuts; it is the ground truth the enumerator is tested against.
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction

from .bounds import max_ch3_rank0, max_ch3_rank1, max_ch3_rank2
from .chern import (
    ChernVec,
    ChernVec2,
    delta_pairing,
    discriminant,
    dual_class,
    lattice_check,
)
from .exactnum import Rat, Surd, rat_str, surd_ceil, surd_floor
from .geometry import Profile
from .tiltplane import (
    QRegion,
    QRegionKind,
    Wall,
    WallShape,
    q_region,
    wall,
    wall_contains_disk,
)

UNCOVERED = "uncovered"
INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class SearchConstraints:
    """Optional narrowing of the search.

    section_vanishing_k encodes the hypothesis that the twisted ideal has no
    sections below degree k, which forbids rank-one prefixes with x >= -(k-1).
    min_wall restricts to walls containing the given one.  max_rank_override
    replaces the computed rank cap.
    """

    section_vanishing_k: int | None = None
    min_wall: Wall | None = None
    max_rank_override: int | None = None

    def __post_init__(self):
        if self.section_vanishing_k is not None and self.section_vanishing_k < 1:
            raise ValueError("section_vanishing_k must be >= 1")


@dataclass(frozen=True)
class PrefixInfo:
    """One (r, x, y) prefix on a candidate wall, with its ch_3 bound data."""

    prefix: ChernVec2
    e_sub_bound: Rat | None  # None: no covered closed form for this shape
    e_total_bound: Rat | None = None  # filled by the refuter

    def key(self):
        return (self.prefix.r, self.prefix.c, self.prefix.d)


@dataclass(frozen=True)
class CandidateWall:
    """A candidate destabilizing wall; prefixes defining the identical
    numerical wall are merged into one candidate."""

    wall: Wall
    prefixes: tuple[PrefixInfo, ...]
    filters: tuple[str, ...]

    @property
    def sub_prefix(self) -> ChernVec2:
        return self.prefixes[0].prefix

    @property
    def e_sub_bound(self) -> Rat | None:
        return self.prefixes[0].e_sub_bound

    @property
    def e_total_bound(self) -> Rat | None:
        """Greatest ch_3 bound any prefix allows; None while uncomputed or
        when some prefix has no covered bound."""
        totals = [p.e_total_bound for p in self.prefixes]
        if any(t is None for t in totals):
            return None
        return max(totals)

    @property
    def uncovered(self) -> bool:
        return any(p.e_sub_bound is None for p in self.prefixes)

    def to_json(self):
        return {
            "wall": {"center": rat_str(self.wall.center), "radius_sq": rat_str(self.wall.radius_sq)},
            "prefixes": [
                {
                    "r": rat_str(p.prefix.r),
                    "x": rat_str(p.prefix.c),
                    "y": rat_str(p.prefix.d),
                    "e_sub_bound": None if p.e_sub_bound is None else rat_str(p.e_sub_bound),
                    "e_total_bound": None
                    if p.e_total_bound is None
                    else rat_str(p.e_total_bound),
                }
                for p in self.prefixes
            ],
            "filters": list(self.filters),
        }


class Verdict(enum.Enum):
    REFUTED = "refuted"
    WALLS_REMAIN = "walls_remain"
    VACUOUS = "vacuous"


@dataclass(frozen=True)
class Certificate:
    """Outcome of a refutation run, with the full filter audit trail."""

    verdict: Verdict
    target: ChernVec
    q_region: QRegion
    rank_cap: int
    candidates: tuple[CandidateWall, ...]
    audit: tuple[dict, ...]

    def to_json(self):
        return {
            "verdict": self.verdict.value,
            "target": self.target.to_json(),
            "q_region": self.q_region.to_json(),
            "rank_cap": self.rank_cap,
            "candidates": [c.to_json() for c in self.candidates],
            "audit": list(self.audit),
        }


# ---------------------------------------------------------------------------
# closed-form ch_3 bounds for prefixes


def prefix_ch3_max(t: ChernVec2) -> Rat | str:
    """Largest ch_3 a semistable object with truncated class t can have.

    Rank +-1 twists to (1, 0, *); rank +-2 twists to x in {-1, 0}; rank 0
    needs x > 0.  Negative ranks route through the shifted derived dual
    (whose zero-dimensional correction only ever increases ch_3, so the
    bound stays valid).  Returns UNCOVERED for shapes outside the table and
    INFEASIBLE when no semistable object of that class exists at all.
    """
    r, x, y = t.r, t.c, t.d
    if r < 0:
        d = dual_class(ChernVec(r, x, y, 0))
        return prefix_ch3_max(ChernVec2(d.r, d.c, d.d))
    if x.denominator != 1 or r.denominator != 1:
        return UNCOVERED
    r, x = int(r), int(x)
    if r == 0:
        if x <= 0:
            return INFEASIBLE
        return max_ch3_rank0(x, y)
    if r == 1:
        d1 = x * Fraction(x) / 2 - y  # discriminant/2 after twisting ch_1 to 0
        if d1 < 0:
            return INFEASIBLE
        return max_ch3_rank1(d1) + x * y - Fraction(x**3, 3)
    if r == 2:
        m = -((-x) // 2)  # ceil(x/2): x - 2m in {-1, 0}
        cbar = x - 2 * m
        ybar = y - m * x + m * m
        base = max_ch3_rank2(cbar, ybar)
        if base is None:
            return INFEASIBLE
        return base + m * y - m * m * Fraction(x, 2) + Fraction(m**3, 3)
    return UNCOVERED


# ---------------------------------------------------------------------------
# the shared raw filter


def _nonneg_at_both_endpoints(a: Rat, b: Rat, R: Rat) -> bool:
    """Whether a - b*sqrt(R) >= 0 and a + b*sqrt(R) >= 0, for R > 0.

    Equivalent to a - |b|sqrt(R) >= 0: a >= 0 and a^2 >= b^2 R.
    """
    if a < 0:
        return False
    return a * a >= b * b * R


def _contains_interval(s: Rat, R: Rat, s0: Rat, R0: Rat) -> bool:
    """[s - sqrt(R), s + sqrt(R)] contains [s0 - sqrt(R0), s0 + sqrt(R0)].

    For R > 0, R0 >= 0 this is sqrt(R) >= |s - s0| + sqrt(R0).
    """
    t = R - (s - s0) * (s - s0) - R0
    if t < 0:
        return False
    return t * t >= 4 * (s - s0) * (s - s0) * R0


@dataclass(frozen=True)
class _QDisk:
    center: Rat
    radius_sq: Rat


def _q_disk_of(v: ChernVec) -> _QDisk | None:
    """The quadratic semidisk as containment reference, when it has interior."""
    qr = q_region(v)
    if qr.kind is not QRegionKind.DISK or qr.radius_sq <= 0:
        return None
    return _QDisk(qr.center, qr.radius_sq)


def _check_prefix(
    v: ChernVec,
    sub: ChernVec2,
    qdisk: _QDisk | None,
    constraints: SearchConstraints,
) -> tuple[Wall | None, str | None, list[str]]:
    """Run the raw filters; returns (wall, rejecting_tag, passed_tags)."""
    passed: list[str] = []
    v2 = v.truncate()
    wk = wall(v2, sub)
    if wk.shape is not WallShape.SEMICIRCLE:
        return None, "no-semicircle", passed
    passed.append("semicircle")
    w = wk.wall
    s, R = w.center, w.radius_sq

    # twisted ch_1 of the prefix and its complement, at both axis endpoints
    if not _nonneg_at_both_endpoints(sub.c - sub.r * s, sub.r, R):
        return w, "ch1-sub", passed
    passed.append("ch1-sub")
    if not _nonneg_at_both_endpoints(
        (v.c - sub.c) - (v.r - sub.r) * s, v.r - sub.r, R
    ):
        return w, "ch1-quot", passed
    passed.append("ch1-quot")

    quot = v2 - sub
    if discriminant(sub) < 0:
        return w, "bogomolov-sub", passed
    passed.append("bogomolov-sub")
    if discriminant(quot) < 0:
        return w, "bogomolov-quot", passed
    passed.append("bogomolov-quot")
    if delta_pairing(sub, quot) < 0:
        return w, "discriminant-additivity", passed
    passed.append("discriminant-additivity")

    if qdisk is not None:
        if not _contains_interval(s, R, qdisk.center, qdisk.radius_sq):
            return w, "q-exclusion", passed
        passed.append("q-exclusion")

    if constraints.min_wall is not None:
        mw = constraints.min_wall
        if not _contains_interval(s, R, mw.center, mw.radius_sq):
            return w, "min-wall", passed
        passed.append("min-wall")

    k = constraints.section_vanishing_k
    if k is not None and sub.r == 1 and sub.c >= -(k - 1):
        return w, "section-vanishing", passed
    if k is not None:
        passed.append("section-vanishing")

    return w, None, passed


# ---------------------------------------------------------------------------
# rank cap and windows


def rank_cap(v: ChernVec, rho_sq_min: Rat) -> int:
    """Largest prefix rank compatible with a wall of radius^2 >= rho_sq_min.

    A prefix of rank r' > r forces radius^2 <= Delta(v)/(4 r'(r' - r)); the
    cap is the last r' where that still reaches rho_sq_min, and never less
    than rank(v) itself.
    """
    if v.r < 0:
        raise ValueError("rank cap is stated for nonnegative-rank classes")
    if rho_sq_min <= 0:
        raise ValueError("rho_sq_min must be positive")
    delta = discriminant(v)
    cap = int(v.r)
    rp = cap + 1
    while delta > 0 and Fraction(delta, 4 * rp * (rp - int(v.r))) >= rho_sq_min:
        cap = rp
        rp += 1
    return cap


def ch1_range(v: ChernVec2, r_sub: int, W: Wall) -> tuple[int, int]:
    """Integer window for the prefix ch_1 along the given wall.

    These are the x with 0 <= x - r_sub*beta <= c_v - r_v*beta at both surd
    endpoints of the wall; the window may be empty (lo > hi).
    """
    lo_s = W.beta_minus
    hi_s = W.beta_plus
    lo = surd_ceil(max(lo_s * r_sub, hi_s * r_sub))
    cands = [
        Surd(v.c) - lo_s * (v.r - r_sub),
        Surd(v.c) - hi_s * (v.r - r_sub),
    ]
    hi_bound = min(cands)
    hi = surd_floor(hi_bound)
    return lo, hi


def _x_window(v: ChernVec, r_sub: int, ref_lo: Surd, ref_hi: Surd) -> tuple[int, int]:
    """Necessary x window from the reference interval every candidate wall
    must contain (the ch_1 endpoint inequalities evaluated there)."""
    lo = surd_ceil(ref_hi * r_sub) if r_sub > 0 else surd_ceil(ref_lo * r_sub)
    c1 = Surd(v.c) - ref_lo * (v.r - r_sub)
    c2 = Surd(v.c) - ref_hi * (v.r - r_sub)
    hi = surd_floor(min(c1, c2))
    return lo, hi


def _y_bounds(
    v: ChernVec, r_sub: int, x: int, qdisk: _QDisk | None, min_wall: Wall | None
) -> tuple[Fraction, Fraction] | None:
    """Rational lower/upper bounds on y implied by the linear-in-y filters.

    The subobject Bogomolov inequality always bounds y above, and one of the
    quotient inequality or discriminant additivity always bounds it below
    (their y-coefficients are 2(r_v - r') and 2r' - r_v, which cannot both be
    nonpositive for r' >= 1), so the window is finite.  The semidisk and
    min_wall restrictions only tighten it.  Returns None when contradictory.
    """
    los: list[Fraction] = []
    his: list[Fraction] = []
    feasible = True

    def add(coef, const) -> None:
        # constraint coef*y + const >= 0
        nonlocal feasible
        coef, const = Fraction(coef), Fraction(const)
        if coef > 0:
            los.append(-const / coef)
        elif coef < 0:
            his.append(-const / coef)
        elif const < 0:
            feasible = False

    rv, cv, dv = v.r, v.c, v.d
    # Delta(sub) = x^2 - 2 r_sub y >= 0
    add(-2 * r_sub, x * x)
    # Delta(quot) = (cv - x)^2 - 2(rv - r_sub)(dv - y) >= 0
    add(2 * (rv - r_sub), (cv - x) ** 2 - 2 * (rv - r_sub) * dv)
    # pairing x(cv - x) - r_sub(dv - y) - (rv - r_sub) y >= 0
    add(2 * r_sub - rv, x * (cv - x) - r_sub * dv)

    # center-beyond restriction: sign(D)*side*(rv*y - r_sub*dv - center*D) <= 0
    # where the wall center is (rv*y - r_sub*dv)/D, D = rv*x - r_sub*cv, and
    # side is the side of the vertical wall the reference sits on.  Exact for
    # the nested wall family of v (the semidisk boundary is such a wall); for
    # a general min_wall only a relaxed necessary bound is used.
    def add_center_beyond(center_bound: Fraction, side: int) -> None:
        D = rv * x - r_sub * cv
        if D == 0:
            return
        sgn = Fraction(side * (1 if D > 0 else -1))
        add(sgn * rv, -sgn * (r_sub * dv + center_bound * D))

    if rv != 0:
        muv = cv / rv
        if qdisk is not None:
            side = -1 if qdisk.center < muv else 1
            add_center_beyond(qdisk.center, side)
        elif min_wall is not None and min_wall.center != muv:
            side = -1 if min_wall.center < muv else 1
            add_center_beyond((min_wall.center + muv) / 2, side)
    else:
        # concentric walls at s = dv/cv: radius^2(y) = s^2 + 2(cv*y - x*dv)/(r_sub*cv)
        s = dv / cv
        rho_floor = None
        if qdisk is not None:
            rho_floor = qdisk.radius_sq
        elif min_wall is not None:
            rho_floor = min_wall.radius_sq
        if rho_floor is not None:
            add(Fraction(2, r_sub), s * s - rho_floor - 2 * Fraction(x) * dv / (r_sub * cv))

    if not feasible:
        return None
    lo, hi = max(los), min(his)
    if lo > hi:
        return None
    return lo, hi


def ch2_range(
    v: ChernVec, r_sub: int, x: int, profile: Profile
) -> tuple[Fraction, Fraction] | None:
    """Lattice window [lo, hi] for the prefix ch_2 given (r_sub, x).

    Intersects the Bogomolov inequalities for both sides, discriminant
    additivity, and the center-side restriction from the quadratic semidisk.
    None when empty; endpoints are in the (1/den2)Z lattice.
    """
    b = _y_bounds(v, r_sub, x, _q_disk_of(v), None)
    if b is None:
        return None
    lo, hi = b
    den = profile.den2
    lo_l = Fraction(-((-lo * den).__floor__()), den)  # ceil to lattice
    hi_l = Fraction((hi * den).__floor__(), den)
    if lo_l > hi_l:
        return None
    return lo_l, hi_l


# ---------------------------------------------------------------------------
# enumeration


def _reference_interval(
    qdisk: _QDisk | None, min_wall: Wall | None
) -> tuple[Surd, Surd] | None:
    """Hull of the intervals every candidate wall must contain."""
    spans = []
    if min_wall is not None:
        r = Surd.sqrt(min_wall.radius_sq)
        spans.append((Surd(min_wall.center) - r, Surd(min_wall.center) + r))
    if qdisk is not None:
        r = Surd.sqrt(qdisk.radius_sq)
        spans.append((Surd(qdisk.center) - r, Surd(qdisk.center) + r))
    if not spans:
        return None
    lo = min(s[0] for s in spans)
    hi = max(s[1] for s in spans)
    return lo, hi


def _lattice_points(lo: Fraction, hi: Fraction, den: int):
    n = -((-lo * den).__floor__())
    top = (hi * den).__floor__()
    while n <= top:
        yield Fraction(n, den)
        n += 1


def _scan_slice(v, r_sub, x, qdisk, constraints, den2):
    """All filter decisions for one (r_sub, x) slice; returns (records, audit)."""
    recs, audit = [], []
    if v.r * x - r_sub * v.c == 0:
        audit.append(
            {"prefix": [r_sub, x, None], "status": "skipped", "filter": "vertical-or-degenerate"}
        )
        return recs, audit
    b = _y_bounds(v, r_sub, x, qdisk, constraints.min_wall)
    if b is None:
        audit.append({"prefix": [r_sub, x, None], "status": "skipped", "filter": "empty-y-window"})
        return recs, audit
    lo, hi = b
    audit.append(
        {
            "prefix": [r_sub, x, None],
            "status": "window",
            "y_lo": rat_str(lo),
            "y_hi": rat_str(hi),
        }
    )
    for y in _lattice_points(lo, hi, den2):
        sub = ChernVec2(r_sub, x, y)
        w, tag, passed = _check_prefix(v, sub, qdisk, constraints)
        if tag is not None:
            audit.append({"prefix": [r_sub, x, rat_str(y)], "status": "rejected", "filter": tag})
            continue
        bound = prefix_ch3_max(sub)
        e_sub = bound if isinstance(bound, Fraction) else None
        if bound == INFEASIBLE:
            audit.append(
                {"prefix": [r_sub, x, rat_str(y)], "status": "rejected", "filter": "sub-infeasible"}
            )
            continue
        recs.append((w, PrefixInfo(sub, e_sub), tuple(passed)))
        audit.append(
            {
                "prefix": [r_sub, x, rat_str(y)],
                "status": "accepted",
                "filters": list(passed),
                "e_sub_bound": None if e_sub is None else rat_str(e_sub),
            }
        )
    return recs, audit


def _merge_candidates(records) -> list[CandidateWall]:
    by_wall: dict[tuple, dict] = {}
    for w, info, passed in records:
        key = (w.center, w.radius_sq)
        slot = by_wall.setdefault(key, {"wall": w, "prefixes": [], "filters": passed})
        slot["prefixes"].append(info)
    out = []
    for slot in by_wall.values():
        prefixes = tuple(sorted(slot["prefixes"], key=PrefixInfo.key))
        out.append(CandidateWall(slot["wall"], prefixes, slot["filters"]))
    out.sort(key=lambda c: (-c.wall.radius_sq, c.sub_prefix.r, c.sub_prefix.c, c.sub_prefix.d))
    return out


def _threads() -> int:
    raw = os.environ.get("TILTWALL_THREADS", "1")
    try:
        n = int(raw)
    except ValueError as exc:
        raise ValueError(f"TILTWALL_THREADS must be a positive integer, got {raw!r}") from exc
    if n < 1:
        raise ValueError("TILTWALL_THREADS must be a positive integer")
    return n


def _scan(v: ChernVec, profile: Profile, constraints: SearchConstraints):
    audit: list[dict] = []
    delta = discriminant(v)
    if delta < 0:
        audit.append({"status": "note", "note": "negative discriminant: no semistable class"})
        return [], audit, int(v.r)
    if delta == 0:
        audit.append(
            {"status": "note", "note": "zero discriminant: no semicircular candidate walls"}
        )
        return [], audit, int(v.r)

    qdisk = _q_disk_of(v)
    if qdisk is not None and v.r != 0 and qdisk.center > v.c / v.r:
        # the semidisk sits on the far side of the vertical wall; no wall
        # satisfying the heart inequalities can contain it
        audit.append({"status": "note", "note": "semidisk beyond the vertical wall"})
        return [], audit, int(v.r)

    ref = _reference_interval(qdisk, constraints.min_wall)
    if ref is None:
        raise ValueError(
            "enumeration needs a quadratic semidisk with interior or an explicit min_wall"
        )

    rho_candidates = [w.radius_sq for w in (constraints.min_wall,) if w is not None]
    if qdisk is not None:
        rho_candidates.append(qdisk.radius_sq)
    rho_min = max(rho_candidates)
    if rho_min <= 0:
        raise ValueError("the reference wall must have positive radius")
    cap = rank_cap(v, rho_min)
    if constraints.max_rank_override is not None:
        cap = constraints.max_rank_override
    audit.append({"status": "note", "rank_cap": cap})

    slices = []
    for r_sub in range(1, cap + 1):
        x_lo, x_hi = _x_window(v, r_sub, ref[0], ref[1])
        audit.append({"status": "window", "r": r_sub, "x_lo": x_lo, "x_hi": x_hi})
        slices.extend((r_sub, x) for x in range(x_lo, x_hi + 1))

    n_threads = _threads()
    if n_threads > 1 and len(slices) > 1:
        with ThreadPoolExecutor(max_workers=n_threads) as pool:
            results = list(
                pool.map(
                    lambda sl: _scan_slice(v, sl[0], sl[1], qdisk, constraints, profile.den2),
                    slices,
                )
            )
    else:
        results = [
            _scan_slice(v, r_sub, x, qdisk, constraints, profile.den2) for r_sub, x in slices
        ]
    records = []
    for recs, aud in results:
        records.extend(recs)
        audit.extend(aud)
    return _merge_candidates(records), audit, cap


def enumerate_candidates(
    v: ChernVec, profile: Profile, constraints: SearchConstraints | None = None
) -> list[CandidateWall]:
    """The finite list of candidate destabilizing walls for v, largest first.

    Requires rank(v) >= 0 (dualize negative-rank classes first) and a lattice
    class for the profile.
    """
    constraints = constraints or SearchConstraints()
    if v.r < 0:
        raise ValueError("enumerate the dual class for negative rank")
    if not lattice_check(v, profile):
        raise ValueError(f"{v} is not a lattice class for profile {profile.name}")
    candidates, _audit, _cap = _scan(v, profile, constraints)
    return candidates


def refute_ch3(
    v: ChernVec, profile: Profile, constraints: SearchConstraints | None = None
) -> Certificate:
    """Decide whether ch_3 = e is impossible for a semistable class v.

    Verdict REFUTED means: the quadratic form is violated somewhere in the
    region where class-v objects live, and every candidate wall bounds e
    strictly below its actual value, so no semistable object of class v
    exists.  WALLS_REMAIN lists the surviving candidates.  VACUOUS means the
    forbidden region does not meet the relevant half plane, so nothing is
    forced.
    """
    constraints = constraints or SearchConstraints()
    if v.r < 0:
        raise ValueError("refute the dual class for negative rank")
    if not lattice_check(v, profile):
        raise ValueError(f"{v} is not a lattice class for profile {profile.name}")

    qr = q_region(v)
    delta = discriminant(v)

    if delta < 0:
        cert_audit = (
            {"status": "note", "note": "negative discriminant refutes the class outright"},
        )
        return Certificate(Verdict.REFUTED, v, qr, int(v.r), (), cert_audit)

    forced = False
    if qr.kind is QRegionKind.DISK and qr.radius_sq > 0:
        forced = v.r == 0 or qr.center < v.c / v.r
    elif qr.kind is QRegionKind.HALF_PLANE:
        forced = v.r == 0 or qr.le or qr.boundary_beta < v.c / v.r
    elif qr.kind is QRegionKind.EVERYTHING:
        forced = True
    if not forced:
        return Certificate(
            Verdict.VACUOUS,
            v,
            qr,
            int(v.r),
            (),
            ({"status": "note", "note": "no forbidden region on the relevant side"},),
        )

    candidates, audit, cap = _scan(v, profile, constraints)

    survivors: list[CandidateWall] = []
    for cand in candidates:
        new_prefixes = []
        alive = False
        for p in cand.prefixes:
            quot = v.truncate() - p.prefix
            qbound = prefix_ch3_max(quot)
            if p.e_sub_bound is None or qbound == UNCOVERED:
                new_prefixes.append(replace(p, e_total_bound=None))
                alive = True
                audit.append(
                    {
                        "prefix": [rat_str(p.prefix.r), rat_str(p.prefix.c), rat_str(p.prefix.d)],
                        "status": "survives",
                        "filter": "uncovered-shape",
                    }
                )
                continue
            if qbound == INFEASIBLE:
                new_prefixes.append(replace(p, e_total_bound=p.e_sub_bound))
                audit.append(
                    {
                        "prefix": [rat_str(p.prefix.r), rat_str(p.prefix.c), rat_str(p.prefix.d)],
                        "status": "killed",
                        "filter": "quotient-infeasible",
                    }
                )
                continue
            total = p.e_sub_bound + qbound
            new_prefixes.append(replace(p, e_total_bound=total))
            if total >= v.e:
                alive = True
            audit.append(
                {
                    "prefix": [rat_str(p.prefix.r), rat_str(p.prefix.c), rat_str(p.prefix.d)],
                    "status": "survives" if total >= v.e else "killed",
                    "e_total_bound": rat_str(total),
                }
            )
        cand2 = CandidateWall(cand.wall, tuple(new_prefixes), cand.filters)
        if alive:
            survivors.append(cand2)

    verdict = Verdict.REFUTED if not survivors else Verdict.WALLS_REMAIN
    return Certificate(verdict, v, qr, cap, tuple(survivors), tuple(audit))


# ---------------------------------------------------------------------------
# the independent oracle


@dataclass(frozen=True)
class SearchBox:
    """Explicit inclusive ranges for the brute-force oracle."""

    r_lo: int
    r_hi: int
    x_lo: int
    x_hi: int
    y_lo: Fraction
    y_hi: Fraction


def _surd_nonneg(a: Rat, b: Rat, endpoint: Surd) -> bool:
    """a + b*endpoint >= 0, evaluated with surd arithmetic."""
    return (Surd(a) + endpoint * b).sign() >= 0


def brute_force_oracle(
    v: ChernVec,
    profile: Profile,
    box: SearchBox,
    constraints: SearchConstraints | None = None,
) -> list[CandidateWall]:
    """Naive triple loop over the box applying only the raw definitions.

    Wall existence with positive radius, twisted-ch_1 endpoint inequalities
    via surds, the three discriminant inequalities, and disk containment for
    the quadratic semidisk (and min_wall, when given) via exact surd
    comparisons.  No window shortcuts; this is the ground truth.
    """
    constraints = constraints or SearchConstraints()
    v2 = v.truncate()
    qdisk = _q_disk_of(v)
    delta_v = discriminant(v)
    records = []
    k = constraints.section_vanishing_k
    for r_sub in range(box.r_lo, box.r_hi + 1):
        for x in range(box.x_lo, box.x_hi + 1):
            for y in _lattice_points(box.y_lo, box.y_hi, profile.den2):
                sub = ChernVec2(r_sub, x, y)
                wk = wall(v2, sub)
                if wk.shape is not WallShape.SEMICIRCLE:
                    continue
                w = wk.wall
                lo, hi = w.beta_minus, w.beta_plus
                if not (
                    _surd_nonneg(sub.c, -sub.r, lo)
                    and _surd_nonneg(sub.c, -sub.r, hi)
                    and _surd_nonneg(v.c - sub.c, -(v.r - sub.r), lo)
                    and _surd_nonneg(v.c - sub.c, -(v.r - sub.r), hi)
                ):
                    continue
                quot = v2 - sub
                if discriminant(sub) < 0 or discriminant(quot) < 0:
                    continue
                if discriminant(sub) + discriminant(quot) > delta_v:
                    continue
                if qdisk is not None and not wall_contains_disk(
                    w, qdisk.center, qdisk.radius_sq
                ):
                    continue
                if constraints.min_wall is not None and not wall_contains_disk(
                    w, constraints.min_wall.center, constraints.min_wall.radius_sq
                ):
                    continue
                if k is not None and r_sub == 1 and x >= -(k - 1):
                    continue
                bound = prefix_ch3_max(sub)
                if bound == INFEASIBLE:
                    continue
                e_sub = bound if isinstance(bound, Fraction) else None
                records.append((w, PrefixInfo(sub, e_sub), ("oracle",)))
    return _merge_candidates(records)


def default_box(v: ChernVec, profile: Profile, margin: int = 2) -> SearchBox:
    """A box guaranteed to cover the enumerator's windows, for oracle runs."""
    qdisk = _q_disk_of(v)
    if qdisk is None:
        raise ValueError("no quadratic semidisk to size the box from")
    rho = qdisk.radius_sq
    cap = rank_cap(v, rho) if rho > 0 else int(v.r) + 2
    x_vals = []
    for r_sub in range(1, cap + 1):
        ref = _reference_interval(qdisk, None)
        lo, hi = _x_window(v, r_sub, ref[0], ref[1])
        if lo <= hi:
            x_vals.extend((lo, hi))
    if not x_vals:
        x_vals = [0]
    y_lo, y_hi = None, None
    for r_sub in range(1, cap + 1):
        for x in range(min(x_vals), max(x_vals) + 1):
            b = _y_bounds(v, r_sub, x, qdisk, None)
            if b is None or b[0] is None or b[1] is None:
                continue
            y_lo = b[0] if y_lo is None else min(y_lo, b[0])
            y_hi = b[1] if y_hi is None else max(y_hi, b[1])
    if y_lo is None:
        y_lo, y_hi = Fraction(0), Fraction(0)
    return SearchBox(
        r_lo=1,
        r_hi=cap + 1,
        x_lo=min(x_vals) - margin,
        x_hi=max(x_vals) + margin,
        y_lo=y_lo - margin,
        y_hi=y_hi + margin,
    )
