"""Wall analysis for the intermediate degree range d <= k(k-1) on projective space.

For a degree-d curve not on surfaces of degree < k, with A(k,f) <= d <= B(k,f),
the anchor is the wall of the ideal-sheaf class against the shifted line
bundle of degree -(f+4).  The checks here certify, instance by instance, the
numeric skeleton of the argument that destabilization at or above the anchor
wall keeps the genus within the conjectural bound: heart membership of both
classes along the wall, the rank-two cap, the forced prefix ch_1, the ch_2
window of the quotient, and the h^2-vanishing inequality, plus the complete
closed-form verification for the largest open degree d = A(k, 2k-11).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .bounds import A, B, conj_bound_rangeB, delta_c, sections_bound_curve
from .chern import ChernVec2, line_bundle_class
from .exactnum import Rat, rat_str
from .tiltplane import Wall, WallShape, wall


def anchor_wall(d: int, f: int) -> Wall:
    """Wall of (1, 0, -d) against the degree -(f+4) line-bundle class:
    center -(f+4)/2 - d/(f+4), radius^2 ((f+4)/2 - d/(f+4))^2."""
    if d <= 0 or f <= 0:
        raise ValueError("d and f must be positive")
    m = f + 4
    wk = wall(ChernVec2(1, 0, -d), line_bundle_class(-m).truncate())
    if wk.shape is not WallShape.SEMICIRCLE:
        raise ValueError(f"anchor wall degenerates at d = (f+4)^2/2 (d={d}, f={f})")
    w = wk.wall
    assert w.center == Fraction(-m, 2) - Fraction(d, m)
    assert w.radius_sq == (Fraction(m, 2) - Fraction(d, m)) ** 2
    return w


def heart_check(d: int, f: int) -> bool:
    """Both classes lie in the tilted heart along the anchor wall iff
    -(f+4) is left of the smaller twist root -sqrt(2d), i.e. (f+4)^2 > 2d."""
    return (f + 4) ** 2 > 2 * d


def rank_cap_check(d: int, f: int, k: int) -> bool:
    """Destabilizers above the anchor wall have rank at most two and are not
    line bundles: the radius bound is equivalent to d < (f+4)^2/3, and the
    line-bundle exclusion to d < (f+4)k/2."""
    return 3 * d < (f + 4) ** 2 and 2 * d < (f + 4) * k


def _phi(d: int, f: int, x: int) -> Rat:
    """Upper bound on the quotient ch_2 for prefix ch_1 = x, from the anchor
    wall being at most the candidate wall."""
    return Fraction((2 * d - x * (f + 4)) * (f + 4 - x), 2 * (f + 4))


def _psi(d: int, k: int, x: int) -> Rat:
    """Lower bound on the quotient ch_2 from the reflexive-sheaf degree bound
    (with the divisibility correction dropped)."""
    return (
        Fraction(k * k, 3)
        - Fraction(k * x, 3)
        + Fraction(x * x, 3)
        - d
        + Fraction(2 * k, 3)
        - Fraction(x, 3)
    )


@dataclass(frozen=True)
class LargeCh1Analysis:
    admissible_x: tuple[int, ...]
    y_interval: tuple[Rat, Rat]  # empty when lo > hi
    excluded_x: tuple[int, ...]

    @property
    def y_interval_empty(self) -> bool:
        return self.y_interval[0] > self.y_interval[1]


def large_ch1_analysis(d: int, k: int, f: int) -> LargeCh1Analysis:
    """Which quotient ch_1 values survive above the anchor wall, and the ch_2
    window for the forced value x = f+5.

    x ranges over [f+4, 4d/(f+4)]; x = f+4 is the anchor map itself.  Values
    x >= f+6 are ruled out by comparing the ch_2 upper bound phi with the
    lower bound psi; the window for x = f+5 is
    [A(k, f+1) - d, (f+5)/2 - d/(f+4)].
    """
    if not (A(k, f) <= d <= B(k, f)):
        raise ValueError(f"d={d} outside [A,B]=[{A(k, f)},{B(k, f)}] for k={k}, f={f}")
    x_top = (4 * d) // (f + 4)
    admissible, excluded = [], []
    for x in range(f + 5, x_top + 1):
        if _phi(d, f, x) < _psi(d, k, x):
            excluded.append(x)
        else:
            admissible.append(x)
    y_lo = Fraction(A(k, f + 1) - d)
    y_hi = Fraction(f + 5, 2) - Fraction(d, f + 4)
    return LargeCh1Analysis(tuple(admissible), (y_lo, y_hi), tuple(excluded))


def h2_vanishing_expression(d: int, k: int, f: int, y: Rat) -> Rat:
    """The quantity whose nonnegativity gives h^2(E(k-1)) = 0 for the rank-two
    subsheaf: ch_2(E(k-1)) minus the reflexive-sheaf threshold."""
    return (
        Fraction(f * f, 3)
        - Fraction(f * k, 3)
        + Fraction(k * k, 3)
        - d
        + Fraction(8 * f, 3)
        - Fraction(k, 3)
        + Fraction(delta_c(2 * k - f - 8), 3)
        - Fraction(y)
        + 6
    )


def h2_vanishing_check(d: int, k: int, f: int, y: Rat) -> bool:
    return h2_vanishing_expression(d, k, f, y) >= 0


@dataclass(frozen=True)
class RangeBReport:
    """Instance report for one (k, f, d) in the intermediate range."""

    k: int
    f: int
    d: int
    anchor: Wall
    heart_ok: bool
    rank_cap_ok: bool
    admissible_x: tuple[int, ...]
    y_interval: tuple[Rat, Rat]
    h2_vanishing_ok: bool
    chi_bound: int
    conjecture_bound: int
    supported: bool  # False for B(k,f) < d < A(k,f+1), where the argument does not apply

    def to_json(self):
        return {
            "k": self.k,
            "f": self.f,
            "d": self.d,
            "anchor_wall": {
                "center": rat_str(self.anchor.center),
                "radius_sq": rat_str(self.anchor.radius_sq),
            },
            "heart_ok": self.heart_ok,
            "rank_cap_ok": self.rank_cap_ok,
            "admissible_x": list(self.admissible_x),
            "y_interval": [rat_str(self.y_interval[0]), rat_str(self.y_interval[1])],
            "h2_vanishing_ok": self.h2_vanishing_ok,
            "chi_bound": self.chi_bound,
            "conjecture_bound": self.conjecture_bound,
            "supported": self.supported,
        }


def rangeb_report(d: int, k: int, f: int) -> RangeBReport:
    """Assemble every instance check for (k, f, d)."""
    if not (k - 1 <= f <= 2 * k - 6):
        raise ValueError(f"f={f} outside [k-1, 2k-6] for k={k}")
    if not (A(k, f) <= d < A(k, f + 1)):
        raise ValueError(f"d={d} outside [A(k,f), A(k,f+1)) = [{A(k, f)}, {A(k, f + 1)})")
    supported = d <= B(k, f)
    anchor = anchor_wall(d, f)
    heart_ok = heart_check(d, f)
    cap_ok = rank_cap_check(d, f, k)
    if supported:
        analysis = large_ch1_analysis(d, k, f)
        adm, y_iv = analysis.admissible_x, analysis.y_interval
        # the expression is decreasing in y, so the window top is the worst case
        h2_ok = True
        if not analysis.y_interval_empty:
            h2_ok = h2_vanishing_check(d, k, f, y_iv[1])
    else:
        adm, y_iv, h2_ok = (), (Fraction(1), Fraction(0)), False
    chi_bound = sections_bound_curve(f - k + 2)
    conj = conj_bound_rangeB(d, k).E
    return RangeBReport(
        k=k,
        f=f,
        d=d,
        anchor=anchor,
        heart_ok=heart_ok,
        rank_cap_ok=cap_ok,
        admissible_x=adm,
        y_interval=y_iv,
        h2_vanishing_ok=h2_ok,
        chi_bound=chi_bound,
        conjecture_bound=conj,
        supported=supported,
    )


@dataclass(frozen=True)
class SpecialCaseReport:
    """Full verification for d = A(k, 2k-11), the largest open degree."""

    k: int
    d: int
    E: int
    y_range: tuple[int, int]
    chi_plus_h2: tuple[int, ...]  # indexed by y
    target: int
    passed: bool

    def to_json(self):
        return {
            "k": self.k,
            "d": self.d,
            "E": self.E,
            "y_range": list(self.y_range),
            "chi_plus_h2": list(self.chi_plus_h2),
            "target": self.target,
            "passed": self.passed,
        }


def chi_bound_special(k: int, y: int) -> Rat:
    """Euler-characteristic bound for the twisted quotient in the special case."""
    return (
        Fraction(k**3, 6)
        - 4 * k * k
        - k * y
        + Fraction(y * y, 2)
        + Fraction(191 * k, 6)
        + Fraction(17 * y, 2)
        - 84
    )


def special_case_2k11(k: int) -> SpecialCaseReport:
    """Check the complete bound chain at d = A(k, 2k-11) for k >= 31.

    Verifies the closed forms d = k^2 - 7k + 19 and
    E = k^3 - 21k^2/2 + 87k/2 - 65, the quotient ch_2 window 0 <= y <= 6, and
    that max over y of (chi bound + C(y-2, 2)) is at most C(k-7, 3).
    """
    if k < 31:
        raise ValueError("the special case is stated for k >= 31")
    f = 2 * k - 11
    d = A(k, f)
    if d != k * k - 7 * k + 19:
        raise ArithmeticError("closed form for A(k, 2k-11) failed")
    E = conj_bound_rangeB(d, k).E
    if Fraction(E) != k**3 - Fraction(21, 2) * k * k + Fraction(87, 2) * k - 65:
        raise ArithmeticError("closed form for the conjectural bound failed")
    # y upper bound: the quoted strict bound 9(3k^2-23k+64)/(4(k^2-7k+19)) < 7
    y_cap = Fraction(9 * (3 * k * k - 23 * k + 64), 4 * (k * k - 7 * k + 19))
    if not y_cap < 7:
        raise ArithmeticError("quotient ch_2 cap is not below 7")
    target = math.comb(k - 7, 3)
    vals = []
    ok = True
    for y in range(0, 7):
        h2 = math.comb(y - 2, 2) if y - 2 >= 2 else 0
        total = chi_bound_special(k, y) + h2
        if total.denominator != 1:
            raise ArithmeticError("chi bound is not integral at integer y")
        vals.append(int(total))
        ok = ok and total <= target
    return SpecialCaseReport(
        k=k, d=d, E=E, y_range=(0, 6), chi_plus_h2=tuple(vals), target=target, passed=ok
    )
