"""Closed-form ch_3 and genus bounds, exact over Q.

The bound for semistable rank-one classes (1,0,-d,e) is e <= d(d+1)/2 - eps(d,1);
the degree-k refinement for curves not on low-degree surfaces is
E(d,k) = d^2/2k + dk/2 - eps(d,k).  Rank-zero and rank-two classes have their
own cases, and the Hartshorne-Hirschowitz range (d <= k(k-1)) is covered by
the combinatorial A/B thresholds and the conjectural bound.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import Rat, RatLike


def _half_integer(d: Rat) -> None:
    if (2 * Fraction(d)).denominator != 1:
        raise ValueError(f"{d} is not in (1/2)Z")


@dataclass(frozen=True)
class Remainder:
    """The residue f with d = -f (mod k), 0 <= f < k, f in (1/2)Z."""

    f: Rat
    k: int

    @staticmethod
    def of(d: RatLike, k: int) -> "Remainder":
        d = Fraction(d)
        _half_integer(d)
        if k < 1:
            raise ValueError("modulus must be a positive integer")
        return Remainder((-d) % k, k)


def eps1(d: RatLike) -> Rat:
    """Rounding term: 1/24 for half-integers, 0 for integers."""
    d = Fraction(d)
    _half_integer(d)
    return Fraction(0) if d.denominator == 1 else Fraction(1, 24)


def eps_tilde(d: RatLike, k: int) -> Rat:
    """(1/2) f (k - f - 1 + f/k) for the residue f of d mod k."""
    f = Remainder.of(d, k).f
    return f * (k - f - 1 + f / Fraction(k)) / 2


def eps(d: RatLike, k: int) -> Rat:
    return eps_tilde(d, k) + eps1(d)


def bound_E_tilde(d: RatLike, k: int) -> Rat:
    d = Fraction(d)
    return d * d / (2 * k) + d * k / 2 - eps_tilde(d, k)


def bound_E(d: RatLike, k: int) -> Rat:
    """Maximal ch_3 of (1,0,-d,*) classes stable off degree-<k surfaces, d > k(k-1).

    The domain restriction d > k(k-1) is not enforced here; callers check.
    """
    d = Fraction(d)
    return d * d / (2 * k) + d * k / 2 - eps(d, k)


def max_ch3_rank1(d: RatLike) -> Rat:
    """e <= d(d+1)/2 - eps(d,1) for semistable classes (1,0,-d,e) or (-1,0,d,e)."""
    d = Fraction(d)
    if d < 0:
        raise ValueError("rank-one bound needs d >= 0 (negative d violates Bogomolov)")
    return d * (d + 1) / 2 - eps1(d)


def max_ch3_rank0(c: int, d: RatLike) -> Rat:
    """e <= c^3/24 + d^2/2c - eps(d + c^2/2, c) for semistable (0,c,d,e), c > 0."""
    if c <= 0:
        raise ValueError("rank-zero bound needs c > 0")
    d = Fraction(d)
    return Fraction(c**3, 24) + d * d / (2 * c) - eps(d + Fraction(c * c, 2), c)


class Rank2Case(enum.Enum):
    BOUND = "bound"
    INFEASIBLE = "infeasible"


def max_ch3_rank2(c: int, d: RatLike) -> Rat | None:
    """ch_3 bound for semistable rank-two classes (2, c, d, e), c in {-1, 0}.

    Returns None when no semistable object of that truncation exists
    (d must be <= 0 in both cases; the discriminant forces it on the lattice).
    """
    d = Fraction(d)
    _half_integer(d)
    if c == -1:
        if d > 0:
            return None
        return d * d / 2 - d + Fraction(5, 24) - eps1(d + Fraction(1, 2))
    if c == 0:
        if d > 0:
            return None
        if d == 0:
            return Fraction(0)
        if d == Fraction(-1, 2):
            return Fraction(1, 6)
        return d * d / 2 + Fraction(5, 24) - eps1(d + Fraction(1, 2))
    raise ValueError("rank-two bound is tabulated only for c in {-1, 0}")


def delta_c(c: int) -> int:
    """3 for c in {1, 3}; 1 when c = 2 mod 3 (normalized residue); else 0.

    The special values at 1 and 3 belong to the reflexive-sheaf bounds; the
    degree thresholds A and B use only the residue part (see _delta_residue),
    which is what makes them partition the intermediate range exactly.
    """
    if c in (1, 3):
        return 3
    if c % 3 == 2:
        return 1
    return 0


def _delta_residue(c: int) -> int:
    return 1 if c % 3 == 2 else 0


def _range_check(k: int, f: int) -> None:
    if k < 5:
        raise ValueError("threshold functions need k >= 5")
    if not (k - 1 <= f <= 2 * k - 5):
        raise ValueError(f"f={f} outside [k-1, 2k-5] for k={k}")


def A(k: int, f: int) -> int:
    """Lower degree threshold of the f-slice of the intermediate degree range.

    Satisfies A(k, k-1) = ceil((k^2+4k+6)/3) and A(k, 2k-5) = k(k-1)+1, so
    the slices tile the whole range.
    """
    _range_check(k, f)
    n = k * k - k * f + f * f - 2 * k + 7 * f + 12 + _delta_residue(2 * k - f - 6)
    q, r = divmod(n, 3)
    if r:
        raise ArithmeticError(f"A({k},{f}) is not an integer")
    return q


def B(k: int, f: int) -> int:
    """Upper threshold of the flat part of the f-slice."""
    _range_check(k, f)
    n = k * k - k * f + f * f + 6 * f + 11 + _delta_residue(2 * k - f - 7)
    q, r = divmod(n, 3)
    if r:
        raise ArithmeticError(f"B({k},{f}) is not an integer")
    return q


class Regime(enum.Enum):
    A_TO_B = "AtoB"
    B_TO_A = "BtoA"


@dataclass(frozen=True)
class RangeBBound:
    E: int
    f: int
    h: int
    regime: Regime


def conj_bound_rangeB(d: int, k: int) -> RangeBBound:
    """Conjectural maximal ch_3 of an ideal-sheaf class in the intermediate
    degree range: d(k+1) - C(k+2,3) + C(f-k+4,3) + h(d), where f is the slice
    with A(k,f) <= d < A(k,f+1) and h is the quadratic overshoot past B(k,f)."""
    if k < 5:
        raise ValueError("the intermediate range needs k >= 5")
    if d < A(k, k - 1) or d >= A(k, 2 * k - 5):
        raise ValueError(
            f"d={d} outside the intermediate range [{A(k, k - 1)}, {A(k, 2 * k - 5) - 1}] for k={k}"
        )
    f = next(ff for ff in range(k - 1, 2 * k - 5) if A(k, ff) <= d < A(k, ff + 1))
    if d <= B(k, f):
        h, regime = 0, Regime.A_TO_B
    else:
        t = d - B(k, f)
        h, regime = t * (t + 1) // 2, Regime.B_TO_A
    E = d * (k + 1) - math.comb(k + 2, 3) + math.comb(f - k + 4, 3) + h
    return RangeBBound(E=E, f=f, h=h, regime=regime)


class ReflexiveCase(enum.Enum):
    CASE1 = "case1"
    CASE2 = "case2"
    OUT_OF_RANGE = "out_of_range"


@dataclass(frozen=True)
class ReflexiveBoundReport:
    """Bounds for rank-two reflexive sheaves (2, c, d, e) on projective space
    with no global sections: the admissible d range splits at two thresholds,
    with an h^2-vanishing linear bound above and a quartic bound below."""

    c: int
    d: Rat
    d_max: Rat
    case: ReflexiveCase
    e_bound: Rat | None
    h2_bound: Rat | None


def hartshorne_reflexive(c: int, d: RatLike) -> ReflexiveBoundReport:
    if c < -1:
        raise ValueError("reflexive bounds are stated for c >= -1")
    d = Fraction(d)
    _half_integer(d)
    d_max = Fraction(c * c, 6) - Fraction(2 * c, 3) - 1 - Fraction(delta_c(c), 3)
    split = Fraction(c * c, 6) - c - Fraction(8, 3) - Fraction(delta_c(c - 1), 3)
    if d > d_max:
        return ReflexiveBoundReport(c, d, d_max, ReflexiveCase.OUT_OF_RANGE, None, None)
    if d >= split:
        e_bound = Fraction(-11 * c, 6) - 2 * d - 2
        return ReflexiveBoundReport(c, d, d_max, ReflexiveCase.CASE1, e_bound, Fraction(0))
    g = c * c - 6 * c - 6 * d - 2 * delta_c(c - 1)
    h2_bound = (g - 10) * (g - 16) / 72
    e_bound = (
        Fraction(c**4, 72)
        - Fraction(c**3, 6)
        + Fraction(5 * c * c, 36)
        + Fraction(c, 3)
        - Fraction(c * c, 6) * d
        + c * d
        + d * d / 2
        + d / 6
        + Fraction(2, 9)
        - Fraction(delta_c(c - 1), 18) * (c * c - 6 * c - 6 * d - delta_c(c - 1) - 13)
    )
    return ReflexiveBoundReport(c, d, d_max, ReflexiveCase.CASE2, e_bound, h2_bound)


def sections_bound_curve(l: int) -> int:
    """h^0 of the twisted ideal of a degree-d curve is at most C(l+2,3) for l < d."""
    return math.comb(l + 2, 3) if l >= 0 else 0


def sections_bound_points(l: int) -> int:
    """h^0 of the twisted ideal of n points in the plane is at most C(l+1,2) for l < n."""
    return math.comb(l + 1, 2) if l >= 0 else 0
