"""H-normalized Chern character vectors and their exact arithmetic.

A class is the quadruple (r, c, d, e) = (H^3 ch_0, H^2 ch_1, H ch_2, ch_3)/H^3.
Everything here is profile-independent except the lattice checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import Rat, RatLike, parse_rat, rat_str
from .geometry import Profile


@dataclass(frozen=True)
class ChernVec2:
    """Truncated class (r, c, d): all wall geometry factors through this."""

    r: Rat
    c: Rat
    d: Rat

    def __init__(self, r: RatLike, c: RatLike, d: RatLike):
        object.__setattr__(self, "r", Fraction(r))
        object.__setattr__(self, "c", Fraction(c))
        object.__setattr__(self, "d", Fraction(d))

    def __iter__(self):
        return iter((self.r, self.c, self.d))

    def __repr__(self):
        return f"({rat_str(self.r)},{rat_str(self.c)},{rat_str(self.d)})"

    def scale(self, t: RatLike) -> "ChernVec2":
        t = Fraction(t)
        return ChernVec2(self.r * t, self.c * t, self.d * t)

    def __sub__(self, other: "ChernVec2") -> "ChernVec2":
        return ChernVec2(self.r - other.r, self.c - other.c, self.d - other.d)

    def __add__(self, other: "ChernVec2") -> "ChernVec2":
        return ChernVec2(self.r + other.r, self.c + other.c, self.d + other.d)

    def to_json(self):
        return {"r": rat_str(self.r), "c": rat_str(self.c), "d": rat_str(self.d)}


@dataclass(frozen=True)
class ChernVec:
    """Full class (r, c, d, e)."""

    r: Rat
    c: Rat
    d: Rat
    e: Rat

    def __init__(self, r: RatLike, c: RatLike, d: RatLike, e: RatLike):
        object.__setattr__(self, "r", Fraction(r))
        object.__setattr__(self, "c", Fraction(c))
        object.__setattr__(self, "d", Fraction(d))
        object.__setattr__(self, "e", Fraction(e))

    def __iter__(self):
        return iter((self.r, self.c, self.d, self.e))

    def __repr__(self):
        return f"({rat_str(self.r)},{rat_str(self.c)},{rat_str(self.d)},{rat_str(self.e)})"

    def truncate(self) -> ChernVec2:
        return ChernVec2(self.r, self.c, self.d)

    def __sub__(self, other: "ChernVec") -> "ChernVec":
        return ChernVec(self.r - other.r, self.c - other.c, self.d - other.d, self.e - other.e)

    def __add__(self, other: "ChernVec") -> "ChernVec":
        return ChernVec(self.r + other.r, self.c + other.c, self.d + other.d, self.e + other.e)

    def to_json(self):
        return {
            "r": rat_str(self.r),
            "c": rat_str(self.c),
            "d": rat_str(self.d),
            "e": rat_str(self.e),
        }

    @staticmethod
    def from_json(obj: dict) -> "ChernVec":
        return ChernVec(
            parse_rat(str(obj["r"])),
            parse_rat(str(obj["c"])),
            parse_rat(str(obj["d"])),
            parse_rat(str(obj["e"])),
        )


AnyChern = ChernVec | ChernVec2


def twist(v: ChernVec, beta: RatLike) -> ChernVec:
    """Multiply the class by exp(-beta*H):
    (r, c - beta r, d - beta c + beta^2 r/2, e - beta d + beta^2 c/2 - beta^3 r/6).
    """
    b = Fraction(beta)
    return ChernVec(
        v.r,
        v.c - b * v.r,
        v.d - b * v.c + b * b * v.r / 2,
        v.e - b * v.d + b * b * v.c / 2 - b**3 * v.r / 6,
    )


def twist2(v: ChernVec2, beta: RatLike) -> ChernVec2:
    b = Fraction(beta)
    return ChernVec2(v.r, v.c - b * v.r, v.d - b * v.c + b * b * v.r / 2)


def tensor_O(v: ChernVec, n: int) -> ChernVec:
    """Tensor with the line bundle O(nH); equals twist(v, -n)."""
    return twist(v, -n)


def line_bundle_class(n: RatLike) -> ChernVec:
    """ch(O(nH)) = (1, n, n^2/2, n^3/6)."""
    n = Fraction(n)
    return ChernVec(1, n, n * n / 2, n**3 / 6)


def dual_class(v: ChernVec) -> ChernVec:
    """Class of the shifted derived dual: (r,c,d,e) -> (-r, c, -d, e).

    The actual dualized object differs from this class by a zero-dimensional
    sheaf with nonnegative ch_3, so for a semistable object of class v a
    semistable object of class at least (-r, c, -d, e) exists; consumers that
    rely on the inequality direction must account for that one-sided slack.
    """
    return ChernVec(-v.r, v.c, -v.d, v.e)


def discriminant(v: AnyChern) -> Rat:
    """Bogomolov discriminant c^2 - 2 r d (twist-invariant)."""
    return v.c * v.c - 2 * v.r * v.d


def delta_pairing(v: AnyChern, w: AnyChern) -> Rat:
    """Polarization of the discriminant: c_v c_w - r_v d_w - r_w d_v."""
    return v.c * w.c - v.r * w.d - w.r * v.d


def lattice_check(v: ChernVec, profile: Profile) -> bool:
    """True iff every entry lies in its lattice (and the discriminant is
    integral when half-integer ch_2 is allowed)."""
    ok = (
        Fraction(v.r).denominator == 1
        and profile.in_lattice(v.c, profile.den1)
        and profile.in_lattice(v.d, profile.den2)
        and profile.in_lattice(v.e, profile.den3)
    )
    if ok and profile.den2 == 2:
        ok = Fraction(discriminant(v)).denominator == 1
    return ok


def ideal_sheaf_class(d: RatLike, e: RatLike, profile: Profile) -> ChernVec:
    """Class (1, 0, -d, e) of the ideal sheaf of a degree-d curve."""
    d, e = Fraction(d), Fraction(e)
    if d <= 0:
        raise ValueError("degree must be positive")
    if not profile.in_lattice(d, profile.degree_den):
        raise ValueError(
            f"degree {rat_str(d)} not in the (1/{profile.degree_den})Z degree lattice of {profile.name}"
        )
    if not profile.in_lattice(e, profile.den3):
        raise ValueError(f"ch3 {rat_str(e)} not in the (1/{profile.den3})Z lattice")
    return ChernVec(1, 0, -d, e)


def parse_class(text: str) -> ChernVec:
    """Parse a class literal "(r,c,d,e)" with rational components."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    parts = [p for p in s.split(",") if p.strip()]
    if len(parts) != 4:
        raise ValueError(f"expected four components in class literal {text!r}")
    r, c, d, e = (parse_rat(p) for p in parts)
    return ChernVec(r, c, d, e)


def parse_class2(text: str) -> ChernVec2:
    """Parse "(r,c,d)" or take the truncation of a four-component literal."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    parts = [p for p in s.split(",") if p.strip()]
    if len(parts) == 4:
        return parse_class(text).truncate()
    if len(parts) != 3:
        raise ValueError(f"expected three components in class literal {text!r}")
    r, c, d = (parse_rat(p) for p in parts)
    return ChernVec2(r, c, d)
