"""The (beta, alpha^2) half-plane: slopes, numerical walls, and the quadratic semidisk.

Points carry alpha^2 rather than alpha so that every slope, center, and
radius computation stays rational; square roots appear only when a wall is
intersected with the beta-axis (Surd endpoints).

A numerical wall between truncated classes v and w is the solution locus of
nu(v) = nu(w).  With the minors

    D = r_v c_w - r_w c_v,  B = r_v d_w - r_w d_v,  C = c_v d_w - c_w d_v,

the locus is  (D/2)(beta^2 + alpha^2) - B beta + C = 0: a semicircle with
center B/D and radius^2 (B/D)^2 - 2C/D when D != 0, the vertical line
beta = C/B when D = 0 != B, and degenerate otherwise.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .chern import ChernVec, ChernVec2, discriminant
from .exactnum import Rat, RatLike, Surd, rat_str, surd_cmp

INF = float("inf")


@dataclass(frozen=True)
class Point:
    """A point (beta, alpha^2) of the upper half plane; alpha_sq = 0 is the boundary."""

    beta: Rat
    alpha_sq: Rat

    def __init__(self, beta: RatLike, alpha_sq: RatLike):
        object.__setattr__(self, "beta", Fraction(beta))
        object.__setattr__(self, "alpha_sq", Fraction(alpha_sq))
        if self.alpha_sq < 0:
            raise ValueError("alpha^2 must be nonnegative")


class WallShape(enum.Enum):
    SEMICIRCLE = "semicircle"
    VERTICAL = "vertical"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class Wall:
    """A semicircular numerical wall: exact center, radius^2, and the defining pair."""

    center: Rat
    radius_sq: Rat
    v: ChernVec2
    w: ChernVec2

    @property
    def beta_minus(self) -> Surd:
        return Surd(self.center) - Surd.sqrt(self.radius_sq)

    @property
    def beta_plus(self) -> Surd:
        return Surd(self.center) + Surd.sqrt(self.radius_sq)

    def top(self) -> Point:
        return Point(self.center, self.radius_sq)

    def to_json(self):
        return {
            "center": rat_str(self.center),
            "radius_sq": rat_str(self.radius_sq),
            "v": self.v.to_json(),
            "w": self.w.to_json(),
        }


@dataclass(frozen=True)
class WallKind:
    """Tagged wall locus: Semicircle(wall) | Vertical(beta) | Degenerate."""

    shape: WallShape
    wall: Wall | None = None
    beta: Rat | None = None

    @staticmethod
    def semicircle(w: Wall) -> "WallKind":
        return WallKind(WallShape.SEMICIRCLE, wall=w)

    @staticmethod
    def vertical(beta: Rat) -> "WallKind":
        return WallKind(WallShape.VERTICAL, beta=beta)

    @staticmethod
    def degenerate() -> "WallKind":
        return WallKind(WallShape.DEGENERATE)

    @property
    def is_semicircle(self) -> bool:
        return self.shape is WallShape.SEMICIRCLE


class QRegionKind(enum.Enum):
    DISK = "disk"
    HALF_PLANE = "half_plane"
    ALL_ZERO = "all_zero"
    VOID = "void"
    EVERYTHING = "everything"


@dataclass(frozen=True)
class QRegion:
    """The region where the quadratic form of the class is <= 0.

    DISK: alpha^2 + (beta - center)^2 <= radius_sq (empty when radius_sq <= 0).
    HALF_PLANE: beta <= boundary_beta (le=True) or beta >= boundary_beta;
    this is the degenerate-locus case, occurring exactly when the class has
    discriminant zero but the form is not identically zero.
    ALL_ZERO: the form vanishes identically (line-bundle-type classes).
    VOID: the form is a positive constant; the region is empty.
    """

    kind: QRegionKind
    center: Rat | None = None
    radius_sq: Rat | None = None
    boundary_beta: Rat | None = None
    le: bool | None = None

    @property
    def nonempty_interior(self) -> bool:
        if self.kind is QRegionKind.DISK:
            return self.radius_sq > 0
        return self.kind in (QRegionKind.HALF_PLANE, QRegionKind.EVERYTHING)

    def to_json(self):
        out = {"kind": self.kind.value}
        if self.center is not None:
            out["center"] = rat_str(self.center)
        if self.radius_sq is not None:
            out["radius_sq"] = rat_str(self.radius_sq)
        if self.boundary_beta is not None:
            out["boundary_beta"] = rat_str(self.boundary_beta)
        if self.le is not None:
            out["le"] = self.le
        return out


def mu(v: ChernVec2 | ChernVec) -> Rat | float:
    """Slope c/r, with +infinity for rank zero."""
    if v.r == 0:
        return INF
    return v.c / v.r


def nu(v: ChernVec2 | ChernVec, p: Point) -> Rat | float:
    """Tilt slope at p: (d^beta - (alpha^2/2) r) / c^beta, +infinity when c^beta = 0."""
    b = p.beta
    cb = v.c - b * v.r
    db = v.d - b * v.c + b * b * v.r / 2
    if cb == 0:
        return INF
    return (db - p.alpha_sq * v.r / 2) / cb


def wall_minors(v: ChernVec2, w: ChernVec2) -> tuple[Rat, Rat, Rat]:
    D = v.r * w.c - w.r * v.c
    B = v.r * w.d - w.r * v.d
    C = v.c * w.d - w.c * v.d
    return D, B, C


def wall(v: ChernVec2 | ChernVec, w: ChernVec2 | ChernVec) -> WallKind:
    """Numerical wall between two classes (tilt slopes equal)."""
    v2 = v.truncate() if isinstance(v, ChernVec) else v
    w2 = w.truncate() if isinstance(w, ChernVec) else w
    D, B, C = wall_minors(v2, w2)
    if D != 0:
        center = B / D
        radius_sq = center * center - 2 * C / D
        if radius_sq > 0:
            return WallKind.semicircle(Wall(center, radius_sq, v2, w2))
        return WallKind.degenerate()
    if B != 0:
        return WallKind.vertical(C / B)
    # proportional truncated classes (or no locus at all)
    return WallKind.degenerate()


def q_value(v: ChernVec, p: Point) -> Rat:
    """The quadratic form alpha^2*Delta + 4(d^beta)^2 - 6 c^beta e^beta at p."""
    b = p.beta
    cb = v.c - b * v.r
    db = v.d - b * v.c + b * b * v.r / 2
    eb = v.e - b * v.d + b * b * v.c / 2 - b**3 * v.r / 6
    return p.alpha_sq * discriminant(v) + 4 * db * db - 6 * cb * eb


def q_aux_class(v: ChernVec) -> ChernVec2:
    """The auxiliary truncated class (c, 2d, 3e) whose wall against v is the
    vanishing locus of the quadratic form."""
    return ChernVec2(v.c, 2 * v.d, 3 * v.e)


def q_region(v: ChernVec) -> QRegion:
    """Vanishing locus of the quadratic form as center/radius (or half-plane) data.

    Delegates to the wall against (c, 2d, 3e): the D-minor of that pair is
    -Delta(v), so the locus is a circle exactly when Delta(v) != 0, and a
    vertical line (half-plane region) when Delta(v) = 0 with 3re != cd.
    """
    # For Delta(v) < 0 the returned circle is still the exact vanishing locus,
    # but the sub-level region is its exterior; the engine only consumes
    # regions of Bogomolov-feasible classes, where it is the closed disk.
    u = q_aux_class(v)
    v2 = v.truncate()
    D, B, C = wall_minors(v2, u)  # D = -Delta(v)
    if D != 0:
        center = B / D
        radius_sq = center * center - 2 * C / D
        return QRegion(QRegionKind.DISK, center=center, radius_sq=radius_sq)
    if B != 0:
        # Q = 2(B*beta - C): region Q <= 0 is a half-plane
        return QRegion(QRegionKind.HALF_PLANE, boundary_beta=C / B, le=B > 0)
    if C == 0:
        center = v.c / v.r if v.r != 0 else Fraction(0)
        return QRegion(QRegionKind.ALL_ZERO, center=center, radius_sq=Fraction(0))
    # Q is the nonzero constant -2C
    if C > 0:
        return QRegion(QRegionKind.EVERYTHING)
    return QRegion(QRegionKind.VOID)


class WallOrder(enum.Enum):
    IDENTICAL = "identical"
    NESTED = "nested"
    DISJOINT = "disjoint"


@dataclass(frozen=True)
class WallComparison:
    order: WallOrder
    outer: Wall | None = None


def _det3(v: ChernVec2, w1: ChernVec2, w2: ChernVec2) -> Rat:
    return (
        v.r * (w1.c * w2.d - w1.d * w2.c)
        - v.c * (w1.r * w2.d - w1.d * w2.r)
        + v.d * (w1.r * w2.c - w1.c * w2.r)
    )


def wall_compare(v: ChernVec2, w1: WallKind, w2: WallKind) -> WallComparison:
    """Compare two semicircular walls of the same class: identical, nested, or disjoint.

    Identical iff the three truncated classes are linearly dependent.  Since
    distinct numerical walls of one class can never cross in the upper half
    plane, any interval overlap that is not containment signals an arithmetic
    bug and raises.
    """
    if not (w1.is_semicircle and w2.is_semicircle):
        raise ValueError("wall_compare expects two semicircular walls")
    if discriminant(v) < 0:
        # all walls of a negative-discriminant class pass through one common
        # point; the nesting trichotomy only holds for Bogomolov-feasible v
        raise ValueError("wall_compare requires a nonnegative discriminant")
    a, b = w1.wall, w2.wall
    if _det3(v, a.w, b.w) == 0:
        if (a.center, a.radius_sq) != (b.center, b.radius_sq):
            raise ArithmeticError("dependent classes produced distinct walls")
        return WallComparison(WallOrder.IDENTICAL)
    lo1, hi1 = a.beta_minus, a.beta_plus
    lo2, hi2 = b.beta_minus, b.beta_plus
    if surd_cmp(hi1, lo2) <= 0 or surd_cmp(hi2, lo1) <= 0:
        return WallComparison(WallOrder.DISJOINT)
    c_lo = surd_cmp(lo1, lo2)
    c_hi = surd_cmp(hi1, hi2)
    if c_lo <= 0 and c_hi >= 0:
        return WallComparison(WallOrder.NESTED, outer=a)
    if c_lo >= 0 and c_hi <= 0:
        return WallComparison(WallOrder.NESTED, outer=b)
    raise ArithmeticError(
        "transversal wall crossing detected; this should be impossible"
    )


def no_wall_on_ray(v: ChernVec2 | ChernVec, beta0: RatLike) -> bool:
    """True iff no semicircular wall of v crosses the vertical ray beta = beta0.

    Writing beta0 = p/q in lowest terms, this holds exactly when the twisted
    ch_1 at beta0 is 0 or 1/q.
    """
    b = Fraction(beta0)
    cb = v.c - b * v.r
    return cb == 0 or cb == Fraction(1, b.denominator)


def nu_zero_alpha_sq(v: ChernVec2 | ChernVec, beta: RatLike):
    """The alpha^2 > 0 with nu(v) = 0 over the given beta, if any.

    Returns a Fraction, None (no positive solution), or the string "line"
    for the rank-zero degenerate case where nu = 0 along the whole ray.
    """
    b = Fraction(beta)
    if v.r == 0:
        if v.c == 0:
            raise ValueError("slope of (0,0,*) is everywhere infinite")
        return "line" if v.d - b * v.c == 0 else None
    db = v.d - b * v.c + b * b * v.r / 2
    alpha_sq = 2 * db / v.r
    return alpha_sq if alpha_sq > 0 else None


def bar_beta(v: ChernVec2 | ChernVec) -> Surd:
    """Smaller root of d^beta = 0 for a positive-rank class: (c - sqrt(Delta))/r."""
    if v.r <= 0:
        raise ValueError("bar_beta requires positive rank")
    delta = discriminant(v)
    if delta < 0:
        raise ValueError("negative discriminant has no real twist root")
    return Surd(v.c / v.r) - Surd.sqrt(Fraction(delta) / (v.r * v.r))


def wall_contains_disk(w: Wall, center: Rat, radius_sq: Rat) -> bool:
    """Whether [center +- sqrt(radius_sq)] lies inside the wall's beta-interval."""
    lo = Surd(center) - Surd.sqrt(radius_sq)
    hi = Surd(center) + Surd.sqrt(radius_sq)
    return surd_cmp(w.beta_minus, lo) <= 0 and surd_cmp(hi, w.beta_plus) <= 0
