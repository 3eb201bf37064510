"""Threefold profiles: the ambient-variety constants every other module stays generic over.

A profile records the degree H^3 of the polarization, the canonical-class
coefficient K.H^2/H^3, the denominators of the Chern-character lattices, and
which positivity assumptions (classical Bogomolov, quadratic ch_3 form) are
taken to hold.  Profiles are plain data so a user can describe their own
variety in JSON.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import Rat, parse_rat, rat_str


@dataclass(frozen=True)
class Profile:
    """Numerical invariants of a smooth projective threefold of Picard rank one.

    den2 and den3 are the denominators of the H.ch_2/H^3 and ch_3/H^3
    lattices.  curve_den is the denominator of the curve-degree lattice; it
    can be stricter than den2 (degrees on projective space are integers even
    though ch_2 lives in (1/2)Z).
    """

    name: str
    h3: Rat
    canonical_coeff: Rat
    den2: int = 2
    den3: int = 6
    assumption_B: bool = True
    assumption_C: bool = True
    curve_den: int | None = None
    den1: int = 1

    def __post_init__(self):
        if self.h3 <= 0:
            raise ValueError("H^3 must be positive")
        if self.den2 not in (1, 2):
            raise ValueError("den2 must be 1 or 2")
        if self.den3 not in (1, 2, 3, 6):
            raise ValueError("den3 must divide 6")

    @property
    def degree_den(self) -> int:
        return self.curve_den if self.curve_den is not None else self.den2

    def in_lattice(self, x: Rat, den: int) -> bool:
        return (Fraction(x) * den).denominator == 1

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "h3": rat_str(self.h3),
            "canonical_coeff": rat_str(self.canonical_coeff),
            "den2": self.den2,
            "den3": self.den3,
            "assumption_B": self.assumption_B,
            "assumption_C": self.assumption_C,
            "curve_den": self.degree_den,
        }

    @staticmethod
    def from_json(obj: dict) -> "Profile":
        den2 = int(obj["den2"])
        curve_den = int(obj["curve_den"]) if "curve_den" in obj else None
        if curve_den == den2:
            curve_den = None
        return Profile(
            name=obj["name"],
            h3=parse_rat(str(obj["h3"])),
            canonical_coeff=parse_rat(str(obj["canonical_coeff"])),
            den2=den2,
            den3=int(obj["den3"]),
            assumption_B=bool(obj["assumption_B"]),
            assumption_C=bool(obj["assumption_C"]),
            curve_den=curve_den,
        )


P3 = Profile(name="P3", h3=Fraction(1), canonical_coeff=Fraction(-4), curve_den=1)
PPAV = Profile(name="PPAV", h3=Fraction(6), canonical_coeff=Fraction(0))
FANO_IDX2_DEG1 = Profile(name="FANO_IDX2_DEG1", h3=Fraction(1), canonical_coeff=Fraction(-2))
FANO_IDX2_DEG2 = Profile(name="FANO_IDX2_DEG2", h3=Fraction(2), canonical_coeff=Fraction(-2))


def builtin_profiles() -> list[Profile]:
    """The stock geometries: projective space, principally polarized abelian
    threefolds, and the two small index-two Fano threefolds."""
    return [P3, PPAV, FANO_IDX2_DEG1, FANO_IDX2_DEG2]


def profile_by_name(name: str) -> Profile:
    for p in builtin_profiles():
        if p.name.lower() == name.lower():
            return p
    raise KeyError(f"unknown profile {name!r}")


def genus_from_ch3(e: Rat, d: Rat, profile: Profile) -> Rat:
    """Arithmetic genus of a degree-d curve whose ideal sheaf has ch_3/H^3 = e.

    g = 1 - chi(O_C) = 1 + K.C/2 + ch_3(I_C), with K.C = canonical_coeff*d*H^3
    and ch_3(I_C) = e*H^3.
    """
    d, e = Fraction(d), Fraction(e)
    if d <= 0:
        raise ValueError("degree must be positive")
    if not profile.in_lattice(d, profile.degree_den):
        raise ValueError(
            f"degree {rat_str(d)} not in the (1/{profile.degree_den})Z lattice of {profile.name}"
        )
    return 1 + profile.canonical_coeff * d * profile.h3 / 2 + e * profile.h3


def ch3_from_genus(g: Rat, d: Rat, profile: Profile) -> Rat:
    """Inverse of genus_from_ch3 in g."""
    d, g = Fraction(d), Fraction(g)
    if d <= 0:
        raise ValueError("degree must be positive")
    if not profile.in_lattice(d, profile.degree_den):
        raise ValueError(
            f"degree {rat_str(d)} not in the (1/{profile.degree_den})Z lattice of {profile.name}"
        )
    return (g - 1 - profile.canonical_coeff * d * profile.h3 / 2) / profile.h3
