"""Certified polynomial sign fixtures.

Each fixture is one univariate polynomial, an interval, and a claimed sign;
`certify` runs the Sturm classification and checks the claim.  The stock
fixture file collects every single-variable sign inequality the wall
machinery's correctness rests on (after substituting the extremal parameter
values that reduce the two-variable inequalities to one variable).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .exactnum import (
    Interval,
    Poly,
    SignClass,
    SignReport,
    parse_rat,
    rat_str,
    sturm_sign,
)

CLAIMS = {
    "positive": {SignClass.STRICTLY_POSITIVE},
    "nonnegative": {
        SignClass.STRICTLY_POSITIVE,
        SignClass.NON_NEGATIVE_WITH_ROOTS,
        SignClass.IDENTICALLY_ZERO,
    },
    "negative": {SignClass.STRICTLY_NEGATIVE},
    "nonpositive": {
        SignClass.STRICTLY_NEGATIVE,
        SignClass.NON_POSITIVE_WITH_ROOTS,
        SignClass.IDENTICALLY_ZERO,
    },
}


@dataclass(frozen=True)
class Fixture:
    id: str
    description: str
    poly: Poly
    interval: Interval
    claim: str

    def to_json(self):
        return {
            "id": self.id,
            "description": self.description,
            "coeffs": [rat_str(c) for c in self.poly.coeffs],
            "interval": {
                "lo": None if self.interval.lo is None else rat_str(self.interval.lo),
                "hi": None if self.interval.hi is None else rat_str(self.interval.hi),
                "lo_closed": self.interval.lo_closed,
                "hi_closed": self.interval.hi_closed,
            },
            "claim": self.claim,
        }

    @staticmethod
    def from_json(obj: dict) -> "Fixture":
        iv = obj["interval"]
        return Fixture(
            id=obj["id"],
            description=obj.get("description", ""),
            poly=Poly([parse_rat(c) for c in obj["coeffs"]]),
            interval=Interval(
                None if iv["lo"] is None else parse_rat(iv["lo"]),
                None if iv["hi"] is None else parse_rat(iv["hi"]),
                bool(iv.get("lo_closed", True)),
                bool(iv.get("hi_closed", True)),
            ),
            claim=obj["claim"],
        )


@dataclass(frozen=True)
class CertifyResult:
    fixture: Fixture
    report: SignReport
    ok: bool


def certify(fx: Fixture) -> CertifyResult:
    if fx.claim not in CLAIMS:
        raise ValueError(f"unknown claim {fx.claim!r}")
    rep = sturm_sign(fx.poly, fx.interval)
    return CertifyResult(fx, rep, rep.classification in CLAIMS[fx.claim])


def load_fixtures(path: str | Path | None = None) -> list[Fixture]:
    """Load fixtures from a file, or the packaged stock set."""
    if path is None:
        text = resources.files("tiltwall").joinpath("data/fixtures.json").read_text()
    else:
        text = Path(path).read_text()
    obj = json.loads(text)
    if obj.get("version") != 1:
        raise ValueError("unsupported fixtures file version")
    return [Fixture.from_json(f) for f in obj["fixtures"]]


def certify_all(path: str | Path | None = None) -> list[CertifyResult]:
    return [certify(fx) for fx in load_fixtures(path)]
