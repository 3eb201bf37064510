"""Deterministic wall-diagram rendering.

The exact engine hands over rational wall and disk data; this module is the
only place where floating point appears, and every coordinate is formatted
to a fixed six decimals so identical input produces byte-identical SVG.
A matplotlib path renders the same picture to raster formats for reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .chern import ChernVec, parse_class
from .exactnum import Rat, parse_rat
from .geometry import profile_by_name
from .tiltplane import QRegionKind, Wall, q_region
from .wallsearch import CandidateWall, SearchConstraints, enumerate_candidates


@dataclass(frozen=True)
class PlotLayers:
    walls: bool = True
    q_region: bool = True
    nu_zero_hyperbola: bool = False
    vertical_wall: bool = True


@dataclass(frozen=True)
class PlotSpec:
    v: ChernVec
    beta_range: tuple[Rat, Rat]
    alpha_max: Rat
    layers: PlotLayers = field(default_factory=PlotLayers)
    width_px: int = 640
    height_px: int = 400
    profile: str = "P3"
    vanishing: int | None = None

    def __post_init__(self):
        if self.beta_range[0] >= self.beta_range[1]:
            raise ValueError("beta_range must be increasing")
        if self.width_px <= 0 or self.height_px <= 0:
            raise ValueError("pixel dimensions must be positive")
        if self.alpha_max <= 0:
            raise ValueError("alpha_max must be positive")

    @staticmethod
    def from_json(obj: dict) -> "PlotSpec":
        v = obj["v"]
        vec = parse_class(v) if isinstance(v, str) else ChernVec.from_json(v)
        lay = obj.get("layers", {})
        return PlotSpec(
            v=vec,
            beta_range=(parse_rat(str(obj["beta_range"][0])), parse_rat(str(obj["beta_range"][1]))),
            alpha_max=parse_rat(str(obj["alpha_max"])),
            layers=PlotLayers(
                walls=bool(lay.get("walls", True)),
                q_region=bool(lay.get("q_region", True)),
                nu_zero_hyperbola=bool(lay.get("nu_zero_hyperbola", False)),
                vertical_wall=bool(lay.get("vertical_wall", True)),
            ),
            width_px=int(obj.get("width_px", 640)),
            height_px=int(obj.get("height_px", 400)),
            profile=str(obj.get("profile", "P3")),
            vanishing=int(obj["vanishing"]) if obj.get("vanishing") is not None else None,
        )


@dataclass(frozen=True)
class PlotData:
    """Everything the renderers draw: computed once, exactly."""

    walls: tuple[Wall, ...]
    q_center: Rat | None
    q_radius_sq: Rat | None
    vertical_beta: Rat | None


def collect_plot_data(spec: PlotSpec) -> PlotData:
    profile = profile_by_name(spec.profile)
    walls: list[Wall] = []
    if spec.layers.walls:
        constraints = SearchConstraints(section_vanishing_k=spec.vanishing)
        cands: list[CandidateWall] = enumerate_candidates(spec.v, profile, constraints)
        walls = [c.wall for c in cands]
    qc = qr = None
    if spec.layers.q_region:
        reg = q_region(spec.v)
        if reg.kind is QRegionKind.DISK and reg.radius_sq > 0:
            qc, qr = reg.center, reg.radius_sq
    vb = None
    if spec.layers.vertical_wall and spec.v.r != 0:
        vb = spec.v.c / spec.v.r
    return PlotData(tuple(walls), qc, qr, vb)


def _f(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


class _Frame:
    def __init__(self, spec: PlotSpec):
        self.blo = float(spec.beta_range[0])
        self.bhi = float(spec.beta_range[1])
        self.amax = float(spec.alpha_max)
        self.w = spec.width_px
        self.h = spec.height_px

    def x(self, beta: float) -> float:
        return (beta - self.blo) / (self.bhi - self.blo) * self.w

    def y(self, alpha: float) -> float:
        return self.h - alpha / self.amax * self.h


def emit_svg(spec: PlotSpec, data: PlotData) -> bytes:
    """Render the wall diagram as deterministic SVG 1.1 bytes."""
    fr = _Frame(spec)
    out = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{spec.width_px}" height="{spec.height_px}" '
        f'viewBox="0 0 {spec.width_px} {spec.height_px}">'
    )
    out.append("<defs>")
    out.append(
        f'<clipPath id="frame"><rect x="0" y="0" width="{spec.width_px}" '
        f'height="{spec.height_px}"/></clipPath>'
    )
    out.append("</defs>")
    out.append(
        f'<rect x="0" y="0" width="{spec.width_px}" height="{spec.height_px}" fill="#ffffff"/>'
    )
    out.append('<g clip-path="url(#frame)">')

    def arc_path(center: float, radius: float) -> str:
        x1, x2 = fr.x(center - radius), fr.x(center + radius)
        base = fr.y(0.0)
        rx = radius / (fr.bhi - fr.blo) * fr.w
        ry = radius / fr.amax * fr.h
        return (
            f"M {_f(x1)} {_f(base)} A {_f(rx)} {_f(ry)} 0 0 1 {_f(x2)} {_f(base)}"
        )

    if data.q_center is not None:
        c, r = float(data.q_center), math.sqrt(float(data.q_radius_sq))
        out.append(
            f'<path d="{arc_path(c, r)} Z" fill="#9ecae1" fill-opacity="0.55" '
            f'stroke="#3182bd" stroke-width="1"/>'
        )
    for w in data.walls:
        c, r = float(w.center), math.sqrt(float(w.radius_sq))
        out.append(
            f'<path d="{arc_path(c, r)}" fill="none" stroke="#636363" stroke-width="1.2"/>'
        )
    if spec.layers.nu_zero_hyperbola:
        pts = _hyperbola_points(spec, fr)
        for branch in pts:
            if len(branch) >= 2:
                d = "M " + " L ".join(f"{_f(px)} {_f(py)}" for px, py in branch)
                out.append(
                    f'<path d="{d}" fill="none" stroke="#31a354" '
                    f'stroke-width="1" stroke-dasharray="6 3"/>'
                )
    if data.vertical_beta is not None:
        x = fr.x(float(data.vertical_beta))
        out.append(
            f'<line x1="{_f(x)}" y1="0" x2="{_f(x)}" y2="{_f(float(spec.height_px))}" '
            f'stroke="#de2d26" stroke-width="1" stroke-dasharray="2 3"/>'
        )
    base = fr.y(0.0)
    out.append(
        f'<line x1="0" y1="{_f(base)}" x2="{_f(float(spec.width_px))}" y2="{_f(base)}" '
        f'stroke="#000000" stroke-width="1"/>'
    )
    out.append("</g>")
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("ascii")


def _hyperbola_points(spec: PlotSpec, fr: _Frame) -> list[list[tuple[float, float]]]:
    """Sample the nu = 0 locus on a fixed pixel grid (exact alpha^2, float sqrt).

    For rank zero the locus degenerates to the vertical ray beta = d/c.
    """
    v = spec.v
    if v.r == 0:
        if v.c == 0:
            return []
        x = fr.x(float(v.d / v.c))
        return [[(x, fr.y(0.0)), (x, fr.y(fr.amax))]]
    branches: list[list[tuple[float, float]]] = [[]]
    lo, hi = spec.beta_range
    steps = spec.width_px
    for i in range(steps + 1):
        beta = lo + (hi - lo) * Fraction(i, steps)
        db = v.d - beta * v.c + beta * beta * v.r / 2
        a2 = 2 * db / v.r
        if a2 < 0:
            if branches[-1]:
                branches.append([])
            continue
        branches[-1].append((fr.x(float(beta)), fr.y(math.sqrt(float(a2)))))
    return branches


def emit_png(spec: PlotSpec, data: PlotData, path: str) -> None:
    """Render the same diagram with matplotlib (report figures)."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from matplotlib.patches import Arc

    blo, bhi = float(spec.beta_range[0]), float(spec.beta_range[1])
    amax = float(spec.alpha_max)
    fig, ax = plt.subplots(figsize=(spec.width_px / 100, spec.height_px / 100), dpi=100)
    if data.q_center is not None:
        c, r = float(data.q_center), math.sqrt(float(data.q_radius_sq))
        import numpy as np

        ts = np.linspace(0.0, math.pi, 256)
        ax.fill(
            c + r * np.cos(ts),
            r * np.sin(ts),
            color="#9ecae1",
            alpha=0.55,
            edgecolor="#3182bd",
        )
    for w in data.walls:
        c, r = float(w.center), math.sqrt(float(w.radius_sq))
        ax.add_patch(Arc((c, 0.0), 2 * r, 2 * r, theta1=0.0, theta2=180.0, color="#636363"))
    if spec.layers.nu_zero_hyperbola:
        fr = _Frame(spec)
        for branch in _hyperbola_points(spec, fr):
            if len(branch) >= 2:
                xs = [blo + (p[0] / fr.w) * (bhi - blo) for p in branch]
                ys = [(fr.h - p[1]) / fr.h * amax for p in branch]
                ax.plot(xs, ys, color="#31a354", linestyle="--", linewidth=1)
    if data.vertical_beta is not None:
        ax.axvline(float(data.vertical_beta), color="#de2d26", linestyle=":", linewidth=1)
    ax.axhline(0.0, color="black", linewidth=1)
    ax.set_xlim(blo, bhi)
    ax.set_ylim(0.0, amax)
    ax.set_xlabel("beta")
    ax.set_ylabel("alpha")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
