"""Command-line surface: class algebra, wall queries, bound tables, enumeration,
refutation, fixture certification, and wall-diagram plots.

All numeric output is exact (p/q strings); floating point never decides
anything, and appears only inside figure files.  Exit codes: 0 success,
1 usage or lattice error, 2 failed --expect refuted.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import bounds as B
from .chern import (
    ChernVec,
    discriminant,
    dual_class,
    parse_class,
    parse_class2,
    tensor_O,
    twist,
)
from .exactnum import parse_rat, rat_str
from .fixtures import certify_all
from .geometry import Profile, builtin_profiles, genus_from_ch3, profile_by_name
from .rangeb import rangeb_report, special_case_2k11
from .svg import PlotSpec, collect_plot_data, emit_png, emit_svg
from .tiltplane import WallShape, q_region, wall
from .wallsearch import SearchConstraints, Verdict, enumerate_candidates, refute_ch3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit_(1, f"error: {message}")


class SystemExit_(Exception):
    def __init__(self, code: int, message: str = ""):
        self.code = code
        self.message = message


def _profile(name: str) -> Profile:
    p = Path(name)
    if p.suffix == ".json" or p.exists():
        return Profile.from_json(json.loads(p.read_text()))
    return profile_by_name(name)


def _class_arg(text: str) -> ChernVec:
    t = text.strip()
    if t.startswith("{"):
        return ChernVec.from_json(json.loads(t))
    if t.startswith("@"):
        return ChernVec.from_json(json.loads(Path(t[1:]).read_text()))
    return parse_class(t)


def _emit(payload, as_json: bool, plain: str):
    if as_json:
        print(json.dumps(payload, indent=1))
    else:
        print(plain)


def _build_parser() -> _Parser:
    ap = _Parser(prog="tiltwall", description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("class", parents=[common], help="Chern class algebra")
    csub = p.add_subparsers(dest="op", required=True)
    for name in ("twist", "tensor", "dual", "delta"):
        cp = csub.add_parser(name, parents=[common])
        cp.add_argument("cls", help='class literal "(r,c,d,e)"')
        if name == "twist":
            cp.add_argument("--beta", required=True, help="twist parameter (rational)")
        if name == "tensor":
            cp.add_argument("--n", required=True, type=int, help="line-bundle degree")

    p = sub.add_parser("wall", parents=[common], help="numerical wall between two classes")
    p.add_argument("v")
    p.add_argument("w")

    p = sub.add_parser("qdisk", parents=[common], help="vanishing locus of the quadratic form")
    p.add_argument("v")

    p = sub.add_parser("bounds", parents=[common], help="closed-form ch3/genus bounds")
    bsub = p.add_subparsers(dest="op", required=True)
    for name in ("E", "eps", "A", "B", "conj", "reflexive", "rank0", "rank1", "rank2"):
        bp = bsub.add_parser(name, parents=[common])
        bp.add_argument("--d", help="degree / second Chern number (rational)")
        bp.add_argument("--k", type=int, help="surface degree")
        bp.add_argument("--c", type=int, help="first Chern number")
        bp.add_argument("--f", type=int, help="residue slice")

    p = sub.add_parser("enumerate", parents=[common], help="candidate destabilizing walls")
    p.add_argument("v")
    p.add_argument("--profile", default="P3")
    p.add_argument("--vanishing", type=int, default=None)

    p = sub.add_parser("refute", parents=[common], help="refutation certificate for a class")
    p.add_argument("v")
    p.add_argument("--profile", default="P3")
    p.add_argument("--vanishing", type=int, default=None)
    p.add_argument("--expect", choices=["refuted", "walls-remain", "vacuous"], default=None)

    p = sub.add_parser("certify", parents=[common], help="run the polynomial sign fixtures")
    p.add_argument("--fixtures", default=None, help="path to a fixtures JSON file")

    p = sub.add_parser("rangeb", parents=[common], help="intermediate-range instance report")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("special2k11", parents=[common], help="largest-open-degree verification")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("plot", parents=[common], help="render a wall diagram")
    p.add_argument("spec", help="path to a plot-spec JSON file")
    p.add_argument("-o", "--out", required=True, help="output file (.svg or .png)")

    p = sub.add_parser("table", parents=[common], help="bound tables")
    tsub = p.add_subparsers(dest="op", required=True)
    tp = tsub.add_parser("gp", parents=[common], help="maximal-genus table (classical bounds)")
    tp.add_argument("--k", type=int, required=True)
    tp.add_argument("--dmax", type=int, required=True)
    tp.add_argument("--profile", default="P3")
    tp.add_argument("--figure", default=None, help="also render the genus curve to this file")

    p = sub.add_parser("profiles", parents=[common], help="list built-in geometry profiles")
    return ap


def _cmd_class(args) -> int:
    v = _class_arg(args.cls)
    if args.op == "twist":
        out = twist(v, parse_rat(args.beta))
    elif args.op == "tensor":
        out = tensor_O(v, args.n)
    elif args.op == "dual":
        out = dual_class(v)
    else:
        d = discriminant(v)
        _emit({"delta": rat_str(d)}, args.json, rat_str(d))
        return 0
    _emit(out.to_json(), args.json, repr(out))
    return 0


def _cmd_wall(args) -> int:
    wk = wall(parse_class2(args.v), parse_class2(args.w))
    if wk.shape is WallShape.SEMICIRCLE:
        payload = {"shape": "semicircle", **wk.wall.to_json()}
        plain = f"semicircle center={rat_str(wk.wall.center)} radius_sq={rat_str(wk.wall.radius_sq)}"
    elif wk.shape is WallShape.VERTICAL:
        payload = {"shape": "vertical", "beta": rat_str(wk.beta)}
        plain = f"vertical beta={rat_str(wk.beta)}"
    else:
        payload = {"shape": "degenerate"}
        plain = "degenerate"
    _emit(payload, args.json, plain)
    return 0


def _cmd_qdisk(args) -> int:
    reg = q_region(_class_arg(args.v))
    payload = reg.to_json()
    plain = " ".join(f"{k}={v}" for k, v in payload.items())
    _emit(payload, args.json, plain)
    return 0


def _need(args, *names):
    for n in names:
        if getattr(args, n, None) is None:
            raise SystemExit_(1, f"error: bounds {args.op} requires --{n}")


def _cmd_bounds(args) -> int:
    op = args.op
    if op == "E":
        _need(args, "d", "k")
        val = B.bound_E(parse_rat(args.d), args.k)
    elif op == "eps":
        _need(args, "d", "k")
        val = B.eps(parse_rat(args.d), args.k)
    elif op == "A":
        _need(args, "k", "f")
        val = Fraction(B.A(args.k, args.f))
    elif op == "B":
        _need(args, "k", "f")
        val = Fraction(B.B(args.k, args.f))
    elif op == "conj":
        _need(args, "d", "k")
        rb = B.conj_bound_rangeB(int(parse_rat(args.d)), args.k)
        payload = {"E": rb.E, "f": rb.f, "h": rb.h, "regime": rb.regime.value}
        _emit(payload, args.json, str(rb.E))
        return 0
    elif op == "reflexive":
        _need(args, "c", "d")
        rep = B.hartshorne_reflexive(args.c, parse_rat(args.d))
        payload = {
            "case": rep.case.value,
            "d_max": rat_str(rep.d_max),
            "e_bound": None if rep.e_bound is None else rat_str(rep.e_bound),
            "h2_bound": None if rep.h2_bound is None else rat_str(rep.h2_bound),
        }
        plain = payload["case"] + (
            f" e<={payload['e_bound']} h2<={payload['h2_bound']}"
            if rep.e_bound is not None
            else f" (d_max={payload['d_max']})"
        )
        _emit(payload, args.json, plain)
        return 0
    elif op == "rank0":
        _need(args, "c", "d")
        val = B.max_ch3_rank0(args.c, parse_rat(args.d))
    elif op == "rank1":
        _need(args, "d")
        val = B.max_ch3_rank1(parse_rat(args.d))
    else:  # rank2
        _need(args, "c", "d")
        v2 = B.max_ch3_rank2(args.c, parse_rat(args.d))
        if v2 is None:
            _emit({"result": "infeasible"}, args.json, "infeasible")
            return 0
        val = v2
    _emit({"value": rat_str(val)}, args.json, rat_str(val))
    return 0


def _cmd_enumerate(args) -> int:
    profile = _profile(args.profile)
    v = _class_arg(args.v)
    cands = enumerate_candidates(v, profile, SearchConstraints(section_vanishing_k=args.vanishing))
    if args.json:
        print(json.dumps([c.to_json() for c in cands], indent=1))
    else:
        for c in cands:
            pref = ",".join(repr(p.prefix) for p in c.prefixes)
            print(
                f"center={rat_str(c.wall.center)}\tradius_sq={rat_str(c.wall.radius_sq)}\t"
                f"prefixes={pref}"
            )
        if not cands:
            print("(no candidate walls)")
    return 0


def _cmd_refute(args) -> int:
    profile = _profile(args.profile)
    v = _class_arg(args.v)
    cert = refute_ch3(v, profile, SearchConstraints(section_vanishing_k=args.vanishing))
    if args.json:
        print(json.dumps(cert.to_json(), indent=1))
    else:
        print(f"verdict: {cert.verdict.value}")
        for c in cert.candidates:
            pref = ",".join(
                f"{p.prefix!r}(e<={'?' if p.e_total_bound is None else rat_str(p.e_total_bound)})"
                for p in c.prefixes
            )
            print(f"  surviving wall center={rat_str(c.wall.center)} {pref}")
    if args.expect is not None:
        want = {
            "refuted": Verdict.REFUTED,
            "walls-remain": Verdict.WALLS_REMAIN,
            "vacuous": Verdict.VACUOUS,
        }[args.expect]
        if cert.verdict is not want:
            return 2
    return 0


def _cmd_certify(args) -> int:
    results = certify_all(args.fixtures)
    if args.json:
        print(
            json.dumps(
                [
                    {
                        "id": r.fixture.id,
                        "claim": r.fixture.claim,
                        "classification": r.report.classification.value,
                        "ok": r.ok,
                    }
                    for r in results
                ],
                indent=1,
            )
        )
    else:
        for r in results:
            print(f"{'PASS' if r.ok else 'FAIL'} {r.fixture.id} [{r.report.classification.value}]")
        n_bad = sum(1 for r in results if not r.ok)
        print(f"{len(results) - n_bad}/{len(results)} fixtures certified")
    return 0 if all(r.ok for r in results) else 2


def _cmd_rangeb(args) -> int:
    rep = rangeb_report(args.d, args.k, args.f)
    payload = rep.to_json()
    if args.json:
        print(json.dumps(payload, indent=1))
    else:
        for k, v in payload.items():
            print(f"{k}: {v}")
    return 0


def _cmd_special(args) -> int:
    rep = special_case_2k11(args.k)
    payload = rep.to_json()
    if args.json:
        print(json.dumps(payload, indent=1))
    else:
        for k, v in payload.items():
            print(f"{k}: {v}")
    return 0 if rep.passed else 2


def _cmd_plot(args) -> int:
    spec = PlotSpec.from_json(json.loads(Path(args.spec).read_text()))
    data = collect_plot_data(spec)
    out = Path(args.out)
    if out.suffix == ".png":
        emit_png(spec, data, str(out))
    else:
        out.write_bytes(emit_svg(spec, data))
    return 0


def _cmd_table(args) -> int:
    profile = _profile(args.profile)
    rows = []
    for d in range(1, args.dmax + 1):
        e = B.bound_E(d, args.k)
        g = genus_from_ch3(e, d, profile)
        rows.append(
            {
                "d": d,
                "ch3_max": rat_str(e),
                "genus": rat_str(g),
                "in_range": d > args.k * (args.k - 1),
            }
        )
    if args.json:
        print(json.dumps(rows, indent=1))
    else:
        print("d\tch3_max\tgenus\tin_range")
        for r in rows:
            print(f"{r['d']}\t{r['ch3_max']}\t{r['genus']}\t{int(r['in_range'])}")
    if args.figure:
        _genus_figure(rows, args.k, args.figure)
    return 0


def _genus_figure(rows, k: int, path: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ds = [r["d"] for r in rows]
    gs = [float(Fraction(r["genus"])) for r in rows]
    fig, ax = plt.subplots(figsize=(6.4, 4.0), dpi=100)
    ax.plot(ds, gs, marker="o", markersize=3, linewidth=1)
    ax.set_xlabel("degree d")
    ax.set_ylabel("max genus")
    ax.set_title(f"genus bound, surface degree k={k}")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def _cmd_profiles(args) -> int:
    ps = builtin_profiles()
    if args.json:
        print(json.dumps([p.to_json() for p in ps], indent=1))
    else:
        for p in ps:
            print(
                f"{p.name}\th3={rat_str(p.h3)}\tK={rat_str(p.canonical_coeff)}H\t"
                f"den2={p.den2}\tden3={p.den3}"
            )
    return 0


_DISPATCH = {
    "class": _cmd_class,
    "wall": _cmd_wall,
    "qdisk": _cmd_qdisk,
    "bounds": _cmd_bounds,
    "enumerate": _cmd_enumerate,
    "refute": _cmd_refute,
    "certify": _cmd_certify,
    "rangeb": _cmd_rangeb,
    "special2k11": _cmd_special,
    "plot": _cmd_plot,
    "table": _cmd_table,
    "profiles": _cmd_profiles,
}


def run(argv: list[str] | None = None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
        return _DISPATCH[args.cmd](args)
    except SystemExit_ as e:
        if e.message:
            print(e.message, file=sys.stderr)
        return e.code
    except (ValueError, KeyError, ArithmeticError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
