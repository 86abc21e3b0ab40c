"""Command-line surface: check, report, hirzebruch, sweep, polytope.

Exit codes form a stable contract: 0 when everything agrees (or is ample,
for check), 1 for a mathematical failure (non-ample input, fan axiom
violation, disagreement between routes), 2 for unreadable or ill-formed
input and usage errors. Rationals are always printed as exact p/q strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .divisors import (
    TorusDivisor,
    divisor,
    divisor_polytope,
    generation_violations,
    ampleness_violations,
    cartier_data,
)
from .fan import fan_violations, hirzebruch_fan, standard_decomposition, validate_fan
from .lattice import Polygon, dot
from .valuation import TFlag, check_flag, trivialization_polytope
from .volume import VolumeReport, okounkov_volume_report


class DocumentError(ValueError):
    """Ill-formed instance document (wrong JSON, wrong field shapes)."""


@dataclass(frozen=True)
class InstanceDocument:
    rays: tuple[tuple[int, int], ...]
    divisor: tuple[int, ...]
    flag: TFlag | None = None
    decomposition_variant: str | None = None


def parse_instance(text: str) -> InstanceDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}") from None
    if not isinstance(raw, dict):
        raise DocumentError("document must be a JSON object")
    for key in ("rays", "divisor"):
        if key not in raw:
            raise DocumentError(f"missing field {key!r}")
    def is_int(x) -> bool:
        return type(x) is int  # bool is an int subclass, reject it

    rays = raw["rays"]
    if (not isinstance(rays, list)
            or any(not isinstance(r, list) or len(r) != 2
                   or not all(is_int(c) for c in r) for r in rays)):
        raise DocumentError("field 'rays' must be a list of integer pairs")
    coeffs = raw["divisor"]
    if not isinstance(coeffs, list) or not all(is_int(c) for c in coeffs):
        raise DocumentError("field 'divisor' must be a list of integers")
    if len(coeffs) != len(rays):
        raise DocumentError(
            f"field 'divisor' has {len(coeffs)} entries for {len(rays)} rays")
    flag = None
    if "flag" in raw and raw["flag"] is not None:
        fr = raw["flag"]
        if (not isinstance(fr, dict) or set(fr) != {"ray", "cone"}
                or not all(is_int(fr[k]) for k in ("ray", "cone"))):
            raise DocumentError("field 'flag' must be an object {\"ray\": i, \"cone\": j}")
        flag = TFlag(fr["ray"], fr["cone"])
    variant = raw.get("decomposition_variant")
    if variant is not None and not isinstance(variant, str):
        raise DocumentError("field 'decomposition_variant' must be a string")
    return InstanceDocument(
        rays=tuple((r[0], r[1]) for r in rays),
        divisor=tuple(coeffs),
        flag=flag,
        decomposition_variant=variant,
    )


def load_instance(path: str) -> InstanceDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise DocumentError(f"cannot read {path}: {e.strerror}") from None
    return parse_instance(text)


def instance_json(doc: InstanceDocument) -> str:
    out: dict = {"rays": [list(r) for r in doc.rays], "divisor": list(doc.divisor)}
    if doc.flag is not None:
        out["flag"] = {"ray": doc.flag.ray, "cone": doc.flag.cone}
    if doc.decomposition_variant is not None:
        out["decomposition_variant"] = doc.decomposition_variant
    return json.dumps(out, separators=(",", ":"))


def frac(q: Fraction | None) -> str:
    return "-" if q is None else str(Fraction(q))


# ---------------------------------------------------------------- commands


def _build(doc: InstanceDocument, out) -> TorusDivisor | None:
    """Validate the fan; on failure print violations and return None."""
    violations = fan_violations(doc.rays)
    if violations:
        print("fan: invalid", file=out)
        for v in violations:
            print(f"  {v}", file=out)
        return None
    return divisor(validate_fan(doc.rays), doc.divisor)


def cmd_check(args, out=None) -> int:
    out = out or sys.stdout
    try:
        doc = load_instance(args.path)
    except DocumentError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    D = _build(doc, out)
    if D is None:
        return 1
    print(f"fan: valid ({D.fan.n_rays} rays)", file=out)
    gen = generation_violations(D)
    print(f"globally generated: {'true' if not gen else 'false'}", file=out)
    for j, i in gen:
        h = cartier_data(D)[j]
        print(f"  cone {j}: <{h}, ray {i}> = {dot(h, D.fan.rays[i])} < {-D.coeffs[i]}", file=out)
    amp = ampleness_violations(D)
    print(f"ample: {'true' if not amp else 'false'}", file=out)
    for j, i in amp:
        h = cartier_data(D)[j]
        slack = dot(h, D.fan.rays[i]) + D.coeffs[i]
        print(f"  cone {j} vs ray {i}: slack {slack} (need > 0)", file=out)
    return 0 if not amp else 1


def _parse_flag(text: str) -> TFlag:
    try:
        i, j = (int(p) for p in text.split(","))
    except ValueError:
        raise DocumentError(f"flag must be 'ray,cone', got {text!r}") from None
    return TFlag(i, j)


def _report_dict(report: VolumeReport) -> dict:
    out: dict = {"ample": report.ample, "agree": report.agree}
    if not report.ample:
        out["diagnostics"] = list(report.diagnostics)
        return out
    out["values"] = {
        "area_polytope": frac(report.area_polytope),
        "half_self_intersection": frac(report.half_self_intersection),
        "simplex_sum": frac(report.simplex_sum),
        "symbol_sum_half": frac(report.symbol_sum_half),
        "trivialization_area": frac(report.lhs_trivialization_area),
    }
    out["self_intersection"] = report.self_intersection
    out["display_flag"] = {"ray": report.display_flag.ray, "cone": report.display_flag.cone}
    out["contributing_flags"] = [[f.ray, f.cone] for f in report.contributing_flags]
    out["per_flag"] = [
        {
            "flag": [c.flag.ray, c.flag.cone],
            "subtotal": frac(c.subtotal),
            "terms": [
                {
                    "omitted": t.omitted,
                    "sections": list(t.sections_used),
                    "matrix": [list(t.matrix[0]), list(t.matrix[1])],
                    "signed_volume": frac(t.signed_volume),
                    "residue_degree": t.residue_degree,
                }
                for t in c.terms
            ],
        }
        for c in report.per_flag
    ]
    return out


def _print_text_report(report: VolumeReport, out) -> None:
    if not report.ample:
        print("ample: false", file=out)
        for d in report.diagnostics:
            print(f"  {d}", file=out)
        return
    print(f"area(P_D)              = {frac(report.area_polytope)}", file=out)
    print(f"D.D / 2                = {frac(report.half_self_intersection)}   (D.D = {report.self_intersection})", file=out)
    print(f"simplex sum            = {frac(report.simplex_sum)}", file=out)
    print(f"symbol sum / 2         = {frac(report.symbol_sum_half)}", file=out)
    f = report.display_flag
    print(f"trivialization area    = {frac(report.lhs_trivialization_area)}   (flag ray {f.ray}, cone {f.cone})", file=out)
    cf = [f"(ray {c.flag.ray}, cone {c.flag.cone})" for c in report.per_flag if c.subtotal != 0]
    print(f"contributing flags     : {', '.join(cf) if cf else 'none'}", file=out)
    for c in report.per_flag:
        print(f"flag (ray {c.flag.ray}, cone {c.flag.cone}): subtotal {frac(c.subtotal)}", file=out)
        for t in c.terms:
            print(f"    omit {t.omitted}: sections {t.sections_used} "
                  f"matrix {t.matrix} volume {frac(t.signed_volume)}", file=out)
    print(f"agree: {'true' if report.agree else 'false'}", file=out)


def cmd_report(args, out=None) -> int:
    out = out or sys.stdout
    try:
        doc = load_instance(args.path)
        display = _parse_flag(args.flag) if args.flag else (doc.flag or TFlag(0, 0))
    except DocumentError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    D = _build(doc, out)
    if D is None:
        return 1
    variant = args.decomposition or doc.decomposition_variant or "default"
    try:
        dec = standard_decomposition(D.fan, variant)
        check_flag(D.fan, display)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    report = okounkov_volume_report(D, dec, display)
    if args.format == "json":
        print(json.dumps(_report_dict(report), indent=2), file=out)
    elif args.format == "csv":
        print("area,dsq,simplex_sum,symbol_sum,triv_area,agree", file=out)
        print(",".join([
            frac(report.area_polytope),
            "-" if report.self_intersection is None else str(report.self_intersection),
            frac(report.simplex_sum),
            frac(report.symbol_sum_half),
            frac(report.lhs_trivialization_area),
            "true" if report.agree else "false",
        ]), file=out)
    else:
        _print_text_report(report, out)
    if not report.ample:
        return 1
    return 0 if report.agree else 1


def cmd_hirzebruch(args, out=None) -> int:
    out = out or sys.stdout
    if args.l < 1:
        print("error: --l must be >= 1", file=sys.stderr)
        return 2
    fan = hirzebruch_fan(args.l)
    doc = InstanceDocument(rays=fan.rays, divisor=(0, args.a, args.b, 0))
    text = instance_json(doc)
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=out)
    return 0


def _parse_range(text: str) -> range:
    parts = text.split("..")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise DocumentError(f"range must be 'K' or 'K1..K2', got {text!r}") from None
    if hi < lo:
        raise DocumentError(f"empty range {text!r}")
    return range(lo, hi + 1)


def cmd_sweep(args, out=None) -> int:
    out = out or sys.stdout
    try:
        ls = _parse_range(args.l)
        As = _parse_range(args.a)
        extras = _parse_range(args.b_extra)
        if ls.start < 1:
            raise DocumentError("--l values must be >= 1")
    except DocumentError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    variant = args.decomposition or "default"
    rows = []
    all_agree = True
    for l in ls:
        fan = hirzebruch_fan(l)
        try:
            dec = standard_decomposition(fan, variant)
        except ValueError as e:
            print(f"error: {e}", file=sys.stderr)
            return 2
        for a in As:
            for extra in extras:
                b = l * a + extra
                report = okounkov_volume_report(divisor(fan, (0, a, b, 0)), dec)
                agree = report.agree
                all_agree = all_agree and agree
                rows.append((l, a, b, frac(report.area_polytope),
                             report.self_intersection, frac(report.simplex_sum),
                             frac(report.symbol_sum_half), "true" if agree else "false"))
    rows.sort(key=lambda r: (r[0], r[1], r[2]))
    lines = ["l,a,b,area,dsq,simplex_sum,symbol_sum,agree"]
    lines += [f"{l},{a},{b},{ar},{dsq},{ss},{ys},{ag}" for l, a, b, ar, dsq, ss, ys, ag in rows]
    text = "\n".join(lines) + "\n"
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0 if all_agree else 1


# ------------------------------------------------------------- polytope svg

_SCALE = 40


def _svg_polygon(poly: Polygon, style: str) -> str:
    pts = [(int(x) * _SCALE, -int(y) * _SCALE) for x, y in poly.vertices]
    if len(pts) == 1:
        (x, y), = pts
        return f'<circle cx="{x}" cy="{y}" r="5" {style}/>'
    if len(pts) == 2:
        (x0, y0), (x1, y1) = pts
        return f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke-width="3" {style}/>'
    attr = " ".join(f"{x},{y}" for x, y in pts)
    return f'<polygon points="{attr}" {style}/>'


def polytope_svg(D: TorusDivisor, flag: TFlag | None = None) -> str:
    """SVG drawing of the divisor polytope, optionally with a flag's image.

    All polytope vertices in scope are lattice points, so coordinates are
    integers times a fixed pixel scale: nothing is rounded.
    """
    polys = [(divisor_polytope(D), 'fill="#c8dcff" stroke="#1f4e9c" fill-opacity="0.7"')]
    caption = f"area = {frac(polys[0][0].area)}"
    if flag is not None:
        tp = trivialization_polytope(D, flag)
        polys.append((tp, 'fill="#ffd9b0" stroke="#b35900" fill-opacity="0.5"'))
        caption += (f"; flag (ray {flag.ray}, cone {flag.cone}) image area = {frac(tp.area)}"
                    f" ({'equal' if tp.area == polys[0][0].area else 'UNEQUAL'})")
    xs = [int(x) for poly, _ in polys for x, _ in poly.vertices]
    ys = [int(y) for poly, _ in polys for _, y in poly.vertices]
    x0, x1 = (min(xs) - 1) * _SCALE, (max(xs) + 1) * _SCALE
    y0, y1 = -(max(ys) + 1) * _SCALE, -(min(ys) - 1) * _SCALE
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x0} {y0} {x1 - x0} {(y1 - y0) + _SCALE}">',
        f'<rect x="{x0}" y="{y0}" width="{x1 - x0}" height="{y1 - y0}" fill="white"/>',
    ]
    for poly, style in polys:
        parts.append(_svg_polygon(poly, style))
        for x, y in poly.vertices:
            parts.append(f'<circle cx="{int(x) * _SCALE}" cy="{-int(y) * _SCALE}" r="3" fill="black"/>')
    parts.append(f'<text x="{x0 + 5}" y="{y1 + _SCALE - 10}" font-size="16">{caption}</text>')
    parts.append("</svg>")
    return "\n".join(parts)


def cmd_polytope(args, out=None) -> int:
    out = out or sys.stdout
    try:
        doc = load_instance(args.path)
        flag = _parse_flag(args.flag) if args.flag else doc.flag
    except DocumentError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    D = _build(doc, out)
    if D is None:
        return 1
    try:
        if flag is not None:
            check_flag(D.fan, flag)
        svg = polytope_svg(D, flag)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    with open(args.svg, "w", encoding="utf-8") as fh:
        fh.write(svg + "\n")
    return 0


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricvol",
        description="Exact volume certification for ample divisors on smooth complete toric surfaces.")
    parser.add_argument(
        "--decomposition", default=None, metavar="VARIANT",
        help="orbit decomposition: default | successor | generic-at=K")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a fan+divisor document, test positivity")
    p.add_argument("path")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("report", help="compute the four volume routes and verify agreement")
    p.add_argument("path")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--flag", default=None, metavar="RAY,CONE",
                   help="display flag for the trivialization polytope")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("hirzebruch", help="emit an instance document for the ruled-surface family")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--emit", default=None, metavar="PATH")
    p.set_defaults(func=cmd_hirzebruch)

    p = sub.add_parser("sweep", help="verify agreement over a parameter grid, emit CSV")
    p.add_argument("--l", required=True, metavar="K or K1..K2")
    p.add_argument("--a", required=True, metavar="K or K1..K2")
    p.add_argument("--b-extra", required=True, metavar="K or K1..K2",
                   help="b = l*a + extra for each extra in the range")
    p.add_argument("--csv", default=None, metavar="PATH")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("polytope", help="render the divisor polytope as SVG")
    p.add_argument("path")
    p.add_argument("--svg", required=True, metavar="PATH")
    p.add_argument("--flag", default=None, metavar="RAY,CONE")
    p.set_defaults(func=cmd_polytope)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
