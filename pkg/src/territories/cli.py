"""Command-line entry point with JSON-first output.

Results go to stdout (or ``--out``); diagnostics go to stderr.  Exit code
0 means success, 1 a domain error (reported as a structured JSON object
on stderr), and 2 a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import ConductanceVector, Grading, parse_key, CONST
from .branches import (
    BranchSplit,
    contract,
    extract_gluing,
    isom_hilb_data,
    join,
    restrict,
    stratum_label,
)
from .charts import based_equations, chart_equations, random_spine_point, spine, spine_intersection
from .errors import TerritoryError
from .limits import (
    degenerate_to_partition,
    fixed_points,
    gamma_limit,
    phi_a_limit,
    stratum_realizable,
    t_fix,
)
from .monoids import enumerate_monoids
from .points import SubalgebraPoint, point_check_report
from .smoothability import map_to_csv, map_to_svg, nonsmoothable_exists, smoothability_map


def _parse_c(text: str) -> ConductanceVector:
    try:
        return ConductanceVector([int(x) for x in text.split(",") if x != ""])
    except ValueError as exc:
        raise UsageError(f"bad conductance vector {text!r}: {exc}")


def _parse_ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x != ""]
    except ValueError as exc:
        raise UsageError(f"bad integer list {text!r}: {exc}")


def _parse_chart(text: str):
    try:
        keys = [parse_key(x) for x in text.split(",") if x != ""]
    except ValueError as exc:
        raise UsageError(f"bad chart monomials {text!r}: {exc}")
    if any(k is CONST for k in keys):
        raise UsageError("the constant cannot be a chart pivot")
    return keys


def _parse_split(text: str, ambient: ConductanceVector) -> BranchSplit:
    inside = text.split("/", 1)[0]
    return BranchSplit.of(ambient, _parse_ints(inside))


def _load_point(path: str) -> SubalgebraPoint:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}")
    return SubalgebraPoint.from_json(data)


class UsageError(Exception):
    pass


def _emit(text: str, args) -> None:
    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_json(data, args) -> None:
    _emit(json.dumps(data, indent=2, sort_keys=True), args)


# -- command handlers --------------------------------------------------------


def _cmd_territory_equations(args) -> int:
    ambient = _parse_c(args.c)
    ideal = chart_equations(ambient, args.g, _parse_chart(args.chart))
    if args.format == "text":
        _emit("\n".join(g.text() for g in ideal.generators) or "0 = 0 (empty ideal)", args)
    else:
        _emit_json(ideal.to_json(), args)
    return 0


def _cmd_territory_based(args) -> int:
    ambient = _parse_c(args.c)
    ideal = based_equations(ambient, args.g)
    if args.format == "text":
        _emit("\n".join(g.text() for g in ideal.generators) or "0 = 0 (empty ideal)", args)
    else:
        _emit_json(ideal.to_json(), args)
    return 0


def _cmd_point_check(args) -> int:
    point = _load_point(args.file)
    grading = Grading(_parse_ints(args.weights)) if args.weights else None
    report = point_check_report(point, grading)
    report["point"] = point.to_json()
    if args.format == "text":
        lines = [
            f"ambient c = {report['c']}",
            f"genus {report['genus']}, delta {report['delta']}, rank {report['rank']}",
            f"exact conductances: {report['exact']} (per branch {report['exact_per_branch']})",
            f"window: {report['window']}",
            f"monomial: {report['monomial']}, partition: {report['partition']}",
            f"vanishing (weights {report['grading']}): {report['vanishing']}",
        ]
        if "gorenstein" in report:
            lines.append(f"gorenstein: {report['gorenstein']}")
        _emit("\n".join(lines), args)
    else:
        _emit_json(report, args)
    return 0


def _cmd_point_limit(args) -> int:
    point = _load_point(args.file)
    grading = Grading(_parse_ints(args.weights))
    _emit_json(gamma_limit(point, grading).to_json(), args)
    return 0


def _cmd_point_tfix(args) -> int:
    _emit_json(t_fix(_load_point(args.file)).to_json(), args)
    return 0


def _cmd_point_phi_limit(args) -> int:
    _emit_json(phi_a_limit(_load_point(args.file)).to_json(), args)
    return 0


def _cmd_point_degenerate(args) -> int:
    chain = degenerate_to_partition(_load_point(args.file))
    if args.dot:
        Path(args.dot).write_text(chain.to_dot())
    if args.format == "dot":
        _emit(chain.to_dot(), args)
    else:
        _emit_json(chain.to_json(), args)
    return 0


def _cmd_point_restrict(args) -> int:
    point = _load_point(args.file)
    _emit_json(restrict(point, _parse_ints(args.branches)).to_json(), args)
    return 0


def _cmd_point_contract(args) -> int:
    point = _load_point(args.file)
    _emit_json(contract(point, _parse_ints(args.branches)).to_json(), args)
    return 0


def _cmd_point_join(args) -> int:
    points = [_load_point(p) for p in args.files]
    parts = []
    start = 1
    for p in points:
        parts.append(list(range(start, start + p.ambient.m)))
        start += p.ambient.m
    _emit_json(join(points, parts).to_json(), args)
    return 0


def _cmd_point_gluing(args) -> int:
    point = _load_point(args.file)
    split = _parse_split(args.split, point.ambient)
    label = stratum_label(point, split)
    inside, outside, hom = extract_gluing(point, split)
    data = isom_hilb_data(point, split.inside, split.outside)
    _emit_json(
        {
            "label": {"g_inside": label.g_inside, "g_outside": label.g_outside},
            "inside": inside.to_json(),
            "outside": outside.to_json(),
            "phi": hom.to_json(),
            "isom_hilb": data.to_json(),
        },
        args,
    )
    return 0


def _cmd_point_truncate(args) -> int:
    point = _load_point(args.file)
    smaller = _parse_c(args.c)
    image = point.truncate(smaller)
    if image is None:
        _emit_json({"in_image": False}, args)
    else:
        _emit_json({"in_image": True, "point": image.to_json()}, args)
    return 0


def _cmd_point_lift(args) -> int:
    point = _load_point(args.file)
    _emit_json(point.lift(_parse_c(args.c)).to_json(), args)
    return 0


def _cmd_monoids(args) -> int:
    monoids = enumerate_monoids(args.genus, args.conductor_max)
    _emit_json(
        [
            {"gaps": list(mo.gaps), "genus": mo.genus, "conductor": mo.conductor}
            for mo in monoids
        ],
        args,
    )
    return 0


def _cmd_fixed_points(args) -> int:
    ambient = _parse_c(args.c)
    _emit_json([p.to_json() for p in fixed_points(ambient, args.g)], args)
    return 0


def _cmd_stratum(args) -> int:
    ambient = _parse_c(args.c)
    witness = stratum_realizable(ambient, _parse_ints(args.ks), args.inclusive_boundary)
    if witness is None:
        _emit_json({"realizable": False}, args)
    else:
        _emit_json(
            {"realizable": True, "witness": witness.to_json(), "point": witness.point().to_json()},
            args,
        )
    return 0


def _cmd_spine_dim(args) -> int:
    _emit_json(spine(_parse_c(args.c), args.g).to_json(), args)
    return 0


def _cmd_spine_intersect(args) -> int:
    ambient = _parse_c(args.c)
    vectors = [_parse_c(v) for v in args.vectors]
    _emit_json(spine_intersection(ambient, vectors, args.g).to_json(), args)
    return 0


def _cmd_spine_sample(args) -> int:
    point = random_spine_point(_parse_c(args.c), args.g, args.seed)
    _emit_json(point.to_json(), args)
    return 0


def _cmd_smooth_check(args) -> int:
    _emit_json(nonsmoothable_exists(args.g, args.m).to_json(), args)
    return 0


def _cmd_smooth_map(args) -> int:
    verdicts = smoothability_map(args.gmax, args.mmax)
    wrote = False
    if args.csv:
        Path(args.csv).write_text(map_to_csv(verdicts))
        wrote = True
    if args.svg:
        Path(args.svg).write_text(map_to_svg(verdicts))
        wrote = True
    if args.format == "svg":
        _emit(map_to_svg(verdicts), args)
    elif args.format == "json":
        _emit_json([v.to_json() for v in verdicts], args)
    elif not wrote or args.format == "csv":
        _emit(map_to_csv(verdicts), args)
    return 0


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="territories",
        description="Exact computations with territories of reduced curve singularities.",
    )
    sub = parser.add_subparsers(dest="group", required=True)

    def common(p, formats=("json", "text")):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", help="write the result to this path instead of stdout")

    territory = sub.add_parser("territory", help="chart and based equations")
    tsub = territory.add_subparsers(dest="action", required=True)
    eq = tsub.add_parser("equations")
    eq.add_argument("--c", required=True)
    eq.add_argument("--g", type=int, required=True)
    eq.add_argument("--chart", required=True, help="comma-separated pivot monomials, e.g. t1,t2^2")
    common(eq)
    eq.set_defaults(func=_cmd_territory_equations)
    based = tsub.add_parser("based")
    based.add_argument("--c", required=True)
    based.add_argument("--g", type=int, required=True)
    common(based)
    based.set_defaults(func=_cmd_territory_based)

    point = sub.add_parser("point", help="operations on stored points")
    psub = point.add_subparsers(dest="action", required=True)

    def point_cmd(name, func):
        p = psub.add_parser(name)
        p.add_argument("--file", required=True)
        common(p, formats=("json", "text") if name != "degenerate" else ("json", "dot"))
        p.set_defaults(func=func)
        return p

    check = point_cmd("check", _cmd_point_check)
    check.add_argument("--weights", help="grading weights for the vanishing sequence")
    limit = point_cmd("limit", _cmd_point_limit)
    limit.add_argument("--weights", required=True)
    point_cmd("tfix", _cmd_point_tfix)
    point_cmd("phi-limit", _cmd_point_phi_limit)
    degen = point_cmd("degenerate", _cmd_point_degenerate)
    degen.add_argument("--dot", help="also write a DOT digraph of the chain here")
    rstr = point_cmd("restrict", _cmd_point_restrict)
    rstr.add_argument("--branches", required=True)
    ctr = point_cmd("contract", _cmd_point_contract)
    ctr.add_argument("--branches", required=True)
    jn = psub.add_parser("join")
    jn.add_argument("--files", nargs="+", required=True)
    common(jn)
    jn.set_defaults(func=_cmd_point_join)
    glu = point_cmd("gluing", _cmd_point_gluing)
    glu.add_argument("--split", required=True, help="inside branches, e.g. 1 or 1,3")
    trunc = point_cmd("truncate", _cmd_point_truncate)
    trunc.add_argument("--c", required=True)
    lift = point_cmd("lift", _cmd_point_lift)
    lift.add_argument("--c", required=True)

    monoids = sub.add_parser("monoids", help="numerical monoid enumeration")
    monoids.add_argument("--genus", type=int, required=True)
    monoids.add_argument("--conductor-max", type=int, required=True)
    common(monoids)
    monoids.set_defaults(func=_cmd_monoids)

    fixed = sub.add_parser("fixed-points", help="torus-fixed points of a territory")
    fixed.add_argument("--c", required=True)
    fixed.add_argument("--g", type=int, required=True)
    common(fixed)
    fixed.set_defaults(func=_cmd_fixed_points)

    stratum = sub.add_parser("stratum", help="vanishing-stratum realizability")
    stratum.add_argument("--c", required=True)
    stratum.add_argument("--ks", required=True, help="k_1,k_2,... of the sequence")
    stratum.add_argument("--inclusive-boundary", action="store_true")
    common(stratum)
    stratum.set_defaults(func=_cmd_stratum)

    spine_p = sub.add_parser("spine", help="spine arithmetic and sampling")
    ssub = spine_p.add_subparsers(dest="action", required=True)
    sdim = ssub.add_parser("dim")
    sdim.add_argument("--c", required=True)
    sdim.add_argument("--g", type=int, required=True)
    common(sdim)
    sdim.set_defaults(func=_cmd_spine_dim)
    sint = ssub.add_parser("intersect")
    sint.add_argument("--c", required=True, help="ambient conductance vector")
    sint.add_argument("--g", type=int, required=True)
    sint.add_argument("--vectors", nargs="+", required=True)
    common(sint)
    sint.set_defaults(func=_cmd_spine_intersect)
    ssam = ssub.add_parser("sample")
    ssam.add_argument("--c", required=True)
    ssam.add_argument("--g", type=int, required=True)
    ssam.add_argument("--seed", type=int, default=0)
    common(ssam)
    ssam.set_defaults(func=_cmd_spine_sample)

    smooth = sub.add_parser("smoothability", help="non-smoothability verdicts")
    msub = smooth.add_subparsers(dest="action", required=True)
    mc = msub.add_parser("check")
    mc.add_argument("--g", type=int, required=True)
    mc.add_argument("--m", type=int, required=True)
    common(mc)
    mc.set_defaults(func=_cmd_smooth_check)
    mm = msub.add_parser("map")
    mm.add_argument("--gmax", type=int, required=True)
    mm.add_argument("--mmax", type=int, required=True)
    mm.add_argument("--csv", help="write the CSV grid here")
    mm.add_argument("--svg", help="write the SVG scatter here")
    common(mm, formats=("csv", "json", "svg"))
    mm.set_defaults(func=_cmd_smooth_map)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except TerritoryError as exc:
        print(json.dumps(exc.as_dict(), sort_keys=True), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
