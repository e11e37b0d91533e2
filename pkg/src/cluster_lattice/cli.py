"""Command-line surface.

Subcommands: nc, nnc, kreweras, thick, tstruct, lattice, oracle, render,
verify.  Outputs are deterministic; --json switches to machine-readable
payloads using the same point/arc/partition text syntax as the CLI
arguments.  Exit codes: 0 success, 2 validation error, 3 guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import acceptance, render, serial
from .circle import parse_arc
from .errors import GuardExceeded, ValidationError
from .noncrossing import (
    Partition,
    catalan,
    kreweras,
    kreweras_inverse,
    nc_enumerate,
    nnc_count,
    nnc_enumerate,
    parse_partition,
    rotate,
)
from .oracle import Window, compare_with_classification, window_aisle_closure, window_thick_closure
from .thick import ThickSubcat, thick_contains, thick_generated, thick_join, thick_leq, thick_meet
from .tslattice import hasse_export, meet_is_intersection_check, ts_join, ts_leq, ts_meet
from .tstructures import (
    aisle_contains,
    aisle_generated,
    approx_triangle,
    coaisle_contains,
    coaisle_presentation,
    equiv_class,
    heart,
)


def _print(s: str = "") -> None:
    sys.stdout.write(s + "\n")


def _emit_json(obj) -> None:
    _print(serial.dumps(obj))


def _infer_n(explicit, *objects) -> int:
    if explicit:
        return explicit
    best = 0
    for obj in objects:
        if obj is None:
            continue
        if isinstance(obj, Partition):
            best = max(best, max((x for b in obj.blocks for x in b), default=0))
        else:
            for a in obj:
                best = max(best, a.lo.interval, a.hi.interval)
    if best < 1:
        raise ValidationError("cannot infer n; pass --n")
    return best


def _parse_ts(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid t-structure JSON: {exc}")
    return serial.tstructure_from_json(data)


def _cmd_nc(args) -> int:
    if args.action == "count":
        values = [p for p in nc_enumerate(args.n)]
        result = len(values)
        if args.json:
            _emit_json({"n": args.n, "count": result, "catalan": catalan(args.n)})
        else:
            _print(str(result))
    else:
        for p in nc_enumerate(args.n):
            _print(serial.dumps(serial.partition_to_json(p)) if args.json else str(p))
    return 0


def _cmd_nnc(args) -> int:
    if args.action == "count":
        if args.json:
            _emit_json({"n": args.n, "count": nnc_count(args.n)})
        else:
            _print(str(nnc_count(args.n)))
    else:
        for p in nnc_enumerate(args.n):
            _emit_json(serial.partition_to_json(p)) if args.json else _print(str(p))
    return 0


def _cmd_kreweras(args) -> int:
    p = parse_partition(args.p, _infer_n(args.n, parse_partition(args.p, 10**6)))
    k = kreweras(p)
    if args.twice:
        kk = kreweras(k)
        if kk != rotate(p, 1):
            raise AssertionError("double complement does not equal the clockwise rotation")
        if args.json:
            _emit_json({"complement": str(k), "twice": str(kk), "rotation_check": "OK"})
        else:
            _print(str(kk))
            _print("rotation assertion OK")
    elif args.inverse:
        _print(str(kreweras_inverse(p)))
    else:
        _emit_json(serial.partition_to_json(k)) if args.json else _print(str(k))
    return 0


def _cmd_thick(args) -> int:
    if args.action == "gen":
        arcs = serial.parse_arcs_arg(args.arcs)
        t = thick_generated(arcs, _infer_n(args.n, arcs))
        _emit_json(serial.partition_to_json(t.partition)) if args.json else _print(str(t.partition))
        return 0
    if args.action == "member":
        arc = parse_arc(args.arc)
        praw = parse_partition(args.partition, 10**6)
        n = _infer_n(args.n, praw, [arc])
        t = ThickSubcat(parse_partition(args.partition, n))
        res = thick_contains(t, arc)
        _emit_json({"member": res}) if args.json else _print("true" if res else "false")
        return 0
    n = args.n or max(
        _infer_n(None, parse_partition(args.p1, 10**6)), _infer_n(None, parse_partition(args.p2, 10**6))
    )
    t1, t2 = ThickSubcat(parse_partition(args.p1, n)), ThickSubcat(parse_partition(args.p2, n))
    if args.action == "leq":
        res = thick_leq(t1, t2)
        _emit_json({"leq": res}) if args.json else _print("true" if res else "false")
    else:
        out = thick_meet(t1, t2) if args.action == "meet" else thick_join(t1, t2)
        _emit_json(serial.partition_to_json(out.partition)) if args.json else _print(str(out.partition))
    return 0


def _cmd_tstruct(args) -> int:
    if args.action == "gen":
        arcs = serial.parse_arcs_arg(args.arcs)
        ts = aisle_generated(arcs, _infer_n(args.n, arcs))
        _emit_json(serial.tstructure_to_json(ts))
        return 0
    ts = _parse_ts(args.ts)
    if args.action == "member":
        arc = parse_arc(args.arc)
        res = aisle_contains(ts, arc)
        co = coaisle_contains(ts, arc)
        if args.json:
            _emit_json({"aisle": res, "coaisle": co})
        else:
            _print(f"aisle: {'true' if res else 'false'}  coaisle: {'true' if co else 'false'}")
    elif args.action == "coaisle":
        _emit_json(serial.coaisle_to_json(coaisle_presentation(ts)))
    elif args.action == "heart":
        _emit_json(serial.arcs_to_json(heart(ts)))
    elif args.action == "approx":
        tri = approx_triangle(ts, parse_arc(args.arc))
        _emit_json(serial.triangle_to_json(tri))
    elif args.action == "classify":
        _emit_json(serial.equiv_class_to_json(equiv_class(ts)))
    else:
        other = _parse_ts(args.other)
        if args.action == "leq":
            res = ts_leq(ts, other)
            _emit_json({"leq": res}) if args.json else _print("true" if res else "false")
            return 0
        out = ts_meet(ts, other) if args.action == "meet" else ts_join(ts, other)
        if args.action == "meet" and args.check_arcs:
            bad = meet_is_intersection_check(ts, other, serial.parse_arcs_arg(args.check_arcs))
            if bad:
                raise AssertionError(f"meet/intersection mismatch at {bad[0]}")
        _emit_json(serial.tstructure_to_json(out))
    return 0


def _cmd_lattice(args) -> int:
    if args.what == "nc":
        elements = list(nc_enumerate(args.n))
    else:
        elements = list(nnc_enumerate(args.n))
    graph = hasse_export(elements)
    if args.format == "dot":
        sys.stdout.write(graph.to_dot())
    else:
        _emit_json(graph.to_json_obj())
    return 0


def _cmd_oracle(args) -> int:
    arcs = serial.parse_arcs_arg(args.arcs)
    w = Window(args.W)
    if args.action == "close":
        rep = window_aisle_closure(arcs, w, args.n) if args.mode == "aisle" else window_thick_closure(arcs, w, args.n)
        _emit_json(serial.closure_report_to_json(rep))
    else:
        cmpres = compare_with_classification(arcs, w, args.n, args.mode)
        _emit_json(serial.comparison_to_json(cmpres))
        return 0 if cmpres.agrees else 1
    return 0


def _cmd_render(args) -> int:
    spec = render.RenderSpec(format=args.format, annotate=args.annotate, size=args.size)
    if args.what == "hasse":
        elements = list(nc_enumerate(args.n)) if args.source == "nc" else list(nnc_enumerate(args.n))
        graph = hasse_export(elements)
        if spec.format == "dot":
            sys.stdout.write(graph.to_dot())
        elif spec.format == "json":
            _emit_json(graph.to_json_obj())
        else:
            raise ValidationError("hasse diagrams render as dot or json")
        return 0
    if args.what == "arcs":
        arcs = serial.parse_arcs_arg(args.arcs)
        n = _infer_n(args.n, arcs) if arcs else args.n
        if not n:
            raise ValidationError("rendering an empty arc set needs --n")
        if spec.format == "json":
            _emit_json({"n": n, "arcs": serial.arcs_to_json(sorted(arcs, key=lambda a: a.key()))})
        elif spec.format == "svg":
            sys.stdout.write(render.render_arcs_svg(n, arcs, spec))
        else:
            raise ValidationError("arc sets render as svg or json")
        return 0
    if args.what == "thick":
        praw = parse_partition(args.p, 10**6)
        n = _infer_n(args.n, praw)
        p = parse_partition(args.p, n)
        if spec.format == "json":
            _emit_json(serial.partition_to_json(p))
        elif spec.format == "svg":
            sys.stdout.write(render.render_thick_svg(n, p.blocks, spec))
        else:
            raise ValidationError("thick regions render as svg or json")
        return 0
    ts = _parse_ts(args.ts)
    if args.what == "heart":
        arcs = heart(ts)
        if spec.format == "json":
            _emit_json(serial.arcs_to_json(arcs))
        elif spec.format == "svg":
            sys.stdout.write(render.render_arcs_svg(ts.n, arcs, spec))
        else:
            raise ValidationError("hearts render as svg or json")
        return 0
    if spec.format == "json":
        _emit_json(serial.tstructure_to_json(ts))
        return 0
    if spec.format != "svg":
        raise ValidationError("aisles and coaisles render as svg or json")
    out = render.render_aisle_svg(ts, spec) if args.what == "aisle" else render.render_coaisle_svg(ts, spec)
    sys.stdout.write(out)
    return 0


def _cmd_verify(args) -> int:
    results = acceptance.run(criterion=args.criterion, seed=args.seed)
    ok = True
    for r in results:
        ok &= r.ok
        if args.json:
            _emit_json({"criterion": r.number, "name": r.name, "pass": r.ok, "detail": r.detail})
        else:
            _print(f"{'PASS' if r.ok else 'FAIL'} criterion {r.number}: {r.name} — {r.detail}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cluster-lattice", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    for name, fn in (("nc", _cmd_nc), ("nnc", _cmd_nnc)):
        p = sub.add_parser(name, help=f"{name.upper()} partition enumeration and counting")
        p.add_argument("action", choices=["list", "count"])
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--json", action="store_true")
        p.set_defaults(fn=fn)

    p = sub.add_parser("kreweras", help="Kreweras complement of an exhaustive partition")
    p.add_argument("--p", required=True, help="compact partition, e.g. '1,3|2|4,5,6'")
    p.add_argument("--n", type=int)
    p.add_argument("--twice", action="store_true", help="apply twice and assert the rotation law")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_kreweras)

    p = sub.add_parser("thick", help="thick subcategories")
    p.add_argument("action", choices=["gen", "member", "leq", "meet", "join"])
    p.add_argument("--n", type=int)
    p.add_argument("--arcs", default="", help="semicolon-separated arcs for gen")
    p.add_argument("--partition", default="", help="compact partition for member")
    p.add_argument("--arc", default="", help="arc for member")
    p.add_argument("--p1", default="")
    p.add_argument("--p2", default="")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_thick)

    p = sub.add_parser("tstruct", help="t-structure queries")
    p.add_argument("action", choices=["member", "coaisle", "heart", "approx", "meet", "join", "leq", "gen", "classify"])
    p.add_argument("--ts", default="", help="t-structure JSON")
    p.add_argument("--other", default="", help="second t-structure JSON for meet/join/leq")
    p.add_argument("--arc", default="")
    p.add_argument("--arcs", default="", help="arcs for gen")
    p.add_argument("--check-arcs", default="", help="arcs on which meet is checked against intersection")
    p.add_argument("--n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_tstruct)

    p = sub.add_parser("lattice", help="lattice exports")
    p.add_argument("action", choices=["hasse"])
    p.add_argument("--what", choices=["nc", "nnc"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.set_defaults(fn=_cmd_lattice)

    p = sub.add_parser("oracle", help="window closure oracles")
    p.add_argument("action", choices=["close", "compare"])
    p.add_argument("--mode", choices=["aisle", "thick"], default="aisle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--W", type=int, required=True)
    p.add_argument("--arcs", default="")
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("render", help="SVG chord diagrams and DOT lattices")
    p.add_argument("what", choices=["arcs", "thick", "aisle", "coaisle", "heart", "hasse"])
    p.add_argument("--format", choices=["svg", "dot", "json"], default="svg")
    p.add_argument("--n", type=int)
    p.add_argument("--p", default="", help="compact partition for thick regions")
    p.add_argument("--ts", default="", help="t-structure JSON")
    p.add_argument("--arcs", default="")
    p.add_argument("--source", choices=["nc", "nnc"], default="nc", help="element family for hasse")
    p.add_argument("--annotate", action="store_true")
    p.add_argument("--size", type=int, default=480)
    p.set_defaults(fn=_cmd_render)

    p = sub.add_parser("verify", help="run the acceptance suite")
    p.add_argument("--criterion", type=int, default=None, help="run a single criterion 1..8")
    p.add_argument("--seed", type=int, default=20250810)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return 3
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
