"""JSON forms of the public types.

Points, arcs and compact partitions keep their text syntax inside JSON
payloads (`"a2"`, `"1:-4"`, `"[1:0,2:3]"`, `"1,3|2|4,5,6"`), so printed
values re-parse bit-exactly.
"""

from __future__ import annotations

import json

from .circle import Arc, CirclePoint, format_arc, format_point, parse_arc, parse_point
from .errors import ValidationError
from .noncrossing import Partition, partition
from .objects import ArcObject, Triangle, arc_object
from .oracle import ClosureReport, OracleComparison
from .tstructures import CoaislePresentation, EquivClass, TStructure


def dumps(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def arcs_to_json(arcs) -> list[str]:
    return [format_arc(a) for a in arcs]


def arc_object_to_json(obj: ArcObject) -> list[str]:
    return arcs_to_json(obj.summands)


def arc_object_from_json(data) -> ArcObject:
    if not isinstance(data, list):
        raise ValidationError("an object is a JSON array of arc strings")
    return arc_object(parse_arc(s) for s in data)


def triangle_to_json(t: Triangle) -> dict:
    return {
        "first": arc_object_to_json(t.first),
        "middle": arc_object_to_json(t.middle),
        "last": arc_object_to_json(t.last),
        "construction": t.construction,
    }


def triangle_from_json(data) -> Triangle:
    return Triangle(
        arc_object_from_json(data["first"]),
        arc_object_from_json(data["middle"]),
        arc_object_from_json(data["last"]),
        data["construction"],
    )


def partition_to_json(p: Partition) -> dict:
    return {"n": p.n, "blocks": [list(b) for b in p.blocks]}


def partition_from_json(data) -> Partition:
    try:
        return partition(int(data["n"]), data["blocks"])
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed partition JSON: {exc}")


def tstructure_to_json(ts: TStructure) -> dict:
    return {
        "n": ts.n,
        "partition": [list(b) for b in ts.partition.blocks],
        "decoration": [format_point(x) for x in ts.decoration],
    }


def tstructure_from_json(data) -> TStructure:
    try:
        n = int(data["n"])
        p = partition(n, data["partition"])
        dec = tuple(parse_point(s) for s in data["decoration"])
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed t-structure JSON: {exc}")
    return TStructure(p, dec)


def coaisle_to_json(pres: CoaislePresentation) -> dict:
    return {
        "partition": [list(b) for b in pres.partition.blocks],
        "bounds": [format_point(y) for y in pres.bounds],
    }


def equiv_class_to_json(c: EquivClass) -> dict:
    return {"partition": [list(b) for b in c.partition.blocks], "z_indices": list(c.z_indices)}


def closure_report_to_json(r: ClosureReport) -> dict:
    return {
        "arcs": [format_arc(a) for a in sorted(r.arcs, key=Arc.key)],
        "saturated_at_boundary": r.saturated_at_boundary,
    }


def comparison_to_json(c: OracleComparison) -> dict:
    return {
        "closure_in_classified": c.closure_in_classified,
        "classified_in_closure": c.classified_in_closure,
        "extra": arcs_to_json(c.extra),
        "missing": arcs_to_json(c.missing),
    }


def parse_arcs_arg(text: str) -> list[Arc]:
    """Semicolon-separated arc list, e.g. '[1:0,3:0];[2:0,4:0]'."""
    s = text.strip()
    if not s:
        return []
    return [parse_arc(part) for part in s.split(";") if part.strip()]
