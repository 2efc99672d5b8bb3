"""Reading and writing the textual fan and V-complex formats.

Both formats are JSON documents with exact rational weights written as
"p/q" strings (or bare integers). Floating point is rejected outright.
Output is deterministic byte for byte: fixed key order, fixed layout,
fractions rendered in lowest terms.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from importlib import resources
from typing import Any

from .errors import ParseError, ValidationError
from .fan import WeightedFan, validate_fan, weighted_fan
from .recession import WeightedVComplex, v_polyhedron, weighted_v_complex


def _rational(value: Any, where: str) -> Fraction:
    if isinstance(value, bool):
        raise ParseError(f"{where}: expected a rational, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        sign = 1
        if text.startswith("-"):
            sign, text = -1, text[1:]
        num, slash, den = text.partition("/")
        if not num.isdigit() or (slash and not den.isdigit()):
            raise ParseError(f"{where}: {value!r} is not of the form p or p/q")
        if slash and int(den) == 0:
            raise ParseError(f"{where}: zero denominator in {value!r}")
        return Fraction(sign * int(num), int(den) if slash else 1)
    raise ParseError(f"{where}: expected \"p/q\" or an integer, got {value!r}")


def _int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{where}: expected an integer, got {value!r}")
    return value


def _int_list(value: Any, where: str) -> list[int]:
    if not isinstance(value, list):
        raise ParseError(f"{where}: expected a list, got {value!r}")
    return [_int(x, f"{where}[{k}]") for k, x in enumerate(value)]


def _load_document(text: str, where: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"{where}: line {err.lineno}, column {err.colno}: {err.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError(f"{where}: top-level value must be an object")
    return doc


def parse_fan_text(text: str, where: str = "<fan>", require_valid: bool = True) -> WeightedFan:
    doc = _load_document(text, where)
    for field in ("ambient_dim", "dim", "rays", "cones"):
        if field not in doc:
            raise ParseError(f"{where}: missing field {field!r}")
    ambient = _int(doc["ambient_dim"], f"{where}.ambient_dim")
    dim = _int(doc["dim"], f"{where}.dim")
    if not isinstance(doc["rays"], list):
        raise ParseError(f"{where}.rays: expected a list")
    rays = [_int_list(r, f"{where}.rays[{k}]") for k, r in enumerate(doc["rays"])]
    if not isinstance(doc["cones"], list):
        raise ParseError(f"{where}.cones: expected a list")
    cones = []
    for k, entry in enumerate(doc["cones"]):
        label = f"{where}.cones[{k}]"
        if not isinstance(entry, dict) or "rays" not in entry or "weight" not in entry:
            raise ParseError(f"{label}: expected an object with 'rays' and 'weight'")
        cones.append((_int_list(entry["rays"], f"{label}.rays"),
                      _rational(entry["weight"], f"{label}.weight")))
    isolated = doc.get("allow_isolated_rays", False)
    if not isinstance(isolated, bool):
        raise ParseError(f"{where}.allow_isolated_rays: expected a boolean")
    fan = weighted_fan(ambient, dim, rays, cones, allow_isolated_rays=isolated)
    if require_valid:
        report = validate_fan(fan)
        if not report.valid:
            raise ValidationError(f"{where}: " + "; ".join(report.problems))
    return fan


def parse_fan(path, require_valid: bool = True) -> WeightedFan:
    with open(path, encoding="utf-8") as handle:
        return parse_fan_text(handle.read(), where=str(path), require_valid=require_valid)


def format_fan(fan: WeightedFan) -> str:
    lines = ["{"]
    lines.append(f'  "ambient_dim": {fan.ambient_dim},')
    lines.append(f'  "dim": {fan.dim},')
    if fan.allow_isolated_rays:
        lines.append('  "allow_isolated_rays": true,')
    lines.append('  "rays": [')
    for k, ray in enumerate(fan.rays):
        comma = "," if k + 1 < len(fan.rays) else ""
        lines.append("    [" + ", ".join(str(x) for x in ray) + "]" + comma)
    lines.append("  ],")
    lines.append('  "cones": [')
    for k, cone in enumerate(fan.cones):
        comma = "," if k + 1 < len(fan.cones) else ""
        idx = ", ".join(str(i) for i in cone.rays)
        lines.append(f'    {{"rays": [{idx}], "weight": "{cone.weight}"}}{comma}')
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_v_complex_text(text: str, where: str = "<vcomplex>") -> WeightedVComplex:
    doc = _load_document(text, where)
    for field in ("ambient_dim", "dim", "cells"):
        if field not in doc:
            raise ParseError(f"{where}: missing field {field!r}")
    ambient = _int(doc["ambient_dim"], f"{where}.ambient_dim")
    dim = _int(doc["dim"], f"{where}.dim")
    if not isinstance(doc["cells"], list):
        raise ParseError(f"{where}.cells: expected a list")
    cells = []
    for k, entry in enumerate(doc["cells"]):
        label = f"{where}.cells[{k}]"
        if not isinstance(entry, dict) or "vertices" not in entry or "weight" not in entry:
            raise ParseError(f"{label}: expected an object with 'vertices', 'rays', 'weight'")
        raw_vertices = entry["vertices"]
        if not isinstance(raw_vertices, list) or not raw_vertices:
            raise ParseError(f"{label}.vertices: expected a nonempty list")
        vertices = []
        for vk, vert in enumerate(raw_vertices):
            if not isinstance(vert, list):
                raise ParseError(f"{label}.vertices[{vk}]: expected a list")
            vertices.append([_rational(x, f"{label}.vertices[{vk}][{c}]")
                             for c, x in enumerate(vert)])
        rays = [_int_list(r, f"{label}.rays[{rk}]")
                for rk, r in enumerate(entry.get("rays", []))]
        weight = _rational(entry["weight"], f"{label}.weight")
        try:
            cells.append((v_polyhedron(vertices, rays), weight))
        except ValidationError as err:
            raise ParseError(f"{label}: {err}") from None
    return weighted_v_complex(ambient, dim, cells)


def parse_v_complex(path) -> WeightedVComplex:
    with open(path, encoding="utf-8") as handle:
        return parse_v_complex_text(handle.read(), where=str(path))


def canonical_fingerprint(fan: WeightedFan) -> str:
    """Content hash over a canonical serialization: rays sorted, cone ray
    sets rewritten in the sorted-ray indexing and sorted. Two fans that
    differ only by reordering share the fingerprint."""
    order = sorted(range(len(fan.rays)), key=lambda i: fan.rays[i])
    rename = {old: new for new, old in enumerate(order)}
    rays = [list(fan.rays[i]) for i in order]
    cones = sorted((sorted(rename[i] for i in cone.rays), str(cone.weight))
                   for cone in fan.cones)
    payload = json.dumps({
        "ambient_dim": fan.ambient_dim,
        "dim": fan.dim,
        "allow_isolated_rays": fan.allow_isolated_rays,
        "rays": rays,
        "cones": [{"rays": r, "weight": w} for r, w in cones],
    }, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(payload.encode("utf-8")).hexdigest()


def bundled_fan_text(name: str = "k44.fan") -> str:
    return resources.files("tropicert").joinpath("data").joinpath(name).read_text(encoding="utf-8")
