"""JSON documents, canonical short forms, and DOT export.

The datum document is the single interchange format: algebra tag, a list
of real-root multiplicities, and the imaginary partition.  A polytope
document wraps two datum documents with the derived weight and verdict.
Parsing is strict: unknown fields, zero multiplicities, duplicate roots
and unsorted partitions are all rejected, so parse and serialize are
mutually inverse on everything the tool emits.
"""

from __future__ import annotations

import json
from typing import Any

from .crystal import CrystalGraph
from .lusztig import LusztigDatum, datum, weight
from .polytope import DecoratedPolytope, MVVerdict, is_mv, vertices
from .roots import FAMILIES, LOW, Algebra

__all__ = [
    "DocumentError",
    "parse_datum",
    "datum_to_obj",
    "parse_polytope",
    "polytope_to_obj",
    "short_form",
    "graph_to_dot",
    "dumps",
]

_ALGEBRAS = {kind.value: kind for kind in Algebra}


class DocumentError(ValueError):
    """The input does not conform to the document schema."""


def dumps(obj: Any) -> str:
    """Deterministic JSON rendering used by every command."""
    return json.dumps(obj, indent=2) + "\n"


def _require_keys(obj: dict, required: tuple[str, ...], optional: tuple[str, ...], what: str) -> None:
    for key in required:
        if key not in obj:
            raise DocumentError(f"{what} is missing the {key!r} field")
    for key in obj:
        if key not in required and key not in optional:
            raise DocumentError(f"{what} has unknown field {key!r}")


def parse_datum(obj: Any) -> LusztigDatum:
    """Datum document -> LusztigDatum, validating every field."""
    if not isinstance(obj, dict):
        raise DocumentError("datum document must be a JSON object")
    _require_keys(obj, ("algebra",), ("real", "delta"), "datum document")
    tag = obj["algebra"]
    kind = _ALGEBRAS.get(tag)
    if kind is None:
        raise DocumentError(
            f"unknown algebra {tag!r}, expected one of {sorted(_ALGEBRAS)}"
        )
    entries: dict[tuple[str, int], int] = {}
    real = obj.get("real", [])
    if not isinstance(real, list):
        raise DocumentError("'real' must be a list")
    for item in real:
        if not isinstance(item, dict):
            raise DocumentError("each real entry must be an object")
        _require_keys(item, ("family", "k", "mult"), (), "real entry")
        family, k, mult = item["family"], item["k"], item["mult"]
        if family not in FAMILIES:
            raise DocumentError(f"unknown family {family!r}")
        if not isinstance(k, int) or isinstance(k, bool) or k < 1:
            raise DocumentError(f"ladder index must be an integer >= 1, got {k!r}")
        if not isinstance(mult, int) or isinstance(mult, bool) or mult < 1:
            raise DocumentError(f"multiplicity must be an integer >= 1, got {mult!r}")
        if (family, k) in entries:
            raise DocumentError(f"duplicate real entry for ({family}, {k})")
        entries[(family, k)] = mult
    parts = obj.get("delta", [])
    if not isinstance(parts, list):
        raise DocumentError("'delta' must be a list")
    for i, part in enumerate(parts):
        if not isinstance(part, int) or isinstance(part, bool) or part < 1:
            raise DocumentError(f"partition parts must be integers >= 1, got {part!r}")
        if i and parts[i - 1] < part:
            raise DocumentError(f"partition must be weakly decreasing, got {parts!r}")
    return datum(kind, entries, parts)


def datum_to_obj(d: LusztigDatum) -> dict:
    """LusztigDatum -> datum document in canonical order."""
    return {
        "algebra": d.kind.value,
        "real": [
            {"family": family, "k": k, "mult": mult} for family, k, mult in d.real
        ],
        "delta": list(d.delta),
    }


def parse_polytope(obj: Any) -> DecoratedPolytope:
    """Polytope document -> DecoratedPolytope.

    The derived fields (weight, mv, violations, vertices) are accepted
    and ignored apart from a consistency check on the weight; mismatched
    data weights are a document error.
    """
    if not isinstance(obj, dict):
        raise DocumentError("polytope document must be a JSON object")
    _require_keys(
        obj,
        ("left", "right"),
        ("weight", "mv", "violations", "vertices"),
        "polytope document",
    )
    left = parse_datum(obj["left"])
    right = parse_datum(obj["right"])
    if left.kind is not right.kind:
        raise DocumentError("left and right data use different algebras")
    if weight(left) != weight(right):
        raise DocumentError(
            f"left weight {weight(left)} differs from right weight {weight(right)}"
        )
    if "weight" in obj:
        claimed = obj["weight"]
        actual = weight(left)
        if claimed != [actual.a, actual.b]:
            raise DocumentError(
                f"declared weight {claimed!r} does not match the data"
            )
    return DecoratedPolytope(left, right)


def polytope_to_obj(
    P: DecoratedPolytope,
    verdict: MVVerdict | None = None,
    with_vertices: bool = False,
) -> dict:
    """DecoratedPolytope -> polytope document with the computed verdict."""
    v = verdict if verdict is not None else is_mv(P)
    w = P.weight
    obj = {
        "left": datum_to_obj(P.left),
        "right": datum_to_obj(P.right),
        "weight": [w.a, w.b],
        "mv": v.ok,
        "violations": [
            {"condition": c, "k": k, "note": note} for c, k, note in v.violations
        ],
    }
    if with_vertices:
        fan = vertices(P)
        obj["vertices"] = {
            "mu_r": [[p.a, p.b] for p in fan.mu_r],
            "mu_r_top": [[p.a, p.b] for p in fan.mu_r_top],
            "mu_l": [[p.a, p.b] for p in fan.mu_l],
            "mu_l_top": [[p.a, p.b] for p in fan.mu_l_top],
        }
    return obj


def short_form(d: LusztigDatum) -> str:
    """Compact one-line canonical form, used for node labels and logs."""
    bits = []
    for family, k, mult in d.real:
        bits.append(f"{'l' if family == LOW else 'h'}{k}x{mult}")
    if d.delta:
        bits.append("(" + ",".join(str(p) for p in d.delta) + ")")
    return " ".join(bits) if bits else "0"


def graph_to_dot(g: CrystalGraph) -> str:
    """DOT digraph; node labels show the right datum and the weight."""
    lines = [
        "digraph crystal {",
        f'  graph [label="{g.kind.value} depth {g.depth}", rankdir=BT];',
        "  node [shape=box];",
    ]
    for idx, b in enumerate(g.nodes):
        w = b.weight
        lines.append(f'  n{idx} [label="{short_form(b.right)} wt=({w.a},{w.b})"];')
    for src, label, dst in g.edges:
        lines.append(f'  n{src} -> n{dst} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
