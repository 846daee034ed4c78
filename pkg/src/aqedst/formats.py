"""JSON and DOT interchange for decompositions and augmented cubes.

Vertices are always written as zero-padded bit strings, most significant bit
first, so the copy and suffix structure is visible in the output.
"""

from __future__ import annotations

import json
from typing import Any

from . import __version__
from .aq_graph import AugmentedCube, Kind, build_aq, canonical_array, from_bits, to_bits
from .edst_builder import ConstructionError, Decomposition, Labeling
from .verifier import verify_all

SCHEMA = "aqedst.decomposition/1"

TREE_COLORS = ["red", "blue", "forestgreen", "darkorange", "purple", "brown",
               "deeppink", "teal", "goldenrod", "navy", "olive", "crimson"]


class SchemaError(ValueError):
    """Document does not match the decomposition schema."""


class VerificationError(ValueError):
    """Document parsed but the decomposition fails verification."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


def _check_shape(d: Decomposition) -> None:
    n = d.n
    if n < 3:
        raise ValueError(f"decomposition dimension {n} < 3")
    if len(d.trees) != n - 1:
        raise ValueError(f"expected {n - 1} trees, got {len(d.trees)}")
    for i, t in enumerate(d.trees, start=1):
        if len(t) != (1 << n) - 1:
            raise ValueError(f"tree T_{i} has {len(t)} edges, expected {(1 << n) - 1}")
    if len(d.leftover) != (1 << (n - 1)) + n - 1:
        raise ValueError(f"leftover has {len(d.leftover)} edges")
    if len(d.labeling.u) != 1 << (n - 1):
        raise ValueError("labeling has the wrong size")


def to_document(d: Decomposition, provenance: dict[str, Any] | None = None) -> dict[str, Any]:
    _check_shape(d)
    n = d.n

    def edges(arr):
        return [[to_bits(a, n), to_bits(b, n)] for a, b in canonical_array(arr).tolist()]

    doc: dict[str, Any] = {
        "schema": SCHEMA,
        "n": n,
        "labeling": {
            "u": [to_bits(x, n) for x in d.labeling.u],
            "v": [to_bits(x, n) for x in d.labeling.v],
        },
        "trees": [edges(t) for t in d.trees],
        "leftover": edges(d.leftover),
    }
    prov = {"tool": "aqedst", "version": __version__, "construction": "base+extend",
            "params": {"n": n}}
    if provenance:
        prov.update(provenance)
    doc["provenance"] = prov
    return doc


def export_json(d: Decomposition, provenance: dict[str, Any] | None = None) -> str:
    """Canonical JSON text; byte-identical for equal decompositions."""
    doc = to_document(d, provenance)
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=True) + "\n"


def from_document(doc: Any) -> Decomposition:
    if not isinstance(doc, dict):
        raise SchemaError("document must be a JSON object")
    if doc.get("schema") != SCHEMA:
        raise SchemaError(f"unsupported schema {doc.get('schema')!r}, expected {SCHEMA!r}")
    for key in ("n", "labeling", "trees", "leftover"):
        if key not in doc:
            raise SchemaError(f"missing key {key!r}")
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise SchemaError("n must be an integer")
    if n < 3:
        raise SchemaError(f"n={n} outside the construction's domain n >= 3")

    def vertex(s):
        if not isinstance(s, str):
            raise SchemaError(f"vertex {s!r} is not a bit string")
        try:
            return from_bits(s, n)
        except ValueError as exc:
            raise SchemaError(str(exc)) from None

    def edges(raw, what):
        if not isinstance(raw, list):
            raise SchemaError(f"{what} must be a list of edges")
        out = []
        for e in raw:
            if not isinstance(e, list) or len(e) != 2:
                raise SchemaError(f"{what}: malformed edge {e!r}")
            out.append([vertex(e[0]), vertex(e[1])])
        return canonical_array(out)

    lab = doc["labeling"]
    if not isinstance(lab, dict) or "u" not in lab or "v" not in lab:
        raise SchemaError("labeling must hold 'u' and 'v' lists")
    try:
        labeling = Labeling(tuple(vertex(x) for x in lab["u"]), tuple(vertex(x) for x in lab["v"]))
    except ValueError as exc:
        raise SchemaError(f"labeling: {exc}") from None
    if not isinstance(doc["trees"], list):
        raise SchemaError("trees must be a list")
    trees = tuple(edges(t, f"tree {i}") for i, t in enumerate(doc["trees"], start=1))
    return Decomposition(n, trees, edges(doc["leftover"], "leftover"), labeling)


def import_json(text: str, verify: bool = True, max_dim: int = 20) -> Decomposition:
    """Parse a decomposition document; by default a verification failure is an error."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None
    d = from_document(doc)
    if d.n > max_dim:
        raise SchemaError(f"n={d.n} exceeds configured maximum {max_dim}")
    if verify:
        report = verify_all(build_aq(d.n, max_dim=max_dim), d)
        if not report.ok:
            first = report.failures()[0]
            raise VerificationError(f"{first.check} check failed: {first.message}", report)
    return d


def _q(x: int, n: int) -> str:
    return f'"{to_bits(x, n)}"'


def export_dot(obj: Decomposition | AugmentedCube, name: str | None = None,
               include_leftover: bool = True) -> str:
    """Undirected DOT text, one subgraph per tree (or per edge class for a bare graph).

    Decompositions are drawn as given, without shape checks, so broken ones
    can be inspected.
    """
    if not isinstance(obj, (Decomposition, AugmentedCube)):
        raise TypeError(f"cannot export {type(obj).__name__} to DOT")
    n = obj.n
    name = name or (f"AQ{n}_edst" if isinstance(obj, Decomposition) else f"AQ{n}")
    lines = [f"graph {name} {{", "  node [shape=circle, fontname=monospace];"]
    lines += [f"  {_q(x, n)};" for x in range(1 << n)]
    if isinstance(obj, Decomposition):
        groups = [(f"T_{i}", f'color="{TREE_COLORS[(i - 1) % len(TREE_COLORS)]}"', t)
                  for i, t in enumerate(obj.trees, start=1)]
        if include_leftover:
            groups.append((f"T_{n}_leftover", 'color="gray40", style=dashed', obj.leftover))
        for label, attrs, edges in groups:
            lines.append(f"  subgraph {label} {{")
            lines.append(f"    edge [{attrs}];")
            lines += [f"    {_q(a, n)} -- {_q(b, n)};" for a, b in canonical_array(edges).tolist()]
            lines.append("  }")
    else:
        by_class: dict[tuple[int, int], list] = {}
        for (a, b), ek in obj.iter_edges():
            key = (ek.level, 0 if ek.kind is Kind.HYPERCUBE else 1)
            by_class.setdefault(key, []).append((a, b))
        for (level, comp), edges in sorted(by_class.items()):
            label = f"{'complement' if comp else 'hypercube'}_{level}"
            style = 'style=dashed' if comp else 'style=solid'
            lines.append(f"  subgraph {label} {{")
            lines.append(f"    edge [{style}];")
            lines += [f"    {_q(a, n)} -- {_q(b, n)};" for a, b in edges]
            lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = [
    "SCHEMA", "SchemaError", "VerificationError", "ConstructionError",
    "to_document", "from_document", "export_json", "import_json", "export_dot",
]
