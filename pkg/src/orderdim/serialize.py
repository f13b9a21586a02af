"""Canonical JSON forms for every instance kind the tool reads or writes.

Orders travel as {"kind":"quasi","n":N,"pairs":[[i,j],...],"closure":bool}
with the diagonal implied; digraphs as {"kind":"digraph","n":N,"edges":...}
and self-loops are a hard error. Covers are {"classes":[[...],...]},
extension families {"extensions":[pairs-list,...]} against a base given
separately, branching sequences {"sigma":[...]}, homomorphism witnesses
{"kind":"homwitness","map":[...],"minimal":bool}. Serialization is
canonical (sorted keys, no spaces), so fixed seeds give fixed bytes.
"""

from __future__ import annotations

import json
from typing import Any

from .digraphs import Digraph, HomWitness, digraph
from .errors import OrderdimError
from .reduction import AcyclicCover, ExtensionFamily
from .relations import QuasiOrder, quasi_order


class FormatError(OrderdimError):
    """Instance text does not parse or misses required fields."""


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def order_payload(q: QuasiOrder) -> dict:
    return {
        "kind": "quasi",
        "n": q.n,
        "pairs": [list(p) for p in q.related_pairs()],
        "closure": False,
    }


def digraph_payload(d: Digraph) -> dict:
    return {"kind": "digraph", "n": d.n, "edges": [list(e) for e in d.edges()]}


def cover_payload(c: AcyclicCover) -> dict:
    return {"classes": [list(cls) for cls in c.classes]}


def family_payload(f: ExtensionFamily) -> dict:
    return {
        "extensions": [
            [list(p) for p in e.related_pairs()] for e in f.exts
        ]
    }


def sigma_payload(sigma) -> dict:
    return {"sigma": list(sigma)}


def homwitness_payload(w: HomWitness) -> dict:
    return {"kind": "homwitness", "map": list(w.mapping), "minimal": w.minimal}


def parse_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from None


def _int_pairs(raw, what: str) -> list[tuple[int, int]]:
    if not isinstance(raw, list):
        raise FormatError(f"{what} must be a list of pairs")
    out = []
    for item in raw:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(v, int) for v in item)
        ):
            raise FormatError(f"{what} entry {item!r} is not an int pair")
        out.append((item[0], item[1]))
    return out


def order_from_payload(doc: Any) -> QuasiOrder:
    if not isinstance(doc, dict) or doc.get("kind") != "quasi":
        raise FormatError('expected an object with "kind": "quasi"')
    n = doc.get("n")
    if not isinstance(n, int) or n < 0:
        raise FormatError('"n" must be a non-negative int')
    pairs = _int_pairs(doc.get("pairs", []), "pairs")
    closure = doc.get("closure", False)
    if not isinstance(closure, bool):
        raise FormatError('"closure" must be a bool')
    return quasi_order(n, pairs, close=closure)


def digraph_from_payload(doc: Any) -> Digraph:
    if not isinstance(doc, dict) or doc.get("kind") != "digraph":
        raise FormatError('expected an object with "kind": "digraph"')
    n = doc.get("n")
    if not isinstance(n, int) or n < 0:
        raise FormatError('"n" must be a non-negative int')
    edges = _int_pairs(doc.get("edges", []), "edges")
    for i, j in edges:
        if i == j:
            raise FormatError(f"self-loop at {i} is not allowed")
    return digraph(n, edges)


def cover_from_payload(doc: Any) -> AcyclicCover:
    if not isinstance(doc, dict) or "classes" not in doc:
        raise FormatError('expected an object with "classes"')
    classes = doc["classes"]
    if not isinstance(classes, list) or not all(
        isinstance(c, list) and all(isinstance(v, int) for v in c)
        for c in classes
    ):
        raise FormatError('"classes" must be lists of ints')
    return AcyclicCover(tuple(tuple(c) for c in classes))


def family_from_payload(doc: Any, base: QuasiOrder) -> ExtensionFamily:
    if not isinstance(doc, dict) or "extensions" not in doc:
        raise FormatError('expected an object with "extensions"')
    exts = []
    for raw in doc["extensions"]:
        pairs = _int_pairs(raw, "extension")
        exts.append(quasi_order(base.n, pairs, close=False))
    return ExtensionFamily(base, tuple(exts))


def sigma_from_payload(doc: Any) -> tuple[int, ...]:
    if not isinstance(doc, dict) or "sigma" not in doc:
        raise FormatError('expected an object with "sigma"')
    raw = doc["sigma"]
    if not isinstance(raw, list) or not all(isinstance(v, int) for v in raw):
        raise FormatError('"sigma" must be a list of ints')
    if any(v < 2 for v in raw):
        raise FormatError('"sigma" entries must all be at least 2')
    return tuple(raw)


def homwitness_from_payload(doc: Any) -> HomWitness:
    if not isinstance(doc, dict) or doc.get("kind") != "homwitness":
        raise FormatError('expected an object with "kind": "homwitness"')
    raw = doc.get("map")
    if not isinstance(raw, list) or not all(isinstance(v, int) for v in raw):
        raise FormatError('"map" must be a list of ints')
    minimal = doc.get("minimal", False)
    if not isinstance(minimal, bool):
        raise FormatError('"minimal" must be a bool')
    return HomWitness(tuple(raw), minimal)
