"""JSON documents for graphs, splines and results.

Integers beyond 2**53 - 1 in magnitude are written as decimal strings; both
forms are accepted on input.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import DomainError
from .graph import EdgeLabeledGraph, make_complete, make_cycle, make_general, make_star, make_wheel
from .spline import Spline

SAFE_INT = 2**53 - 1

_GRAPH_FIELDS = {
    "cycle": {"labels"},
    "star": {"labels"},
    "wheel": {"rim", "spokes"},
    "complete": {"c3", "stars"},
    "general": {"vertices", "edges"},
}


def parse_int(x: Any) -> int:
    if isinstance(x, bool):
        raise DomainError(f"expected an integer, got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x.strip(), 10)
        except ValueError:
            pass
    raise DomainError(f"expected an integer, got {x!r}")


def _int_list(x: Any, what: str) -> list[int]:
    if not isinstance(x, list):
        raise DomainError(f"{what} must be a list")
    return [parse_int(v) for v in x]


def graph_from_doc(doc: Any) -> EdgeLabeledGraph:
    if not isinstance(doc, dict) or "family" not in doc:
        raise DomainError("graph document must be an object with a 'family' field")
    family = doc["family"]
    if family not in _GRAPH_FIELDS:
        raise DomainError(f"unknown family {family!r}")
    expected = _GRAPH_FIELDS[family]
    keys = set(doc) - {"family"}
    if keys - expected:
        raise DomainError(f"unknown fields for {family}: {sorted(keys - expected)}")
    if family == "complete":
        doc = {"stars": [], **doc}
    elif expected - keys:
        raise DomainError(f"missing fields for {family}: {sorted(expected - keys)}")
    if family == "cycle":
        return make_cycle(_int_list(doc["labels"], "labels"))
    if family == "star":
        return make_star(_int_list(doc["labels"], "labels"))
    if family == "wheel":
        return make_wheel(_int_list(doc["rim"], "rim"), _int_list(doc["spokes"], "spokes"))
    if family == "complete":
        if "c3" not in doc:
            raise DomainError("missing fields for complete: ['c3']")
        if not isinstance(doc["stars"], list):
            raise DomainError("stars must be a list of lists")
        stars = [_int_list(s, "star") for s in doc["stars"]]
        return make_complete(_int_list(doc["c3"], "c3"), stars)
    if not isinstance(doc["edges"], list):
        raise DomainError("edges must be a list")
    edges = []
    for e in doc["edges"]:
        e = _int_list(e, "edge")
        if len(e) != 3:
            raise DomainError(f"edge must be [u, v, label], got {e}")
        edges.append(e)
    return make_general(parse_int(doc["vertices"]), edges)


def graph_to_doc(graph: EdgeLabeledGraph) -> dict:
    p = graph.params
    if graph.family in ("cycle", "star"):
        return {"family": graph.family, "labels": list(p["labels"])}
    if graph.family == "wheel":
        return {"family": "wheel", "rim": list(p["rim"]), "spokes": list(p["spokes"])}
    if graph.family == "complete":
        return {"family": "complete", "c3": list(p["c3"]), "stars": [list(s) for s in p["stars"]]}
    return {
        "family": "general",
        "vertices": graph.vertex_count,
        "edges": [list(e) for e in graph.edges],
    }


def spline_from_doc(doc: Any) -> Spline:
    if not isinstance(doc, dict) or set(doc) != {"values"}:
        raise DomainError("spline document must be exactly {\"values\": [...]}")
    return Spline(_int_list(doc["values"], "values"))


def _encode(x: Any) -> Any:
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return str(x) if abs(x) > SAFE_INT else x
    if isinstance(x, dict):
        return {k: _encode(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_encode(v) for v in x]
    return x


def dumps(payload: Any) -> str:
    """Deterministic rendering: sorted keys, compact separators."""
    return json.dumps(_encode(payload), sort_keys=True, separators=(",", ":"))


def load_path(path: str) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise DomainError(f"{path} is not valid JSON: {exc}") from None
