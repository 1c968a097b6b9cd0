"""Prime ideal sum graphs over products of small local rings.

Ring specs are dicts of the form {"factors": [{"family": "field"},
{"family": "chain", "k": 2}, ...]}; JSON strings are accepted too.
"""

import json

from . import _core
from ._core import PisgError

__all__ = [
    "PisgError",
    "build",
    "classify",
    "invariants",
    "genus",
    "crosscap",
    "find",
    "verify",
    "euler_lower_bounds",
    "field",
    "chain",
    "twogen_xy",
    "twogen_flat",
    "ring",
]

DEFAULT_BUDGET = 20_000_000


def field():
    return {"family": "field"}


def chain(k):
    return {"family": "chain", "k": k}


def twogen_xy(q):
    return {"family": "twogen_xy", "q": q}


def twogen_flat(q):
    return {"family": "twogen_flat", "q": q}


def ring(*factors):
    return {"factors": list(factors)}


def _spec(spec):
    return spec if isinstance(spec, str) else json.dumps(spec)


def _graph(graph):
    # (n, edges) or a dict as returned by build()
    if isinstance(graph, dict):
        return len(graph["vertices"]), [tuple(e) for e in graph["edges"]]
    n, edges = graph
    return n, [tuple(e) for e in edges]


def build(spec):
    """Vertices (labels), edges (index pairs), stats and the canonical key."""
    return json.loads(_core.build(_spec(spec)))


def classify(spec):
    return json.loads(_core.classify(_spec(spec)))


def invariants(spec, budget=DEFAULT_BUDGET):
    return json.loads(_core.invariants(_spec(spec), budget))


def genus(graph, budget=DEFAULT_BUDGET):
    """graph: a ring spec, a build() result, or (n, edges)."""
    if isinstance(graph, dict) and "factors" in graph or isinstance(graph, str):
        graph = build(graph)
    n, edges = _graph(graph)
    return json.loads(_core.surface(n, edges, False, budget))


def crosscap(graph, budget=DEFAULT_BUDGET):
    if isinstance(graph, dict) and "factors" in graph or isinstance(graph, str):
        graph = build(graph)
    n, edges = _graph(graph)
    return json.loads(_core.surface(n, edges, True, budget))


def find(spec, pattern, hints=(), budget=DEFAULT_BUDGET):
    """Induced patterns (P4, C4, 2K2, ...) or subdivisions (K5, K33, ...)."""
    return json.loads(_core.find(_spec(spec), pattern, list(hints), budget))


def verify(config):
    return json.loads(_core.verify(_spec(config)))


def euler_lower_bounds(graph):
    n, edges = _graph(graph)
    return _core.euler_lower_bounds(n, edges)
