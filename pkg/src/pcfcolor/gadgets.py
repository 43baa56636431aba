"""Explicit instances that have no PCF coloring from degree+1 lists."""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import ListAssignment, serialize_lists
from .errors import PreconditionError
from .graph import Graph, make_cycle, serialize_graph


@dataclass(frozen=True)
class GadgetInstance:
    graph: Graph
    lists: ListAssignment
    construction: str
    params: dict[str, str] = field(default_factory=dict)
    center: int | None = None
    notes: tuple[str, ...] = ()

    def provenance(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        return f"# gadget {self.construction} {params}".rstrip()

    def graph_text(self) -> str:
        return self.provenance() + "\n" + serialize_graph(self.graph)

    def lists_text(self) -> str:
        return self.provenance() + "\n" + serialize_lists(self.lists)


def describe_graph(h: Graph) -> str:
    """Compact one-token description, e.g. ``n3:0-1,1-2``."""
    return f"n{h.n}:" + ",".join(f"{u}-{v}" for u, v in h.edges())


def t4_gadget(h: Graph, v0: int, name: str | None = None) -> GadgetInstance:
    """Glue ``d+1`` four-cycles onto ``v0`` (``d`` = its degree in ``h``).

    The three new vertices of the ``i``-th cycle share the list
    ``{3i, 3i+1, 3i+2}``; the center gets ``{0..3d+2}``, one more than its
    degree ``3d+2``; every other vertex ``u`` of ``h`` gets ``{0..d(u)}``.
    Each cycle forces its three colors away from the center, so no PCF
    coloring exists.
    """
    if v0 not in h:
        raise PreconditionError(f"anchor {v0} is not a vertex of the base graph")
    if not h.is_connected():
        raise PreconditionError("base graph must be connected")
    if not h.is_dense():
        raise PreconditionError("base graph must use vertex ids 0..n-1")
    d = h.degree(v0)
    n = h.n
    edges = list(h.edges())
    lists: ListAssignment = {}
    for i in range(d + 1):
        a, b, c = n + 3 * i, n + 3 * i + 1, n + 3 * i + 2
        edges += [(v0, a), (a, b), (b, c), (c, v0)]
        triple = frozenset({3 * i, 3 * i + 1, 3 * i + 2})
        lists[a] = lists[b] = lists[c] = triple
    g = Graph.from_edges(n + 3 * (d + 1), edges)
    lists[v0] = frozenset(range(3 * d + 3))
    for u in h:
        if u != v0:
            lists[u] = frozenset(range(g.degree(u) + 1))
    lists = {v: lists[v] for v in sorted(lists)}
    return GadgetInstance(
        graph=g,
        lists=lists,
        construction="t4",
        params={"base": name or describe_graph(h), "v0": str(v0), "d": str(d)},
        center=v0,
        notes=("base-graph vertices get d(u)+1 colors", "center list is {0..3d+2}"),
    )


def subdivision_counterexample(k: int) -> GadgetInstance:
    """The cycle ``C_{6k+2}``, i.e. the subdivided ``C_{3k+1}``, with every list ``{0,1,2}``."""
    if k < 1:
        raise PreconditionError("k must be a positive integer")
    g = make_cycle(6 * k + 2)
    palette = frozenset({0, 1, 2})
    return GadgetInstance(
        graph=g,
        lists={v: palette for v in g},
        construction="subdiv",
        params={"k": str(k), "base": f"C{3 * k + 1}"},
        notes=("unsatisfiable: cycle length not divisible by 3",),
    )
