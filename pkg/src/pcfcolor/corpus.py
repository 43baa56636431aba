"""Seeded instance families used by the bench command and the test suite."""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass
from pathlib import Path

import networkx as nx

from .coloring import serialize_lists
from .gadgets import subdivision_counterexample, t4_gadget
from .graph import (
    Graph,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_path,
    make_petersen,
    random_bounded_degree,
    serialize_graph,
)


def _to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g)
    h.add_edges_from(g.edges())
    return h


def connected_subcubic_graphs(n_max: int) -> list[Graph]:
    """All connected graphs with maximum degree at most 3 on 1..n_max vertices, up to isomorphism.

    Every connected graph has a vertex whose removal keeps it connected, so
    each graph on n vertices arises from one on n-1 vertices by adding a new
    vertex joined to one, two or three vertices of degree at most 2.
    """
    out: list[Graph] = []
    level = [Graph.from_edges(1, [])] if n_max >= 1 else []
    n = 1
    while level:
        out.extend(level)
        if n == n_max:
            break
        buckets: dict[str, list[tuple[nx.Graph, Graph]]] = {}
        nxt: list[Graph] = []
        for g in level:
            open_slots = [v for v in g if g.degree(v) <= 2]
            for size in (1, 2, 3):
                for attach in itertools.combinations(open_slots, size):
                    cand = Graph.from_edges(n + 1, g.edges() + [(v, n) for v in attach])
                    h = _to_nx(cand)
                    key = nx.weisfeiler_lehman_graph_hash(h)
                    bucket = buckets.setdefault(key, [])
                    if any(nx.is_isomorphic(h, other) for other, _ in bucket):
                        continue
                    bucket.append((h, cand))
                    nxt.append(cand)
        level = sorted(nxt, key=lambda g: (g.m, g.edges()))
        n += 1
    return out


def _within(adj: dict[int, set[int]], u: int, v: int, cap: int) -> bool:
    """True if ``v`` is at distance at most ``cap`` from ``u``."""
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if dist[x] >= cap:
            continue
        for y in adj[x]:
            if y not in dist:
                if y == v:
                    return True
                dist[y] = dist[x] + 1
                queue.append(y)
    return False


def random_high_girth(n: int, max_degree: int, girth: int, seed: int) -> Graph:
    """Greedy seeded graph with no cycle shorter than ``girth``.

    Vertex pairs are visited in a shuffled order and joined whenever both
    endpoints have spare degree and the edge would not close a short cycle.
    The result need not be connected.
    """
    rng = random.Random(seed)
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    for u, v in pairs:
        if len(adj[u]) < max_degree and len(adj[v]) < max_degree and not _within(adj, u, v, girth - 2):
            adj[u].add(v)
            adj[v].add(u)
    return Graph.from_adjacency(adj)


def random_girth5_core(n: int, seed: int, max_degree: int = 4, attempts: int = 20000) -> Graph:
    """Connected girth-5 graph with minimum degree 3, by rejection over :func:`random_high_girth`.

    Such graphs skip every low-degree reduction and go straight to the
    long-cycle step. Raises ``ValueError`` if no attempt succeeds.
    """
    rng = random.Random(seed)
    for _ in range(attempts):
        g = random_high_girth(n, max_degree, 5, rng.getrandbits(32))
        if g.is_connected() and min(g.degree(v) for v in g) >= 3:
            return g
    raise ValueError(f"no connected girth-5 graph with minimum degree 3 found on {n} vertices")


@dataclass(frozen=True)
class NamedGraph:
    name: str
    graph: Graph


def degree4_corpus(count: int = 240, seed: int = 0) -> list[NamedGraph]:
    """Connected graphs with maximum degree at most 4 and at most 12 vertices.

    Two thirds are uniform random bounded-degree graphs. The rest are
    girth-5 graphs, half of them with minimum degree 3 so that the degree-4
    solver runs its long-cycle step at the top level. The Petersen graph, K5
    and C5 are always included.
    """
    rng = random.Random(seed)
    out = [
        NamedGraph("petersen", make_petersen()),
        NamedGraph("K5", make_complete(5)),
        NamedGraph("C5", make_cycle(5)),
    ]
    i = 0
    while len(out) < count:
        s = rng.getrandbits(32)
        if i % 6 == 5:
            g = random_girth5_core(12, s)
            name = f"core5-{s}"
        elif i % 3 == 2:
            g = random_high_girth(rng.randint(10, 12), 4, 5, s)
            if not g.is_connected():
                continue
            name = f"girth5-{s}"
        else:
            g = random_bounded_degree(rng.randint(2, 12), 4, s)
            name = f"random-{s}"
        out.append(NamedGraph(name, g))
        i += 1
    return out


def subdivision_bases(randoms: int = 8, seed: int = 0) -> list[NamedGraph]:
    out = [
        NamedGraph("K2", make_complete(2)),
        NamedGraph("P4", make_path(4)),
        NamedGraph("C4", make_cycle(4)),
        NamedGraph("C7", make_cycle(7)),
        NamedGraph("K4", make_complete(4)),
        NamedGraph("K33", make_complete_bipartite(3, 3)),
        NamedGraph("K5", make_complete(5)),
    ]
    rng = random.Random(seed)
    for _ in range(randoms):
        s = rng.getrandbits(32)
        n = rng.randint(2, 7)
        out.append(NamedGraph(f"random-{s}", random_bounded_degree(n, rng.randint(2, 6) if n > 2 else 1, s)))
    return out


def walk_graph_files(root: Path) -> list[Path]:
    return sorted(root.glob("*.graph"))


def write_corpus(root: Path, kind: str) -> int:
    """Write a bench corpus directory; returns the number of instances written.

    Each instance is ``<name>.graph`` plus ``<name>.expect`` (``key=value``
    lines) and, for fixed-list instances, ``<name>.lists``.
    """
    root.mkdir(parents=True, exist_ok=True)
    written = 0

    def emit(name: str, g: Graph, expect: dict[str, str], lists=None, header: str = "") -> None:
        nonlocal written
        (root / f"{name}.graph").write_text(header + serialize_graph(g))
        (root / f"{name}.expect").write_text("".join(f"{k}={v}\n" for k, v in expect.items()))
        if lists is not None:
            (root / f"{name}.lists").write_text(header + serialize_lists(lists))
        written += 1

    if kind == "subcubic":
        graphs = [g for g in connected_subcubic_graphs(8) if not (g.n == 5 and g.is_cycle())]
        for idx, g in enumerate(graphs):
            emit(f"subcubic-n{g.n}-{idx:03d}", g, {"strategy": "constructive", "status": "sat", "k": "2", "universe": "12"})
        emit("petersen", make_petersen(), {"strategy": "constructive", "status": "sat", "k": "2", "universe": "12"})
    elif kind == "degree4":
        for item in degree4_corpus():
            emit(item.name, item.graph, {"strategy": "degree4", "status": "sat", "k": "3", "universe": "10"})
    elif kind == "gadget":
        bases = [("K1", Graph.from_edges(1, [])), ("K2", make_complete(2)), ("P3", make_path(3))]
        for bname, h in bases:
            for v0 in h:
                gi = t4_gadget(h, v0, bname)
                emit(f"t4-{bname}-v{v0}", gi.graph, {"strategy": "bruteforce", "status": "unsat"},
                     gi.lists, gi.provenance() + "\n")
        for k in (1, 2):
            gi = subdivision_counterexample(k)
            emit(f"subdiv-k{k}", gi.graph, {"strategy": "bruteforce", "status": "unsat"},
                 gi.lists, gi.provenance() + "\n")
    else:
        raise ValueError(f"unknown corpus kind {kind!r}")
    return written
