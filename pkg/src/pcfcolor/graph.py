"""Simple undirected graphs, structural queries, constructors and text I/O.

A :class:`Graph` is an immutable mapping ``vertex -> frozenset(neighbors)``.
Constructors and the edge-list format use dense ids ``0..n-1``; subgraphs
produced during recursion keep the ids of their parent graph.
"""

from __future__ import annotations

import random
from collections import deque
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass

from .errors import FormatError, PreconditionError

Edge = tuple[int, int]


class Graph(Mapping[int, frozenset[int]]):
    """Immutable simple undirected graph.

    Duplicate edges are ignored; self-loops are rejected.
    """

    __slots__ = ("_adj", "_hash")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Edge] = ()):
        adj: dict[int, set[int]] = {v: set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in adj or v not in adj:
                raise ValueError(f"edge ({u}, {v}) uses an unknown vertex")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: frozenset(adj[v]) for v in sorted(adj)}
        self._hash: int | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        return cls(range(n), edges)

    @classmethod
    def from_adjacency(cls, adj: Mapping[int, Iterable[int]]) -> Graph:
        return cls(adj, ((u, v) for u in adj for v in adj[u] if u < v))

    # Mapping protocol
    def __getitem__(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def __iter__(self) -> Iterator[int]:
        return iter(self._adj)

    def __len__(self) -> int:
        return len(self._adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((tuple(self._adj), tuple(self.edges())))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return sum(len(nb) for nb in self._adj.values()) // 2

    def vertices(self) -> list[int]:
        return list(self._adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of ``v`` in ascending order."""
        return tuple(sorted(self._adj[v]))

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def edges(self) -> list[Edge]:
        return sorted((u, v) for u, nb in self._adj.items() for v in nb if u < v)

    @property
    def max_degree(self) -> int:
        return max((len(nb) for nb in self._adj.values()), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(nb) for nb in self._adj.values()), default=0)

    def is_dense(self) -> bool:
        return all(v == i for i, v in enumerate(self._adj))

    def is_cycle(self) -> bool:
        return self.n >= 3 and all(len(nb) == 2 for nb in self._adj.values()) and self.is_connected()

    def is_connected(self) -> bool:
        if not self._adj:
            return True
        return len(self.component_of(next(iter(self._adj)))) == self.n

    def component_of(self, root: int) -> set[int]:
        seen = {root}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in self._adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    def components(self) -> list[list[int]]:
        """Vertex sets of connected components, each sorted, ordered by minimum vertex."""
        seen: set[int] = set()
        comps = []
        for v in self._adj:
            if v not in seen:
                comp = self.component_of(v)
                seen |= comp
                comps.append(sorted(comp))
        return comps

    def induced(self, vertices: Iterable[int]) -> Graph:
        keep = set(vertices)
        return Graph(keep, ((u, v) for u in keep for v in self._adj[u] if v in keep and u < v))

    def remove_vertices(self, vertices: Iterable[int]) -> Graph:
        drop = set(vertices)
        return self.induced(v for v in self._adj if v not in drop)

    def add_edges(self, edges: Iterable[Edge]) -> Graph:
        return Graph(self._adj, [*self.edges(), *edges])

    def relabeled(self) -> tuple[Graph, list[int]]:
        """Dense copy on ``0..n-1``; the second item maps new ids back to old ones."""
        old = list(self._adj)
        index = {v: i for i, v in enumerate(old)}
        return Graph.from_edges(len(old), ((index[u], index[v]) for u, v in self.edges())), old


@dataclass(frozen=True)
class CyclePath:
    """A cycle ``v_0 v_1 ... v_{k-1} v_0``; indices are taken modulo ``k``."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) < 3:
            raise ValueError("a cycle needs at least three vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("cycle vertices must be distinct")

    def __len__(self) -> int:
        return len(self.vertices)

    def __getitem__(self, i: int) -> int:
        return self.vertices[i % len(self.vertices)]

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def is_cycle_of(self, g: Mapping[int, frozenset[int]]) -> bool:
        k = len(self.vertices)
        return all(self[i + 1] in g[self[i]] for i in range(k))


@dataclass(frozen=True)
class PeelSequence:
    removed: tuple[tuple[int, int], ...]
    """``(vertex, its unique neighbor at removal time)`` in removal order."""
    core: Graph


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle via per-vertex BFS, or ``None`` for forests."""
    best = None
    for root in g:
        dist = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if best is not None and 2 * dist[x] >= best:
                break
            for y in g[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    length = dist[x] + dist[y] + 1
                    if best is None or length < best:
                        best = length
    return best


def shortest_cycle(g: Graph) -> CyclePath | None:
    """Return a shortest cycle of ``g``, or ``None`` if ``g`` is a forest.

    Among all shortest cycles, the one whose minimum vertex is smallest is
    chosen, written from that vertex in the lexicographically smaller
    direction; remaining ties go to the lexicographically least sequence.
    """
    k = girth(g)
    if k is None:
        return None
    for s in g:
        allowed = {v for v in g if v >= s}
        # distance back to s inside the allowed vertex set, for pruning
        back = {s: 0}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g[x]:
                if y in allowed and y not in back:
                    back[y] = back[x] + 1
                    queue.append(y)
        path = [s]
        on_path = {s}

        def extend() -> bool:
            depth = len(path)
            x = path[-1]
            if depth == k:
                return s in g[x] and path[1] < path[-1]
            for y in sorted(g[x]):
                if y in on_path or y not in back or y == s:
                    continue
                if depth + back[y] > k:
                    continue
                path.append(y)
                on_path.add(y)
                if extend():
                    return True
                path.pop()
                on_path.discard(y)
            return False

        if extend():
            return CyclePath(tuple(path))
    raise AssertionError("girth found a cycle but the canonical search did not")


def subdivide(g: Graph) -> tuple[Graph, dict[Edge, int]]:
    """1-subdivision: every edge ``uv`` becomes a path ``u - m_uv - v``.

    Requires dense vertex ids. Midpoints get ids ``n, n+1, ...`` in sorted
    edge order.
    """
    if not g.is_dense():
        raise ValueError("subdivide requires vertex ids 0..n-1")
    n = g.n
    midpoint: dict[Edge, int] = {}
    edges = []
    for idx, (u, v) in enumerate(g.edges()):
        mid = n + idx
        midpoint[(u, v)] = mid
        edges += [(u, mid), (v, mid)]
    return Graph.from_edges(n + len(midpoint), edges), midpoint


def peel_degree_one(g: Graph) -> PeelSequence:
    """Strip degree-1 vertices (smallest id first) until the residual is K2
    or has minimum degree at least 2."""
    if g.n < 2:
        raise PreconditionError("peeling needs at least two vertices")
    if not g.is_connected():
        raise PreconditionError("peeling needs a connected graph")
    adj = {v: set(nb) for v, nb in g.items()}
    removed = []
    while len(adj) > 2:
        leaves = [v for v, nb in adj.items() if len(nb) == 1]
        if not leaves:
            break
        v = min(leaves)
        (x,) = adj.pop(v)
        adj[x].discard(v)
        removed.append((v, x))
    return PeelSequence(tuple(removed), Graph.from_adjacency(adj))


# --- constructors ---------------------------------------------------------


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def make_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def make_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("n must be positive")
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def make_complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def make_star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def make_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


MAX_ATTEMPTS = 10_000


def random_bounded_degree(n: int, max_degree: int, seed: int) -> Graph:
    """Seeded random connected simple graph with maximum degree ``<= max_degree``.

    Each attempt draws a target edge count, then inserts uniformly random
    vertex pairs, rejecting loops, duplicates and pairs that would exceed the
    degree cap. Disconnected results are retried.
    """
    if n < 1:
        raise PreconditionError("n must be positive")
    if n == 1:
        return Graph.from_edges(1, ())
    if max_degree < 1 or (n > 2 and max_degree < 2):
        raise PreconditionError(f"no connected graph on {n} vertices has maximum degree {max_degree}")
    rng = random.Random(seed)
    max_edges = min(n * (n - 1) // 2, n * max_degree // 2)
    for _ in range(MAX_ATTEMPTS):
        target = rng.randint(n - 1, max_edges)
        adj: list[set[int]] = [set() for _ in range(n)]
        m = 0
        draws = 0
        while m < target and draws < 20 * max_edges:
            draws += 1
            u, v = rng.randrange(n), rng.randrange(n)
            if u == v or v in adj[u] or len(adj[u]) >= max_degree or len(adj[v]) >= max_degree:
                continue
            adj[u].add(v)
            adj[v].add(u)
            m += 1
        g = Graph.from_adjacency(dict(enumerate(adj)))
        if g.is_connected():
            return g
    raise PreconditionError(f"no connected graph found after {MAX_ATTEMPTS} attempts")


# --- edge-list text format ------------------------------------------------


def serialize_graph(g: Graph) -> str:
    if not g.is_dense():
        raise ValueError("serialization requires vertex ids 0..n-1")
    edges = g.edges()
    lines = [f"g {g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse ``g <n> <m>`` followed by ``m`` lines ``<u> <v>``.

    Blank lines and ``#`` comments are skipped.
    """
    header: tuple[int, int] | None = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "g":
            if header is not None:
                raise FormatError("duplicate header", lineno)
            if len(parts) != 3:
                raise FormatError(f"malformed header {line!r}", lineno)
            try:
                header = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise FormatError(f"malformed header {line!r}", lineno) from None
            if header[0] < 0 or header[1] < 0:
                raise FormatError("negative counts in header", lineno)
            continue
        if header is None:
            raise FormatError("edge line before header", lineno)
        if len(parts) != 2:
            raise FormatError(f"malformed edge line {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"malformed edge line {line!r}", lineno) from None
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"vertex id out of range in {line!r}", lineno)
        if u == v:
            raise FormatError(f"self-loop in {line!r}", lineno)
        edges.append((u, v))
    if header is None:
        raise FormatError("missing header")
    if len(edges) != header[1]:
        raise FormatError(f"header announces {header[1]} edges, found {len(edges)}")
    return Graph.from_edges(header[0], edges)
