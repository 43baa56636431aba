"""PCF coloring of graphs with maximum degree <= 4 from lists of size degree+3.

The solver shrinks the graph until it is tiny:

* a vertex of degree 1 or 2 is removed (a degree-2 vertex's neighbors are
  joined) and re-inserted afterwards with a color that keeps a protected
  unique color at each neighbor;
* otherwise a shortest cycle ``C`` is cut out. The rest is colored first,
  each off-cycle neighbor ``u`` reserves a protected color ``c_u``, and the
  cycle is colored from its boundary lists ``L_C``. For ``|C| >= 5`` the
  off-cycle neighbor pairs of each cycle vertex are joined before
  recursing, and the cycle colors come from a transversal independent set
  of the auxiliary graph ``H``; for ``|C| <= 4`` they come from exhaustive
  search.
"""

from __future__ import annotations

import itertools
from collections.abc import Mapping
from dataclasses import dataclass

from .coloring import Coloring, has_unique_neighbor_color, unique_neighbor_colors, verify_pcf
from .constructive import oracle_coloring, oracle_fallback
from .cyclic import cyclic_select
from .errors import InternalContradiction, PreconditionError
from .graph import CyclePath, Graph, shortest_cycle
from .trace import Trace

Lists = Mapping[int, frozenset[int]]
Node = tuple[int, int]


@dataclass(frozen=True)
class BoundaryContext:
    """Everything needed to color the cycle once the rest of the graph is colored.

    ``off[i]`` holds the off-cycle neighbors of ``v_i`` (``u_i`` and, for a
    degree-4 vertex, ``w_i``); ``phi`` colors the graph without the cycle;
    ``protected`` maps off-cycle neighbors to their reserved color ``c_u``;
    ``lc[i]`` is the boundary list of ``v_i``.
    """

    cycle: CyclePath
    degree: tuple[int, ...]
    off: tuple[tuple[int, ...], ...]
    phi: Coloring
    protected: dict[int, int]
    lc: tuple[frozenset[int], ...]

    @property
    def k(self) -> int:
        return len(self.cycle)


def blocks(ctx: BoundaryContext, i: int, pair: tuple[int, int]) -> bool:
    """Whether coloring ``v_{i-1}, v_{i+1}`` with ``pair`` leaves ``v_i`` without a unique color."""
    i %= ctx.k
    a, b = pair
    colors = [ctx.phi[u] for u in ctx.off[i]]
    if ctx.degree[i] == 4:
        return a != b and set(colors) == {a, b}
    if ctx.degree[i] == 3:
        return colors[0] == a == b
    return False


def blocked_pairs(ctx: BoundaryContext, i: int) -> set[tuple[int, int]]:
    i %= ctx.k
    colors = [ctx.phi[u] for u in ctx.off[i]]
    if ctx.degree[i] == 4 and len(set(colors)) == 2:
        a, b = colors
        return {(a, b), (b, a)}
    if ctx.degree[i] == 3:
        return {(colors[0], colors[0])}
    return set()


@dataclass(frozen=True)
class AuxGraphH:
    """Classes ``X_i = {v_i} x L_C(v_i)`` with forward-oriented edges.

    ``short`` edges join ``(i, a)`` and ``(i+1, a)``; ``long`` edges join
    ``(i, a)`` and ``(i+2, b)`` when ``v_{i+1}`` blocks ``(a, b)``. Edges
    inside a class are implicit: a transversal takes one node per class.
    """

    classes: tuple[tuple[int, ...], ...]
    short: frozenset[tuple[Node, Node]]
    long: frozenset[tuple[Node, Node]]

    @property
    def k(self) -> int:
        return len(self.classes)

    def nodes(self):
        return [(i, a) for i, cls in enumerate(self.classes) for a in cls]

    def forward(self, node: Node) -> list[tuple[Node, Node]]:
        return [e for e in self.short | self.long if e[0] == node]

    def backward(self, node: Node) -> list[tuple[Node, Node]]:
        return [e for e in self.short | self.long if e[1] == node]

    def adjacent(self, x: Node, y: Node) -> bool:
        if x[0] == y[0]:
            return x != y
        return any(e in self.short or e in self.long for e in ((x, y), (y, x)))


def build_aux_H(ctx: BoundaryContext) -> AuxGraphH:
    k = ctx.k
    if k < 5:
        raise ValueError("the auxiliary graph is only built for cycles of length >= 5")
    classes = tuple(tuple(sorted(lc)) for lc in ctx.lc)
    short = set()
    long = set()
    for i in range(k):
        j, l = (i + 1) % k, (i + 2) % k
        for a in ctx.lc[i] & ctx.lc[j]:
            short.add(((i, a), (j, a)))
        for a, b in blocked_pairs(ctx, j):
            if a in ctx.lc[i] and b in ctx.lc[l]:
                long.add(((i, a), (l, b)))
    return AuxGraphH(classes, frozenset(short), frozenset(long))


def find_transversal_IS(h: AuxGraphH) -> tuple[int, ...] | None:
    """Lexicographically least choice of one color per class with no two
    chosen nodes joined by a short or long edge."""
    k = h.k

    def near_ok(i, a, b):
        return ((i, a), ((i + 1) % k, b)) not in h.short

    def far_ok(i, a, c):
        return ((i, a), ((i + 2) % k, c)) not in h.long

    return cyclic_select(h.classes, near_ok, far_ok)


# --- low-degree reductions ------------------------------------------------


@dataclass(frozen=True)
class Reduction:
    """One removal step: ``vertex`` of degree 1 or 2 and the graph left behind."""

    vertex: int
    neighbors: tuple[int, ...]
    graph: Graph

    def extend(self, g: Graph, lists: Lists, phi: Coloring) -> Coloring:
        """Re-insert the removed vertex into a PCF coloring of ``self.graph``."""
        v = self.vertex
        out = {u: c for u, c in phi.items() if u != v}
        forbid = set()
        for u in self.neighbors:
            forbid.add(out[u])
            forbid.add(_protected_after_removal(g, out, u, v))
        choice = lists[v] - forbid
        if not choice:
            raise InternalContradiction(f"no color left for reinserted vertex {v}")
        out[v] = min(choice)
        return out


def _protected_after_removal(g: Graph, phi: Coloring, u: int, removed: int) -> int:
    nbrs = [x for x in g[u] if x != removed]
    counts: dict[int, int] = {}
    for x in nbrs:
        counts[phi[x]] = counts.get(phi[x], 0) + 1
    unique = [c for c, n in counts.items() if n == 1]
    if unique:
        return min(unique)
    if len(counts) == 1:
        return next(iter(counts))
    raise InternalContradiction(f"vertex {u} has neither a unique nor a single repeated neighbor color")


def reduce_low_degree(g: Graph, lists: Lists) -> Reduction | None:
    """Remove the smallest degree-1 vertex, else the smallest degree-2 vertex
    (joining its two neighbors). ``None`` when the minimum degree is >= 3."""
    for target in (1, 2):
        low = [v for v in g if g.degree(v) == target]
        if low:
            v = low[0]
            nbrs = g.neighbors(v)
            rest = g.remove_vertices([v])
            if target == 2 and not rest.has_edge(*nbrs):
                rest = rest.add_edges([nbrs])
            return Reduction(v, nbrs, rest)
    return None


# --- cycle boundary machinery ---------------------------------------------


def off_cycle_neighbors(g: Graph, cycle: CyclePath) -> tuple[tuple[int, ...], ...]:
    on = set(cycle)
    return tuple(tuple(sorted(x for x in g[v] if x not in on)) for v in cycle)


def build_gpp(g: Graph, cycle: CyclePath) -> Graph:
    """Delete the cycle and join the two off-cycle neighbors of every degree-4 cycle vertex."""
    off = off_cycle_neighbors(g, cycle)
    seen: set[int] = set()
    for nb in off:
        if seen & set(nb):
            raise InternalContradiction("two cycle vertices share an off-cycle neighbor")
        seen |= set(nb)
    rest = g.remove_vertices(cycle)
    gpp = rest.add_edges(nb for nb in off if len(nb) == 2)
    if gpp.max_degree > 4:
        raise InternalContradiction("joining off-cycle neighbors raised a degree above 4")
    return gpp


def choose_cu(gprime: Graph, phi: Coloring, u: int) -> int:
    """Protected color of an off-cycle vertex: its smallest unique neighbor
    color in ``gprime``, else the single color all its neighbors share."""
    unique = unique_neighbor_colors(gprime, phi, u)
    if unique:
        return min(unique)
    colors = {phi[x] for x in gprime[u]}
    if len(colors) != 1:
        raise InternalContradiction(f"vertex {u} has no unique color and {len(colors)} neighbor colors")
    return colors.pop()


def boundary_lists(
    g: Graph, cycle: CyclePath, phi: Coloring, protected: Mapping[int, int], lists: Lists
) -> tuple[frozenset[int], ...]:
    """``L(v_i)`` minus the colors and protected colors of its off-cycle neighbors."""
    out = []
    for v, nb in zip(cycle, off_cycle_neighbors(g, cycle)):
        lc = lists[v] - {phi[u] for u in nb} - {protected[u] for u in nb if u in protected}
        need = 4 if g.degree(v) == 3 else 3
        if len(lc) < need:
            raise InternalContradiction(f"boundary list of {v} has {len(lc)} colors, expected >= {need}")
        out.append(frozenset(lc))
    return tuple(out)


def extend_small_cycle(g: Graph, cycle: CyclePath, phi: Coloring, ctx: BoundaryContext) -> Coloring:
    """Color a triangle or 4-cycle by scanning all tuples of boundary-list colors.

    A tuple is accepted when it is proper along the cycle and every cycle
    vertex and every off-cycle neighbor ends up with a unique neighbor
    color. Returns the lexicographically least extension.
    """
    vs = cycle.vertices
    k = len(vs)
    touched = sorted(set(vs) | {u for nb in ctx.off for u in nb})
    out = dict(phi)
    for choice in itertools.product(*(sorted(lc) for lc in ctx.lc)):
        if any(choice[i] == choice[(i + 1) % k] for i in range(k)):
            continue
        out.update(zip(vs, choice))
        if all(has_unique_neighbor_color(g, out, x) for x in touched if g[x]):
            return out
    raise InternalContradiction(f"no extension of the {k}-cycle {vs}")


# --- orchestration --------------------------------------------------------


def solve_maxdeg4(g: Graph, lists: Lists, trace: Trace | None = None) -> Coloring:
    """PCF coloring of a connected graph with max degree <= 4 from lists of size degree+3.

    The trace records recursion depth, which reductions ran, and any oracle
    fallback (which correct runs never need).
    """
    trace = trace if trace is not None else Trace()
    if g.max_degree > 4:
        raise PreconditionError("maximum degree must be at most 4")
    if not g.is_connected():
        raise PreconditionError("graph must be connected; solve components separately")
    for v in g:
        if len(lists[v]) < g.degree(v) + 3:
            raise PreconditionError(f"vertex {v} needs at least degree+3 = {g.degree(v) + 3} colors")
    try:
        phi = _solve(g, lists, trace)
        violation = verify_pcf(g, lists, phi)
        if violation is not None:
            raise InternalContradiction(f"degree-4 result failed verification: {violation}")
        return phi
    except InternalContradiction as exc:
        return oracle_fallback(g, lists, trace, str(exc))


def _solve(g: Graph, lists: Lists, trace: Trace) -> Coloring:
    with trace.level():
        if not g.is_connected():
            phi: Coloring = {}
            for comp in g.components():
                phi.update(_solve(g.induced(comp), lists, trace))
            return phi
        if g.n <= 4:
            trace.note("base_oracle")
            trace.substitutions.append(f"oracle on a {g.n}-vertex base graph")
            return oracle_coloring(g, lists)
        red = reduce_low_degree(g, lists)
        if red is not None:
            trace.note(f"reduce_degree{len(red.neighbors)}")
            return red.extend(g, lists, _solve(red.graph, lists, trace))
        cycle = shortest_cycle(g)
        if len(cycle) <= 4:
            return _small_cycle_step(g, cycle, lists, trace)
        return _long_cycle_step(g, cycle, lists, trace)


def _small_cycle_step(g: Graph, cycle: CyclePath, lists: Lists, trace: Trace) -> Coloring:
    trace.note(f"cycle{len(cycle)}")
    gprime = g.remove_vertices(cycle)
    phi = _solve(gprime, lists, trace)
    off = off_cycle_neighbors(g, cycle)
    protected = {}
    for nb in off:
        for u in nb:
            if gprime[u]:
                protected[u] = choose_cu(gprime, phi, u)
    ctx = BoundaryContext(
        cycle,
        tuple(g.degree(v) for v in cycle),
        off,
        phi,
        protected,
        boundary_lists(g, cycle, phi, protected, lists),
    )
    return extend_small_cycle(g, cycle, phi, ctx)


def _long_cycle_step(g: Graph, cycle: CyclePath, lists: Lists, trace: Trace) -> Coloring:
    trace.note("cycle_long")
    gpp = build_gpp(g, cycle)
    phi = _solve(gpp, lists, trace)
    gprime = g.remove_vertices(cycle)
    off = off_cycle_neighbors(g, cycle)
    protected = {u: choose_cu(gprime, phi, u) for nb in off for u in nb}
    ctx = BoundaryContext(
        cycle,
        tuple(g.degree(v) for v in cycle),
        off,
        phi,
        protected,
        boundary_lists(g, cycle, phi, protected, lists),
    )
    h = build_aux_H(ctx)
    if trace.keep_contexts:
        trace.contexts.append((ctx, h))
    selection = find_transversal_IS(h)
    if selection is None:
        raise InternalContradiction(f"auxiliary graph of the {len(cycle)}-cycle has no transversal independent set")
    out = dict(phi)
    out.update(zip(cycle, selection))
    return out
