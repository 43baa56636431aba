"""Constructive PCF list coloring with degree+2 lists.

Cycles, connected subcubic graphs other than C5, and 1-subdivisions of
arbitrary graphs. Every result is verified before it is returned; a step
that should never fail raises :class:`InternalContradiction`, which the
public entry points record in the trace and answer with the oracle.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass

from .coloring import Coloring, ListAssignment, unique_neighbor_colors, verify_pcf
from .cyclic import cyclic_select
from .errors import InternalContradiction, NotColorable, PreconditionError, ResourceLimit
from .graph import CyclePath, Edge, Graph, peel_degree_one, subdivide
from .oracle import Status, solve_exhaustive
from .trace import Trace


def _smallest(candidates, what: str) -> int:
    try:
        return min(candidates)
    except ValueError:
        raise InternalContradiction(f"no color left for {what}") from None


def oracle_fallback(g: Graph, lists: Mapping[int, frozenset[int]], trace: Trace, reason: str) -> Coloring:
    trace.fallbacks.append(reason)
    return oracle_coloring(g, lists)


def oracle_coloring(g: Graph, lists: Mapping[int, frozenset[int]]) -> Coloring:
    outcome = solve_exhaustive(g, lists)
    if outcome.status is Status.SAT:
        return outcome.coloring
    if outcome.status is Status.UNSAT:
        raise NotColorable("the exhaustive oracle found no PCF coloring")
    raise ResourceLimit(f"oracle gave up after {outcome.nodes} nodes")


def cycle_order(g: Graph, start: int | None = None) -> CyclePath:
    """Walk a 2-regular connected graph from ``start`` toward its smaller neighbor."""
    v = min(g) if start is None else start
    order = [v]
    prev, cur = v, min(g[v])
    while cur != v:
        order.append(cur)
        prev, cur = cur, next(x for x in sorted(g[cur]) if x != prev)
    return CyclePath(tuple(order))


# --- cycles ---------------------------------------------------------------


def _distinct_representatives(vertices, lists) -> Coloring:
    """Lexicographically least coloring with pairwise distinct colors."""
    phi: Coloring = {}
    used: set[int] = set()

    def rec(i: int) -> bool:
        if i == len(vertices):
            return True
        v = vertices[i]
        for c in sorted(lists[v]):
            if c not in used:
                phi[v] = c
                used.add(c)
                if rec(i + 1):
                    return True
                used.discard(c)
        phi.pop(v, None)
        return False

    if not rec(0):
        raise InternalContradiction("lists of size >= 4 on at most 4 vertices must have distinct representatives")
    return phi


def cycle_dp(cycle: CyclePath, lists: Mapping[int, frozenset[int]]) -> Coloring | None:
    """Least PCF coloring of a cycle of length >= 5: neighbors and vertices at
    distance two must all differ."""
    vs = cycle.vertices
    choice = cyclic_select([lists[v] for v in vs], lambda i, a, b: a != b, lambda i, a, c: a != c)
    if choice is None:
        return None
    return dict(zip(vs, choice))


def _cycle_recipe(cycle: CyclePath, lists: Mapping[int, frozenset[int]]) -> Coloring | None:
    """Sequential coloring for a cycle of length >= 6 whose lists are not all equal.

    Rotate (or reflect) so that ``L(u_1)`` has a color outside ``L(u_l)``;
    give ``u_1`` that color, color forward avoiding the two previous
    colors, and give ``u_l`` a color avoiding ``u_2``, ``u_{l-2}`` and
    ``u_{l-1}``. The result is not guaranteed to be conflict-free; the
    caller verifies it.
    """
    vs = list(cycle.vertices)
    k = len(vs)
    order = None
    for seq in (vs, vs[::-1]):
        for r in range(k):
            rot = seq[r:] + seq[:r]
            if lists[rot[0]] - lists[rot[-1]]:
                order = rot
                break
        if order:
            break
    if order is None:
        return None
    u = order
    phi: Coloring = {u[0]: min(lists[u[0]] - lists[u[-1]])}
    phi[u[1]] = _smallest(lists[u[1]] - {phi[u[0]]}, "u_2")
    for i in range(2, k - 1):
        phi[u[i]] = _smallest(lists[u[i]] - {phi[u[i - 1]], phi[u[i - 2]]}, f"u_{i + 1}")
    phi[u[-1]] = _smallest(lists[u[-1]] - {phi[u[1]], phi[u[-3]], phi[u[-2]]}, "u_l")
    return phi


def solve_cycle_pcf(cycle: CyclePath, lists: Mapping[int, frozenset[int]], trace: Trace | None = None) -> Coloring:
    """PCF coloring of a cycle from lists of size at least 4.

    Raises :class:`NotColorable` for the 5-cycle when no coloring exists
    (always the case for four identical colors).
    """
    trace = trace if trace is not None else Trace()
    vs = cycle.vertices
    k = len(vs)
    if any(len(lists[v]) < 4 for v in vs):
        raise PreconditionError("cycle lists must have at least 4 colors")
    g = Graph(vs, ((vs[i], vs[(i + 1) % k]) for i in range(k)))

    if k <= 4:
        trace.note("cycle_sdr")
        return _distinct_representatives(vs, lists)

    identical = len({lists[v] for v in vs}) == 1
    if k == 5:
        trace.note("cycle_dp")
        phi = cycle_dp(cycle, lists)
        if phi is None:
            why = "C5 with identical 4-lists" if identical and len(lists[vs[0]]) == 4 else "C5 lists"
            raise NotColorable(f"no PCF coloring exists ({why})")
        return phi

    if identical:
        trace.note("cycle_dp")
        four = frozenset(sorted(lists[vs[0]])[:4])
        phi = cycle_dp(cycle, {v: four for v in vs})
        if phi is None:
            raise InternalContradiction(f"C{k} has no PCF 4-coloring")
        return phi

    trace.note("cycle_recipe")
    phi = _cycle_recipe(cycle, lists)
    if phi is not None and verify_pcf(g, lists, phi) is None:
        return phi
    trace.note("cycle_recipe_repaired")
    phi = cycle_dp(cycle, lists)
    if phi is None:
        raise InternalContradiction(f"cycle DP found nothing on C{k}")
    return phi


# --- subcubic graphs ------------------------------------------------------


def extend_over_pendant(
    g: Graph, phi: Coloring, v: int, x: int, lists: Mapping[int, frozenset[int]]
) -> Coloring:
    """Color the pendant ``v`` hanging from colored ``x``.

    A protected color ``c_x`` (smallest uniquely occurring color around
    ``x`` without ``v``) is kept unique by giving ``v`` the smallest color
    outside ``{phi(x), c_x}``.
    """
    rest = {u: c for u, c in phi.items() if u != v}
    protected = unique_neighbor_colors(g, rest, x)
    c_x = _smallest(protected, f"protected color at {x}")
    out = dict(rest)
    out[v] = _smallest(lists[v] - {rest[x], c_x}, f"pendant {v}")
    return out


def _check_degree_lists(g: Graph, lists: Mapping[int, frozenset[int]], k: int) -> None:
    for v in g:
        if v not in lists:
            raise PreconditionError(f"no list for vertex {v}")
        if len(lists[v]) < g.degree(v) + k:
            raise PreconditionError(f"vertex {v} has {len(lists[v])} colors, needs degree+{k} = {g.degree(v) + k}")


def _color_k2(g: Graph, lists) -> Coloring:
    a, b = sorted(g)
    phi = {a: min(lists[a])}
    phi[b] = _smallest(lists[b] - {phi[a]}, f"vertex {b}")
    return phi


def solve_subcubic(g: Graph, lists: Mapping[int, frozenset[int]], trace: Trace | None = None) -> Coloring:
    """PCF coloring of a connected graph with maximum degree <= 3, not C5,
    from lists of size ``d(v) + 2``.

    Pendant trees are peeled off and re-attached last. A cycle core is
    colored directly; a core containing a degree-3 vertex is handed to the
    exhaustive oracle (recorded in ``trace.substitutions``).
    """
    trace = trace if trace is not None else Trace()
    if not g.is_connected():
        raise PreconditionError("graph must be connected")
    if g.max_degree > 3:
        raise PreconditionError("maximum degree must be at most 3")
    if g.n == 5 and g.is_cycle():
        raise PreconditionError("the 5-cycle is excluded")
    _check_degree_lists(g, lists, 2)
    try:
        phi = _subcubic(g, lists, trace)
        violation = verify_pcf(g, lists, phi)
        if violation is not None:
            raise InternalContradiction(f"subcubic result failed verification: {violation}")
        return phi
    except InternalContradiction as exc:
        return oracle_fallback(g, lists, trace, str(exc))


def _subcubic(g: Graph, lists, trace: Trace) -> Coloring:
    if g.n == 1:
        return {v: min(lists[v]) for v in g}
    if g.n == 2:
        return _color_k2(g, lists)
    if g.is_cycle():
        return solve_cycle_pcf(cycle_order(g), lists, trace)

    peel = peel_degree_one(g)
    core = peel.core
    pending = list(peel.removed)
    if core.n == 2:
        trace.note("core_k2")
        phi = _color_k2(core, lists)
    elif core.max_degree == 2:
        trace.note("core_cycle")
        last, w1 = pending.pop()
        phi = _color_core_cycle(core, w1, last, lists)
    else:
        trace.note("core_oracle")
        trace.substitutions.append("oracle on a core with a degree-3 vertex")
        outcome = solve_exhaustive(core, lists)
        if outcome.status is Status.LIMIT:
            raise ResourceLimit("oracle gave up on the degree-3 core")
        if outcome.status is Status.UNSAT:
            raise InternalContradiction("a degree-3 core with 4-lists had no PCF coloring")
        phi = dict(outcome.coloring)
    for v, x in reversed(pending):
        phi = extend_over_pendant(g, phi, v, x, lists)
    return phi


def _color_core_cycle(core: Graph, w1: int, pendant: int, lists) -> Coloring:
    """Color a cycle core ``w_1..w_t`` together with the last peeled vertex,
    which hangs from ``w_1``."""
    w = cycle_order(core, w1).vertices
    t = len(w)
    phi: Coloring = {w[1]: min(lists[w[1]])}
    phi[w[2]] = _smallest(lists[w[2]] - {phi[w[1]]}, "w_3")
    for j in range(3, t):
        phi[w[j]] = _smallest(lists[w[j]] - {phi[w[j - 1]], phi[w[j - 2]]}, f"w_{j + 1}")
    phi[w[0]] = _smallest(lists[w[0]] - {phi[w[1]], phi[w[2]], phi[w[t - 2]], phi[w[t - 1]]}, "w_1")
    phi[pendant] = _smallest(lists[pendant] - {phi[w[0]], phi[w[1]]}, "last pendant")
    return phi


# --- 1-subdivisions -------------------------------------------------------


@dataclass(frozen=True)
class SubdivisionInstance:
    """A base graph, its 1-subdivision, the edge-to-midpoint map and lists on S(G)."""

    base: Graph
    graph: Graph
    midpoint: dict[Edge, int]
    lists: ListAssignment

    @classmethod
    def build(cls, base: Graph, lists: Mapping[int, frozenset[int]]) -> SubdivisionInstance:
        s, midpoint = subdivide(base)
        inst = cls(base, s, midpoint, {v: frozenset(lists[v]) for v in s})
        inst.validate()
        return inst

    def validate(self) -> None:
        for v in self.base:
            if len(self.lists[v]) < self.base.degree(v) + 2:
                raise PreconditionError(f"branch vertex {v} needs at least degree+2 colors")
        for e, m in self.midpoint.items():
            if len(self.lists[m]) < 4:
                raise PreconditionError(f"midpoint {m} of edge {e} needs at least 4 colors")

    def mid(self, u: int, v: int) -> int:
        return self.midpoint[(u, v) if u < v else (v, u)]


def solve_subdivision(inst: SubdivisionInstance, trace: Trace | None = None) -> Coloring:
    """PCF coloring of S(G) from lists of size degree+2, by induction on G.

    Midpoint lists are first trimmed to their four smallest colors, which
    the color-counting step relies on.
    """
    trace = trace if trace is not None else Trace()
    inst.validate()
    lists = dict(inst.lists)
    for m in inst.midpoint.values():
        lists[m] = frozenset(sorted(lists[m])[:4])
    try:
        phi = _subdiv(inst, inst.base, lists, trace)
        violation = verify_pcf(inst.graph, inst.lists, phi)
        if violation is not None:
            raise InternalContradiction(f"subdivision result failed verification: {violation}")
        return phi
    except InternalContradiction as exc:
        return oracle_fallback(inst.graph, inst.lists, trace, str(exc))


def _subdiv(inst: SubdivisionInstance, base: Graph, lists: dict[int, frozenset[int]], trace: Trace) -> Coloring:
    with trace.level():
        return _subdiv_step(inst, base, lists, trace)


def _subdiv_step(inst, base: Graph, lists, trace: Trace) -> Coloring:
    s = inst.graph
    if not base.is_connected():
        phi: Coloring = {}
        for comp in base.components():
            phi.update(_subdiv(inst, base.induced(comp), lists, trace))
        return phi
    if base.n == 1:
        (v,) = base
        return {v: min(lists[v])}
    if base.n == 2:
        a, b = sorted(base)
        phi = {a: min(lists[a])}
        phi[b] = _smallest(lists[b] - {phi[a]}, f"branch {b}")
        m = inst.mid(a, b)
        phi[m] = _smallest(lists[m] - {phi[a], phi[b]}, f"midpoint {m}")
        return phi

    leaves = [v for v in base if base.degree(v) == 1]
    if leaves:
        trace.note("subdiv_leaf")
        v1 = leaves[0]
        (v2,) = base[v1]
        alpha = min(lists[v1])
        sub = dict(lists)
        sub[v2] = lists[v2] - {alpha}
        phi = _subdiv(inst, base.remove_vertices([v1]), sub, trace)
        c2 = _smallest(unique_neighbor_colors(s, phi, v2), f"protected color at {v2}")
        m = inst.mid(v1, v2)
        phi[v1] = alpha
        phi[m] = _smallest(lists[m] - {phi[v2], c2, alpha}, f"midpoint {m}")
        return phi

    def mids(v):
        return [inst.mid(v, x) for x in sorted(base[v])]

    s_vertices = list(base) + [inst.mid(a, b) for a, b in base.edges()]
    if base.max_degree == 2 and len({lists[x] for x in s_vertices}) == 1:
        trace.note("subdiv_cycle")
        return solve_cycle_pcf(cycle_order(s.induced(s_vertices)), lists, trace)

    v1 = next(
        v for v in base if base.degree(v) >= 3 or any(lists[m] != lists[v] for m in mids(v))
    )
    trace.note("subdiv_branch")
    return _subdiv_branch(inst, base, lists, trace, v1)


def select_alpha(lists: Mapping[int, frozenset[int]], v1: int, midpoints: list[int]) -> tuple[int, list[int]]:
    """Smallest color of ``v1`` carried by at most ``min(3, d-1)`` incident
    midpoint lists; returns the color and those midpoints."""
    d = len(midpoints)
    carriers = {c: [m for m in midpoints if c in lists[m]] for c in sorted(lists[v1])}
    total = sum(len(ms) for ms in carriers.values())
    if total > 4 * d:
        raise InternalContradiction(f"color incidences {total} exceed 4d = {4 * d}")
    for c, ms in carriers.items():
        if len(ms) <= min(3, d - 1):
            return c, ms
    raise InternalContradiction(f"no admissible color at branch vertex {v1}")


def _subdiv_branch(inst, base: Graph, lists, trace: Trace, v1: int) -> Coloring:
    s = inst.graph
    nbrs = sorted(base[v1])
    mid_of = {x: inst.mid(v1, x) for x in nbrs}
    alpha, carriers = select_alpha(lists, v1, [mid_of[x] for x in nbrs])
    carrier_set = set(carriers)
    v2 = next(x for x in nbrs if mid_of[x] not in carrier_set)

    sub = dict(lists)
    for x in nbrs:
        sub[x] = lists[x] - {alpha}
    phi = _subdiv(inst, base.remove_vertices([v1]), sub, trace)

    protect = {x: _smallest(unique_neighbor_colors(s, phi, x), f"protected color at {x}") for x in nbrs}
    phi[v1] = alpha
    for x in nbrs:
        m = mid_of[x]
        if m in carrier_set:
            phi[m] = _smallest(lists[m] - {phi[x], protect[x], alpha}, f"midpoint {m}")

    m2 = mid_of[v2]
    used = Counter(phi[m] for m in carriers)
    if not carriers:
        trace.note("beta_empty")
        beta = _smallest(lists[m2] - {phi[v2], protect[v2], alpha}, "beta")
        phi[m2] = beta
    elif len(used) == 1:
        trace.note("beta_single")
        beta = _smallest(lists[m2] - {phi[v2], protect[v2], alpha} - set(used), "beta")
        phi[m2] = beta
    else:
        trace.note("beta_unique")
        beta = _smallest([c for c, k in used.items() if k == 1], "beta")
    for x in nbrs:
        m = mid_of[x]
        if m not in phi:
            phi[m] = _smallest(lists[m] - {phi[x], protect[x], alpha, beta}, f"midpoint {m}")
    return phi
