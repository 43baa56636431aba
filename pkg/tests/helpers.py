"""Test-only oracles and strategies, written without reusing library search code."""

from __future__ import annotations

import itertools
from collections.abc import Mapping, Sequence

import networkx as nx
import numpy as np
from hypothesis import strategies as st

from pcfcolor.graph import Graph

CHUNK = 1 << 16


def naive_pcf_count(g: Graph, lists: Mapping[int, Sequence[int]], cap: int | None = None) -> int:
    """Count PCF colorings by scanning the full product of lists in numpy chunks.

    No pruning and no vertex ordering: every tuple is decoded from a mixed
    radix index and checked for properness and a unique neighbor color at
    every non-isolated vertex.
    """
    verts = sorted(g)
    pos = {v: i for i, v in enumerate(verts)}
    palettes = [np.array(sorted(lists[v]), dtype=np.int64) for v in verts]
    radix = [len(p) for p in palettes]
    total = int(np.prod(radix, dtype=object)) if radix else 1
    edges = [(pos[u], pos[v]) for u, v in g.edges()]
    nbhd = [[pos[u] for u in g[v]] for v in verts]
    found = 0
    for start in range(0, total, CHUNK):
        idx = np.arange(start, min(total, start + CHUNK), dtype=np.int64)
        cols = np.empty((idx.size, len(verts)), dtype=np.int64)
        rest = idx.copy()
        for j in range(len(verts) - 1, -1, -1):
            rest, digit = np.divmod(rest, radix[j])
            cols[:, j] = palettes[j][digit]
        ok = np.ones(idx.size, dtype=bool)
        for a, b in edges:
            ok &= cols[:, a] != cols[:, b]
        for nb in nbhd:
            if not nb:
                continue
            has_unique = np.zeros(idx.size, dtype=bool)
            for u in nb:
                alone = np.ones(idx.size, dtype=bool)
                for w in nb:
                    if w != u:
                        alone &= cols[:, u] != cols[:, w]
                has_unique |= alone
            ok &= has_unique
        found += int(ok.sum())
        if cap is not None and found >= cap:
            return cap
    return found


def naive_satisfiable(g: Graph, lists) -> bool:
    return naive_pcf_count(g, lists, cap=1) > 0


def brute_force_select(options, near_ok, far_ok):
    """Lexicographically least tuple satisfying every cyclic distance-1 and distance-2 constraint."""
    k = len(options)
    for choice in itertools.product(*(sorted(set(o)) for o in options)):
        if all(near_ok(i, choice[i], choice[(i + 1) % k]) for i in range(k)) and all(
            far_ok(i, choice[i], choice[(i + 2) % k]) for i in range(k)
        ):
            return choice
    return None


def brute_force_transversal(h):
    """Lexicographically least one-per-class choice with no H edge between chosen nodes."""
    k = h.k
    edges = h.short | h.long
    for choice in itertools.product(*h.classes):
        nodes = list(enumerate(choice))
        if not any((x, y) in edges or (y, x) in edges for x, y in itertools.combinations(nodes, 2)):
            return choice
    return None


def brute_girth(g: Graph) -> int | None:
    """Length of a shortest cycle via networkx simple-cycle enumeration."""
    h = to_nx(g)
    lengths = [len(c) for c in nx.simple_cycles(h)]
    return min(lengths) if lengths else None


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g)
    h.add_edges_from(g.edges())
    return h


def is_pcf_direct(g: Graph, lists, phi) -> bool:
    """Definition check written independently of the library verifier."""
    if set(phi) != set(g):
        return False
    if any(phi[v] not in lists[v] for v in g):
        return False
    if any(phi[u] == phi[v] for u, v in g.edges()):
        return False
    for v in g:
        colors = [phi[u] for u in g[v]]
        if colors and all(colors.count(c) > 1 for c in colors):
            return False
    return True


# --- hypothesis strategies -------------------------------------------------


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8, max_degree: int | None = None, connected: bool = False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    edges = []
    deg = [0] * n
    for u, v in chosen:
        if max_degree is None or (deg[u] < max_degree and deg[v] < max_degree):
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    g = Graph.from_edges(n, edges)
    if connected:
        # chain the components together through their smallest vertices
        comps = g.components()
        links = []
        for a, b in zip(comps, comps[1:]):
            u = min(a, key=lambda x: (deg[x], x))
            v = min(b, key=lambda x: (deg[x], x))
            links.append((u, v))
            deg[u] += 1
            deg[v] += 1
        if max_degree is not None and any(d > max_degree for d in deg):
            from hypothesis import assume

            assume(False)
        g = g.add_edges(links)
    return g


@st.composite
def lists_for(draw, g: Graph, slack: int = 0, universe: int = 6, min_size: int = 1):
    out = {}
    for v in sorted(g):
        size = max(min_size, g.degree(v) + slack)
        pal = range(max(universe, size))
        out[v] = frozenset(draw(st.lists(st.sampled_from(pal), unique=True, min_size=size, max_size=size)))
    return out


def complete_colorings(g: Graph, lists):
    verts = sorted(g)
    for choice in itertools.product(*(sorted(lists[v]) for v in verts)):
        yield dict(zip(verts, choice))


# --- auxiliary-graph audits -----------------------------------------------------


def derive_aux_edges(ctx):
    """Short and long edges of H recomputed from the definitions alone."""
    k = len(ctx.lc)
    off_colors = [frozenset(ctx.phi[u] for u in nb) for nb in ctx.off]
    short, long = set(), set()
    for i in range(k):
        j, l = (i + 1) % k, (i + 2) % k
        for a in ctx.lc[i]:
            if a in ctx.lc[j]:
                short.add(((i, a), (j, a)))
            for b in ctx.lc[l]:
                if ctx.degree[j] == 4 and a != b and off_colors[j] == {a, b}:
                    long.add(((i, a), (l, b)))
                if ctx.degree[j] == 3 and a == b and off_colors[j] == {a}:
                    long.add(((i, a), (l, b)))
    return short, long


def audit_context(ctx, h, final=None, brute_cap: int = 10**7) -> list[str]:
    """Every structural invariant of one boundary context; returns violation messages."""
    from pcfcolor.degree4 import blocked_pairs, blocks, find_transversal_IS

    bad = []
    k = ctx.k
    palette = sorted(set().union(*ctx.lc) | {ctx.phi[u] for nb in ctx.off for u in nb})
    for i in range(k):
        pairs = blocked_pairs(ctx, i)
        direct = {(a, b) for a in palette for b in palette if blocks(ctx, i, (a, b))}
        if pairs != direct:
            bad.append(f"blocked pair set of v{i} disagrees with blocks()")
        if len(pairs) > 2:
            bad.append(f"v{i} blocks {len(pairs)} pairs")
        if len(pairs) == 2:
            (a, b), (c, d) = sorted(pairs)
            if not (a == d and b == c and a != b):
                bad.append(f"v{i} blocks two pairs not of swapped form: {sorted(pairs)}")
        if ctx.degree[i] == 3 and any(a != b for a, b in pairs):
            bad.append(f"degree-3 vertex v{i} blocks an off-diagonal pair")
        own = {ctx.phi[u] for u in ctx.off[i]} | {ctx.protected[u] for u in ctx.off[i] if u in ctx.protected}
        if ctx.lc[i] & own:
            bad.append(f"boundary list of v{i} meets its off-cycle colors")
        if len(ctx.lc[i]) < (4 if ctx.degree[i] == 3 else 3):
            bad.append(f"boundary list of v{i} too small")
    short, long = derive_aux_edges(ctx)
    if short != set(h.short) or long != set(h.long):
        bad.append("H edges differ from the definition")
    for node in h.nodes():
        if len(h.forward(node)) > 1:
            bad.append(f"{node} has {len(h.forward(node))} forward edges")
        if len(h.backward(node)) > 1:
            bad.append(f"{node} has {len(h.backward(node))} backward edges")
    for i in range(k):
        between = sorted(e for e in h.long if e[0][0] == i)
        if len(between) > 2:
            bad.append(f"{len(between)} long edges leave X{i}")
        if len(between) == 2:
            ((_, a1), (_, b1)), ((_, a2), (_, b2)) = between
            if not (a1 == b2 and a2 == b1 and a1 != a2):
                bad.append(f"two long edges from X{i} do not cross: {between}")
    size = 1
    for cls in h.classes:
        size *= len(cls)
    if size <= brute_cap and find_transversal_IS(h) != brute_force_transversal(h):
        bad.append("transversal DP disagrees with brute force")
    if final is not None:
        for i, v in enumerate(ctx.cycle):
            for u in ctx.off[i]:
                if final[v] == ctx.protected.get(u):
                    bad.append(f"cycle vertex {v} took the protected color of {u}")
    return bad
