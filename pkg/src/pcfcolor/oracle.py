"""Exhaustive ground truth: backtracking PCF search and choosability enumeration."""

from __future__ import annotations

import enum
import itertools
import math
import os
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass

from .coloring import Adjacency, Coloring, ListAssignment
from .errors import PreconditionError

DEFAULT_NODE_LIMIT = 10**8
DEFAULT_MAX_VERTICES = 7


def default_node_limit() -> int:
    env = os.environ.get("PCF_NODE_LIMIT")
    return int(env) if env else DEFAULT_NODE_LIMIT


class Status(enum.Enum):
    SAT = "satisfiable"
    UNSAT = "unsatisfiable"
    LIMIT = "resource-limit"


@dataclass
class SolveOutcome:
    status: Status
    coloring: Coloring | None
    nodes: int

    @property
    def satisfiable(self) -> bool:
        return self.status is Status.SAT


class _LimitReached(Exception):
    pass


class Searcher:
    """Backtracking search over one fixed graph, reusable across list assignments.

    Vertices are colored in order of descending degree (ties by id). After
    each assignment, properness is checked against colored neighbors, and
    every non-isolated vertex whose last neighbor was just colored must see
    a uniquely occurring color.
    """

    def __init__(self, g: Adjacency):
        order = sorted(g, key=lambda v: (-len(list(g[v])), v))
        pos = {v: i for i, v in enumerate(order)}
        self.order = order
        self.nbrs = [tuple(pos[u] for u in sorted(g[v])) for v in order]
        self.earlier = [tuple(q for q in nb if q < p) for p, nb in enumerate(self.nbrs)]
        checks: list[list[int]] = [[] for _ in order]
        for p, nb in enumerate(self.nbrs):
            if nb:
                checks[max(nb)].append(p)
        self.checks = [tuple(c) for c in checks]

    def _lists(self, lists: Mapping[int, Iterable[int]]) -> list[tuple[int, ...]]:
        return [tuple(sorted(lists[v])) for v in self.order]

    def _unique_ok(self, col: list[int], w: int) -> bool:
        seen: set[int] = set()
        dup: set[int] = set()
        for q in self.nbrs[w]:
            c = col[q]
            if c in seen:
                dup.add(c)
            else:
                seen.add(c)
        return len(seen) > len(dup)

    def _run(self, lists, node_limit: int, on_solution) -> int:
        """Depth-first search; ``on_solution`` returns True to stop."""
        n = len(self.order)
        opts = self._lists(lists)
        col = [-1] * n
        nodes = 0
        earlier, checks = self.earlier, self.checks

        def dfs(p: int) -> bool:
            nonlocal nodes
            if p == n:
                return on_solution(col)
            for c in opts[p]:
                if any(col[q] == c for q in earlier[p]):
                    continue
                nodes += 1
                if nodes > node_limit:
                    raise _LimitReached
                col[p] = c
                if all(self._unique_ok(col, w) for w in checks[p]) and dfs(p + 1):
                    return True
            col[p] = -1
            return False

        dfs(0)
        return nodes

    def solve(self, lists: Mapping[int, Iterable[int]], node_limit: int | None = None) -> SolveOutcome:
        limit = default_node_limit() if node_limit is None else node_limit
        found: list[Coloring] = []

        def keep(col):
            found.append({v: col[p] for p, v in enumerate(self.order)})
            return True

        try:
            nodes = self._run(lists, limit, keep)
        except _LimitReached:
            return SolveOutcome(Status.LIMIT, None, limit)
        if found:
            return SolveOutcome(Status.SAT, found[0], nodes)
        return SolveOutcome(Status.UNSAT, None, nodes)

    def count(self, lists: Mapping[int, Iterable[int]], cap: int, node_limit: int | None = None) -> int:
        limit = default_node_limit() if node_limit is None else node_limit
        total = 0

        def tally(_col):
            nonlocal total
            total += 1
            return total >= cap

        self._run(lists, limit, tally)
        return total


def solve_exhaustive(g: Adjacency, lists: Mapping[int, Iterable[int]], node_limit: int | None = None) -> SolveOutcome:
    """Complete search for a PCF coloring from ``lists``.

    ``node_limit`` caps the number of color placements (default ``10**8``,
    or the ``PCF_NODE_LIMIT`` environment variable). Hitting it yields
    ``Status.LIMIT``, never a false verdict.
    """
    return Searcher(g).solve(lists, node_limit)


def count_solutions(g: Adjacency, lists: Mapping[int, Iterable[int]], cap: int) -> int:
    """Number of distinct PCF colorings from ``lists``, truncated at ``cap``."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    return Searcher(g).count(lists, cap)


# --- choosability ---------------------------------------------------------


class Choosability(enum.Enum):
    CHOOSABLE = "choosable"
    NOT_CHOOSABLE = "not-choosable"
    LIMIT = "resource-limit"


@dataclass
class ChoosabilityVerdict:
    status: Choosability
    counterexample: ListAssignment | None
    tested: int


def canonical_assignments(demand: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """List assignments in first-appearance canonical form, in lexicographic order.

    Position ``i`` gets a sorted tuple of ``demand[i]`` colors. Colors are
    named in order of first appearance when the lists are read in order, so
    each list is a subset of the colors already named plus a block of fresh
    consecutive names. Every assignment over any palette is a renaming of
    exactly one tuple produced here.
    """
    n = len(demand)
    chosen: list[tuple[int, ...]] = []

    def candidates(f: int, used: int) -> list[tuple[int, ...]]:
        out = []
        for s in range(min(f, used) + 1):
            fresh = tuple(range(used, used + f - s))
            for sub in itertools.combinations(range(used), s):
                out.append(sub + fresh)
        out.sort()
        return out

    def rec(i: int, used: int):
        if i == n:
            yield tuple(chosen)
            return
        for cand in candidates(demand[i], used):
            chosen.append(cand)
            yield from rec(i + 1, max(used, cand[-1] + 1) if cand else used)
            chosen.pop()

    yield from rec(0, 0)


def raw_assignments(demand: Sequence[int], universe: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Every assignment of ``demand[i]``-subsets of ``range(universe)``, lexicographically."""
    return itertools.product(*(itertools.combinations(range(universe), f) for f in demand))


def raw_multiplicity(assignment: Sequence[Sequence[int]], universe: int) -> int:
    """How many raw assignments over ``range(universe)`` rename to this canonical one."""
    used = 0
    fresh_blocks = []
    for lst in assignment:
        fresh = sum(1 for c in lst if c >= used)
        fresh_blocks.append(fresh)
        used += fresh
    denom = math.prod(math.factorial(b) for b in fresh_blocks)
    return math.perm(universe, used) // denom


def check_pcf_choosable(
    g: Adjacency,
    demand: Mapping[int, int],
    budget: int | None = None,
    *,
    canonical: bool = True,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    node_limit: int | None = None,
) -> ChoosabilityVerdict:
    """Decide whether every list assignment with ``|L(v)| = demand[v]`` admits a PCF coloring.

    Assignments are drawn from a palette of ``sum(demand)`` colors, which is
    enough to realize every assignment up to renaming. With ``canonical``
    (the default) only first-appearance canonical forms are tested; the raw
    product space is available for cross-checking. ``budget`` caps the
    number of assignments tested; without it, graphs larger than
    ``max_vertices`` are refused.
    """
    vertices = sorted(g)
    if budget is None and len(vertices) > max_vertices:
        raise PreconditionError(f"{len(vertices)} vertices exceeds the guard of {max_vertices}; pass a budget")
    if any(demand[v] < 1 for v in vertices):
        raise PreconditionError("every demand must be at least 1")
    sizes = [demand[v] for v in vertices]
    universe = sum(sizes)
    stream = canonical_assignments(sizes) if canonical else raw_assignments(sizes, universe)
    searcher = Searcher(g)
    tested = 0
    for assignment in stream:
        if budget is not None and tested >= budget:
            return ChoosabilityVerdict(Choosability.LIMIT, None, tested)
        tested += 1
        lists = {v: frozenset(lst) for v, lst in zip(vertices, assignment)}
        outcome = searcher.solve(lists, node_limit)
        if outcome.status is Status.LIMIT:
            return ChoosabilityVerdict(Choosability.LIMIT, None, tested)
        if outcome.status is Status.UNSAT:
            return ChoosabilityVerdict(Choosability.NOT_CHOOSABLE, lists, tested)
    return ChoosabilityVerdict(Choosability.CHOOSABLE, None, tested)
