"""List assignments, partial colorings and the proper conflict-free verifier.

Every solver in the package is judged by :func:`verify_pcf`.
"""

from __future__ import annotations

import enum
import random
from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .errors import FormatError, PreconditionError

#: Adjacency view accepted by the verifier and the oracle (``Graph`` qualifies).
Adjacency = Mapping[int, Iterable[int]]
ListAssignment = dict[int, frozenset[int]]
#: A partial coloring; uncolored vertices are simply absent.
Coloring = dict[int, int]


class ViolationKind(enum.Enum):
    INCOMPLETE = "incomplete"
    OFF_LIST = "off-list"
    IMPROPER_EDGE = "improper-edge"
    EMPTY_UNIQUE_SET = "empty-unique-set"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    vertex: int | None = None
    edge: tuple[int, int] | None = None

    def __str__(self) -> str:
        where = f"edge {self.edge[0]}-{self.edge[1]}" if self.edge else f"vertex {self.vertex}"
        return f"{self.kind.value} at {where}"


def unique_neighbor_colors(g: Adjacency, phi: Mapping[int, int], v: int) -> set[int]:
    """Colors used on exactly one colored neighbor of ``v``."""
    if v not in g:
        raise KeyError(f"vertex {v} not in graph")
    counts = Counter(phi[u] for u in g[v] if u in phi)
    return {c for c, k in counts.items() if k == 1}


def has_unique_neighbor_color(g: Adjacency, phi: Mapping[int, int], v: int) -> bool:
    counts = Counter(phi[u] for u in g[v] if u in phi)
    return 1 in counts.values()


def verify_pcf(g: Adjacency, lists: Mapping[int, Iterable[int]], phi: Mapping[int, int]) -> Violation | None:
    """First violation of "complete, on-list, proper, conflict-free", or ``None``.

    Scan order: vertices ascending (completeness, list membership), edges in
    lexicographic order (properness), then vertices ascending (unique color).
    Isolated vertices need no unique neighbor color.
    """
    vertices = sorted(g)
    for v in vertices:
        if v not in phi:
            return Violation(ViolationKind.INCOMPLETE, vertex=v)
        if phi[v] not in lists[v]:
            return Violation(ViolationKind.OFF_LIST, vertex=v)
    for u in vertices:
        for w in sorted(g[u]):
            if u < w and phi[u] == phi[w]:
                return Violation(ViolationKind.IMPROPER_EDGE, edge=(u, w))
    for v in vertices:
        if g[v] and not has_unique_neighbor_color(g, phi, v):
            return Violation(ViolationKind.EMPTY_UNIQUE_SET, vertex=v)
    return None


def is_pcf(g: Adjacency, lists: Mapping[int, Iterable[int]], phi: Mapping[int, int]) -> bool:
    return verify_pcf(g, lists, phi) is None


def uniform_lists(g: Iterable[int], colors: Iterable[int]) -> ListAssignment:
    palette = frozenset(colors)
    return {v: palette for v in g}


def degree_plus_k_lists(g: Adjacency, k: int, universe: int, seed: int) -> ListAssignment:
    """Seeded random lists of size exactly ``d(v) + k`` drawn from ``range(universe)``."""
    need = max((len(list(g[v])) for v in g), default=0) + k
    if universe < need:
        raise PreconditionError(f"universe {universe} is smaller than max degree + k = {need}")
    rng = random.Random(seed)
    colors = range(universe)
    return {v: frozenset(rng.sample(colors, len(list(g[v])) + k)) for v in sorted(g)}


def list_slack(g: Adjacency, lists: Mapping[int, Iterable[int]]) -> int:
    """Largest ``k`` such that every list has at least ``d(v) + k`` colors."""
    return min((len(set(lists[v])) - len(list(g[v])) for v in g), default=0)


# --- text formats ---------------------------------------------------------


def serialize_lists(lists: Mapping[int, Iterable[int]]) -> str:
    return "".join(f"{v}: {' '.join(map(str, sorted(lists[v])))}\n" for v in sorted(lists))


def parse_lists(text: str, n: int | None = None) -> ListAssignment:
    """Parse lines ``<v>: c1 c2 ...``. With ``n`` given, every vertex of
    ``0..n-1`` must appear exactly once."""
    lists: ListAssignment = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise FormatError(f"expected '<v>: colors', got {line!r}", lineno)
        try:
            v = int(head)
            colors = [int(c) for c in rest.split()]
        except ValueError:
            raise FormatError(f"non-integer token in {line!r}", lineno) from None
        if v in lists:
            raise FormatError(f"vertex {v} listed twice", lineno)
        if n is not None and not 0 <= v < n:
            raise FormatError(f"vertex id {v} out of range", lineno)
        if not colors:
            raise FormatError(f"empty list for vertex {v}", lineno)
        if any(c < 0 for c in colors):
            raise FormatError(f"negative color in {line!r}", lineno)
        lists[v] = frozenset(colors)
    if n is not None and len(lists) != n:
        missing = sorted(set(range(n)) - set(lists))
        raise FormatError(f"no list for vertices {missing}")
    return lists


def serialize_coloring(phi: Mapping[int, int]) -> str:
    return "".join(f"{v} = {phi[v]}\n" for v in sorted(phi))


def parse_coloring(text: str, n: int | None = None) -> Coloring:
    phi: Coloring = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, rest = line.partition("=")
        if not sep:
            raise FormatError(f"expected '<v> = c', got {line!r}", lineno)
        try:
            v, c = int(head), int(rest)
        except ValueError:
            raise FormatError(f"non-integer token in {line!r}", lineno) from None
        if v in phi:
            raise FormatError(f"vertex {v} colored twice", lineno)
        if n is not None and not 0 <= v < n:
            raise FormatError(f"vertex id {v} out of range", lineno)
        if c < 0:
            raise FormatError(f"negative color in {line!r}", lineno)
        phi[v] = c
    return phi
