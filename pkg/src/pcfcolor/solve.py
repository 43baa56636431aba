"""Strategy routing shared by the CLI and the bench runner."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping

from .coloring import Coloring, list_slack, verify_pcf
from .constructive import solve_subcubic
from .degree4 import solve_maxdeg4
from .errors import NotColorable, PreconditionError, ResourceLimit
from .graph import Graph
from .oracle import Status, solve_exhaustive
from .trace import Trace

STRATEGIES = ("auto", "bruteforce", "constructive", "degree4")


class Outcome(enum.Enum):
    SAT = "sat"
    UNSAT = "unsat"
    LIMIT = "limit"


@dataclass
class SolveResult:
    outcome: Outcome
    strategy: str
    coloring: Coloring | None = None
    trace: Trace = field(default_factory=Trace)
    nodes: int = 0


def check_lists_cover(g: Graph, lists: Mapping[int, frozenset[int]]) -> None:
    missing = [v for v in g if not lists.get(v)]
    if missing:
        raise PreconditionError(f"vertex {missing[0]} has no list")
    extra = [v for v in lists if v not in g]
    if extra:
        raise PreconditionError(f"list given for unknown vertex {extra[0]}")


def _is_c5(g: Graph) -> bool:
    return g.n == 5 and g.is_cycle()


def route(g: Graph, lists: Mapping[int, frozenset[int]]) -> str:
    """Pick a strategy; anything short of a clean precondition match is brute force."""
    if g.n == 0:
        return "bruteforce"
    slack = list_slack(g, lists)
    parts = [g.induced(c) for c in g.components()]
    if g.max_degree <= 3 and slack >= 2 and not any(_is_c5(p) for p in parts):
        return "constructive"
    if g.max_degree <= 4 and slack >= 3:
        return "degree4"
    return "bruteforce"


def precheck(g: Graph, lists: Mapping[int, frozenset[int]], strategy: str) -> None:
    check_lists_cover(g, lists)
    if g.n == 0:
        return
    slack = list_slack(g, lists)
    if strategy == "constructive":
        if g.max_degree > 3:
            raise PreconditionError(f"constructive needs maximum degree <= 3, got {g.max_degree}")
        if slack < 2:
            raise PreconditionError(f"constructive needs lists of size degree+2, slack is {slack}")
        if any(_is_c5(g.induced(c)) for c in g.components()):
            raise PreconditionError("constructive does not apply to a 5-cycle component")
    elif strategy == "degree4":
        if g.max_degree > 4:
            raise PreconditionError(f"degree4 needs maximum degree <= 4, got {g.max_degree}")
        if slack < 3:
            raise PreconditionError(f"degree4 needs lists of size degree+3, slack is {slack}")


def solve(
    g: Graph,
    lists: Mapping[int, frozenset[int]],
    strategy: str = "auto",
    node_limit: int | None = None,
) -> SolveResult:
    """Solve one instance; every SAT result has passed the verifier.

    Raises PreconditionError when the chosen strategy does not apply.
    """
    if strategy not in STRATEGIES:
        raise PreconditionError(f"unknown strategy {strategy!r}")
    if strategy == "auto":
        check_lists_cover(g, lists)
        strategy = route(g, lists)
    precheck(g, lists, strategy)
    trace = Trace()
    if strategy == "bruteforce":
        out = solve_exhaustive(g, lists, node_limit)
        result = SolveResult(
            {Status.SAT: Outcome.SAT, Status.UNSAT: Outcome.UNSAT, Status.LIMIT: Outcome.LIMIT}[out.status],
            strategy, out.coloring, trace, out.nodes,
        )
    else:
        solver = solve_subcubic if strategy == "constructive" else solve_maxdeg4
        phi: Coloring = {}
        try:
            for comp in g.components():
                part = g.induced(comp)
                phi.update(solver(part, {v: frozenset(lists[v]) for v in comp}, trace))
        except NotColorable:
            return SolveResult(Outcome.UNSAT, strategy, None, trace)
        except ResourceLimit:
            return SolveResult(Outcome.LIMIT, strategy, None, trace)
        result = SolveResult(Outcome.SAT, strategy, phi, trace)
    if result.outcome is Outcome.SAT:
        violation = verify_pcf(g, lists, result.coloring)
        if violation is not None:
            raise AssertionError(f"{strategy} produced an invalid coloring: {violation}")
    return result
