"""Proper conflict-free list coloring: verifier, exact oracle, constructive solvers and gadgets."""

from .coloring import (
    Violation,
    ViolationKind,
    degree_plus_k_lists,
    is_pcf,
    unique_neighbor_colors,
    verify_pcf,
)
from .constructive import SubdivisionInstance, solve_cycle_pcf, solve_subcubic, solve_subdivision
from .degree4 import solve_maxdeg4
from .errors import FormatError, InternalContradiction, NotColorable, PCFError, PreconditionError, ResourceLimit
from .gadgets import GadgetInstance, subdivision_counterexample, t4_gadget
from .graph import CyclePath, Graph, parse_graph, serialize_graph, shortest_cycle, subdivide
from .oracle import Choosability, Status, check_pcf_choosable, count_solutions, solve_exhaustive
from .solve import solve
from .trace import Trace

__version__ = "0.1.0"

__all__ = [
    "Choosability", "CyclePath", "FormatError", "GadgetInstance", "Graph", "InternalContradiction",
    "NotColorable", "PCFError", "PreconditionError", "ResourceLimit", "Status", "SubdivisionInstance",
    "Trace", "Violation", "ViolationKind", "check_pcf_choosable", "count_solutions", "degree_plus_k_lists",
    "is_pcf", "parse_graph", "serialize_graph", "shortest_cycle", "solve", "solve_cycle_pcf",
    "solve_exhaustive", "solve_maxdeg4", "solve_subcubic", "solve_subdivision", "subdivide",
    "subdivision_counterexample", "t4_gadget", "unique_neighbor_colors", "verify_pcf",
]
