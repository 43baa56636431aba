import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import graphs, lists_for, naive_pcf_count, naive_satisfiable
from pcfcolor.coloring import uniform_lists, verify_pcf
from pcfcolor.errors import PreconditionError
from pcfcolor.graph import Graph, make_complete, make_cycle, make_path
from pcfcolor.oracle import (
    Choosability,
    Status,
    canonical_assignments,
    check_pcf_choosable,
    count_solutions,
    raw_assignments,
    raw_multiplicity,
    solve_exhaustive,
)


def test_c5_four_colors_unsat():
    g = make_cycle(5)
    out = solve_exhaustive(g, uniform_lists(g, range(4)))
    assert out.status is Status.UNSAT and out.coloring is None


def test_c7_three_colors_unsat():
    g = make_cycle(7)
    assert solve_exhaustive(g, uniform_lists(g, range(3))).status is Status.UNSAT


def test_c6_three_colors_sat():
    g = make_cycle(6)
    lists = uniform_lists(g, range(3))
    out = solve_exhaustive(g, lists)
    assert out.satisfiable
    assert verify_pcf(g, lists, out.coloring) is None
    assert verify_pcf(g, lists, dict(enumerate([0, 1, 2, 0, 1, 2]))) is None


def test_witness_is_deterministic():
    g = make_cycle(8)
    lists = uniform_lists(g, range(4))
    assert solve_exhaustive(g, lists).coloring == solve_exhaustive(g, lists).coloring


def test_node_limit_is_reported_not_guessed():
    g = make_cycle(7)
    out = solve_exhaustive(g, uniform_lists(g, range(3)), node_limit=5)
    assert out.status is Status.LIMIT and out.coloring is None


def test_node_limit_from_environment(monkeypatch):
    monkeypatch.setenv("PCF_NODE_LIMIT", "3")
    g = make_cycle(7)
    assert solve_exhaustive(g, uniform_lists(g, range(3))).status is Status.LIMIT


@pytest.mark.parametrize(
    "lists,expected",
    [({0: {0}, 1: {1}}, 1), ({0: {0, 1}, 1: {0, 1}}, 2)],
)
def test_count_k2(lists, expected):
    assert count_solutions(make_complete(2), lists, cap=10) == expected


def test_count_c5_is_zero():
    g = make_cycle(5)
    assert count_solutions(g, uniform_lists(g, range(4)), cap=100) == 0


def test_count_is_truncated():
    g = make_cycle(6)
    assert count_solutions(g, uniform_lists(g, range(4)), cap=3) == 3


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=6), st.data())
def test_count_matches_naive_scan(g, data):
    lists = data.draw(lists_for(g, slack=0, universe=4, min_size=1))
    assert count_solutions(g, lists, cap=10**9) == naive_pcf_count(g, lists)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7), st.data())
def test_oracle_agrees_with_naive_scan(g, data):
    lists = data.draw(lists_for(g, slack=data.draw(st.integers(0, 2)), universe=5, min_size=1))
    out = solve_exhaustive(g, lists)
    assert out.satisfiable == naive_satisfiable(g, lists)
    if out.satisfiable:
        assert verify_pcf(g, lists, out.coloring) is None


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=6), st.data())
def test_monotone_in_lists(g, data):
    lists = data.draw(lists_for(g, slack=0, universe=4, min_size=1))
    bigger = {v: lists[v] | data.draw(st.frozensets(st.integers(0, 6), max_size=2)) for v in g}
    if solve_exhaustive(g, lists).satisfiable:
        assert solve_exhaustive(g, bigger).satisfiable


# --- enumeration of list assignments ------------------------------------------


def test_canonical_forms_use_first_appearance_names():
    forms = list(canonical_assignments([2, 2]))
    assert forms[0] == ((0, 1), (0, 1))
    assert forms == sorted(forms)
    for lists in forms:
        seen = -1
        for lst in lists:
            fresh = [c for c in lst if c > seen]
            assert fresh == list(range(seen + 1, seen + 1 + len(fresh)))
            seen = max(seen, *lst)


@pytest.mark.parametrize("demand", [(2, 2), (1, 2, 3), (2, 3, 3), (3, 3, 3), (2, 2, 2, 2), (3, 2, 3, 2), (3, 3, 3, 3)])
def test_multiplicities_cover_raw_space(demand):
    universe = sum(demand)
    total = sum(raw_multiplicity(a, universe) for a in canonical_assignments(demand))
    assert total == math.prod(math.comb(universe, f) for f in demand)


def test_raw_multiplicity_by_direct_renaming_count():
    demand = (2, 2, 1)
    universe = sum(demand)
    # group raw assignments by their first-appearance renaming
    tally: dict = {}
    for raw in raw_assignments(demand, universe):
        names: dict[int, int] = {}
        canon = []
        for lst in raw:
            old = [c for c in lst if c in names]
            new = [c for c in lst if c not in names]
            for c in new:
                names[c] = len(names)
            canon.append(tuple(sorted(names[c] for c in old + new)))
        tally[tuple(canon)] = tally.get(tuple(canon), 0) + 1
    for form in canonical_assignments(demand):
        assert tally.pop(form) == raw_multiplicity(form, universe)
    assert not tally


def test_c5_not_degree_plus_two_choosable():
    g = make_cycle(5)
    verdict = check_pcf_choosable(g, {v: 4 for v in g})
    assert verdict.status is Choosability.NOT_CHOOSABLE
    assert verdict.counterexample == uniform_lists(g, range(4))
    assert solve_exhaustive(g, verdict.counterexample).status is Status.UNSAT


def test_k2_choosable_from_pairs():
    g = make_complete(2)
    verdict = check_pcf_choosable(g, {0: 2, 1: 2})
    assert verdict.status is Choosability.CHOOSABLE
    assert verdict.tested == len(list(canonical_assignments([2, 2])))


def test_c4_degree_plus_two_choosable():
    g = make_cycle(4)
    verdict = check_pcf_choosable(g, {v: 4 for v in g})
    assert verdict.status is Choosability.CHOOSABLE
    # frozen from a full canonical run
    assert verdict.tested == 168481


def test_guard_and_budget():
    g = make_path(8)
    with pytest.raises(PreconditionError):
        check_pcf_choosable(g, {v: 2 for v in g})
    verdict = check_pcf_choosable(g, {v: 3 for v in g}, budget=10)
    assert verdict.status is Choosability.LIMIT and verdict.tested == 10


def test_demand_must_be_positive():
    with pytest.raises(PreconditionError):
        check_pcf_choosable(make_complete(2), {0: 0, 1: 2})


SMALL_CASES = [
    (make_complete(2), (1, 1)),
    (make_complete(2), (2, 2)),
    (make_path(3), (2, 2, 2)),
    (make_path(3), (2, 3, 2)),
    (make_path(3), (2, 3, 3)),
    (make_cycle(3), (2, 2, 2)),
    (make_cycle(3), (3, 3, 3)),
    (make_cycle(4), (2, 2, 2, 2)),
    (make_path(4), (2, 2, 2, 2)),
    (Graph.from_edges(3, [(0, 1)]), (1, 2, 1)),
]


@pytest.mark.parametrize("g,demand", SMALL_CASES)
def test_canonical_and_raw_verdicts_agree(g, demand):
    f = dict(enumerate(demand))
    canon = check_pcf_choosable(g, f)
    raw = check_pcf_choosable(g, f, canonical=False)
    assert canon.status is raw.status
    if canon.counterexample is not None:
        assert solve_exhaustive(g, canon.counterexample).status is Status.UNSAT
        assert all(len(canon.counterexample[v]) == demand[v] for v in g)


def test_raw_enumeration_order():
    first = list(itertools.islice(raw_assignments([2, 1], 3), 4))
    assert first == [((0, 1), (0,)), ((0, 1), (1,)), ((0, 1), (2,)), ((0, 2), (0,))]


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=4), st.data())
def test_canonical_and_raw_agree_on_small_random_instances(g, data):
    from hypothesis import assume

    demand = {v: data.draw(st.integers(1, 3)) for v in g}
    universe = sum(demand.values())
    # the raw space is the product of binomials; keep it to desk size
    assume(math.prod(math.comb(universe, f) for f in demand.values()) <= 50_000)
    canon = check_pcf_choosable(g, demand)
    raw = check_pcf_choosable(g, demand, canonical=False)
    assert canon.status is raw.status
