import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import brute_force_select
from pcfcolor.cyclic import cyclic_select


def test_needs_five_positions():
    with pytest.raises(ValueError):
        cyclic_select([[0]] * 4, lambda *a: True, lambda *a: True)


def test_unconstrained_gives_smallest_values():
    opts = [[3, 1], [2], [5, 4], [0, 9], [7]]
    assert cyclic_select(opts, lambda *a: True, lambda *a: True) == (1, 2, 4, 0, 7)


def test_distance_two_coloring_of_c5_needs_five_colors():
    differ = lambda i, a, b: a != b  # noqa: E731
    assert cyclic_select([range(4)] * 5, differ, differ) is None
    assert cyclic_select([range(5)] * 5, differ, differ) == (0, 1, 2, 3, 4)


@st.composite
def constrained_instances(draw):
    k = draw(st.integers(5, 8))
    opts = [draw(st.lists(st.integers(0, 3), min_size=1, max_size=3, unique=True)) for _ in range(k)]
    near_bad = draw(st.frozensets(st.tuples(st.integers(0, k - 1), st.integers(0, 3), st.integers(0, 3)), max_size=12))
    far_bad = draw(st.frozensets(st.tuples(st.integers(0, k - 1), st.integers(0, 3), st.integers(0, 3)), max_size=12))
    return opts, near_bad, far_bad


@settings(max_examples=300, deadline=None)
@given(constrained_instances())
def test_matches_brute_force(instance):
    opts, near_bad, far_bad = instance

    def near_ok(i, a, b):
        return (i, a, b) not in near_bad

    def far_ok(i, a, c):
        return (i, a, c) not in far_bad

    assert cyclic_select(opts, near_ok, far_ok) == brute_force_select(opts, near_ok, far_ok)
