import networkx as nx
import pytest

from helpers import to_nx
from pcfcolor.corpus import (
    connected_subcubic_graphs,
    degree4_corpus,
    random_girth5_core,
    random_high_girth,
    subdivision_bases,
    write_corpus,
)
from pcfcolor.graph import make_cycle, parse_graph

# number of connected graphs with maximum degree <= 3 on n = 1..8 vertices, frozen from the generator
# after cross-checking n <= 7 against the networkx graph atlas
SUBCUBIC_COUNTS = [1, 1, 2, 6, 10, 29, 64, 194]


def _atlas_counts():
    counts = [0] * 8
    for h in nx.graph_atlas_g()[1:]:
        n = h.number_of_nodes()
        if n <= 7 and nx.is_connected(h) and max(d for _, d in h.degree()) <= 3:
            counts[n] += 1
    return counts[1:]


def test_subcubic_generator_matches_atlas():
    gen = connected_subcubic_graphs(7)
    by_n = [0] * 7
    for g in gen:
        by_n[g.n - 1] += 1
    assert by_n == _atlas_counts()


def test_subcubic_counts_frozen():
    gen = connected_subcubic_graphs(8)
    by_n = [0] * 8
    for g in gen:
        by_n[g.n - 1] += 1
        assert g.is_connected() and g.max_degree <= 3
    assert by_n == SUBCUBIC_COUNTS


def test_subcubic_graphs_are_pairwise_non_isomorphic():
    gen = [to_nx(g) for g in connected_subcubic_graphs(6)]
    for i, a in enumerate(gen):
        for b in gen[i + 1:]:
            if a.number_of_nodes() == b.number_of_nodes():
                assert not nx.is_isomorphic(a, b)


def test_degree4_corpus_shape():
    corpus = degree4_corpus()
    assert len(corpus) >= 200
    assert len({c.name for c in corpus}) == len(corpus)
    for item in corpus:
        g = item.graph
        assert g.is_connected() and g.max_degree <= 4 and g.n <= 12
    assert sum(c.name.startswith("girth5") for c in corpus) >= 30
    cores = [c.graph for c in corpus if c.name.startswith("core5")]
    assert len(cores) >= 30 and all(min(g.degree(v) for v in g) >= 3 for g in cores)


def test_degree4_corpus_is_deterministic():
    assert [c.name for c in degree4_corpus(30, 7)] == [c.name for c in degree4_corpus(30, 7)]


def test_high_girth_generator():
    for seed in range(20):
        g = random_high_girth(12, 4, 5, seed)
        assert g.max_degree <= 4
        girth = nx.girth(to_nx(g))
        assert girth == float("inf") or girth >= 5


def test_subdivision_bases():
    names = [b.name for b in subdivision_bases()]
    assert names[:7] == ["K2", "P4", "C4", "C7", "K4", "K33", "K5"]
    assert all(b.graph.n <= 7 for b in subdivision_bases())


def test_write_gadget_corpus(tmp_path):
    assert write_corpus(tmp_path, "gadget") == 8
    text = (tmp_path / "t4-K1-v0.graph").read_text()
    assert text.startswith("# gadget t4 base=K1 v0=0 d=0")
    assert parse_graph(text) == make_cycle(4)
    assert "status=unsat" in (tmp_path / "subdiv-k1.expect").read_text()


def test_write_rejects_unknown_kind(tmp_path):
    with pytest.raises(ValueError):
        write_corpus(tmp_path, "planar")


def test_girth5_core_gives_up_when_impossible():
    # fewer than 10 vertices cannot have girth 5 and minimum degree 3
    with pytest.raises(ValueError):
        random_girth5_core(8, 0, attempts=50)
