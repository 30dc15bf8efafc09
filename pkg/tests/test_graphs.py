"""Graph substrate: parsing, colorings, embeddings."""

import random
from itertools import permutations

import pytest

from ramseykit.graphs import (
    BLUE,
    Graph,
    GraphParseError,
    RED,
    TwoColoring,
    color_subgraph,
    complete_graph,
    graph_to_text,
    pair_count,
    pair_index,
    pair_list,
    parse_graph,
    path_graph,
    star_graph,
    verify_embedding,
)


def test_parse_path():
    g = parse_graph("3\n0 1\n1 2")
    assert g == path_graph(3)


def test_parse_single_vertex():
    g = parse_graph("1\n")
    assert g.n == 1 and g.edge_count == 0


def test_parse_star():
    g = parse_graph("4\n0 1\n0 2\n0 3")
    assert g == star_graph(4)


def test_parse_duplicate_edges_idempotent():
    assert parse_graph("3\n0 1\n0 1\n1 2") == parse_graph("3\n0 1\n1 2")


@pytest.mark.parametrize(
    "text",
    ["3\n0 5", "3\n1 1", "3\n0", "3\n0 1 2", "3\nx y", "", "0\n", "-2\n"],
)
def test_parse_errors(text):
    with pytest.raises(GraphParseError):
        parse_graph(text)


def test_edge_list_round_trip():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(1, 12)
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < 0.4
        ]
        g = Graph(n, edges)
        assert parse_graph(graph_to_text(g)) == g


def test_pair_index_order():
    for n in (2, 3, 5, 8):
        pairs = pair_list(n)
        assert len(pairs) == pair_count(n)
        for k, (i, j) in enumerate(pairs):
            assert pair_index(i, j, n) == k
            assert pair_index(j, i, n) == k


def test_color_subgraph_all_red():
    c = TwoColoring.all_red(5)
    assert color_subgraph(c, RED) == complete_graph(5)
    assert color_subgraph(c, BLUE).edge_count == 0


def test_color_subgraph_mixed():
    c = TwoColoring.from_pairs(3, {(0, 1): RED, (0, 2): BLUE, (1, 2): BLUE})
    blue = color_subgraph(c, BLUE)
    assert sorted(blue.edges()) == [(0, 2), (1, 2)]
    red = color_subgraph(c, RED)
    assert sorted(red.edges()) == [(0, 1)]


def test_red_blue_partition():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(2, 9)
        c = TwoColoring(n, rng.getrandbits(pair_count(n)))
        red = set(color_subgraph(c, RED).edges())
        blue = set(color_subgraph(c, BLUE).edges())
        assert red.isdisjoint(blue)
        assert red | blue == set(complete_graph(n).edges())


def test_coloring_text_round_trip():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(1, 9)
        c = TwoColoring(n, rng.getrandbits(pair_count(n)))
        assert TwoColoring.from_text(c.to_text()) == c


def test_coloring_swapped():
    c = TwoColoring.from_pairs(3, {(0, 1): RED, (0, 2): BLUE, (1, 2): BLUE})
    s = c.swapped()
    assert s.color(0, 1) == BLUE and s.color(0, 2) == RED and s.color(1, 2) == RED


def test_verify_embedding_identity():
    assert verify_embedding(path_graph(3), complete_graph(3), {0: 0, 1: 1, 2: 2})


def test_verify_embedding_edgeless_host():
    host = Graph(3)
    assert not verify_embedding(path_graph(3), host, {0: 0, 1: 1, 2: 2})


def test_star_into_path_impossible():
    # brute force over all 24 injections: K_{1,3} never embeds in P_4
    pattern = star_graph(4)
    host = path_graph(4)
    for perm in permutations(range(4)):
        assert not verify_embedding(pattern, host, dict(enumerate(perm)))


def test_verify_embedding_rejects_noninjective_and_partial():
    host = complete_graph(3)
    assert not verify_embedding(path_graph(3), host, {0: 0, 1: 1, 2: 1})
    assert not verify_embedding(path_graph(3), host, {0: 0, 1: 1})


def test_embedding_monotone_under_host_edges():
    rng = random.Random(7)
    pattern = path_graph(4)
    for _ in range(60):
        edges = [
            (i, j)
            for i in range(6)
            for j in range(i + 1, 6)
            if rng.random() < 0.4
        ]
        host = Graph(6, edges)
        mapping = dict(enumerate(rng.sample(range(6), 4)))
        if verify_embedding(pattern, host, mapping):
            extra = Graph(6, edges + [(0, 5), (2, 4)])
            assert verify_embedding(pattern, extra, mapping)
