from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from conftest import random_graph, to_nx
from nonsep.catalog import complete, cycle, path
from nonsep.graph import (
    CapacityError,
    Cycle,
    Graph,
    Graph6Error,
    add_edge,
    complement,
    contract_edge,
    delete_edge,
    delete_vertex,
    disjoint_union,
    enumerate_cycles,
    induced_subgraph,
    is_connected,
    join,
    parse_graph6,
    relabel,
    to_graph6,
)


@st.composite
def graphs(draw, max_n: int = 9):
    n = draw(st.integers(0, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


@given(graphs(max_n=12))
def test_graph6_round_trip_and_agrees_with_networkx(g):
    text = to_graph6(g)
    assert parse_graph6(text) == g
    assert nx.to_graph6_bytes(to_nx(g), header=False).decode().strip() == text
    assert nx.utils.graphs_equal(nx.from_graph6_bytes(text.encode()), to_nx(g)) or g.n == 0


def test_graph6_known_strings():
    assert to_graph6(complete(4)) == "C~"
    assert parse_graph6(">>graph6<<C~") == complete(4)
    assert parse_graph6("@") == Graph.empty(1)


def test_graph6_long_length_form():
    g = path(63)
    text = to_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g


@pytest.mark.parametrize("bad", ["", "C", "C~~", "C\x7f"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_graph6_capacity():
    with pytest.raises(CapacityError):
        parse_graph6("~?@@" + "?" * 10)


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(CapacityError):
        Graph.empty(65)


def test_contract_keeps_lower_index():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    h = contract_edge(g, 1, 2)
    assert h == cycle(3)
    with pytest.raises(ValueError):
        contract_edge(g, 0, 2)


@given(graphs(max_n=8))
def test_operations_match_networkx(g):
    ng = to_nx(g)
    for u, v in g.edges()[:3]:
        c = nx.contracted_nodes(ng, u, v, self_loops=False)
        assert nx.is_isomorphic(to_nx(contract_edge(g, u, v)), c)
        assert delete_edge(g, u, v).m == g.m - 1
    if g.n:
        h = delete_vertex(g, 0)
        assert nx.is_isomorphic(to_nx(h), ng.subgraph(range(1, g.n)))
    assert is_connected(g) == (g.n <= 1 or nx.is_connected(ng))
    assert complement(complement(g)) == g


def test_union_join_induced_relabel():
    k2 = complete(2)
    assert disjoint_union(k2, k2).m == 2
    assert join(k2, Graph.empty(3)).m == 1 + 6
    assert induced_subgraph(complete(5), [0, 2, 4]) == complete(3)
    g = relabel(path(3), [2, 0, 1])
    assert g.has_edge(2, 0) and g.has_edge(0, 1)
    assert add_edge(path(3), 0, 2) == cycle(3)


@given(graphs(max_n=7))
def test_cycle_enumeration_matches_networkx(g):
    ours = enumerate_cycles(g)
    assert len({c.vertices for c in ours}) == len(ours)
    assert all(c.is_in(g) for c in ours)
    theirs = {frozenset(c) for c in nx.simple_cycles(to_nx(g)) if len(c) >= 3}
    assert len(ours) == len(list(c for c in nx.simple_cycles(to_nx(g)) if len(c) >= 3))
    assert {frozenset(c.vertices) for c in ours} <= theirs


def test_cycle_counts():
    assert len(enumerate_cycles(complete(4))) == 7
    assert len(enumerate_cycles(cycle(5))) == 1
    with pytest.raises(ValueError):
        Cycle((0, 1))


def test_random_graphs_smoke(rng):
    for _ in range(20):
        g = random_graph(rng, 9, 0.4)
        assert parse_graph6(to_graph6(g)) == g
