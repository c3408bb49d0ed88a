from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import settings

from nonsep.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(index[a], index[b]) for a, b in h.edges()])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(
        n, [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
    )


def random_connected_planar(rng: random.Random, n: int) -> Graph:
    """Random spanning tree plus random edges kept only while planar."""
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    h = nx.Graph(edges)
    h.add_nodes_from(range(n))
    others = [(a, b) for a in range(n) for b in range(a + 1, n) if not h.has_edge(a, b)]
    rng.shuffle(others)
    for e in others[: rng.randrange(len(others) + 1)]:
        h.add_edge(*e)
        if not nx.check_planarity(h)[0]:
            h.remove_edge(*e)
    return from_nx(h)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20261014)


prism = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
