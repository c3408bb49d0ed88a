"""All graphs on n vertices up to isomorphism, by vertex augmentation.

Every graph on n vertices is some graph on n-1 vertices plus one vertex
joined to a subset, so augmenting one representative per class and
deduplicating by canonical form reaches every class exactly once.
"""

from __future__ import annotations

from functools import lru_cache

from .canon import canonical_form, canonical_graph
from .graph import Graph, is_connected


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph.empty(0),)
    seen: dict = {}
    for base in _all_graphs(n - 1):
        for subset in range(1 << (n - 1)):
            adj = [mask | ((subset >> v & 1) << (n - 1)) for v, mask in enumerate(base.adj)]
            adj.append(subset)
            g = Graph(n, tuple(adj))
            key = canonical_form(g)
            if key not in seen:
                seen[key] = canonical_graph(g)
    return tuple(seen[k] for k in sorted(seen, key=lambda k: (sum(r.bit_count() for r in k[1]), k)))


def all_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class of graphs on ``n`` vertices."""
    return list(_all_graphs(n))


def connected_graphs(n: int) -> list[Graph]:
    return [g for g in _all_graphs(n) if is_connected(g)]


def graphs_up_to(n_max: int, *, connected: bool = True, n_min: int = 1) -> list[Graph]:
    out: list[Graph] = []
    for n in range(n_min, n_max + 1):
        out.extend(connected_graphs(n) if connected else all_graphs(n))
    return out
