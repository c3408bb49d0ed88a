"""Named graphs and parametric families used throughout the package."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Callable

from .graph import Graph, disjoint_union


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> Graph:
    """Path on ``k`` vertices."""
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def wheel(k: int) -> Graph:
    """Hub 0 joined to the rim cycle 1..k."""
    if k < 3:
        raise ValueError("a wheel needs a rim of at least 3 vertices")
    rim = [(i, i % k + 1) for i in range(1, k + 1)]
    return Graph.from_edges(k + 1, rim + [(0, i) for i in range(1, k + 1)])


def complete_multipartite(*parts: int) -> Graph:
    owner = [p for p, size in enumerate(parts) for _ in range(size)]
    n = len(owner)
    return Graph.from_edges(
        n, [(a, b) for a, b in combinations(range(n), 2) if owner[a] != owner[b]]
    )


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def elongated_prism(lengths: tuple[int, int, int]) -> Graph:
    """Triangles 0-1-2 and 3-4-5 joined by side paths i -> 3+i of the given lengths.

    Subdivision vertices are numbered from 6 onward, side by side, in order
    along each side.
    """
    if len(lengths) != 3 or any(length < 1 for length in lengths):
        raise ValueError(f"side lengths must be three positive integers, got {lengths}")
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    nxt = 6
    for i, length in enumerate(lengths):
        prev = i
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 3 + i))
    return Graph.from_edges(nxt, edges)


def prism_sides(lengths: tuple[int, int, int]) -> list[list[int]]:
    """Vertex sequences of the three side paths of :func:`elongated_prism`."""
    sides = []
    nxt = 6
    for i, length in enumerate(lengths):
        side = [i] + list(range(nxt, nxt + length - 1)) + [3 + i]
        nxt += length - 1
        sides.append(side)
    return sides


def _k1_plus(g: Graph) -> Graph:
    return disjoint_union(complete(1), g)


# name -> (constructor, sorted degree sequence, edge count)
_NAMED: dict[str, tuple[Callable[[], Graph], list[int], int]] = {
    "K4": (lambda: complete(4), [3] * 4, 6),
    "K23": (lambda: complete_multipartite(2, 3), [2, 2, 2, 3, 3], 6),
    "K1+K4": (lambda: _k1_plus(complete(4)), [0, 3, 3, 3, 3], 6),
    "K1+K23": (lambda: _k1_plus(complete_multipartite(2, 3)), [0, 2, 2, 2, 3, 3], 6),
    "K113": (lambda: complete_multipartite(1, 1, 3), [2, 2, 2, 4, 4], 7),
    "W4": (lambda: wheel(4), [3, 3, 3, 3, 4], 8),
    "K5": (lambda: complete(5), [4] * 5, 10),
    "K33": (lambda: complete_multipartite(3, 3), [3] * 6, 9),
    "K6": (lambda: complete(6), [5] * 6, 15),
    "K133": (lambda: complete_multipartite(1, 3, 3), [4] * 6 + [6], 15),
    "K1123": (lambda: complete_multipartite(1, 1, 2, 3), [4, 4, 4, 5, 5, 6, 6], 17),
    # Same graph as K1123; the two names appear in different steps of the
    # maximality argument for the apex-augmented prisms.
    "K2113": (lambda: complete_multipartite(2, 1, 1, 3), [4, 4, 4, 5, 5, 6, 6], 17),
    "Petersen": (petersen_graph, [3] * 10, 15),
}

OBSTRUCTIONS = ("K1+K4", "K1+K23", "K113")


@lru_cache(maxsize=None)
def named(name: str) -> Graph:
    """Look up a named graph, checking its degree sequence and edge count."""
    try:
        build, degrees, m = _NAMED[name]
    except KeyError:
        raise KeyError(f"unknown graph name {name!r}; known: {sorted(_NAMED)}") from None
    g = build()
    if sorted(g.degrees()) != degrees or g.m != m:
        raise AssertionError(f"catalog entry {name} does not match its definition")
    return g


def names() -> list[str]:
    return list(_NAMED)
