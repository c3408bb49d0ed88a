"""Canonical forms, isomorphism and automorphisms for small graphs.

Individualisation-refinement: colour refinement to an equitable ordered
partition, then branch on the first non-singleton cell. Swapping two twins
is always an automorphism, so only one vertex per twin class is tried.
Good to about a dozen vertices, which is all this package needs.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import Graph, bits, relabel

Partition = tuple[tuple[int, ...], ...]


def _refine(g: Graph, cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    adj = g.adj
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells: list[tuple[int, ...]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((adj[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
                for sig in sorted(groups):
                    new_cells.append(tuple(groups[sig]))
            else:
                new_cells.append(cell)
        cells = new_cells
        if not changed:
            return cells


def _twin_representatives(g: Graph, cell: tuple[int, ...]) -> list[int]:
    reps: list[int] = []
    for v in cell:
        for r in reps:
            if g.adj[v] & ~(1 << r) == g.adj[r] & ~(1 << v):
                break
        else:
            reps.append(v)
    return reps


def _certificate(g: Graph, order: list[int]) -> tuple[int, ...]:
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        row = 0
        for w in bits(g.adj[v]):
            row |= 1 << pos[w]
        rows.append(row)
    return tuple(rows)


def canonical_labeling(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return ``(certificate, order)``: ``order[i]`` is the vertex placed at position i.

    Two graphs are isomorphic iff their certificates are equal.
    """
    if g.n == 0:
        return (), ()
    best: list = [None, None]

    def search(cells: list[tuple[int, ...]]) -> None:
        cells = _refine(g, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            cert = _certificate(g, order)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, order
            return
        cell = cells[target]
        for v in _twin_representatives(g, cell):
            rest = tuple(w for w in cell if w != v)
            search(cells[:target] + [(v,), rest] + cells[target + 1:])

    search([tuple(range(g.n))])
    return best[0], tuple(best[1])


@lru_cache(maxsize=65536)
def canonical_form(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Hashable isomorphism invariant that is complete: equal iff isomorphic."""
    return g.n, canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    _, order = canonical_labeling(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return relabel(g, perm)


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)


@lru_cache(maxsize=256)
def automorphisms(g: Graph) -> tuple[tuple[int, ...], ...]:
    """All automorphisms of ``g`` as permutations ``p`` with ``p[v]`` the image of v.

    Plain backtracking; intended for pattern graphs with at most ~10 vertices.
    """
    n = g.n
    order = sorted(range(n), key=lambda v: -g.degree(v))
    degs = g.degrees()
    found: list[tuple[int, ...]] = []
    image = [-1] * n
    used = 0

    def extend(k: int) -> None:
        nonlocal used
        if k == n:
            found.append(tuple(image))
            return
        v = order[k]
        for w in range(n):
            if used >> w & 1 or degs[w] != degs[v]:
                continue
            ok = True
            for u in order[:k]:
                if bool(g.adj[v] >> u & 1) != bool(g.adj[w] >> image[u] & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used |= 1 << w
                extend(k + 1)
                used &= ~(1 << w)
                image[v] = -1

    extend(0)
    return tuple(sorted(found))
