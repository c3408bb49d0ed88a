"""H-minor containment for small fixed H, with branch-set certificates.

The searcher assigns branch sets to the vertices of H one at a time. Each
candidate branch set is a connected set of still-free vertices of G that
touches the branch sets of every already-placed H-neighbour. Symmetric
models are cut with a stabiliser chain of Aut(H): along the placement order,
the minimum vertex of a branch set must be smaller than the minimum vertex
of every later branch set in its orbit. Any model can be permuted into that
form, so no answer is lost.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .canon import automorphisms
from .catalog import named
from .graph import Graph, bits, component_masks, to_graph6


@dataclass(frozen=True)
class MinorModel:
    """``branch_sets[a]`` is the set of G-vertices contracted onto H-vertex ``a``."""

    branch_sets: tuple[frozenset[int], ...]

    def to_json(self, h: Graph | None = None, name: str | None = None) -> dict:
        label = name if name is not None else (to_graph6(h) if h is not None else None)
        return {"h": label, "branch_sets": [sorted(b) for b in self.branch_sets]}

    @classmethod
    def from_json(cls, obj: Mapping) -> MinorModel:
        return cls(tuple(frozenset(int(v) for v in b) for b in obj["branch_sets"]))


def verify_minor_model(g: Graph, h: Graph, model: MinorModel) -> bool:
    """Re-check a model from scratch: disjoint, connected, every H-edge realised."""
    sets = [set(b) for b in model.branch_sets]
    if len(sets) != h.n:
        return False
    seen: set[int] = set()
    for b in sets:
        if not b or any(not (0 <= v < g.n) for v in b) or seen & b:
            return False
        seen |= b
        start = next(iter(b))
        reached = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y in b and y not in reached:
                    reached.add(y)
                    stack.append(y)
        if reached != b:
            return False
    for a, c in h.edges():
        if not any(g.has_edge(x, y) for x in sets[a] for y in sets[c]):
            return False
    return True


@dataclass(frozen=True)
class _Plan:
    order: tuple[int, ...]
    degree: tuple[int, ...]
    earlier: tuple[tuple[int, ...], ...]
    # later_count[j][k]: H-neighbours of order[j] placed strictly after position k
    later_count: tuple[tuple[int, ...], ...]
    # less_than[k]: earlier positions whose branch-set minimum must be smaller
    less_than: tuple[tuple[int, ...], ...]
    # pending[k]: (position d > k, earlier-neighbour positions of d that are <= k)
    pending: tuple[tuple[tuple[int, tuple[int, ...]], ...], ...]


@lru_cache(maxsize=128)
def _plan(h: Graph) -> _Plan:
    comps = sorted(component_masks(h), key=lambda c: (-c.bit_count(), c))
    order: list[int] = []
    for comp in comps:
        placed = 0
        members = list(bits(comp))
        first = max(members, key=lambda v: (h.degree(v), -v))
        order.append(first)
        placed |= 1 << first
        while placed != comp:
            rest = [v for v in members if not placed >> v & 1]
            nxt = max(rest, key=lambda v: ((h.adj[v] & placed).bit_count(), h.degree(v), -v))
            order.append(nxt)
            placed |= 1 << nxt
    pos = {v: i for i, v in enumerate(order)}
    nh = len(order)
    earlier = tuple(
        tuple(sorted(pos[w] for w in bits(h.adj[a]) if pos[w] < k)) for k, a in enumerate(order)
    )
    later_count = tuple(
        tuple(sum(1 for w in bits(h.adj[a]) if pos[w] > k) for k in range(nh)) for a in order
    )
    less: list[list[int]] = [[] for _ in range(nh)]
    group = list(automorphisms(h))
    for k, a in enumerate(order):
        for b in {p[a] for p in group} - {a}:
            less[pos[b]].append(k)
        group = [p for p in group if p[a] == a]
    pending = tuple(
        tuple(
            (d, tuple(j for j in earlier[d] if j <= k))
            for d in range(k + 1, nh)
            if any(j <= k for j in earlier[d])
        )
        for k in range(nh)
    )
    return _Plan(
        order=tuple(order),
        degree=tuple(h.degree(a) for a in order),
        earlier=earlier,
        later_count=later_count,
        less_than=tuple(tuple(sorted(x)) for x in less),
        pending=pending,
    )


def _connected_sets(
    adj: Sequence[int], allowed: int, root: int, max_size: int
) -> Iterator[tuple[int, int]]:
    """Connected sets inside ``allowed`` whose minimum vertex is ``root``.

    Yields ``(set_mask, union_of_neighbourhoods)``; each set appears once.
    """
    allowed &= ~((1 << root) - 1)
    start = 1 << root

    def grow(s: int, ns: int, cand: int, excl: int, size: int) -> Iterator[tuple[int, int]]:
        yield s, ns
        if size == max_size:
            return
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            s2 = s | low
            yield from grow(s2, ns | adj[v], (cand | (adj[v] & allowed)) & ~s2 & ~excl, excl, size + 1)
            excl |= low

    yield from grow(start, adj[root], adj[root] & allowed & ~start, 0, 1)


def _search(g: Graph, h: Graph) -> tuple[int, ...] | None:
    plan = _plan(h)
    nh = len(plan.order)
    adj = g.adj
    sets = [0] * nh
    nbrs = [0] * nh
    mins = [0] * nh

    def rec(k: int, free: int) -> bool:
        if k == nh:
            return True
        max_size = free.bit_count() - (nh - k - 1)
        if max_size <= 0:
            return False
        earlier = plan.earlier[k]
        reqs = [nbrs[j] for j in earlier]
        lb = max((mins[j] for j in plan.less_than[k]), default=-1)
        allowed = free & ~((1 << (lb + 1)) - 1) if lb >= 0 else free
        if reqs:
            region = 0
            for comp in component_masks(g, free):
                if all(comp & r for r in reqs):
                    region |= comp
            allowed &= region
        if not allowed:
            return False
        if plan.degree[k] <= 1:
            max_size = 1
        need_out = plan.later_count[k][k]
        need_deg = plan.degree[k]
        checks = [(j, plan.later_count[j][k]) for j in range(k) if plan.later_count[j][k]]
        pending = plan.pending[k]
        for root in bits(allowed):
            for s, ns in _connected_sets(adj, allowed, root, max_size):
                ns &= ~s
                if ns.bit_count() < need_deg:
                    continue
                if not all(s & r for r in reqs):
                    continue
                free2 = free & ~s
                if (ns & free2).bit_count() < need_out:
                    continue
                nbrs[k] = ns
                if any((nbrs[j] & free2).bit_count() < c for j, c in checks):
                    continue
                if pending:
                    comps = component_masks(g, free2)
                    if not all(
                        any(all(comp & nbrs[j] for j in js) for comp in comps) for _, js in pending
                    ):
                        continue
                sets[k] = s
                mins[k] = root
                if rec(k + 1, free2):
                    return True
        return False

    if not rec(0, g.full_mask):
        return None
    out = [0] * h.n
    for k, a in enumerate(plan.order):
        out[a] = sets[k]
    return tuple(out)


def _quick_reject(g: Graph, h: Graph) -> bool:
    if h.n > g.n or h.m > g.m:
        return True
    if max(g.degrees(), default=0) <= 2 and max(h.degrees(), default=0) > 2:
        return True
    return False


@lru_cache(maxsize=8192)
def _find(g: Graph, h: Graph) -> MinorModel | None:
    if h.n == 0:
        return MinorModel(())
    if _quick_reject(g, h):
        return None
    masks = _search(g, h)
    if masks is None:
        return None
    return MinorModel(tuple(frozenset(bits(m)) for m in masks))


def find_minor_model(g: Graph, h: Graph | str) -> MinorModel | None:
    """A branch-set model of ``h`` in ``g``, or None if ``h`` is not a minor."""
    if isinstance(h, str):
        h = named(h)
    return _find(Graph(g.n, g.adj), Graph(h.n, h.adj))


def contains_minor(g: Graph, h: Graph | str) -> bool:
    return find_minor_model(g, h) is not None
