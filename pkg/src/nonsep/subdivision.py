"""Spanning K2,3-subdivisions and the structure of the edges around them.

Paths run from the first terminal to the second; a path's length is its
number of edges. Public functions number the paths 1, 2, 3, matching the
usual P1, P2, P3; ``K23Subdivision.paths`` is an ordinary 0-based tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .catalog import OBSTRUCTIONS
from .graph import Graph, bits
from .minors import contains_minor


class NotApplicableError(ValueError):
    """The graph has no spanning K2,3-subdivision."""


class ContractError(ValueError):
    """A documented precondition of the call does not hold."""


class InternalInconsistency(RuntimeError):
    """A structural step failed although its preconditions held."""


Edge = tuple[int, int]


def _edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class K23Subdivision:
    terminals: tuple[int, int]
    paths: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

    def inner(self, i: int) -> tuple[int, ...]:
        return self.paths[i][1:-1]

    def inner_mask(self, i: int) -> int:
        m = 0
        for v in self.inner(i):
            m |= 1 << v
        return m

    def length(self, i: int) -> int:
        return len(self.paths[i]) - 1

    def path_edges(self, i: int) -> set[Edge]:
        p = self.paths[i]
        return {_edge(p[k], p[k + 1]) for k in range(len(p) - 1)}

    def edges(self) -> set[Edge]:
        return self.path_edges(0) | self.path_edges(1) | self.path_edges(2)

    def reversed(self) -> K23Subdivision:
        u, v = self.terminals
        return K23Subdivision((v, u), tuple(p[::-1] for p in self.paths))  # type: ignore[arg-type]

    def reordered(self, order: tuple[int, int, int]) -> K23Subdivision:
        return K23Subdivision(self.terminals, tuple(self.paths[i] for i in order))  # type: ignore[arg-type]

    def is_valid_for(self, g: Graph) -> bool:
        u, v = self.terminals
        if u == v:
            return False
        seen: set[int] = {u, v}
        for p in self.paths:
            if len(p) < 3 or p[0] != u or p[-1] != v:
                return False
            if any(not g.has_edge(p[k], p[k + 1]) for k in range(len(p) - 1)):
                return False
            inner = set(p[1:-1])
            if len(inner) != len(p) - 2 or inner & seen:
                return False
            seen |= inner
        return seen == set(range(g.n))

    def to_json(self) -> dict:
        return {"terminals": list(self.terminals), "paths": [list(p) for p in self.paths]}


@dataclass(frozen=True)
class FanWitness:
    side: tuple[int, int]
    handle: int
    spoke_edges: tuple[Edge, ...]

    def to_json(self) -> dict:
        return {
            "side": list(self.side),
            "handle": self.handle,
            "spoke_edges": [list(e) for e in self.spoke_edges],
        }


@dataclass(frozen=True)
class MiddleLessType:
    """Which middle-less template a graph instantiates.

    For types II and III the subdivision is reordered so that the extra edge
    joins an inner vertex of P1 to an inner vertex of P2.
    """

    kind: str
    subdivision: K23Subdivision
    extra_edge: Edge | None
    terminal: int | None = None

    def to_json(self) -> dict:
        return {
            "type": self.kind,
            "subdivision": self.subdivision.to_json(),
            "extra_edge": list(self.extra_edge) if self.extra_edge else None,
            "terminal": self.terminal,
        }


def _uv_paths(g: Graph, u: int, v: int) -> list[tuple[tuple[int, ...], int]]:
    """Simple u-v paths of length >= 2, with the mask of their inner vertices."""
    out = []
    path = [u]

    def walk(x: int, used: int) -> None:
        for y in bits(g.adj[x] & ~used):
            if y == v:
                if len(path) >= 2:
                    out.append((tuple(path) + (v,), used & ~(1 << u)))
                continue
            path.append(y)
            walk(y, used | (1 << y))
            path.pop()

    walk(u, (1 << u))
    return out


@lru_cache(maxsize=4096)
def _spanning_subdivisions(g: Graph) -> tuple[K23Subdivision, ...]:
    found = []
    degs = g.degrees()
    for u, v in combinations(range(g.n), 2):
        if degs[u] < 3 or degs[v] < 3:
            continue
        target = g.full_mask & ~(1 << u) & ~(1 << v)
        paths = sorted(_uv_paths(g, u, v), key=lambda pm: pm[0][1])
        for (p1, m1), (p2, m2), (p3, m3) in combinations(paths, 3):
            if m1 & m2 or m1 & m3 or m2 & m3 or (m1 | m2 | m3) != target:
                continue
            found.append(K23Subdivision((u, v), (p1, p2, p3)))
    return tuple(found)


def find_spanning_k23_subdivisions(g: Graph) -> list[K23Subdivision]:
    """Every spanning K2,3-subdivision once: terminals u < v, paths ordered by second vertex."""
    return list(_spanning_subdivisions(g))


def _check_index(i: int) -> None:
    if i not in (1, 2, 3):
        raise ValueError(f"path index must be 1, 2 or 3, got {i}")


def is_chordless_terminal_path(g: Graph, s: K23Subdivision, i: int) -> bool:
    _check_index(i)
    p = s.paths[i - 1]
    return not any(g.has_edge(p[a], p[b]) for a in range(len(p)) for b in range(a + 2, len(p)))


def middle_paths(g: Graph, s: K23Subdivision) -> frozenset[int]:
    """Paths whose inner vertices see inner vertices of both other paths."""
    inner = [s.inner_mask(i) for i in range(3)]
    reach = [g.neighborhood(m) for m in inner]
    touches = [[bool(reach[i] & inner[j]) for j in range(3)] for i in range(3)]
    return frozenset(i + 1 for i in range(3) if all(touches[i][j] for j in range(3) if j != i))


def find_middle_path(g: Graph) -> tuple[K23Subdivision, int] | None:
    """First spanning subdivision with a middle path, or None when g is middle-less."""
    subs = _spanning_subdivisions(g)
    if not subs:
        raise NotApplicableError("graph has no spanning K2,3-subdivision")
    for s in subs:
        mids = middle_paths(g, s)
        if mids:
            return s, min(mids)
    return None


def is_middle_less(g: Graph) -> bool:
    return find_middle_path(g) is None


def extra_edges(g: Graph, s: K23Subdivision, among: tuple[int, ...] = (1, 2, 3)) -> list[Edge]:
    """Edges of the subgraph induced by the chosen paths that are not path edges."""
    verts = set(s.terminals)
    for i in among:
        verts.update(s.paths[i - 1])
    path_edges = s.edges()
    return [e for e in g.edges() if e[0] in verts and e[1] in verts and e not in path_edges]


def _require_obstruction_free(g: Graph) -> None:
    for name in OBSTRUCTIONS:
        if contains_minor(g, name):
            raise ContractError(f"graph contains the obstruction {name} as a minor")


def _path_of(s: K23Subdivision, x: int) -> int:
    for i in range(3):
        if x in s.inner(i):
            return i
    return -1


def classify_middle_less(g: Graph) -> MiddleLessType:
    """Sort an obstruction-free middle-less graph into template I, II or III."""
    _require_obstruction_free(g)
    subs = _spanning_subdivisions(g)
    if not subs:
        raise ContractError("graph has no spanning K2,3-subdivision")
    if find_middle_path(g) is not None:
        raise ContractError("graph is middle-ful")
    s = subs[0]
    extras = extra_edges(g, s)
    if not extras:
        return MiddleLessType("I", s, None)
    if len(extras) > 1:
        raise ContractError(f"expected at most one non-path edge, found {extras}")
    a, b = extras[0]
    pa, pb = _path_of(s, a), _path_of(s, b)
    if pa < 0 or pb < 0 or pa == pb:
        raise ContractError(f"non-path edge {extras[0]} does not join inner vertices of two paths")
    third = 3 - pa - pb
    s = s.reordered((pa, pb, third))
    if s.length(0) == 2 or s.length(1) == 2:
        return MiddleLessType("II", s, (a, b))
    for t in s.terminals:
        if g.has_edge(t, a) and g.has_edge(t, b):
            return MiddleLessType("III", s, (a, b), t)
    raise ContractError(f"non-path edge {extras[0]} endpoints do not share a terminal neighbour")


def _outer_inner(s: K23Subdivision, i: int) -> tuple[int, ...]:
    p = s.paths[i]
    return tuple(dict.fromkeys((p[1], p[-2])))


def fan_decomposition(g: Graph, s: K23Subdivision, mid: int) -> tuple[FanWitness, FanWitness]:
    """Fan witnesses for the two sides around the middle path ``mid``."""
    _check_index(mid)
    if mid not in middle_paths(g, s):
        raise ContractError(f"path {mid} is not a middle path of the subdivision")
    _require_obstruction_free(g)
    first, last = (i for i in (1, 2, 3) if i != mid)
    witnesses = []
    for side in (tuple(sorted((first, mid))), tuple(sorted((mid, last)))):
        spokes = extra_edges(g, s, side)
        handle = next(
            (h for h in _outer_inner(s, mid - 1) if all(h in e for e in spokes)),
            None,
        )
        if handle is None or not spokes:
            raise InternalInconsistency(f"no fan handle on side {side}: extra edges {spokes}")
        witnesses.append(FanWitness(side, handle, tuple(spokes)))
    w1, w2 = witnesses
    if w1.handle == w2.handle:
        if s.length(mid - 1) != 2:
            raise InternalInconsistency("coincident handles but the middle path is longer than 2")
    elif len(w1.spoke_edges) != 1 or len(w2.spoke_edges) != 1:
        raise InternalInconsistency("distinct handles but a side has more than one extra edge")
    return w1, w2
