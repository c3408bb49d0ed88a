"""Brute-force ground truth: does some plane drawing have no separating cycle?

A connected plane drawing is, up to homeomorphism of the sphere, a genus-0
rotation system. Rotation systems are built edge by edge in BFS order; an
edge between two vertices already drawn may only go into two corners of a
common face, which is exactly the condition for the genus to stay 0, so
every planar rotation system is produced once and nothing else is. Mirror
images never change which cycles separate, so only one of each mirror pair
is produced: the first time a vertex reaches degree 3, the new edge is put
last in its rotation.

Disconnected drawings add, per component, a choice of the face that faces
the rest of the drawing and a nesting forest that places each component
either at top level or inside a face of another component.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .graph import CapacityError, Cycle, Graph, component_masks, bits, enumerate_cycles

DEFAULT_CAPACITY = 8

Dart = tuple[int, int]


def capacity() -> int:
    raw = os.environ.get("NONSEP_CAPACITY")
    if raw is None:
        return DEFAULT_CAPACITY
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"NONSEP_CAPACITY must be an integer, got {raw!r}") from None


def _guard(g: Graph) -> None:
    limit = capacity()
    if g.n > limit:
        raise CapacityError(
            f"embedding oracle handles at most {limit} vertices, got {g.n} (set NONSEP_CAPACITY to override)"
        )


@dataclass(frozen=True)
class RotationSystem:
    """``rotation[v]`` lists the neighbours of v in cyclic order."""

    rotation: tuple[tuple[int, ...], ...]

    def is_valid_for(self, g: Graph) -> bool:
        return len(self.rotation) == g.n and all(
            sorted(r) == g.neighbors(v) for v, r in enumerate(self.rotation)
        )

    def succ(self, v: int, u: int) -> int:
        r = self.rotation[v]
        return r[(r.index(u) + 1) % len(r)]

    def faces(self, vertices: list[int] | None = None) -> list[tuple[Dart, ...]]:
        """Face boundaries as dart cycles; dart (u, v) is followed by (v, succ(v, u))."""
        vs = range(len(self.rotation)) if vertices is None else vertices
        darts = sorted((u, v) for u in vs for v in self.rotation[u])
        seen: set[Dart] = set()
        out = []
        for d in darts:
            if d in seen:
                continue
            face = []
            cur = d
            while cur not in seen:
                seen.add(cur)
                face.append(cur)
                u, v = cur
                cur = (v, self.succ(v, u))
            out.append(tuple(face))
        return out

    def mirrored(self) -> RotationSystem:
        return RotationSystem(tuple(tuple(reversed(r)) for r in self.rotation))


@dataclass(frozen=True)
class PlanarDrawing:
    """A plane drawing of a possibly disconnected graph.

    ``faces[c]`` are the faces of component ``c`` as dart cycles (a lone
    vertex has a single face with no darts). ``outer[c]`` is the face of
    component c that contains everything not nested inside c; ``nesting[c]``
    is ``(parent component, parent face)`` or None for top level.
    """

    components: tuple[tuple[int, ...], ...]
    rotation: RotationSystem
    faces: tuple[tuple[tuple[Dart, ...], ...], ...]
    outer: tuple[int, ...]
    nesting: tuple[tuple[int, int] | None, ...]

    def component_of(self, v: int) -> int:
        for c, vs in enumerate(self.components):
            if v in vs:
                return c
        raise ValueError(f"vertex {v} is not in the drawing")

    def euler_ok(self, g: Graph) -> bool:
        for c, vs in enumerate(self.components):
            e = sum(g.degree(v) for v in vs) // 2
            if len(vs) - e + len(self.faces[c]) != 2:
                return False
        return True

    def nesting_ok(self) -> bool:
        k = len(self.components)
        for c in range(k):
            seen = {c}
            cur = self.nesting[c]
            while cur is not None:
                parent, face = cur
                if parent in seen or face == self.outer[parent] or not 0 <= face < len(self.faces[parent]):
                    return False
                seen.add(parent)
                cur = self.nesting[parent]
        return True

    def to_json(self) -> dict:
        def walk(face: tuple[Dart, ...], c: int) -> list[int]:
            return [u for u, _ in face] if face else [self.components[c][0]]

        return {
            "rotation": [list(r) for r in self.rotation.rotation],
            "components": [list(vs) for vs in self.components],
            "faces": [[walk(f, c) for f in fs] for c, fs in enumerate(self.faces)],
            "outer": list(self.outer),
            "nesting": [list(p) if p is not None else None for p in self.nesting],
        }


# --------------------------------------------------------------------------
# Enumeration
# --------------------------------------------------------------------------


def _bfs_edges(g: Graph, comp: int) -> list[tuple[int, int, bool]]:
    """Edges of a component in BFS order, flagged True when they reach a new vertex."""
    root = (comp & -comp).bit_length() - 1
    seen = 1 << root
    queue = [root]
    done: set[frozenset[int]] = set()
    out = []
    while queue:
        v = queue.pop(0)
        for w in bits(g.adj[v]):
            e = frozenset((v, w))
            if e in done:
                continue
            done.add(e)
            fresh = not seen >> w & 1
            out.append((v, w, fresh))
            if fresh:
                seen |= 1 << w
                queue.append(w)
    return out


def _partial_faces(rot: dict[int, list[int]]) -> dict[Dart, int]:
    face_of: dict[Dart, int] = {}
    fid = 0
    for u in sorted(rot):
        for v in rot[u]:
            if (u, v) in face_of:
                continue
            cur = (u, v)
            while cur not in face_of:
                face_of[cur] = fid
                a, b = cur
                r = rot[b]
                cur = (b, r[(r.index(a) + 1) % len(r)])
            fid += 1
    return face_of


def _component_rotations(g: Graph, comp: int) -> Iterator[dict[int, list[int]]]:
    vs = list(bits(comp))
    m = sum(g.degree(v) for v in vs) // 2
    if len(vs) >= 3 and m > 3 * len(vs) - 6:
        return
    edges = _bfs_edges(g, comp)
    rot: dict[int, list[int]] = {vs[0]: []}

    def corners(v: int, restrict: bool) -> list[int]:
        """Insertion positions in rot[v]; position p puts the new edge after rot[v][p - 1]."""
        r = rot[v]
        if not r:
            return [0]
        if restrict and len(r) == 2:
            return [2]
        return list(range(1, len(r) + 1))

    def rec(k: int, broken: bool) -> Iterator[dict[int, list[int]]]:
        if k == len(edges):
            yield {v: list(r) for v, r in rot.items()}
            return
        a, b, fresh = edges[k]
        if fresh:
            restrict = not broken and len(rot[a]) == 2
            for i in corners(a, restrict):
                rot[a].insert(i, b)
                rot[b] = [a]
                yield from rec(k + 1, broken or len(rot[a]) >= 3)
                del rot[b]
                rot[a].pop(i)
            return
        restrict_a = not broken and len(rot[a]) == 2
        restrict_b = not broken and not restrict_a and len(rot[b]) == 2
        face_of = _partial_faces(rot)
        for i in corners(a, restrict_a):
            fa = face_of[(rot[a][i - 1], a)]
            for j in corners(b, restrict_b):
                if face_of[(rot[b][j - 1], b)] != fa:
                    continue
                rot[a].insert(i, b)
                rot[b].insert(j, a)
                yield from rec(k + 1, broken or len(rot[a]) >= 3 or len(rot[b]) >= 3)
                rot[b].pop(j)
                rot[a].pop(i)

    yield from rec(0, False)


def _nesting_forests(
    face_counts: list[int], outer: tuple[int, ...]
) -> Iterator[tuple[tuple[int, int] | None, ...]]:
    k = len(face_counts)
    options = []
    for c in range(k):
        opts: list[tuple[int, int] | None] = [None]
        for p in range(k):
            if p != c:
                opts.extend((p, f) for f in range(face_counts[p]) if f != outer[p])
        options.append(opts)
    for choice in product(*options):
        ok = True
        for c in range(k):
            seen = {c}
            cur = choice[c]
            while cur is not None:
                if cur[0] in seen:
                    ok = False
                    break
                seen.add(cur[0])
                cur = choice[cur[0]]
            if not ok:
                break
        if ok:
            yield choice


def enumerate_planar_embeddings(g: Graph) -> Iterator[PlanarDrawing]:
    """Every plane drawing of g up to mirror images and homeomorphism.

    For connected g this is one drawing per genus-0 rotation system (outer
    face fixed to face 0, which does not affect separation).
    """
    _guard(g)
    g = Graph(g.n, g.adj)
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return
    comps = sorted(component_masks(g), key=lambda c: (c & -c))
    comp_vertices = tuple(tuple(bits(c)) for c in comps)
    per_comp: list[list[tuple[dict[int, list[int]], list[tuple[Dart, ...]]]]] = []
    for c, comp in enumerate(comps):
        systems = []
        for rot in _component_rotations(g, comp):
            full = [tuple(rot.get(v, ())) for v in range(g.n)]
            faces = RotationSystem(tuple(full)).faces(list(comp_vertices[c]))
            systems.append((rot, faces or [()]))
        if not systems:
            return
        per_comp.append(systems)
    connected = len(comps) == 1
    for combo in product(*per_comp):
        rotation = [()] * g.n
        for rot, _ in combo:
            for v, r in rot.items():
                rotation[v] = tuple(r)
        rs = RotationSystem(tuple(rotation))
        faces = tuple(tuple(fs) for _, fs in combo)
        counts = [len(fs) for fs in faces]
        outers = [(0,)] if connected else product(*(range(c) for c in counts))
        for outer in outers:
            for nesting in _nesting_forests(counts, tuple(outer)):
                d = PlanarDrawing(comp_vertices, rs, faces, tuple(outer), nesting)
                if not d.euler_ok(g):
                    raise AssertionError("enumerated rotation system is not planar")
                yield d


# --------------------------------------------------------------------------
# Separating cycles
# --------------------------------------------------------------------------


def _face_index(d: PlanarDrawing, c: int) -> dict[Dart, int]:
    return {dart: i for i, face in enumerate(d.faces[c]) for dart in face}


def _face_classes(d: PlanarDrawing, c: int, cyc_edges: set[frozenset[int]]) -> list[int]:
    """Split the faces of component c along the cycle: union faces across non-cycle edges."""
    nf = len(d.faces[c])
    parent = list(range(nf))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    index = _face_index(d, c)
    for (u, v), f in index.items():
        if frozenset((u, v)) not in cyc_edges:
            a, b = find(f), find(index[(v, u)])
            if a != b:
                parent[a] = b
    return [find(f) for f in range(nf)]


def _rooted_parity(d: PlanarDrawing, c: int, cyc_edges: set[frozenset[int]], root: int) -> list[int]:
    """Crossing parity of every face from ``root`` in the dual graph; 1 means inside."""
    index = _face_index(d, c)
    parity = [-1] * len(d.faces[c])
    parity[root] = 0
    queue = [root]
    while queue:
        f = queue.pop(0)
        for u, v in d.faces[c][f]:
            other = index[(v, u)]
            p = parity[f] ^ (frozenset((u, v)) in cyc_edges)
            if parity[other] == -1:
                parity[other] = p
                queue.append(other)
            elif parity[other] != p:
                raise AssertionError("inconsistent crossing parity: drawing is not planar")
    return parity


def _entry_face(d: PlanarDrawing, c: int, other: int) -> int:
    """The face of component c that contains component ``other``."""
    cur = d.nesting[other]
    while cur is not None:
        if cur[0] == c:
            return cur[1]
        cur = d.nesting[cur[0]]
    return d.outer[c]


def _sides(
    g: Graph, d: PlanarDrawing, cyc: Cycle, label: list[int], face_at: dict[Dart, int], c: int
) -> set[int]:
    """Labels of the sides that hold at least one vertex off the cycle."""
    on = cyc.mask
    occupied = set()
    for v in d.components[c]:
        if not on >> v & 1:
            occupied.add(label[face_at[(v, d.rotation.rotation[v][0])]])
    for other in range(len(d.components)):
        if other != c:
            occupied.add(label[_entry_face(d, c, other)])
    return occupied


def is_separating(g: Graph, d: PlanarDrawing, cyc: Cycle, outer_face: int | None = None) -> bool:
    c = d.component_of(cyc.vertices[0])
    edges = {frozenset(e) for e in cyc.edges()}
    face_at = _face_index(d, c)
    if outer_face is None:
        label = _face_classes(d, c, edges)
        if len(set(label)) != 2:
            raise AssertionError("a cycle of a plane drawing must split the faces in two")
    else:
        label = _rooted_parity(d, c, edges, outer_face)
    return len(_sides(g, d, cyc, label, face_at, c)) == 2


def separating_cycles(g: Graph, d: PlanarDrawing, outer_face: int | None = None) -> list[Cycle]:
    """Cycles of g with vertices on both sides in drawing d.

    By default the two sides are found by splitting the face set along the
    cycle. With ``outer_face`` (connected drawings only) they are found by
    crossing parity from that face instead; the answer must not change.
    """
    if outer_face is not None and len(d.components) != 1:
        raise ValueError("outer_face re-rooting is only defined for connected drawings")
    return [c for c in enumerate_cycles(g) if is_separating(g, d, c, outer_face)]


def exists_nonseparating_drawing(g: Graph) -> PlanarDrawing | None:
    g = Graph(g.n, g.adj)
    cycles = enumerate_cycles(g)
    for d in enumerate_planar_embeddings(g):
        if not any(is_separating(g, d, c) for c in cycles):
            return d
    return None
