"""Small simple undirected graphs on at most 64 vertices.

Adjacency is stored as one bitmask per vertex, which keeps neighbourhood
unions and intersections O(1) in the minor search that sits on top of this.
Every operation returns a new graph; vertex indices are always dense.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Sequence

MAX_VERTICES = 64
GRAPH6_HEADER = ">>graph6<<"


class CapacityError(ValueError):
    """Raised when an operation would exceed a size guard."""


class Graph6Error(ValueError):
    """Raised for malformed graph6 input."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _drop_bit(mask: int, b: int) -> int:
    low = mask & ((1 << b) - 1)
    return low | ((mask >> (b + 1)) << b)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    labels: tuple[Hashable, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"graph has {self.n} vertices, limit is {MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside the graph")
            if mask >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for w in bits(mask):
                if not self.adj[w] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels length does not match vertex count")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[Hashable] | None = None,
    ) -> Graph:
        if n > MAX_VERTICES:
            raise CapacityError(f"graph has {n} vertices, limit is {MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(labels) if labels is not None else None)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def m(self) -> int:
        return sum(mask.bit_count() for mask in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self.adj[u] >> v & 1
        ]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [mask.bit_count() for mask in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def neighborhood(self, vertex_mask: int) -> int:
        """Vertices adjacent to some vertex of ``vertex_mask``, outside it."""
        out = 0
        for v in bits(vertex_mask):
            out |= self.adj[v]
        return out & ~vertex_mask

    def label(self, v: int) -> Hashable:
        return v if self.labels is None else self.labels[v]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class Cycle:
    """A simple cycle, stored from its minimum vertex in its smaller direction."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) < 3 or len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"not a simple cycle: {self.vertices}")

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    @property
    def mask(self) -> int:
        out = 0
        for v in self.vertices:
            out |= 1 << v
        return out

    def is_in(self, g: Graph) -> bool:
        return all(g.has_edge(a, b) for a, b in self.edges())


# --------------------------------------------------------------------------
# graph6
# --------------------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no header, no newline)."""
    out = [_encode_n(g.n)]
    word = 0
    count = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            word = (word << 1) | (row >> i & 1)
            count += 1
            if count == 6:
                out.append(chr(word + 63))
                word = count = 0
    if count:
        out.append(chr((word << (6 - count)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line. A leading ``>>graph6<<`` header is accepted."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise Graph6Error(f"invalid graph6 character in {s!r}")
    if codes[0] < 63:
        n, payload = codes[0], codes[1:]
    else:
        if len(codes) < 4 or codes[1] == 63:
            raise Graph6Error(f"malformed length field in {s!r}")
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        payload = codes[4:]
    if n > MAX_VERTICES:
        raise CapacityError(f"graph6 input has {n} vertices, limit is {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    if len(payload) != (nbits + 5) // 6:
        raise Graph6Error(
            f"bit-string length mismatch: expected {(nbits + 5) // 6} bytes for n={n}, "
            f"got {len(payload)}"
        )
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if payload[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


# --------------------------------------------------------------------------
# Elementary operations
# --------------------------------------------------------------------------


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"cannot add edge ({u}, {v})")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, tuple(adj), g.labels)


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj), g.labels)


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    adj = tuple(_drop_bit(mask, v) for i, mask in enumerate(g.adj) if i != v)
    labels = None if g.labels is None else g.labels[:v] + g.labels[v + 1:]
    return Graph(g.n - 1, adj, labels)


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Merge the endpoints of edge (u, v) into the lower index, then compact.

    The merged vertex keeps the label of the lower endpoint.
    """
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    keep, gone = min(u, v), max(u, v)
    adj = list(g.adj)
    merged = (adj[keep] | adj[gone]) & ~((1 << keep) | (1 << gone))
    adj[keep] = merged
    for w in bits(merged):
        adj[w] = (adj[w] & ~(1 << gone)) | (1 << keep)
    adj[gone] = 0
    for w in range(g.n):
        adj[w] &= ~(1 << gone)
    return delete_vertex(Graph(g.n, tuple(adj), g.labels), gone)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    if g1.n + g2.n > MAX_VERTICES:
        raise CapacityError(f"union would have {g1.n + g2.n} vertices")
    adj = g1.adj + tuple(mask << g1.n for mask in g2.adj)
    return Graph(g1.n + g2.n, adj)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts."""
    u = disjoint_union(g1, g2)
    left = g1.full_mask
    right = g2.full_mask << g1.n
    adj = tuple(mask | (right if v < g1.n else left) for v, mask in enumerate(u.adj))
    return Graph(u.n, adj)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    vs = sorted(set(vertices))
    index = {v: i for i, v in enumerate(vs)}
    edges = [(index[a], index[b]) for a, b in g.edges() if a in index and b in index]
    labels = None if g.labels is None else [g.labels[v] for v in vs]
    return Graph.from_edges(len(vs), edges, labels)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph with vertex ``v`` renamed ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm is not a permutation of the vertices")
    return Graph.from_edges(g.n, [(perm[a], perm[b]) for a, b in g.edges()])


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~mask & ~(1 << v) for v, mask in enumerate(g.adj)))


# --------------------------------------------------------------------------
# Connectivity and cycles
# --------------------------------------------------------------------------


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of the subgraph induced by ``within`` (default: all)."""
    remaining = g.full_mask if within is None else within
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & remaining & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def components(g: Graph) -> list[list[int]]:
    return [list(bits(c)) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(component_masks(g)) == 1


def enumerate_cycles(g: Graph) -> list[Cycle]:
    """Every simple cycle exactly once, in deterministic DFS order.

    A cycle is found from its minimum vertex, walking only through larger
    vertices, and kept only in the direction whose second vertex is smaller
    than its last one.
    """
    found: list[Cycle] = []
    adj = g.adj
    for start in range(g.n):
        allowed = g.full_mask & ~((1 << (start + 1)) - 1)
        path = [start]

        def extend(v: int, used: int) -> None:
            nbrs = adj[v]
            if len(path) >= 3 and nbrs >> start & 1 and path[1] < path[-1]:
                found.append(Cycle(tuple(path)))
            for w in bits(nbrs & allowed & ~used):
                path.append(w)
                extend(w, used | (1 << w))
                path.pop()

        extend(start, 1 << start)
    return found
