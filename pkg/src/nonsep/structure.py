"""Recognition of non-separating planar graphs with checkable certificates.

A graph is a member exactly when it has none of K1+K4, K1+K23 and K113 as
a minor. Members are certified by a structural witness: an outerplanar
vertex order, an embedding into a wheel, or an embedding into an elongated
triangular prism. Non-members are certified by a minor model.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Union

from .catalog import OBSTRUCTIONS, elongated_prism, named, prism_sides
from .graph import Graph, add_edge, bits, component_masks
from .minors import MinorModel, contains_minor, find_minor_model, verify_minor_model
from .subdivision import (
    ContractError,
    InternalInconsistency,
    K23Subdivision,
    classify_middle_less,
    fan_decomposition,
    find_middle_path,
    find_spanning_k23_subdivisions,
)

MEMBER = "member"
NON_MEMBER = "non-member"


def _interleave(pos: dict[int, int], e: tuple[int, int], f: tuple[int, int]) -> bool:
    a, b = sorted((pos[e[0]], pos[e[1]]))
    c, d = sorted((pos[f[0]], pos[f[1]]))
    return a < c < b < d or c < a < d < b


@dataclass(frozen=True)
class OuterplanarWitness:
    """Vertices placed on a circle in ``order``; no two edges cross."""

    order: tuple[int, ...]

    def verify(self, g: Graph) -> bool:
        if sorted(self.order) != list(range(g.n)):
            return False
        pos = {v: i for i, v in enumerate(self.order)}
        edges = g.edges()
        return not any(_interleave(pos, e, f) for e, f in combinations(edges, 2))

    def to_json(self) -> dict:
        return {"type": "outerplanar", "order": list(self.order)}


@dataclass(frozen=True)
class WheelWitness:
    """g is a subgraph of the wheel with this hub and rim cycle.

    ``hub`` is None when g already embeds in the rim cycle alone.
    """

    hub: int | None
    rim: tuple[int, ...]

    def verify(self, g: Graph) -> bool:
        vs = list(self.rim) + ([] if self.hub is None else [self.hub])
        if len(self.rim) < 3 or sorted(vs) != list(range(g.n)):
            return False
        k = len(self.rim)
        rim_edges = {frozenset((self.rim[i], self.rim[(i + 1) % k])) for i in range(k)}
        return all(
            self.hub in (a, b) or frozenset((a, b)) in rim_edges for a, b in g.edges()
        )

    def to_json(self) -> dict:
        return {"type": "wheel", "hub": self.hub, "rim": list(self.rim)}


@dataclass(frozen=True)
class PrismWitness:
    """g is a subgraph of the elongated prism on triangles A, B and the sides.

    ``sides[i]`` runs from ``triangle_a[i]`` to ``triangle_b[i]``. A host
    position that no vertex of g occupies holds None.
    """

    triangle_a: tuple[int | None, ...]
    triangle_b: tuple[int | None, ...]
    sides: tuple[tuple[int | None, ...], ...]

    @property
    def side_lengths(self) -> tuple[int, ...]:
        return tuple(len(s) - 1 for s in self.sides)

    def verify(self, g: Graph) -> bool:
        if len(self.triangle_a) != 3 or len(self.triangle_b) != 3 or len(self.sides) != 3:
            return False
        for i, side in enumerate(self.sides):
            if len(side) < 2 or side[0] != self.triangle_a[i] or side[-1] != self.triangle_b[i]:
                return False
        slots = [v for side in self.sides for v in side if v is not None]
        if sorted(slots) != list(range(g.n)):
            return False
        allowed = set()
        for tri in (self.triangle_a, self.triangle_b):
            allowed |= {frozenset(p) for p in combinations(tri, 2) if None not in p}
        for side in self.sides:
            allowed |= {
                frozenset(side[i : i + 2]) for i in range(len(side) - 1) if None not in side[i : i + 2]
            }
        return all(frozenset(e) in allowed for e in g.edges())

    def to_json(self) -> dict:
        return {
            "type": "elongated-prism",
            "triangle_a": list(self.triangle_a),
            "triangle_b": list(self.triangle_b),
            "sides": [list(s) for s in self.sides],
            "side_lengths": list(self.side_lengths),
        }


StructuralWitness = Union[OuterplanarWitness, WheelWitness, PrismWitness]


def witness_from_json(obj: dict) -> StructuralWitness:
    kind = obj.get("type")
    if kind == "outerplanar":
        return OuterplanarWitness(tuple(obj["order"]))
    if kind == "wheel":
        return WheelWitness(obj["hub"], tuple(obj["rim"]))
    if kind == "elongated-prism":
        return PrismWitness(
            tuple(obj["triangle_a"]), tuple(obj["triangle_b"]), tuple(tuple(s) for s in obj["sides"])
        )
    raise ValueError(f"unknown witness type {kind!r}")


# --------------------------------------------------------------------------
# Outerplanarity
# --------------------------------------------------------------------------


def _blocks(g: Graph) -> list[set[int]]:
    """Biconnected components (bridges are 2-vertex blocks; isolated vertices omitted)."""
    disc = [-1] * g.n
    low = [0] * g.n
    stack: list[tuple[int, int]] = []
    blocks: list[set[int]] = []
    clock = 0

    def dfs(v: int, parent: int) -> None:
        nonlocal clock
        disc[v] = low[v] = clock
        clock += 1
        for w in bits(g.adj[v]):
            if disc[w] == -1:
                stack.append((v, w))
                dfs(w, v)
                low[v] = min(low[v], low[w])
                if low[w] >= disc[v]:
                    block: set[int] = set()
                    while True:
                        e = stack.pop()
                        block.update(e)
                        if e == (v, w):
                            break
                    blocks.append(block)
            elif w != parent and disc[w] < disc[v]:
                stack.append((v, w))
                low[v] = min(low[v], disc[w])

    for v in range(g.n):
        if disc[v] == -1:
            dfs(v, -1)
    return blocks


def _outer_cycle(g: Graph, block: set[int]) -> list[int] | None:
    """The boundary cycle of an outerplanar block, or None if it has none."""
    if len(block) == 2:
        return sorted(block)
    mask = sum(1 << v for v in block)
    outer: dict[int, list[int]] = {v: [] for v in block}
    for v in block:
        for w in bits(g.adj[v] & mask):
            if v < w and len(component_masks(g, mask & ~(1 << v) & ~(1 << w))) == 1:
                outer[v].append(w)
                outer[w].append(v)
    if any(len(nb) != 2 for nb in outer.values()):
        return None
    start = min(block)
    cyc = [start]
    prev, cur = start, min(outer[start])
    while cur != start:
        cyc.append(cur)
        a, b = outer[cur]
        prev, cur = cur, (b if a == prev else a)
    return cyc if len(cyc) == len(block) else None


def outerplanar_order(g: Graph) -> OuterplanarWitness | None:
    """Build a boundary order from the block structure; None if g is not outerplanar.

    The order is produced by walking each block's boundary cycle and
    descending into the other blocks at every cut vertex as it is reached,
    so blocks nest like parentheses. The result is always verified.
    """
    blocks = _blocks(g)
    cycles = []
    for b in blocks:
        c = _outer_cycle(g, b)
        if c is None:
            return None
        cycles.append(c)
    at: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for i, b in enumerate(blocks):
        for v in b:
            at[v].append(i)
    order: list[int] = []
    placed = [False] * g.n
    used = [False] * len(blocks)

    def visit(v: int) -> None:
        order.append(v)
        placed[v] = True
        for i in at[v]:
            if used[i]:
                continue
            used[i] = True
            c = cycles[i]
            k = c.index(v)
            for w in c[k + 1 :] + c[:k]:
                if not placed[w]:
                    visit(w)

    for v in range(g.n):
        if not placed[v]:
            visit(v)
    w = OuterplanarWitness(tuple(order))
    return w if w.verify(g) else None


def is_outerplanar(g: Graph) -> tuple[int, ...] | None:
    """A boundary order when g has neither K4 nor K23 as a minor, else None."""
    if contains_minor(g, "K4") or contains_minor(g, "K23"):
        return None
    w = outerplanar_order(g)
    if w is None:
        raise InternalInconsistency("K4- and K23-minor-free graph has no outerplanar order")
    return w.order


# --------------------------------------------------------------------------
# Wheels and prisms, by direct search
# --------------------------------------------------------------------------


def _rim_order(g: Graph, keep: int) -> tuple[int, ...] | None:
    """An order of ``keep`` making every edge inside it cyclically consecutive."""
    vs = list(bits(keep))
    if len(vs) < 3:
        return None
    deg = {v: (g.adj[v] & keep).bit_count() for v in vs}
    if any(d > 2 for d in deg.values()):
        return None
    comps = component_masks(g, keep)
    m = sum(deg.values()) // 2
    if len(comps) == 1 and m == len(vs):
        pass  # spanning cycle
    elif m != len(vs) - len(comps):
        return None  # contains a cycle that does not span
    order: list[int] = []
    for comp in comps:
        members = list(bits(comp))
        start = next((v for v in members if deg[v] <= 1), members[0])
        order.append(start)
        prev, cur = -1, start
        while True:
            nxt = [w for w in bits(g.adj[cur] & keep) if w != prev and w not in order]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            order.append(cur)
    return tuple(order)


def wheel_subgraph_witness(g: Graph) -> WheelWitness | None:
    """Embed g in a wheel (or a bare cycle) on its own vertex set."""
    rim = _rim_order(g, g.full_mask)
    if rim is not None:
        return WheelWitness(None, rim)
    for hub in range(g.n):
        rim = _rim_order(g, g.full_mask & ~(1 << hub))
        if rim is not None:
            return WheelWitness(hub, rim)
    return None


def _compositions(total: int) -> list[tuple[int, int, int]]:
    return [
        (a, b, total - a - b)
        for a in range(1, total + 1)
        for b in range(a, total + 1)
        if total - a - b >= b
    ]


def _embed(g: Graph, host: Graph) -> list[int] | None:
    """An injective map of g into host carrying edges to edges."""
    order: list[int] = []
    for comp in sorted(component_masks(g), key=lambda c: -c.bit_count()):
        members = list(bits(comp))
        first = max(members, key=lambda v: (g.degree(v), -v))
        seen = {first}
        queue = [first]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sorted(bits(g.adj[v] & comp), key=lambda w: -g.degree(w)):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    image = [-1] * g.n
    taken = 0
    hdeg = host.degrees()

    def extend(k: int) -> bool:
        nonlocal taken
        if k == len(order):
            return True
        v = order[k]
        cand = host.full_mask & ~taken
        for w in bits(g.adj[v]):
            if image[w] >= 0:
                cand &= host.adj[image[w]]
        for x in bits(cand):
            if hdeg[x] < g.degree(v):
                continue
            image[v] = x
            taken |= 1 << x
            if extend(k + 1):
                return True
            taken &= ~(1 << x)
            image[v] = -1
        return False

    return image if extend(0) else None


def elongated_prism_subgraph_witness(g: Graph) -> PrismWitness | None:
    """Embed g in an elongated triangular prism.

    Hosts are tried by increasing size. A host with exactly n(g) vertices
    suffices whenever g is not already outerplanar or a wheel subgraph;
    the search continues to n(g) + 6 vertices, past which an unused host
    vertex can always be excised, so the answer is exact.
    """
    if max(g.degrees(), default=0) > 3 or g.m > g.n + 3:
        return None
    for size in range(max(6, g.n), g.n + 7):
        for lengths in _compositions(size - 3):
            host = elongated_prism(lengths)
            image = _embed(g, host)
            if image is None:
                continue
            inv: dict[int, int] = {x: v for v, x in enumerate(image)}
            sides = tuple(tuple(inv.get(x) for x in side) for side in prism_sides(lengths))
            w = PrismWitness(
                tuple(s[0] for s in sides), tuple(s[-1] for s in sides), sides
            )
            if not w.verify(g):
                raise InternalInconsistency("prism embedding failed its own check")
            return w
    return None


def structural_witness(g: Graph) -> StructuralWitness | None:
    """First direct witness in the order outerplanar, wheel, prism."""
    return outerplanar_order(g) or wheel_subgraph_witness(g) or elongated_prism_subgraph_witness(g)


# --------------------------------------------------------------------------
# Classification
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Classification:
    verdict: str
    certificate: Union[StructuralWitness, MinorModel]
    case: str
    obstruction: str | None = None

    @property
    def is_member(self) -> bool:
        return self.verdict == MEMBER

    def verify(self, g: Graph) -> bool:
        if self.verdict == NON_MEMBER:
            return isinstance(self.certificate, MinorModel) and verify_minor_model(
                g, named(self.obstruction), self.certificate
            )
        return not isinstance(self.certificate, MinorModel) and self.certificate.verify(g)

    def to_json(self) -> dict:
        if isinstance(self.certificate, MinorModel):
            cert = self.certificate.to_json(name=self.obstruction)
        else:
            cert = self.certificate.to_json()
        return {"verdict": self.verdict, "case": self.case, "certificate": cert}


def _cycle_of(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """The cycle formed by two internally disjoint paths with common ends."""
    return tuple(p) + tuple(q[-2:0:-1])


def _middle_less_witness(g: Graph) -> tuple[StructuralWitness, str]:
    t = classify_middle_less(g)
    s = t.subdivision
    p = s.paths
    case = f"K23-middle-less-type-{t.kind}"
    if t.kind == "I":
        short = next((i for i in range(3) if s.length(i) == 2), None)
        if short is not None:
            a, b = (p[j] for j in range(3) if j != short)
            return WheelWitness(p[short][1], _cycle_of(a, b)), case
        u, v = s.terminals
        return (
            PrismWitness(
                (u, p[1][1], p[2][1]),
                (v, p[1][-2], p[2][-2]),
                (p[0], p[1][1:-1], p[2][1:-1]),
            ),
            case,
        )
    if t.kind == "II":
        short = 0 if s.length(0) == 2 else 1
        return WheelWitness(p[short][1], _cycle_of(p[1 - short], p[2])), case
    if t.terminal == s.terminals[1]:
        s = s.reversed()
        p = s.paths
    u, v = s.terminals
    return (
        PrismWitness(
            (u, p[0][1], p[1][1]),
            (v, p[0][-2], p[1][-2]),
            (p[2], p[0][1:-1], p[1][1:-1]),
        ),
        case,
    )


def _middle_ful_witness(g: Graph, s: K23Subdivision, mid: int) -> tuple[StructuralWitness, str]:
    w1, w2 = fan_decomposition(g, s, mid)
    others = [i for i in (1, 2, 3) if i != mid]
    # handle of the side shared with others[0] comes first
    h1 = w1.handle if others[0] in w1.side else w2.handle
    h2 = w2.handle if h1 == w1.handle else w1.handle
    s = s.reordered((others[0] - 1, mid - 1, others[1] - 1))
    p = s.paths
    if h1 == h2:
        return WheelWitness(h1, _cycle_of(p[0], p[2])), "K23-middle-ful-wheel"
    if h1 != p[1][1]:
        s = s.reversed()
        p = s.paths
    u, v = s.terminals
    return (
        PrismWitness(
            (u, p[0][1], p[1][1]),
            (p[2][-2], v, p[1][-2]),
            (p[2][:-1], p[0][1:], p[1][1:-1]),
        ),
        "K23-middle-ful-prism",
    )


def classify(g: Graph) -> Classification:
    """Decide membership and attach a certificate that has been re-verified."""
    g = Graph(g.n, g.adj)
    for name in OBSTRUCTIONS:
        model = find_minor_model(g, name)
        if model is not None:
            result = Classification(NON_MEMBER, model, "obstruction", name)
            break
    else:
        result = _classify_member(g)
    if not result.verify(g):
        raise InternalInconsistency(f"certificate for case {result.case} does not verify")
    return result


def _classify_member(g: Graph) -> Classification:
    has_k4 = contains_minor(g, "K4")
    has_k23 = contains_minor(g, "K23")
    if not has_k4 and not has_k23:
        w = outerplanar_order(g)
        if w is None:
            raise InternalInconsistency("K4- and K23-minor-free graph has no outerplanar order")
        return Classification(MEMBER, w, "outerplanar")
    if not has_k23:
        if g.n != 4 or g.m != 6:
            raise InternalInconsistency("obstruction-free graph with a K4 minor but no K23 minor is not K4")
        return Classification(MEMBER, WheelWitness(0, (1, 2, 3)), "K4-only")
    if not find_spanning_k23_subdivisions(g):
        raise InternalInconsistency("obstruction-free graph with a K23 minor has no spanning K23 subdivision")
    try:
        found = find_middle_path(g)
        if found is None:
            witness, case = _middle_less_witness(g)
        else:
            witness, case = _middle_ful_witness(g, *found)
    except ContractError as exc:
        raise InternalInconsistency(str(exc)) from exc
    return Classification(MEMBER, witness, case)


def is_member(g: Graph) -> bool:
    return not any(contains_minor(g, name) for name in OBSTRUCTIONS)


def check_maximal_nonseparating(g: Graph) -> bool:
    """True iff g is a member and adding any missing edge makes it a non-member."""
    if not classify(g).is_member:
        raise ContractError("graph is not a non-separating planar graph")
    return all(not classify(add_edge(g, a, b)).is_member for a, b in g.non_edges())


__all__ = [
    "Classification",
    "MEMBER",
    "NON_MEMBER",
    "OuterplanarWitness",
    "PrismWitness",
    "StructuralWitness",
    "WheelWitness",
    "check_maximal_nonseparating",
    "classify",
    "elongated_prism_subgraph_witness",
    "is_member",
    "is_outerplanar",
    "outerplanar_order",
    "structural_witness",
    "wheel_subgraph_witness",
    "witness_from_json",
]
