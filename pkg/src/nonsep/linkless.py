"""Maximal linkless graphs from apex-augmented elongated prisms.

Linklessness is decided by the Robertson-Seymour-Thomas characterisation:
a graph is linkless iff it has no member of the Petersen family as a minor.
The family itself is computed as the closure of K6 under triangle-to-star
and star-to-triangle exchanges rather than typed in.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .canon import are_isomorphic, canonical_form
from .catalog import complete, complete_multipartite, elongated_prism, petersen_graph
from .graph import CapacityError, Graph, MAX_VERTICES, add_edge, delete_edge
from .minors import MinorModel, find_minor_model
from .subdivision import ContractError


class VerificationError(RuntimeError):
    """A graph that the construction guarantees failed one of its checks."""


@dataclass(frozen=True)
class ElongatedPrismSpec:
    side_lengths: tuple[int, int, int]

    def __post_init__(self) -> None:
        if len(self.side_lengths) != 3 or any(
            not isinstance(x, int) or x < 1 for x in self.side_lengths
        ):
            raise ValueError(f"side lengths must be three positive integers, got {self.side_lengths}")

    @property
    def n(self) -> int:
        return 6 + sum(x - 1 for x in self.side_lengths)

    @property
    def m(self) -> int:
        return 6 + sum(self.side_lengths)


def build_elongated_prism(spec: ElongatedPrismSpec) -> Graph:
    if spec.n > MAX_VERTICES:
        raise CapacityError(f"prism {spec.side_lengths} needs {spec.n} vertices")
    g = elongated_prism(spec.side_lengths)
    if g.n != spec.n or g.m != spec.m or g.m != g.n + 3:
        raise VerificationError(f"prism {spec.side_lengths} has the wrong size")
    return g


def apex_augment(g: Graph) -> Graph:
    """Add two non-adjacent vertices, numbered n and n+1, each joined to all of g."""
    if g.n + 2 > MAX_VERTICES:
        raise CapacityError(f"apex augmentation needs {g.n + 2} vertices")
    full = g.full_mask
    apex = full
    adj = tuple(mask | (0b11 << g.n) for mask in g.adj) + (apex, apex)
    h = Graph(g.n + 2, adj)
    if h.has_edge(g.n, g.n + 1) or h.m != g.m + 2 * g.n:
        raise VerificationError("apex augmentation broke its contract")
    return h


# --------------------------------------------------------------------------
# Petersen family
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilyMember:
    name: str
    graph: Graph
    provenance: tuple[str, ...]


def _triangles(g: Graph) -> list[tuple[int, int, int]]:
    return [
        (a, b, c)
        for a, b, c in combinations(range(g.n), 3)
        if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
    ]


def delta_wye(g: Graph, tri: tuple[int, int, int]) -> Graph:
    """Replace the triangle's edges by a new vertex joined to its corners."""
    a, b, c = tri
    h = g
    for x, y in ((a, b), (b, c), (a, c)):
        h = delete_edge(h, x, y)
    edges = h.edges() + [(g.n, a), (g.n, b), (g.n, c)]
    return Graph.from_edges(g.n + 1, edges)


def wye_delta(g: Graph, x: int) -> Graph | None:
    """Replace degree-3 vertex x by a triangle on its neighbours; None if that needs a parallel edge."""
    nb = g.neighbors(x)
    if len(nb) != 3 or any(g.has_edge(p, q) for p, q in combinations(nb, 2)):
        return None
    keep = [v for v in range(g.n) if v != x]
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[p], index[q]) for p, q in g.edges() if x not in (p, q)]
    edges += [(index[p], index[q]) for p, q in combinations(nb, 2)]
    return Graph.from_edges(g.n - 1, edges)


def _neighbours_in_closure(g: Graph) -> list[tuple[str, Graph]]:
    out = [(f"delta-wye on triangle {t}", delta_wye(g, t)) for t in _triangles(g)]
    for x in range(g.n):
        h = wye_delta(g, x)
        if h is not None:
            out.append((f"wye-delta at vertex {x}", h))
    return out


def _girth(g: Graph) -> int:
    best = 1 << 30
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        while queue:
            v = queue.pop(0)
            for w in g.neighbors(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def _k44_minus_edge() -> Graph:
    g = complete_multipartite(4, 4)
    return delete_edge(g, 0, 4)


def _name_member(g: Graph) -> str:
    if are_isomorphic(g, complete(6)):
        return "K6"
    if are_isomorphic(g, complete_multipartite(1, 3, 3)):
        return "K133"
    if are_isomorphic(g, _k44_minus_edge()):
        return "K44-e"
    if are_isomorphic(g, petersen_graph()):
        return "Petersen"
    return f"P{g.n}"


FAMILY_ORDER = ("K6", "K133", "P7", "K44-e", "P8", "P9", "Petersen")


@lru_cache(maxsize=None)
def petersen_family() -> tuple[FamilyMember, ...]:
    """The exchange closure of K6, one member per isomorphism class.

    Raises VerificationError unless the closure has exactly the seven
    expected members.
    """
    start = complete(6)
    found: dict = {canonical_form(start): (start, ())}
    queue = [start]
    while queue:
        g = queue.pop(0)
        chain = found[canonical_form(g)][1]
        for move, h in _neighbours_in_closure(g):
            key = canonical_form(h)
            if key not in found:
                found[key] = (h, chain + (move,))
                queue.append(h)
    members = [FamilyMember(_name_member(g), g, chain) for g, chain in found.values()]
    if sorted(m.name for m in members) != sorted(FAMILY_ORDER):
        raise VerificationError(f"closure of K6 is {sorted(m.name for m in members)}")
    members.sort(key=lambda m: FAMILY_ORDER.index(m.name))
    pet = members[-1].graph
    if not (pet.n == 10 and set(pet.degrees()) == {3} and _girth(pet) == 5):
        raise VerificationError("closure does not contain a 3-regular girth-5 graph on 10 vertices")
    return tuple(members)


def family_graph(name: str) -> Graph:
    for m in petersen_family():
        if m.name == name:
            return m.graph
    raise KeyError(f"{name!r} is not a Petersen family member")


def is_closed(members: tuple[FamilyMember, ...]) -> bool:
    keys = {canonical_form(m.graph) for m in members}
    return all(
        canonical_form(h) in keys for m in members for _, h in _neighbours_in_closure(m.graph)
    )


# --------------------------------------------------------------------------
# Linklessness and maximality
# --------------------------------------------------------------------------


def family_minor(g: Graph) -> tuple[str, MinorModel] | None:
    """The first family member (in FAMILY_ORDER) that is a minor of g, with its model."""
    if g.m < 15:
        return None  # every member has 15 edges
    for member in petersen_family():
        model = find_minor_model(g, member.graph)
        if model is not None:
            return member.name, model
    return None


def is_linkless(g: Graph) -> bool:
    return family_minor(g) is None


@dataclass(frozen=True)
class EdgeEvidence:
    edge: tuple[int, int]
    member: str | None
    model: MinorModel | None

    def to_json(self) -> dict:
        return {
            "edge": list(self.edge),
            "minor": self.member,
            "branch_sets": None if self.model is None else [sorted(b) for b in self.model.branch_sets],
        }


@dataclass(frozen=True)
class MaximalityReport:
    maximal: bool
    evidence: tuple[EdgeEvidence, ...]

    def to_json(self) -> dict:
        return {"maximal": self.maximal, "evidence": [e.to_json() for e in self.evidence]}


def _edge_evidence(args: tuple[Graph, tuple[int, int]]) -> EdgeEvidence:
    h, (a, b) = args
    found = family_minor(add_edge(h, a, b))
    if found is None:
        return EdgeEvidence((a, b), None, None)
    return EdgeEvidence((a, b), found[0], found[1])


def verify_maximal_linkless(h: Graph, jobs: int = 1) -> MaximalityReport:
    """Check that every missing edge creates a Petersen-family minor."""
    h = Graph(h.n, h.adj)
    if not is_linkless(h):
        raise ContractError("graph is not linkless")
    tasks = [(h, e) for e in h.non_edges()]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            evidence = tuple(pool.map(_edge_evidence, tasks))
    else:
        evidence = tuple(_edge_evidence(t) for t in tasks)
    return MaximalityReport(all(e.member is not None for e in evidence), evidence)


# --------------------------------------------------------------------------
# The family of maximal linkless graphs
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class SachsMember:
    spec: ElongatedPrismSpec
    graph: Graph
    report: MaximalityReport

    def to_json(self) -> dict:
        g = self.graph
        return {
            "side_lengths": list(self.spec.side_lengths),
            "n": g.n,
            "m": g.m,
            "edge_identity": g.m == 3 * g.n - 3,
            "linkless": True,
            "maximal": self.report.maximal,
            "apex_edge_minor": next(
                (e.member for e in self.report.evidence if e.edge == (g.n - 2, g.n - 1)), None
            ),
            "evidence": [e.to_json() for e in self.report.evidence],
        }


def prism_specs(max_total_length: int) -> list[ElongatedPrismSpec]:
    """All ordered side-length triples with sum at most the bound."""
    return [
        ElongatedPrismSpec(t)
        for t in sorted(product(range(1, max_total_length + 1), repeat=3), key=lambda t: (sum(t), t))
        if sum(t) <= max_total_length
    ]


def verify_member(g: Graph, jobs: int = 1) -> MaximalityReport:
    """Edge identity, linklessness and maximality; raises VerificationError naming the failed check."""
    if g.m != 3 * g.n - 3:
        raise VerificationError(f"edge count {g.m} is not 3*{g.n}-3 = {3 * g.n - 3}")
    if not is_linkless(g):
        raise VerificationError("graph has a Petersen-family minor")
    report = verify_maximal_linkless(g, jobs)
    if not report.maximal:
        bad = [e.edge for e in report.evidence if e.member is None]
        raise VerificationError(f"adding {bad[0]} keeps the graph linkless")
    return report


def sachs_family(max_total_length: int, jobs: int = 1) -> list[SachsMember]:
    """Apex-augmented elongated prisms with total side length at most the bound.

    One graph per isomorphism class; every graph is verified before it is
    returned.
    """
    out: list[SachsMember] = []
    for spec in prism_specs(max_total_length):
        h = apex_augment(build_elongated_prism(spec))
        if any(are_isomorphic(h, s.graph) for s in out):
            continue
        try:
            report = verify_member(h, jobs)
        except VerificationError as exc:
            raise VerificationError(f"prism {spec.side_lengths}: {exc}") from exc
        out.append(SachsMember(spec, h, report))
    return out
