from __future__ import annotations

import random

import networkx as nx
import pytest

from conftest import prism, to_nx
from nonsep.canon import are_isomorphic
from nonsep.catalog import complete, complete_multipartite, cycle, path
from nonsep.graph import Graph, add_edge, delete_edge
from nonsep.linkless import (
    FAMILY_ORDER,
    ElongatedPrismSpec,
    VerificationError,
    apex_augment,
    build_elongated_prism,
    delta_wye,
    family_graph,
    is_closed,
    is_linkless,
    petersen_family,
    prism_specs,
    sachs_family,
    verify_maximal_linkless,
    verify_member,
    wye_delta,
)
from nonsep.structure import classify
from nonsep.subdivision import ContractError


@pytest.mark.parametrize("lengths, n, m", [((1, 1, 1), 6, 9), ((2, 1, 1), 7, 10), ((1, 2, 3), 9, 12)])
def test_build_prism(lengths, n, m):
    g = build_elongated_prism(ElongatedPrismSpec(lengths))
    assert (g.n, g.m) == (n, m)
    c = classify(g)
    assert c.is_member and c.certificate.to_json()["type"] == "elongated-prism"


def test_spec_validation():
    with pytest.raises(ValueError):
        ElongatedPrismSpec((1, 0, 1))
    with pytest.raises(ValueError):
        ElongatedPrismSpec((1, 1))


def test_apex_augment():
    h = apex_augment(prism)
    assert (h.n, h.m) == (8, 21) and h.m == 3 * h.n - 3
    assert not h.has_edge(6, 7)
    assert all(h.has_edge(a, v) for a in (6, 7) for v in range(6))
    assert are_isomorphic(apex_augment(complete(1)), path(3))
    h = apex_augment(build_elongated_prism(ElongatedPrismSpec((2, 2, 2))))
    assert (h.n, h.m) == (11, 30)


def test_exchanges():
    y = delta_wye(complete(3), (0, 1, 2))
    assert are_isomorphic(y, nx_star())
    assert are_isomorphic(wye_delta(y, 3), complete(3))
    assert wye_delta(complete(4), 0) is None  # would need parallel edges


def nx_star() -> Graph:
    return Graph.from_edges(4, [(3, 0), (3, 1), (3, 2)])


def test_petersen_family():
    fam = petersen_family()
    assert [m.name for m in fam] == list(FAMILY_ORDER)
    assert all(m.graph.m == 15 for m in fam)
    assert fam[0].provenance == ()
    assert all(m.provenance for m in fam[1:])
    pet = family_graph("Petersen")
    assert nx.is_isomorphic(to_nx(pet), nx.petersen_graph())
    assert nx.girth(to_nx(pet)) == 5
    assert are_isomorphic(family_graph("K133"), complete_multipartite(1, 3, 3))
    assert is_closed(fam)


def test_family_members_pairwise_distinct():
    fam = petersen_family()
    for i, a in enumerate(fam):
        for b in fam[i + 1:]:
            assert not are_isomorphic(a.graph, b.graph)


def test_linkless_examples():
    assert not is_linkless(complete(6))
    assert is_linkless(apex_augment(prism))
    assert is_linkless(prism)
    assert is_linkless(cycle(5))


def test_maximality_examples():
    h = apex_augment(prism)
    report = verify_maximal_linkless(h)
    assert report.maximal and len(report.evidence) == 7
    apex_edge = next(e for e in report.evidence if e.edge == (6, 7))
    assert apex_edge.member == "K6"
    assert not verify_maximal_linkless(cycle(5)).maximal
    with pytest.raises(ContractError):
        verify_maximal_linkless(complete(6))


def test_maximality_with_workers():
    h = apex_augment(prism)
    assert verify_maximal_linkless(h, jobs=2) == verify_maximal_linkless(h)


def test_non_linkless_is_inherited_by_supergraphs():
    rng = random.Random(4)
    base = complete(6)
    for _ in range(10):
        g = Graph.from_edges(8, base.edges())
        for a, b in rng.sample(g.non_edges(), 4):
            g = add_edge(g, a, b)
        assert not is_linkless(g)


def test_linkless_closed_under_deletion():
    h = apex_augment(prism)
    for a, b in h.edges()[:5]:
        assert is_linkless(delete_edge(h, a, b))


def test_sachs_family_small():
    assert [s.spec.side_lengths for s in sachs_family(3)] == [(1, 1, 1)]
    four = sachs_family(4)
    assert len(four) == 2
    assert all(s.graph.m == 3 * s.graph.n - 3 for s in four)
    assert len(prism_specs(4)) == 4


def test_verify_member_names_failure():
    h = apex_augment(prism)
    a, b = h.edges()[0]
    with pytest.raises(VerificationError, match="edge count"):
        verify_member(delete_edge(h, a, b))
    with pytest.raises(VerificationError, match="Petersen"):
        # K4 joined to three independent vertices: 18 = 3*7-3 edges, but not linkless
        verify_member(Graph.from_edges(7, complete(7).edges()[:18]))
