from __future__ import annotations

from functools import lru_cache

import pytest

from conftest import prism
from nonsep.catalog import named, path
from nonsep.generate import all_graphs
from nonsep.graph import Graph, add_edge
from nonsep.minors import contains_minor
from nonsep.structure import is_member
from nonsep.subdivision import (
    ContractError,
    K23Subdivision,
    NotApplicableError,
    classify_middle_less,
    extra_edges,
    fan_decomposition,
    find_middle_path,
    find_spanning_k23_subdivisions,
    is_chordless_terminal_path,
    is_middle_less,
    middle_paths,
)

# prism labels: a1, a2, a3 = 0, 1, 2 and b1, b2, b3 = 3, 4, 5
A1, A2, A3, B1, B2, B3 = range(6)
W4 = named("W4")  # hub 0, rim 1-2-3-4


def _sub(g: Graph, terminals, paths) -> K23Subdivision:
    s = K23Subdivision(tuple(terminals), tuple(tuple(p) for p in paths))
    assert s.is_valid_for(g)
    return s


def _index_of(s: K23Subdivision, vertices) -> int:
    return next(i + 1 for i, p in enumerate(s.paths) if set(p) == set(vertices))


def test_k23_has_exactly_one_subdivision():
    subs = find_spanning_k23_subdivisions(named("K23"))
    assert len(subs) == 1
    s = subs[0]
    assert set(s.terminals) == {0, 1}
    assert all(s.length(i) == 2 for i in range(3))


def test_prism_subdivisions_include_the_expected_one():
    subs = find_spanning_k23_subdivisions(prism)
    assert subs and all(s.is_valid_for(prism) for s in subs)
    wanted = {frozenset(p) for p in [(A1, A2, B2), (A1, B1, B2), (A1, A3, B3, B2)]}
    assert any(
        set(s.terminals) == {A1, B2} and {frozenset(p) for p in s.paths} == wanted for s in subs
    )


def test_subdivisions_are_normalised_and_unique():
    for g in [prism, W4, named("K23")]:
        subs = find_spanning_k23_subdivisions(g)
        keys = set()
        for s in subs:
            u, v = s.terminals
            assert u < v
            assert [p[1] for p in s.paths] == sorted(p[1] for p in s.paths)
            keys.add((s.terminals, frozenset(s.paths)))
        assert len(keys) == len(subs)


def test_path_graph_has_none():
    assert find_spanning_k23_subdivisions(path(4)) == []


def test_invalid_subdivision_detected():
    bad = K23Subdivision((0, 1), ((0, 2, 1), (0, 2, 1), (0, 3, 1)))
    assert not bad.is_valid_for(named("K23"))


def test_chordless_examples():
    k23 = named("K23")
    s = find_spanning_k23_subdivisions(k23)[0]
    assert all(is_chordless_terminal_path(k23, s, i) for i in (1, 2, 3))
    s = _sub(W4, (1, 3), [(1, 2, 3), (1, 0, 3), (1, 4, 3)])
    assert all(is_chordless_terminal_path(W4, s, i) for i in (1, 2, 3))
    g = Graph.from_edges(6, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 5), (5, 1), (0, 1)])
    s = _sub(g, (0, 1), [(0, 2, 1), (0, 3, 1), (0, 4, 5, 1)])
    assert not is_chordless_terminal_path(g, s, 3)
    with pytest.raises(ValueError):
        is_chordless_terminal_path(g, s, 0)


def test_middle_path_examples():
    s = _sub(W4, (1, 3), [(1, 2, 3), (1, 0, 3), (1, 4, 3)])
    assert middle_paths(W4, s) == {2}
    k23 = named("K23")
    assert middle_paths(k23, find_spanning_k23_subdivisions(k23)[0]) == frozenset()
    s = _sub(prism, (A1, B2), [(A1, A2, B2), (A1, B1, B2), (A1, A3, B3, B2)])
    assert middle_paths(prism, s) == {3}


def test_middle_less_examples():
    type_one = Graph.from_edges(
        8, [(0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1), (0, 6), (6, 7), (7, 1)]
    )
    assert is_middle_less(type_one)
    assert not is_middle_less(W4)
    s, mid = find_middle_path(W4)
    assert s.paths[mid - 1][1:-1] == (0,)
    assert not is_middle_less(prism)
    with pytest.raises(NotApplicableError):
        is_middle_less(path(4))


def test_classify_middle_less_types():
    t = classify_middle_less(named("K23"))
    assert t.kind == "I" and t.extra_edge is None
    type_two = add_edge(named("K23"), 2, 3)
    t = classify_middle_less(type_two)
    assert t.kind == "II" and set(t.extra_edge) == {2, 3}
    type_three = Graph.from_edges(
        7, [(0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1), (0, 6), (6, 1), (2, 4)]
    )
    t = classify_middle_less(type_three)
    assert t.kind == "III" and t.terminal == 0 and set(t.extra_edge) == {2, 4}
    assert t.to_json()["type"] == "III"


def test_classify_middle_less_contract_errors():
    with pytest.raises(ContractError):
        classify_middle_less(W4)  # middle-ful
    with pytest.raises(ContractError):
        classify_middle_less(named("K113"))
    with pytest.raises(ContractError):
        classify_middle_less(path(5))


def test_fan_decomposition_wheel():
    s = _sub(W4, (1, 3), [(1, 2, 3), (1, 0, 3), (1, 4, 3)])
    w1, w2 = fan_decomposition(W4, s, 2)
    assert w1.handle == w2.handle == 0
    assert w1.side == (1, 2) and w2.side == (2, 3)
    assert s.length(1) == 2


def test_fan_decomposition_prism():
    s = _sub(prism, (A1, B2), [(A1, A2, B2), (A1, B1, B2), (A1, A3, B3, B2)])
    w1, w2 = fan_decomposition(prism, s, 3)
    assert {w1.handle, w2.handle} == {A3, B3}
    assert len(w1.spoke_edges) == len(w2.spoke_edges) == 1
    assert w1.to_json()["handle"] in (A3, B3)


def test_fan_decomposition_requires_middle_path():
    k23 = named("K23")
    s = find_spanning_k23_subdivisions(k23)[0]
    for i in (1, 2, 3):
        with pytest.raises(ContractError):
            fan_decomposition(k23, s, i)


# --- universally quantified statements, checked over every graph with n <= 7 ---


@lru_cache(maxsize=None)
def k113_free_with_subdivisions() -> tuple[tuple[Graph, tuple[K23Subdivision, ...]], ...]:
    out = []
    for n in range(5, 8):
        for g in all_graphs(n):
            subs = find_spanning_k23_subdivisions(g)
            if subs and not contains_minor(g, "K113"):
                out.append((g, tuple(subs)))
    return tuple(out)


def test_suite_is_non_trivial():
    assert len(k113_free_with_subdivisions()) > 20


def test_terminal_paths_chordless():
    for g, subs in k113_free_with_subdivisions():
        for s in subs:
            assert all(is_chordless_terminal_path(g, s, i) for i in (1, 2, 3)), (g, s)


def test_at_most_one_middle_path():
    for g, subs in k113_free_with_subdivisions():
        for s in subs:
            assert len(middle_paths(g, s)) <= 1, (g, s)


def test_middle_less_graphs_are_w4_minor_free():
    for g, _ in k113_free_with_subdivisions():
        if is_middle_less(g):
            assert not contains_minor(g, "W4"), g


def test_no_double_spoke_to_the_middle_path():
    for g, subs in k113_free_with_subdivisions():
        if not is_member(g):
            continue
        for s in subs:
            for mid in middle_paths(g, s):
                inner_mid = set(s.paths[mid - 1][1:-1])
                for i in (1, 2, 3):
                    if i == mid:
                        continue
                    for x in s.paths[i - 1][1:-1]:
                        assert len(inner_mid & set(g.neighbors(x))) <= 1, (g, s, x)


def test_fan_witnesses_reverify():
    for g, subs in k113_free_with_subdivisions():
        if not is_member(g):
            continue
        for s in subs:
            for mid in middle_paths(g, s):
                for w in fan_decomposition(g, s, mid):
                    spokes = extra_edges(g, s, w.side)
                    assert set(spokes) == set(w.spoke_edges)
                    assert all(w.handle in e for e in spokes)
                    p = s.paths[mid - 1]
                    assert w.handle in (p[1], p[-2])
