from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fvslab.coatings import (
    audit_coating_fvs,
    build_coating,
    coating_stats_audit,
    delete_link_vertex,
    extend_digirth,
    link_free_min_fvs,
    same_digraph,
    search_coating_function,
    skeleton_subgraph_coating,
    strip_link_vertices_from_fvs,
)
from fvslab.errors import NonPositiveH, NotGCoating
from fvslab.families import gen_c4_coating, gen_random_skeleton, random_coating_function
from fvslab.fvs import fvs_exact, is_acyclic
from fvslab.plane import digirth
from fvslab.skeleton import cycle_skeleton


def coated(n: int, seed: int, loops: int = 0):
    S = gen_random_skeleton(n, seed, loops=loops)
    return build_coating(S, random_coating_function(S, seed))


coatings = st.builds(coated, st.integers(2, 6), st.integers(0, 10**5), st.integers(0, 1))


@given(coatings)
def test_structural_identities(C) -> None:
    assert coating_stats_audit(C)["violations"] == []


@given(coatings)
def test_vertex_cycles_are_clockwise_cycles(C) -> None:
    for v, cyc in C.vertex_cycle.items():
        assert len(cyc) == C.cycle_length(v)
        assert len(cyc) == sum(C.h[c] for c in C.skeleton.vertex_corners(v)) + C.skeleton.degree(v)


@given(st.integers(2, 6), st.integers(0, 10**5))
def test_contracting_an_edge_matches_deleting_its_link_vertex(n: int, seed: int) -> None:
    C = coated(n, seed)
    for e in sorted(C.skeleton.edges, key=repr)[:3]:
        C2, Hs = delete_link_vertex(C, e)
        assert same_digraph(C2.graph, Hs)


@given(st.integers(2, 6), st.integers(0, 10**5))
def test_edge_deletion_is_a_subgraph_and_keeps_digirth_monotone(n: int, seed: int) -> None:
    C = coated(n, seed)
    for e in sorted(C.skeleton.edges, key=repr)[:3]:
        rep = skeleton_subgraph_coating(C, edge=e)
        assert rep["equal"]
        after, before = rep["digirth_after"], rep["digirth_before"]
        assert after is None or before is None or after >= before


@given(st.integers(2, 6), st.integers(0, 10**5), st.integers(0, 1))
def test_vertex_deletion_is_a_subgraph(n: int, seed: int, loops: int) -> None:
    C = coated(n, seed, loops)
    for v in C.skeleton.vertices[:2]:
        rep = skeleton_subgraph_coating(C, vertex=v)
        assert rep["equal"]


@given(st.integers(2, 5), st.integers(0, 10**5))
def test_link_free_feedback_set(n: int, seed: int) -> None:
    C = coated(n, seed)
    res = fvs_exact(C.graph)
    F = strip_link_vertices_from_fvs(C, res.witness)
    assert len(F) == res.size and is_acyclic(C.graph, F)
    assert not F & C.link_vertices()


@pytest.mark.parametrize("g", [4, 5, 6])
def test_c4_coating(g: int) -> None:
    C = gen_c4_coating(g)
    H = C.graph
    assert digirth(H) == g and H.n == 4 * (g - 1)
    assert fvs_exact(H).size == 4
    assert audit_coating_fvs(C)["ok"]


@pytest.mark.parametrize("r", [1, 2, 3])
def test_digirth_extension(r: int) -> None:
    C = gen_c4_coating(4)
    E = extend_digirth(C, r)
    assert digirth(E.graph) == 4 + r
    assert E.graph.n == C.graph.n + 4 * r
    assert fvs_exact(E.graph).size == 4
    assert len(link_free_min_fvs(C)) == 4


def test_extension_needs_matching_digirth() -> None:
    S = cycle_skeleton(4)
    h = {c: 1 for c in S.corner_keys()}
    h[S.corner_keys()[0]] = 2
    with pytest.raises(NotGCoating):
        extend_digirth(build_coating(S, h), 1)


def test_coating_function_must_be_positive() -> None:
    S = cycle_skeleton(3)
    h = {c: 1 for c in S.corner_keys()}
    h[S.corner_keys()[0]] = 0
    with pytest.raises(NonPositiveH):
        build_coating(S, h)


def test_search_reports_impossible_targets() -> None:
    # every vertex of C_4 has degree 2 and two corners, so g = 3 leaves no room
    assert search_coating_function(cycle_skeleton(4), 3) is None
