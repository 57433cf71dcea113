from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles import digirth_oracle, simple_cycle_vertex_sets

from fvslab.cycles import enumerate_dicycles
from fvslab.errors import EmbeddingError, UnknownArc
from fvslab.families import gen_dicycle, gen_random_plane_digraph
from fvslab.plane import PlaneDigraph, crossing, cycle_region, digirth, make_cycle, subdivide_arc

graphs = st.builds(gen_random_plane_digraph, st.integers(1, 10), st.integers(0, 10**6))


@given(graphs)
def test_euler_formula(G: PlaneDigraph) -> None:
    assert G.n - G.m + G.face_count() == 1 + len(G.components())


@given(graphs)
def test_faces_partition_half_arcs(G: PlaneDigraph) -> None:
    seen = [h for f in G.faces for h in f.boundary]
    assert len(seen) == len(set(seen)) == 2 * G.m


@given(graphs)
def test_digirth_matches_oracle(G: PlaneDigraph) -> None:
    assert digirth(G) == digirth_oracle(G)


@given(graphs)
def test_cycle_enumeration_matches_oracle(G: PlaneDigraph) -> None:
    ours = sorted(sorted(map(repr, C.vertices)) for C in enumerate_dicycles(G))
    ref = sorted(sorted(map(repr, c)) for c in simple_cycle_vertex_sets(G))
    assert ours == ref


@given(st.integers(1, 10), st.integers(0, 10**6))
def test_generator_is_deterministic(n: int, seed: int) -> None:
    assert gen_random_plane_digraph(n, seed).structurally_equal(gen_random_plane_digraph(n, seed))


def test_single_vertex() -> None:
    G = gen_random_plane_digraph(1, 0)
    assert (G.n, G.m, digirth(G)) == (1, 0, None)


@given(st.integers(2, 9), st.integers(0, 3))
def test_subdivision_lengthens_dicycle(g: int, t: int) -> None:
    G = gen_dicycle(g)
    a = sorted(G.arcs, key=repr)[0]
    H = subdivide_arc(G, a, t)
    assert (H.n, H.m, digirth(H)) == (g + t, g + t, g + t)


def test_subdivide_unknown_arc() -> None:
    with pytest.raises(UnknownArc):
        subdivide_arc(gen_dicycle(3), "nope", 1)


def test_rotation_must_cover_every_half_arc() -> None:
    with pytest.raises(EmbeddingError):
        PlaneDigraph([0, 1], {"a": (0, 1)}, {0: [("a", 1)], 1: []})


def test_dicycle_region_and_orientation() -> None:
    G = gen_dicycle(5)
    C = make_cycle(G, list(G.arcs))
    R = cycle_region(G, C)
    assert R.size == 0
    assert not crossing(G, C, C)
