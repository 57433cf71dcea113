from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles import fvs_oracle

from fvslab.errors import HypothesisViolated
from fvslab.families import gen_dicycle, gen_frieze, gen_random_plane_digraph, random_plane_digraph_with_cycle
from fvslab.fvs import audit_upper_bound, fvs_bruteforce, fvs_exact, is_acyclic, is_directed_cycle_graph, is_minimal_fvs

graphs = st.builds(gen_random_plane_digraph, st.integers(1, 9), st.integers(0, 10**6))


@given(graphs)
def test_exact_matches_oracle(G) -> None:
    res = fvs_exact(G)
    assert res.size == fvs_oracle(G)
    assert is_acyclic(G, res.witness)


@given(graphs)
def test_brute_force_agrees(G) -> None:
    a, b = fvs_exact(G), fvs_bruteforce(G)
    assert a.size == b.size
    assert is_acyclic(G, b.witness)


@given(graphs)
def test_witness_is_deterministic(G) -> None:
    assert fvs_exact(G).witness == fvs_exact(G).witness


@given(graphs)
def test_optimal_witness_is_minimal(G) -> None:
    assert is_minimal_fvs(G, fvs_exact(G).witness)


@pytest.mark.parametrize("g", range(3, 11))
def test_dicycle_equality(g: int) -> None:
    G = gen_dicycle(g)
    rep = audit_upper_bound(G)
    assert rep["fvs"] == 1 and rep["equality"] and rep["equality_is_Cg"] and rep["holds"]


@given(st.integers(3, 10), st.integers(0, 10**5))
def test_upper_bound_on_random_graphs(n: int, seed: int) -> None:
    G = random_plane_digraph_with_cycle(n, seed)
    if not G.is_simple():
        return
    from fvslab.plane import digirth

    if digirth(G) < 3:
        return
    rep = audit_upper_bound(G)
    assert rep["holds"]
    assert rep["equality"] == is_directed_cycle_graph(G)


def test_bound_rejects_two_cycles() -> None:
    with pytest.raises(HypothesisViolated):
        audit_upper_bound(gen_dicycle(2))


@pytest.mark.parametrize("g", [4, 5, 6])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_frieze_fvs(g: int, k: int) -> None:
    assert fvs_exact(gen_frieze(k, g)).size == k
