from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fvslab.cycles import enumerate_dicycles, is_normal, max_normal_set
from fvslab.errors import HypothesisViolated, NotCrossing, NotLaminar
from fvslab.families import random_crossing_multiset, random_plane_digraph_with_cycle
from fvslab.fvs import fvs_exact, is_acyclic
from fvslab.laminar import arc_usage, is_laminar, laminarize_multiset, psi, uncross_pair
from fvslab.valuations import (
    Valuation,
    essential_vertices,
    fvs_via_normal,
    is_normal_valuation,
    laminarize_valuation,
    layer_forest,
    multiplicity,
    normal_valuation,
    parity_partition,
    reduce_multiplicity,
    reduce_to_normal,
    usage_map,
)


def random_normal_set(G, rng: random.Random) -> list:
    cycles = enumerate_dicycles(G)
    rng.shuffle(cycles)
    out: list = []
    for C in cycles:
        if is_normal(G, out + [C]):
            out.append(C)
    return out


def stacked_valuation(seed: int, k: int) -> tuple:
    """k greedy normal sets added up and laminarized: multiplicity <= k."""
    rng = random.Random(seed)
    G = random_plane_digraph_with_cycle(rng.randint(4, 8), seed)
    V = Valuation(G, {})
    for _ in range(k):
        V = V + Valuation.from_cycles(G, random_normal_set(G, rng))
    return G, laminarize_valuation(G, V)


crossing_cases = st.integers(0, 3000).map(lambda s: random_crossing_multiset(7, s))


@given(crossing_cases)
def test_uncrossing_keeps_arc_usage(case) -> None:
    if case is None:
        return
    G, F = case
    res = uncross_pair(G, F[0], F[1])
    assert arc_usage(res.cycles) == arc_usage(F[:2])
    assert res.psi_before == psi(G, F[:2])


@given(crossing_cases)
def test_laminarization_is_laminar_and_usage_preserving(case) -> None:
    if case is None:
        return
    G, F = case
    out = laminarize_multiset(G, F)
    assert is_laminar(G, out.cycles)
    assert arc_usage(out.cycles) == arc_usage(F)


def test_uncross_requires_crossing() -> None:
    G, F = random_crossing_multiset(8, 10)
    with pytest.raises(NotCrossing):
        uncross_pair(G, F[0], F[0])


@given(st.integers(0, 10**4), st.sampled_from([2, 3, 4]))
def test_multiplicity_of_stacked_normal_sets(seed: int, k: int) -> None:
    G, V = stacked_valuation(seed, k)
    assert multiplicity(G, V) <= k
    assert is_laminar(G, V.support)


@given(st.integers(0, 10**4), st.sampled_from([2, 4]))
def test_parity_partition_halves(seed: int, k: int) -> None:
    G, V = stacked_valuation(seed, k)
    V1, V2 = parity_partition(G, V)
    assert V1 + V2 == V
    assert multiplicity(G, V1) <= k // 2 and multiplicity(G, V2) <= k // 2


@given(st.integers(0, 10**4), st.sampled_from([2, 3, 4]))
def test_reduction_ends_normal(seed: int, k: int) -> None:
    G, V = stacked_valuation(seed, k)
    steps = reduce_to_normal(G, V, k)
    assert is_normal_valuation(G, steps[-1][1])
    for (k0, _), (k1, W) in zip(steps, steps[1:]):
        assert k1 == (k0 + 1) // 2 and multiplicity(G, W) <= k1


@given(st.integers(0, 10**4))
def test_laminarization_keeps_usage_of_valuations(seed: int) -> None:
    G, V = stacked_valuation(seed, 3)
    assert usage_map(laminarize_valuation(G, V)) == usage_map(V)


def test_layer_forest_rejects_crossing_support() -> None:
    G, F = random_crossing_multiset(8, 10)
    with pytest.raises(NotLaminar):
        layer_forest(G, Valuation.from_cycles(G, F[:2]))


def test_reduction_checks_weight_hypothesis() -> None:
    G, V = stacked_valuation(5, 2)
    with pytest.raises(HypothesisViolated):
        reduce_multiplicity(G, V, 2, enforce=True, cmax=10**6)


def test_normal_valuation_of_max_normal_set() -> None:
    G = random_plane_digraph_with_cycle(8, 3)
    V = normal_valuation(G, max_normal_set(G))
    assert is_normal_valuation(G, V) and multiplicity(G, V) <= 1


@given(st.integers(3, 8), st.integers(0, 10**4))
def test_essential_vertex_methods_agree(n: int, seed: int) -> None:
    G = random_plane_digraph_with_cycle(n, seed)
    assert essential_vertices(G) == essential_vertices(G, method="enumerate")


@given(st.integers(3, 8), st.integers(0, 10**4))
def test_fvs_via_normal(n: int, seed: int) -> None:
    G = random_plane_digraph_with_cycle(n, seed)
    F = fvs_via_normal(G)
    assert is_acyclic(G, F)
    assert fvs_exact(G).size <= len(F) <= len(max_normal_set(G))
