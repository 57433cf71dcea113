from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fvslab.cycles import (
    energies,
    energy_identity_check,
    enumerate_dicycles,
    fvs_of_gN_check,
    is_normal,
    max_normal_set,
    max_normal_size,
    weaken_normal_set,
)
from fvslab.errors import NotNormal
from fvslab.families import gen_dicycle, gen_octahedron_family, random_plane_digraph_with_cycle
from fvslab.fvs import fvs_exact
from fvslab.plane import digirth


def random_normal_set(G, seed: int) -> list:
    """Greedy normal set over a shuffled cycle list."""
    cycles = enumerate_dicycles(G)
    random.Random(seed).shuffle(cycles)
    out: list = []
    for C in cycles:
        if is_normal(G, out + [C]):
            out.append(C)
    return out


pairs = st.builds(lambda n, s: (random_plane_digraph_with_cycle(n, s), s), st.integers(3, 9), st.integers(0, 10**5))


@given(pairs)
def test_energy_identity_and_signs(pair) -> None:
    G, seed = pair
    N = random_normal_set(G, seed)
    rep = energies(G, N)
    assert rep.nonnegative()
    g = digirth(G)
    assert Fraction(len(N)) == Fraction(G.n - 2, g - 2) - rep.E_tot / (g - 2)
    assert energy_identity_check(G, N)


@given(pairs)
def test_fvs_at_most_max_normal(pair) -> None:
    G, _ = pair
    assert fvs_exact(G).size <= max_normal_size(G)


@given(pairs)
def test_max_normal_is_normal_and_maximal(pair) -> None:
    G, seed = pair
    N = max_normal_set(G)
    assert is_normal(G, N.cycles)
    assert len(N) >= len(random_normal_set(G, seed))


@given(pairs)
def test_fvs_of_union_characterisation(pair) -> None:
    G, _ = pair
    assert fvs_of_gN_check(G)["holds"]


@given(pairs)
def test_weakening_drops_one_cycle(pair) -> None:
    G, _ = pair
    N = max_normal_set(G)
    if len(N) < 2:
        return
    W = weaken_normal_set(G, N)
    assert len(W) == len(N) - 1 and is_normal(G, W.cycles)


def test_energies_need_normal_set() -> None:
    G = gen_octahedron_family(2)
    cycles = enumerate_dicycles(G)
    bad = [C for C in cycles for D in cycles if C != D and C.arc_set & D.arc_set]
    with pytest.raises(NotNormal):
        energies(G, [bad[0], bad[0]])


@pytest.mark.parametrize("g", [3, 4, 7])
def test_dicycle_energy_is_zero(g: int) -> None:
    G = gen_dicycle(g)
    assert energies(G, max_normal_set(G)).E_tot == 0
