from __future__ import annotations

from fractions import Fraction

import pytest

from fvslab.coatings import RecursiveFamily, build_coating, build_recursive_family, verify_recursive_digirth
from fvslab.cycles import max_normal_size
from fvslab.errors import NonFacialRing
from fvslab.families import (
    dicycle_claim,
    frieze_claim,
    gen_dicycle,
    gen_frieze,
    gen_Glkr_skeleton,
    gen_Okg,
    gen_octahedron_family,
    gen_random_plane_digraph,
    gen_small_digirth_family,
    octahedron_claim,
    small_digirth_base,
    small_digirth_claim,
    tau_report,
)
from fvslab.fvs import fvs_exact, is_acyclic
from fvslab.plane import digirth


def _check(G, claim) -> None:
    exp = claim.expected
    assert (G.n, G.m) == (exp["n"], exp["m"])
    assert digirth(G) == exp["digirth"]
    assert fvs_exact(G).size == exp["fvs"]
    if "max_normal" in exp:
        assert max_normal_size(G) == exp["max_normal"]


@pytest.mark.parametrize("g", [3, 5, 8])
def test_dicycle_claim(g: int) -> None:
    _check(gen_dicycle(g), dicycle_claim(g))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_octahedron_claim(k: int) -> None:
    _check(gen_octahedron_family(k), octahedron_claim(k))


@pytest.mark.parametrize("g", [4, 5])
@pytest.mark.parametrize("k", [1, 2])
def test_subdivided_octahedron_claim(k: int, g: int) -> None:
    _check(gen_Okg(k, g), octahedron_claim(k, g))


@pytest.mark.parametrize("g", [4, 6])
@pytest.mark.parametrize("k", [1, 3])
def test_frieze_claim(k: int, g: int) -> None:
    _check(gen_frieze(k, g), frieze_claim(k, g))


def test_random_generator_validity() -> None:
    for seed in range(100):
        G = gen_random_plane_digraph(8, seed)
        assert G.n - G.m + G.face_count() == 1 + len(G.components())
        assert is_acyclic(G, fvs_exact(G).witness)


@pytest.mark.parametrize("g", [6, 8, 9, 10, 11])
def test_small_digirth_families(g: int) -> None:
    fam = small_digirth_base(g)
    assert verify_recursive_digirth(fam, g)["ok"]
    for k in (0, 1, 2):
        S, C = gen_small_digirth_family(g, k)
        exp = small_digirth_claim(g, k).expected
        assert (S.n, S.m, C.graph.n) == (exp["n_G"], exp["m_G"], exp["n_H"])
        assert digirth(C.graph) == g
        assert exp["fvs_formula"] == S.n


def test_recursive_chain_shares_the_base_function() -> None:
    fam = small_digirth_base(6)
    S2, h2 = build_recursive_family(fam, 2)
    C = build_coating(S2, h2)
    assert C.g == 6
    assert sorted(h2.values()).count(1) >= sorted(fam.h1.values()).count(1)


def test_bad_ring_is_rejected() -> None:
    fam = small_digirth_base(6)
    bad = RecursiveFamily(fam.G1, fam.h1, fam.ring_in, fam.ring_in)
    with pytest.raises(NonFacialRing):
        build_recursive_family(bad, 2)


@pytest.mark.parametrize("r", range(4))
def test_glkr_size_formula(r: int) -> None:
    for ell in (1, 2):
        S = gen_Glkr_skeleton(1, r, ell)
        assert (S.n, S.m) == (ell * (14 + r) + 1, ell * (24 + 2 * r))


def test_glkr_large_k() -> None:
    S = gen_Glkr_skeleton(2, 0, 2)
    assert (S.n, S.m) == (2 * 22 + 1, 2 * 40)


@pytest.mark.parametrize(
    "g,lower,upper",
    [(6, Fraction(8, 36), Fraction(1, 4)), (7, Fraction(2, 11), Fraction(1, 5)), (12, Fraction(14, 144), Fraction(1, 10))],
)
def test_tau_examples(g: int, lower: Fraction, upper: Fraction) -> None:
    rep = tau_report(g)
    assert (rep["lower"], rep["upper"]) == (lower, upper)
    assert rep["lower_witness"]


def test_tau_rejects_small_g() -> None:
    with pytest.raises(ValueError):
        tau_report(2)
