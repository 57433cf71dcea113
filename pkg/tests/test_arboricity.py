from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles import fractional_arboricity_oracle, undirected_edges

from fvslab.arboricity import (
    WeightedForestFamily,
    build_arborization,
    check_certificate,
    degeneracy,
    fractional_arboricity,
    fractional_arboricity_exhaustive,
    fractional_arboricity_flow,
    perfect_coating_admissible,
    verify_arborization,
)
from fvslab.families import gen_Glk_skeleton, gen_Glkr_skeleton, gen_random_skeleton
from fvslab.skeleton import cycle_skeleton

skeletons = st.builds(gen_random_skeleton, st.integers(2, 9), st.integers(0, 10**5), chord_prob=st.sampled_from([0.2, 0.5, 0.9]))


@given(skeletons)
def test_exhaustive_matches_oracle(S) -> None:
    af, cert = fractional_arboricity_exhaustive(S)
    assert af == fractional_arboricity_oracle(undirected_edges(S))
    assert check_certificate(S, cert)


@given(skeletons)
def test_flow_matches_exhaustive(S) -> None:
    a, _ = fractional_arboricity_exhaustive(S)
    b, cert = fractional_arboricity_flow(S)
    assert a == b and check_certificate(S, cert)


@given(st.integers(3, 7), st.integers(0, 10**5))
def test_arborization_at_optimum(n: int, seed: int) -> None:
    S = gen_random_skeleton(n, seed)
    if S.m > 14:
        return
    af, _ = fractional_arboricity(S)
    A = build_arborization(S, af)
    assert A is not None and verify_arborization(S, A, af)
    assert build_arborization(S, af - Fraction(1, 100)) is None


def test_cube() -> None:
    S = gen_Glk_skeleton(1, 1)
    assert (S.n, S.m) == (8, 12)
    assert fractional_arboricity(S)[0] == Fraction(12, 7)
    assert degeneracy(S) == 3


def test_verify_rejects_bad_covers() -> None:
    S = cycle_skeleton(3)
    assert not verify_arborization(S, WeightedForestFamily(((0, 1, 2),), (Fraction(3, 2),)), Fraction(3, 2))
    assert not verify_arborization(S, WeightedForestFamily(((0, 1),), (Fraction(3, 2),)), Fraction(3, 2))


@pytest.mark.parametrize("k", [1, 2])
@pytest.mark.parametrize("ell", [1, 2])
def test_glk_sizes(k: int, ell: int) -> None:
    S = gen_Glk_skeleton(k, ell)
    assert (S.n, S.m) == (ell * (4 * k + 3) + 1, ell * (8 * k + 4))
    assert fractional_arboricity(S)[0] == Fraction(8 * k + 4, 4 * k + 3)


@pytest.mark.parametrize("r", range(5))
def test_glkr_sizes(r: int) -> None:
    S = gen_Glkr_skeleton(1, r, 1)
    g = 12 + r
    assert (S.n, S.m) == (15 + r, 24 + 2 * r)
    assert perfect_coating_admissible(S, g)[0]


def test_admissibility_reasons() -> None:
    ok, reasons = perfect_coating_admissible(cycle_skeleton(5), 4)
    assert not ok and reasons
