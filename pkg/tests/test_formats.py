from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fvslab.coatings import build_coating
from fvslab.cycles import max_normal_set
from fvslab.errors import ParseError
from fvslab.families import gen_random_plane_digraph, gen_random_skeleton, random_coating_function, random_plane_digraph_with_cycle
from fvslab.formats import (
    cycles_from_json,
    cycles_to_json,
    read_cf,
    read_pdg,
    read_psk,
    valuation_from_json,
    valuation_to_json,
    write_cf,
    write_pdg,
    write_psk,
)
from fvslab.valuations import normal_valuation


@given(st.integers(1, 10), st.integers(0, 10**6))
def test_pdg_round_trip(n: int, seed: int) -> None:
    G = gen_random_plane_digraph(n, seed)
    text = write_pdg(G)
    H = read_pdg(text)
    assert H.structurally_equal(G)
    assert write_pdg(H) == text


@given(st.integers(2, 8), st.integers(0, 10**6), st.integers(0, 2))
def test_psk_and_cf_round_trip(n: int, seed: int, loops: int) -> None:
    S = gen_random_skeleton(n, seed, loops=loops)
    T = read_psk(write_psk(S))
    assert write_psk(T) == write_psk(S)
    h = random_coating_function(S, seed)
    h2 = read_cf(write_cf(S, h), T)
    assert h2 == h
    assert build_coating(T, h2).graph.structurally_equal(build_coating(S, h).graph)


def test_coating_ids_survive_pdg() -> None:
    S = gen_random_skeleton(4, 3)
    H = build_coating(S, random_coating_function(S, 3)).graph
    assert read_pdg(write_pdg(H)).structurally_equal(H)


@given(st.integers(3, 8), st.integers(0, 10**5))
def test_cycle_and_valuation_json(n: int, seed: int) -> None:
    G = random_plane_digraph_with_cycle(n, seed)
    N = max_normal_set(G)
    assert cycles_from_json(G, cycles_to_json(N.cycles)) == list(N.cycles)
    V = normal_valuation(G, N) + normal_valuation(G, N)
    assert valuation_from_json(G, valuation_to_json(V)) == V


@pytest.mark.parametrize(
    "text,line",
    [
        ("pdg 2\n", 1),
        ("pdg 1\na x 0\n", 2),
        ("pdg 1\na x 0 1\nv 0 : x*\n", 3),
        ("pdg 1\na x 0 1\na x 1 0\n", 3),
        ("pdg 1\nfoo\n", 2),
        ("pdg 1\na x 0 1\nv 0 : x+\nv 1 : x-\nouter x Q\n", 5),
    ],
)
def test_pdg_errors_carry_line_numbers(text: str, line: int) -> None:
    with pytest.raises(ParseError) as info:
        read_pdg(text)
    assert info.value.line == line


def test_invalid_embedding_is_a_parse_error() -> None:
    with pytest.raises(ParseError):
        read_pdg("pdg 1\na x 0 1\nv 0 : x+\nv 1 :\n")


def test_cf_must_cover_every_corner() -> None:
    S = gen_random_skeleton(3, 1)
    text = write_cf(S, random_coating_function(S, 1))
    with pytest.raises(ParseError):
        read_cf("\n".join(text.splitlines()[:-1]) + "\n", S)


def test_comments_and_blank_lines(tmp_path) -> None:
    G = gen_random_plane_digraph(5, 2)
    text = "# generated\n\n" + write_pdg(G).replace("\n", "  # c\n", 1)
    p = tmp_path / "g.pdg"
    p.write_text(text)
    assert read_pdg(p).structurally_equal(G)
