"""Independent reference computations used by the tests.

These deliberately avoid the library's own algorithms: cycles and acyclicity
come from networkx, everything else from plain enumeration.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import networkx as nx


def to_nx(G) -> nx.MultiDiGraph:
    D = nx.MultiDiGraph()
    D.add_nodes_from(G.vertices)
    for a, (t, h) in G.arcs.items():
        D.add_edge(t, h, key=a)
    return D


def simple_cycle_vertex_sets(G) -> list:
    return [tuple(c) for c in nx.simple_cycles(nx.DiGraph(to_nx(G)))]


def digirth_oracle(G) -> int | None:
    D = to_nx(G)
    if any(t == h for t, h in G.arcs.values()):
        return 1
    lens = [len(c) for c in nx.simple_cycles(nx.DiGraph(D))]
    return min(lens) if lens else None


def fvs_oracle(G) -> int:
    D = nx.DiGraph(to_nx(G))
    verts = list(G.vertices)
    for k in range(len(verts) + 1):
        for F in itertools.combinations(verts, k):
            H = D.copy()
            H.remove_nodes_from(F)
            if nx.is_directed_acyclic_graph(H):
                return k
    raise AssertionError("unreachable")


def fractional_arboricity_oracle(edges: list) -> Fraction:
    """max over vertex subsets S with |S| >= 2 of m(S)/(|S|-1)."""
    verts = sorted({x for e in edges for x in e}, key=repr)
    best = Fraction(0)
    for k in range(2, len(verts) + 1):
        for S in itertools.combinations(verts, k):
            s = set(S)
            m = sum(1 for u, v in edges if u in s and v in s)
            best = max(best, Fraction(m, k - 1))
    return best


def undirected_edges(S) -> list:
    return [(u, v) for u, v in S.edges.values() if u != v]
