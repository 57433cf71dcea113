"""Fractional arboricity, arborizations and the perfect-coating test.

``a_f(G)`` is the largest ratio ``m_S / (n_S - 1)`` over vertex subsets with
at least two vertices (edges counted inside ``S``).  Small graphs are
enumerated exhaustively; larger ones use a parametric search where each
step solves a maximum-closure problem by a max-flow computation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import TooLarge

EXHAUSTIVE_MAX_N = 20
ARBORIZATION_MAX_M = 14


@dataclass(frozen=True)
class DensityCertificate:
    vertices: frozenset
    edges: int
    density: Fraction


@dataclass(frozen=True)
class WeightedForestFamily:
    forests: tuple  # tuples of edge indices
    weights: tuple  # Fractions


def _simple_graph(G) -> tuple[list, list]:
    """(vertices, edge list) from a Skeleton, PlaneDigraph or (V, E) pair.
    Loops are kept (they never lie in a forest); parallel edges are kept."""
    if isinstance(G, tuple) and len(G) == 2:
        V, E = G
        return list(V), [tuple(e) for e in E]
    emb = getattr(G, "emb", G)
    return list(emb.vertices), [tuple(e) for e in emb.arcs.values()]


def _density(m: int, n: int) -> Fraction:
    return Fraction(m, n - 1)


def fractional_arboricity_exhaustive(G) -> tuple[Fraction, DensityCertificate]:
    V, E = _simple_graph(G)
    n = len(V)
    if n < 2:
        return Fraction(0), DensityCertificate(frozenset(V), 0, Fraction(0))
    if n > EXHAUSTIVE_MAX_N:
        raise TooLarge(f"exhaustive density search limited to {EXHAUSTIVE_MAX_N} vertices")
    idx = {v: i for i, v in enumerate(V)}
    size = 1 << n
    medges = np.zeros(size, dtype=np.int64)
    pop = np.zeros(size, dtype=np.int64)
    masks = np.arange(size, dtype=np.int64)
    emask = [((1 << idx[a]) | (1 << idx[b])) for a, b in E if a != b]
    for em in emask:
        medges += (masks & em) == em
    for i in range(n):
        pop += (masks >> i) & 1
    best = None
    for k in range(2, n + 1):
        sel = pop == k
        if not sel.any():
            continue
        j = int(np.argmax(np.where(sel, medges, -1)))
        cand = (Fraction(int(medges[j]), k - 1), j)
        if best is None or cand[0] > best[0]:
            best = cand
    d, j = best
    verts = frozenset(V[i] for i in range(n) if (j >> i) & 1)
    return d, DensityCertificate(verts, int(medges[j]), d)


class _Dinic:
    def __init__(self, n: int):
        self.n = n
        self.head = [[] for _ in range(n)]
        self.to: list = []
        self.cap: list = []

    def add(self, u: int, v: int, c: int) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def maxflow(self, s: int, t: int) -> int:
        flow = 0
        to, cap, head = self.to, self.cap, self.head
        while True:
            level = [-1] * self.n
            level[s] = 0
            q = deque([s])
            while q:
                u = q.popleft()
                for e in head[u]:
                    if cap[e] > 0 and level[to[e]] < 0:
                        level[to[e]] = level[u] + 1
                        q.append(to[e])
            if level[t] < 0:
                return flow
            it = [0] * self.n

            def dfs(u, f):
                if u == t:
                    return f
                while it[u] < len(head[u]):
                    e = head[u][it[u]]
                    v = to[e]
                    if cap[e] > 0 and level[v] == level[u] + 1:
                        got = dfs(v, min(f, cap[e]))
                        if got:
                            cap[e] -= got
                            cap[e ^ 1] += got
                            return got
                    it[u] += 1
                return 0

            while True:
                f = dfs(s, float("inf"))
                if not f:
                    break
                flow += f

    def source_side(self, s: int) -> set:
        seen = {s}
        q = deque([s])
        while q:
            u = q.popleft()
            for e in self.head[u]:
                if self.cap[e] > 0 and self.to[e] not in seen:
                    seen.add(self.to[e])
                    q.append(self.to[e])
        return seen


def _best_closure(V: list, E: list, lam: Fraction, forced: int) -> tuple[Fraction, set]:
    """max over S containing V[forced] of m(S) - lam (|S| - 1), with the
    maximiser.  Source -> edge (q), edge -> endpoints (inf), vertex -> sink
    (p), the forced vertex has no sink arc."""
    p, q = lam.numerator, lam.denominator
    n, m = len(V), len(E)
    src, snk = n + m, n + m + 1
    D = _Dinic(n + m + 2)
    big = q * (m + 1) + p * (n + 1)
    for j, (a, b) in enumerate(E):
        D.add(src, n + j, q)
        D.add(n + j, a, big)
        D.add(n + j, b, big)
    for i in range(n):
        if i != forced:
            D.add(i, snk, p)
    cut = D.maxflow(src, snk)
    value = Fraction(q * m - cut, q)
    side = D.source_side(src)
    S = {i for i in range(n) if i in side} | {forced}
    return value, S


def fractional_arboricity_flow(G) -> tuple[Fraction, DensityCertificate]:
    V, E = _simple_graph(G)
    n = len(V)
    if n < 2:
        return Fraction(0), DensityCertificate(frozenset(V), 0, Fraction(0))
    idx = {v: i for i, v in enumerate(V)}
    Ei = [(idx[a], idx[b]) for a, b in E if a != b]
    if not Ei:
        pair = frozenset(V[:2])
        return Fraction(0), DensityCertificate(pair, 0, Fraction(0))
    # start from the densest single edge
    a, b = Ei[0]
    best_S = {a, b}

    def m_of(S):
        return sum(1 for x, y in Ei if x in S and y in S)

    lam = _density(m_of(best_S), 2)
    while True:
        improved = None
        for v in range(n):
            val, S = _best_closure(V, Ei, lam, v)
            if val > 0 and len(S) >= 2:
                d = _density(m_of(S), len(S))
                if d > lam and (improved is None or d > improved[0]):
                    improved = (d, S)
        if improved is None:
            break
        lam, best_S = improved
    verts = frozenset(V[i] for i in best_S)
    return lam, DensityCertificate(verts, m_of(best_S), lam)


def fractional_arboricity(G) -> tuple[Fraction, DensityCertificate]:
    V, _E = _simple_graph(G)
    if len(V) <= EXHAUSTIVE_MAX_N:
        return fractional_arboricity_exhaustive(G)
    return fractional_arboricity_flow(G)


def check_certificate(G, cert: DensityCertificate) -> bool:
    V, E = _simple_graph(G)
    S = cert.vertices
    if len(S) < 2 or not S <= set(V):
        return False
    m = sum(1 for a, b in E if a in S and b in S and a != b)
    return m == cert.edges and cert.density == Fraction(m, len(S) - 1)


# ----------------------------------------------------------------------
# arborizations


def _is_forest(n_index: dict, edges: Iterable) -> bool:
    parent = {v: v for v in n_index}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        if a == b:
            return False
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def verify_arborization(G, A: WeightedForestFamily, c) -> bool:
    V, E = _simple_graph(G)
    c = Fraction(c)
    vset = {v: i for i, v in enumerate(V)}
    if len(A.forests) != len(A.weights):
        return False
    cover = [Fraction(0)] * len(E)
    total = Fraction(0)
    for forest, w in zip(A.forests, A.weights):
        w = Fraction(w)
        if w < 0:
            return False
        if any(not (0 <= j < len(E)) for j in forest):
            return False
        if not _is_forest(vset, [E[j] for j in forest]):
            return False
        total += w
        for j in forest:
            cover[j] += w
    return total == c and all(x >= 1 for x in cover)


def _heaviest_forest(V: list, E: list, y: Sequence) -> tuple:
    """Spanning forest of maximum total y (Kruskal, ties by edge index)."""
    parent = {v: v for v in V}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    out = []
    for j in sorted((j for j, (a, b) in enumerate(E) if a != b), key=lambda j: (-y[j], j)):
        ra, rb = find(E[j][0]), find(E[j][1])
        if ra != rb:
            parent[ra] = rb
            out.append(j)
    return tuple(sorted(out))


def build_arborization(G, c) -> WeightedForestFamily | None:
    """Minimum-weight fractional cover of the edges by spanning forests,
    solved exactly with a rational simplex; ``None`` if it exceeds ``c``.

    Forests enter by column generation: the pricing problem for dual edge
    weights y is a maximum-weight spanning forest."""
    V, E = _simple_graph(G)
    if len(E) > ARBORIZATION_MAX_M:
        raise TooLarge(f"forest enumeration limited to {ARBORIZATION_MAX_M} edges")
    c = Fraction(c)
    if any(a == b for a, b in E):
        return None
    if not E:
        return WeightedForestFamily((), ()) if c == 0 else WeightedForestFamily(((),), (c,))
    m = len(E)
    forests: list = []
    for j in range(m):
        F = _heaviest_forest(V, E, [Fraction(1) if i == j else Fraction(0) for i in range(m)])
        if F not in forests:
            forests.append(F)
    while True:
        weights, y = _min_cover_lp(m, forests)
        F = _heaviest_forest(V, E, y)
        if sum((y[j] for j in F), Fraction(0)) <= 1 or F in forests:
            break
        forests.append(F)
    total = sum(weights, Fraction(0))
    if total > c:
        return None
    chosen = [(f, w) for f, w in zip(forests, weights) if w > 0]
    # pad the first forest so that the total equals c exactly
    if total < c:
        f0, w0 = chosen[0]
        chosen[0] = (f0, w0 + (c - total))
    return WeightedForestFamily(tuple(f for f, _ in chosen), tuple(w for _, w in chosen))


def _min_cover_lp(m: int, forests: Sequence) -> tuple:
    """min sum w  s.t.  sum_{F containing e} w_F >= 1, w >= 0.

    Solved through its dual (max sum y_e s.t. sum_{e in F} y_e <= 1) by a
    dense tableau simplex in exact rationals: the dual has the origin
    feasible, so Bland's rule from the slack basis suffices.  Returns the
    primal weights and the dual edge values."""
    k = len(forests)
    # dual: variables y_e (m), slack s_F (k); constraints one per forest
    rows = []
    for F in forests:
        row = [Fraction(0)] * (m + k + 1)
        for j in F:
            row[j] = Fraction(1)
        rows.append(row)
    for i in range(k):
        rows[i][m + i] = Fraction(1)
        rows[i][-1] = Fraction(1)
    obj = [Fraction(-1)] * m + [Fraction(0)] * k + [Fraction(0)]
    basis = [m + i for i in range(k)]
    while True:
        col = next((j for j in range(m + k) if obj[j] < 0), None)
        if col is None:
            break
        best = None
        for i in range(k):
            if rows[i][col] > 0:
                ratio = rows[i][-1] / rows[i][col]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise ArithmeticError("unbounded dual; the edge set cannot be covered")
        _r, piv = best
        pv = rows[piv][col]
        rows[piv] = [x / pv for x in rows[piv]]
        for i in range(k):
            if i != piv and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[piv])]
        if obj[col] != 0:
            f = obj[col]
            obj = [a - f * b for a, b in zip(obj, rows[piv])]
        basis[piv] = col
    y = [Fraction(0)] * m
    for i, b in enumerate(basis):
        if b < m:
            y[b] = rows[i][-1]
    # primal weights are the reduced costs of the slack columns
    return [obj[m + i] for i in range(k)], y


# ----------------------------------------------------------------------


def degeneracy(G) -> int:
    V, E = _simple_graph(G)
    adj: dict = {v: [] for v in V}
    for a, b in E:
        adj[a].append(b)
        if a != b:
            adj[b].append(a)
        else:
            adj[a].append(a)
    deg = {v: len(adj[v]) for v in V}
    alive = set(V)
    best = 0
    while alive:
        v = min(alive, key=lambda x: (deg[x], repr(x)))
        best = max(best, deg[v])
        alive.remove(v)
        for w in adj[v]:
            if w in alive:
                deg[w] -= 1
    return best


def perfect_coating_admissible(S, g: int) -> tuple[bool, list]:
    """Connected, loopless and a_f(S) = 2g/(g+2)."""
    reasons = []
    if not S.is_connected():
        reasons.append("skeleton is not connected")
    if S.loops():
        reasons.append("skeleton has loops")
    target = Fraction(2 * g, g + 2)
    af, _cert = fractional_arboricity(S)
    if af != target:
        reasons.append(f"a_f = {af}, need {target}")
    return (not reasons), reasons
