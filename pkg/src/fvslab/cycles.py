"""Directed cycle enumeration, normal sets and their energies."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import CycleBudgetExceeded, EmptySet, NotNormal, NotStrictSubset
from .plane import DiCycle, PlaneDigraph, digirth, make_cycle, sort_key

DEFAULT_CYCLE_CAP = 200_000
DEFAULT_SOLUTION_CAP = 100_000


# ----------------------------------------------------------------------
# enumeration


def enumerate_dicycles(G: PlaneDigraph, max_count: int | None = DEFAULT_CYCLE_CAP) -> list:
    """All simple directed cycles (arc-level, so parallel arcs give distinct
    cycles).  Ordered by the position of their smallest vertex, then by the
    depth-first order of arc ids from that vertex."""
    cache = G._cache.setdefault("cycles", None)
    if cache is not None:
        return list(cache)
    order = {v: i for i, v in enumerate(G.vertices)}
    out_by = {v: sorted(G.out_arcs(v), key=sort_key) for v in G.vertices}
    found: list = []
    for s in G.vertices:
        si = order[s]
        # vertices of index >= si that can reach s inside that range
        back = {s}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for a in G.in_arcs(x):
                u = G.tail(a)
                if order[u] >= si and u not in back:
                    back.add(u)
                    queue.append(u)
        path_arcs: list = []
        on_path = {s}
        stack = [(s, iter(out_by[s]))]
        while stack:
            v, it = stack[-1]
            advanced = False
            for a in it:
                w = G.head(a)
                if w == s:
                    found.append(tuple(path_arcs + [a]))
                    if max_count is not None and len(found) > max_count:
                        raise CycleBudgetExceeded(f"more than {max_count} directed cycles")
                    continue
                if w in on_path or w not in back or order[w] < si:
                    continue
                path_arcs.append(a)
                on_path.add(w)
                stack.append((w, iter(out_by[w])))
                advanced = True
                break
            if not advanced:
                stack.pop()
                if path_arcs and stack:
                    on_path.discard(v)
                    path_arcs.pop()
    cycles = [make_cycle(G, arcs) for arcs in found]
    G._cache["cycles"] = tuple(cycles)
    return cycles


# ----------------------------------------------------------------------
# normal sets


def arc_disjoint(cycles: Iterable[DiCycle]) -> bool:
    seen: set = set()
    for C in cycles:
        for a in C.arcs:
            if a in seen:
                return False
            seen.add(a)
    return True


def used_half_arcs(G: PlaneDigraph, cycles: Iterable[DiCycle]) -> dict:
    """vertex -> sorted list of (rotation position, sign) of used half-arcs."""
    out: dict = {}
    for C in cycles:
        for a in C.arcs:
            t, h = G.arcs[a]
            out.setdefault(t, []).append((G.rotation_index((a, 1)), 1))
            out.setdefault(h, []).append((G.rotation_index((a, -1)), -1))
    for v in out:
        out[v].sort()
    return out


def alternating(signs: Sequence[int]) -> bool:
    k = len(signs)
    if k % 2:
        return False
    return all(signs[i] != signs[(i + 1) % k] for i in range(k))


def is_alternating_at(G: PlaneDigraph, cycles: Iterable[DiCycle], v) -> bool:
    used = used_half_arcs(G, cycles).get(v, [])
    return alternating([s for _p, s in used])


def is_normal(G: PlaneDigraph, S: Iterable[DiCycle]) -> bool:
    S = list(S)
    if len({C.arcs for C in S}) != len(S):
        return False
    if not arc_disjoint(S):
        return False
    for _v, used in used_half_arcs(G, S).items():
        if not alternating([s for _p, s in used]):
            return False
    return True


@dataclass(frozen=True)
class NormalSet:
    cycles: tuple
    host: PlaneDigraph

    def __len__(self) -> int:
        return len(self.cycles)

    @property
    def arcs(self) -> frozenset:
        return frozenset(a for C in self.cycles for a in C.arcs)

    @property
    def vertices(self) -> frozenset:
        return frozenset(v for C in self.cycles for v in C.vertices)


def normal_set(G: PlaneDigraph, cycles: Iterable[DiCycle]) -> NormalSet:
    cycles = tuple(sorted(cycles, key=lambda C: tuple(sort_key(a) for a in C.arcs)))
    if not is_normal(G, cycles):
        raise NotNormal("cycles are not a normal set")
    return NormalSet(cycles, G)


# ----------------------------------------------------------------------
# statistics of the subgraph spanned by a family of cycles


@dataclass(frozen=True)
class SubgraphStats:
    n_C: int
    m_C: int
    f_C: int
    c_C: int
    face_lengths: tuple


def subgraph_stats(G: PlaneDigraph, cycles: Iterable[DiCycle]) -> SubgraphStats:
    """Counts for G[C]; faces are the faces of G merged across every arc not
    in C, and a face's length counts each bordering arc side of C."""
    cycles = list(cycles)
    arcs = set()
    verts = set()
    for C in cycles:
        arcs.update(C.arcs)
        verts.update(C.vertices)
    if not arcs:
        return SubgraphStats(0, 0, 1, 0, (0,))
    classes = G.merged_face_classes(arcs)
    lengths: dict = {}
    for a in arcs:
        for s in (1, -1):
            r = classes[G.face_of((a, s))]
            lengths[r] = lengths.get(r, 0) + 1
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in arcs:
        t, h = G.arcs[a]
        rt, rh = find(t), find(h)
        if rt != rh:
            parent[rt] = rh
    c = len({find(v) for v in verts})
    ordered = tuple(lengths[r] for r in sorted(lengths))
    return SubgraphStats(len(verts), len(arcs), len(lengths), c, ordered)


def q_value(stats: SubgraphStats) -> int:
    return stats.m_C - stats.n_C


# ----------------------------------------------------------------------
# energies


@dataclass(frozen=True)
class EnergyReport:
    g: int
    E1: Fraction
    E2: Fraction
    E3: Fraction
    E4: Fraction

    @property
    def E_tot(self) -> Fraction:
        return self.E1 + self.E2 + self.E3 + self.E4

    def nonnegative(self) -> bool:
        return min(self.E1, self.E2, self.E3, self.E4) >= 0


def energies(G: PlaneDigraph, N: Iterable[DiCycle] | NormalSet, g: int | None = None) -> EnergyReport:
    cycles = list(N.cycles if isinstance(N, NormalSet) else N)
    if not is_normal(G, cycles):
        raise NotNormal("energies are defined for normal sets")
    g = digirth(G) if g is None else g
    if g is None:
        raise NotNormal("acyclic digraph has no normal cycles to weigh")
    st = subgraph_stats(G, cycles)
    e1 = Fraction(g - 2, g) * sum(len(C) - g for C in cycles)
    e2 = Fraction(1, g) * sum(l - g for l in st.face_lengths) if cycles else Fraction(0)
    e3 = Fraction(G.n - st.n_C)
    e4 = Fraction(st.c_C - 1)
    return EnergyReport(g, e1, e2, e3, e4)


def energy_identity_check(G: PlaneDigraph, N: Iterable[DiCycle] | NormalSet) -> bool:
    """|N| = (n-2)/(g-2) - E_tot/(g-2), exactly."""
    cycles = list(N.cycles if isinstance(N, NormalSet) else N)
    if not cycles:
        raise EmptySet("identity is stated for non-empty normal sets")
    rep = energies(G, cycles)
    g = rep.g
    return Fraction(len(cycles)) == Fraction(G.n - 2, g - 2) - rep.E_tot / (g - 2)


# ----------------------------------------------------------------------
# maximum normal sets


class _NormalSearch:
    """Branch and bound over the enumerated cycles.

    Cycles are processed in enumeration order (grouped by smallest vertex),
    so every vertex is "closed" once its block is done and its alternation
    can be checked at that point."""

    def __init__(self, G: PlaneDigraph, cycles: list, cap_bound: int | None):
        self.G = G
        self.cycles = cycles
        arc_bit = {a: 1 << i for i, a in enumerate(G.sorted_arcs())}
        self.masks = []
        self.halves = []
        last: dict = {}
        for j, C in enumerate(cycles):
            mask = 0
            hv = []
            for a in C.arcs:
                mask |= arc_bit[a]
                t, h = G.arcs[a]
                hv.append((t, G.rotation_index((a, 1)), 1))
                hv.append((h, G.rotation_index((a, -1)), -1))
            self.masks.append(mask)
            self.halves.append(hv)
            for v in C.vertices:
                last[v] = j
        self.closing = [[] for _ in cycles]
        for v, j in last.items():
            self.closing[j].append(v)
        g = min((len(C) for C in cycles), default=1)
        self.g = g
        self.cap_bound = cap_bound
        # suffix unions of arc masks for the free-arc bound
        self.suffix = [0] * (len(cycles) + 1)
        for j in range(len(cycles) - 1, -1, -1):
            self.suffix[j] = self.suffix[j + 1] | self.masks[j]
        self.used_at: dict = {}

    def _alt_ok(self, v) -> bool:
        used = self.used_at.get(v)
        if not used:
            return True
        used = sorted(used)
        return alternating([s for _p, s in used])

    def _bound(self, j: int, used: int) -> int:
        free = self.suffix[j] & ~used
        by_arcs = bin(free).count("1") // self.g
        return min(by_arcs, len(self.cycles) - j)

    def run(self, mode: str, target: int = 0, solution_cap: int = DEFAULT_SOLUTION_CAP):
        self.best_size = -1
        self.best: list = []
        self.solutions: list = []
        self.mode = mode
        self.target = target
        self.solution_cap = solution_cap
        self.chosen: list = []
        self._dfs(0, 0)
        return self

    def _record(self) -> None:
        k = len(self.chosen)
        if self.mode == "max":
            if k > self.best_size:
                self.best_size = k
                self.best = list(self.chosen)
        else:
            if k == self.target:
                self.solutions.append(tuple(self.chosen))
                if len(self.solutions) > self.solution_cap:
                    raise CycleBudgetExceeded(f"more than {self.solution_cap} optimal normal sets")

    def _done(self) -> bool:
        return self.mode == "max" and self.cap_bound is not None and self.best_size >= self.cap_bound

    def _dfs(self, j: int, used: int) -> None:
        k = len(self.chosen)
        if j == len(self.cycles):
            self._record()
            return
        if self.mode == "max":
            if k + self._bound(j, used) <= self.best_size:
                return
        else:
            if k > self.target or k + self._bound(j, used) < self.target:
                return
        for branch in (1, 0):
            if branch == 1:
                if self.masks[j] & used:
                    continue
                self.chosen.append(j)
                for v, p, s in self.halves[j]:
                    self.used_at.setdefault(v, []).append((p, s))
                ok = all(self._alt_ok(v) for v in self.closing[j])
                if ok:
                    self._dfs(j + 1, used | self.masks[j])
                for v, p, s in self.halves[j]:
                    self.used_at[v].pop()
                self.chosen.pop()
            else:
                if all(self._alt_ok(v) for v in self.closing[j]):
                    self._dfs(j + 1, used)
            if self._done():
                return


def _upper_cap(G: PlaneDigraph) -> int | None:
    g = digirth(G)
    if g is None or g < 3 or G.n < 3:
        return None
    return (G.n - 2) // (g - 2)


def max_normal_set(G: PlaneDigraph, max_cycles: int | None = DEFAULT_CYCLE_CAP) -> NormalSet:
    """A maximum normal set; among maximum ones, the lexicographically
    smallest list of cycle positions in enumeration order."""
    cycles = enumerate_dicycles(G, max_cycles)
    if not cycles:
        return NormalSet((), G)
    search = _NormalSearch(G, cycles, _upper_cap(G)).run("max")
    return NormalSet(tuple(cycles[j] for j in search.best), G)


def normal_sets_of_size(
    G: PlaneDigraph, size: int, solution_cap: int = DEFAULT_SOLUTION_CAP, max_cycles: int | None = DEFAULT_CYCLE_CAP
) -> list:
    cycles = enumerate_dicycles(G, max_cycles)
    if size == 0:
        return [NormalSet((), G)]
    search = _NormalSearch(G, cycles, None).run("all", target=size, solution_cap=solution_cap)
    return [NormalSet(tuple(cycles[j] for j in sol), G) for sol in search.solutions]


def all_maximum_normal_sets(G: PlaneDigraph, solution_cap: int = DEFAULT_SOLUTION_CAP) -> list:
    best = len(max_normal_set(G))
    return normal_sets_of_size(G, best, solution_cap)


def max_normal_size(G: PlaneDigraph) -> int:
    return len(max_normal_set(G))


# ----------------------------------------------------------------------
# structural checks


def complete_arc_disjoint(G: PlaneDigraph, C: Iterable[DiCycle], Cp: Iterable[DiCycle]) -> DiCycle:
    """A directed cycle on E(C) minus E(Cp), found by walking unused arcs."""
    C, Cp = list(C), list(Cp)
    ec = {a for X in C for a in X.arcs}
    ecp = {a for X in Cp for a in X.arcs}
    if not ecp < ec:
        raise NotStrictSubset("E(C') must be a proper subset of E(C)")
    rest = ec - ecp
    out: dict = {}
    for a in sorted(rest, key=sort_key):
        out.setdefault(G.tail(a), []).append(a)
    start = min(rest, key=sort_key)
    walk = [start]
    pos = {G.tail(start): 0}
    v = G.head(start)
    while v not in pos:
        pos[v] = len(walk)
        a = out[v][0]
        walk.append(a)
        v = G.head(a)
    return make_cycle(G, walk[pos[v]:])


def weaken_normal_set(G: PlaneDigraph, N: Iterable[DiCycle] | NormalSet) -> NormalSet:
    """Drop one cycle so that q decreases (or stays 0)."""
    from .laminar import laminarize_multiset

    cycles = list(N.cycles if isinstance(N, NormalSet) else N)
    if not cycles:
        raise EmptySet("normal set is empty")
    if not is_normal(G, cycles):
        raise NotNormal("input is not a normal set")
    if q_value(subgraph_stats(G, cycles)) == 0:
        drop = max(cycles, key=lambda C: tuple(sort_key(a) for a in C.arcs))
        return normal_set(G, [C for C in cycles if C is not drop])
    lam = laminarize_multiset(G, cycles).cycles
    vsets = [C.vertex_set for C in lam]
    isolated = [all(not (vsets[i] & vsets[j]) for j in range(len(lam)) if j != i) for i in range(len(lam))]
    from .plane import cycle_region

    faces = [cycle_region(G, C).interior_faces for C in lam]
    cands = []
    for i in range(len(lam)):
        if isolated[i]:
            continue
        if any(j != i and not isolated[j] and faces[j] < faces[i] for j in range(len(lam))):
            continue
        cands.append(i)
    pick = min(cands, key=lambda i: tuple(sort_key(a) for a in lam[i].arcs))
    return normal_set(G, [C for i, C in enumerate(lam) if i != pick])


def fvs_of_gN_check(G: PlaneDigraph, N: Iterable[DiCycle] | NormalSet | None = None) -> dict:
    """fvs(G[N]) = |N| iff q(N) = 0.  Without ``N``, uses a normal set of
    size fvs(G) minimising q."""
    from .fvs import fvs_exact

    if N is None:
        k = fvs_exact(G).size
        cands = normal_sets_of_size(G, k)
        if not cands:
            return {"holds": False, "reason": "no normal set of size fvs(G)"}
        N = min(cands, key=lambda S: (q_value(subgraph_stats(G, S.cycles)), [tuple(map(sort_key, C.arcs)) for C in S.cycles]))
    cycles = list(N.cycles if isinstance(N, NormalSet) else N)
    arcs = {a for C in cycles for a in C.arcs}
    sub = G.arc_subgraph(arcs)
    f = fvs_exact(sub).size
    q = q_value(subgraph_stats(G, cycles))
    return {
        "size": len(cycles),
        "fvs_sub": f,
        "q": q,
        "holds": (f == len(cycles)) == (q == 0),
    }
