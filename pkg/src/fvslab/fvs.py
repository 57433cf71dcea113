"""Minimum directed feedback vertex sets.

``fvs_exact`` is a reduce-and-branch search: vertices on no cycle are
dropped, self-loops force their vertex into the solution, vertices of
in- or out-degree one are merged into their unique neighbour, and the
search branches over the vertices of a shortest cycle.  A greedy packing of
vertex-disjoint cycles gives the lower bound used for pruning.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np

from . import _kernels
from .errors import HypothesisViolated, ResourceLimit, TooLarge
from .plane import PlaneDigraph, digirth, sort_key

DEFAULT_BUDGET = 10**7
BRUTE_FORCE_MAX_N = 15


def default_budget() -> int:
    env = os.environ.get("FVSLAB_BUDGET")
    if env:
        return int(env)
    return DEFAULT_BUDGET


@dataclass(frozen=True)
class FvsResult:
    size: int
    witness: tuple
    optimal: bool = True
    nodes: int = 0


def _adjacency(G) -> tuple[list, dict]:
    """Vertices and successor sets for a PlaneDigraph or a mapping."""
    if isinstance(G, PlaneDigraph):
        verts = list(G.vertices)
        succ = {v: set() for v in verts}
        for t, h in G.arcs.values():
            succ[t].add(h)
        return verts, succ
    verts = sorted(G, key=sort_key)
    succ = {v: set(G[v]) for v in verts}
    for v in list(succ):
        for w in succ[v]:
            succ.setdefault(w, set())
    return sorted(succ, key=sort_key), succ


def is_acyclic(G, removed: Iterable = ()) -> bool:
    """True iff the digraph minus ``removed`` has no directed cycle."""
    verts, succ = _adjacency(G)
    removed = set(removed)
    indeg = {v: 0 for v in verts if v not in removed}
    for v in indeg:
        for w in succ[v]:
            if w in indeg:
                indeg[w] += 1
    queue = deque(v for v, d in indeg.items() if d == 0)
    seen = 0
    while queue:
        v = queue.popleft()
        seen += 1
        for w in succ[v]:
            if w in indeg:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
    return seen == len(indeg)


def find_cycle(G, removed: Iterable = ()) -> list | None:
    """Vertices of some directed cycle avoiding ``removed``, or None."""
    verts, succ = _adjacency(G)
    removed = set(removed)
    best = _shortest_cycle({v: {w for w in succ[v] if w not in removed} for v in verts if v not in removed})
    return best


# ----------------------------------------------------------------------
# working graph for the search


class _Work:
    __slots__ = ("succ", "pred")

    def __init__(self, succ: dict, pred: dict):
        self.succ = succ
        self.pred = pred

    @classmethod
    def from_succ(cls, succ: Mapping) -> "_Work":
        s = {v: set(ws) for v, ws in succ.items()}
        p: dict = {v: set() for v in s}
        for v, ws in s.items():
            for w in ws:
                p[w].add(v)
        return cls(s, p)

    def copy(self) -> "_Work":
        return _Work({v: set(w) for v, w in self.succ.items()}, {v: set(w) for v, w in self.pred.items()})

    def remove(self, v) -> None:
        for w in self.succ.pop(v):
            if w != v:
                self.pred[w].discard(v)
        for u in self.pred.pop(v):
            if u != v:
                self.succ[u].discard(v)

    def add_arc(self, u, w) -> None:
        self.succ[u].add(w)
        self.pred[w].add(u)

    def bypass(self, v) -> None:
        """Delete v, joining every predecessor to every successor."""
        preds = [u for u in self.pred[v] if u != v]
        succs = [w for w in self.succ[v] if w != v]
        self.remove(v)
        for u in preds:
            for w in succs:
                self.add_arc(u, w)


def _reduce(g: _Work, undeletable: set) -> list | None:
    """Apply the reduction rules in place.  Returns forced vertices, or None
    when an undeletable vertex carries a self-loop (infeasible branch)."""
    forced = []
    changed = True
    while changed:
        changed = False
        for v in sorted(g.succ, key=sort_key):
            if v not in g.succ:
                continue
            sv, pv = g.succ[v], g.pred[v]
            if v in sv:
                if v in undeletable:
                    return None
                forced.append(v)
                g.remove(v)
                changed = True
                continue
            if not sv or not pv:
                g.remove(v)
                changed = True
                continue
            if v in undeletable:
                g.bypass(v)
                undeletable.discard(v)
                changed = True
                continue
            if len(pv) == 1:
                (u,) = pv
                # every cycle through v also passes through u
                succs = list(sv)
                g.remove(v)
                for w in succs:
                    g.add_arc(u, w)
                changed = True
                continue
            if len(sv) == 1:
                (w,) = sv
                preds = list(pv)
                g.remove(v)
                for u in preds:
                    g.add_arc(u, w)
                changed = True
                continue
    return forced


def _sccs(succ: Mapping) -> list:
    """Tarjan's algorithm, iterative; components in deterministic order."""
    index = {}
    low = {}
    on = set()
    stack = []
    out = []
    counter = 0
    for root in sorted(succ, key=sort_key):
        if root in index:
            continue
        work = [(root, iter(sorted(succ[root], key=sort_key)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on.add(w)
                    work.append((w, iter(sorted(succ[w], key=sort_key))))
                    advanced = True
                    break
                if w in on:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                low[work[-1][0]] = min(low[work[-1][0]], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                out.append(sorted(comp, key=sort_key))
    return out


def _shortest_cycle(succ: Mapping) -> list | None:
    best = None
    for s in sorted(succ, key=sort_key):
        if s in succ[s]:
            return [s]
        parent = {s: None}
        queue = deque([s])
        depth = {s: 0}
        found = None
        while queue and found is None:
            u = queue.popleft()
            if best is not None and depth[u] + 1 >= len(best):
                break
            for w in sorted(succ[u], key=sort_key):
                if w == s:
                    found = u
                    break
                if w not in parent:
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
        if found is not None:
            path = []
            x = found
            while x is not None:
                path.append(x)
                x = parent[x]
            path.reverse()
            if best is None or len(path) < len(best):
                best = path
                if len(best) <= 2:
                    return best
    return best


def _packing_bound(g: _Work) -> int:
    """Greedy vertex-disjoint cycle packing."""
    succ = {v: set(w) for v, w in g.succ.items()}
    count = 0
    while True:
        cyc = _shortest_cycle(succ)
        if cyc is None:
            return count
        count += 1
        for v in cyc:
            succ.pop(v, None)
        for v in succ:
            succ[v].difference_update(cyc)


class _Search:
    def __init__(self, budget: int):
        self.budget = budget
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise ResourceLimit(f"fvs search exceeded {self.budget} nodes")

    def solve(self, g: _Work, undeletable: set, limit: int) -> list | None:
        """Optimal solution of size < limit, or None if none exists."""
        self.tick()
        forced = _reduce(g, undeletable)
        if forced is None:
            return None
        limit -= len(forced)
        if limit <= 0:
            return None
        if not g.succ:
            return forced
        comps = [c for c in _sccs(g.succ) if len(c) > 1 or c[0] in g.succ[c[0]]]
        if not comps:
            return forced
        if len(comps) > 1:
            parts = []
            for c in comps:
                cs = set(c)
                parts.append(_Work.from_succ({v: g.succ[v] & cs for v in c}))
            bounds = [_packing_bound(p) for p in parts]
            if sum(bounds) >= limit:
                return None
            total = list(forced)
            spent = 0
            for i, p in enumerate(parts):
                rest = sum(bounds[i + 1 :])
                sub = self.solve(p, set(), limit - spent - rest)
                if sub is None:
                    return None
                spent += len(sub)
                total.extend(sub)
            return total
        if _packing_bound(g) >= limit:
            return None
        cyc = _shortest_cycle(g.succ)
        deg = {v: len(g.succ[v]) + len(g.pred[v]) for v in cyc}
        order = sorted(cyc, key=lambda v: (-deg[v], sort_key(v)))
        best = None
        for i, v in enumerate(order):
            h = g.copy()
            h.remove(v)
            und = set(order[:i])
            sub = self.solve(h, und, limit - 1)
            if sub is not None:
                best = forced + [v] + sub
                limit = len(sub) + 1
                if limit <= 1:
                    break
        return best


def fvs_exact(G, budget: int | None = None) -> FvsResult:
    """Minimum feedback vertex set with a deterministic witness."""
    budget = default_budget() if budget is None else budget
    verts, succ = _adjacency(G)
    work = _Work.from_succ(succ)
    search = _Search(budget)
    sol = search.solve(work, set(), len(verts) + 1)
    assert sol is not None
    witness = tuple(sorted(sol, key=sort_key))
    return FvsResult(len(witness), witness, True, search.nodes)


def fvs_bruteforce(G) -> FvsResult:
    """Smallest acyclifying subset by exhaustive enumeration (n <= 15)."""
    verts, succ = _adjacency(G)
    n = len(verts)
    if n > BRUTE_FORCE_MAX_N:
        raise TooLarge(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}, got {n}")
    index = {v: i for i, v in enumerate(verts)}
    masks = [0] * n
    for v, ws in succ.items():
        for w in ws:
            masks[index[v]] |= 1 << index[w]
    arr = np.array(masks, dtype=np.int64) if _kernels.USING_NUMBA else masks
    x = int(_kernels.fvs_brute_mask(n, arr))
    witness = tuple(v for v in verts if (x >> index[v]) & 1)
    return FvsResult(len(witness), witness, True, 0)


def is_minimal_fvs(G, witness: Iterable) -> bool:
    """Acyclic after removal, and no proper subset obtained by dropping one
    vertex still works."""
    w = set(witness)
    if not is_acyclic(G, w):
        return False
    return all(not is_acyclic(G, w - {v}) for v in w)


def is_directed_cycle_graph(G: PlaneDigraph) -> bool:
    """G is exactly one directed cycle through all its vertices."""
    if G.n < 1 or G.m != G.n:
        return False
    for v in G.vertices:
        if len(G.out_arcs(v)) != 1 or len(G.in_arcs(v)) != 1:
            return False
    start = G.vertices[0]
    seen = {start}
    v = G.successors(start)[0]
    while v != start:
        if v in seen:
            return False
        seen.add(v)
        v = G.successors(v)[0]
    return len(seen) == G.n


def audit_upper_bound(G: PlaneDigraph, budget: int | None = None) -> dict:
    """fvs <= (n-2)/(g-2) with equality exactly on the directed g-cycle."""
    g = digirth(G)
    if g is None or g < 3:
        raise HypothesisViolated(f"digirth must be at least 3, got {g}")
    if G.n < 3:
        raise HypothesisViolated("order must be at least 3")
    if not G.is_simple():
        raise HypothesisViolated("digraph must be simple")
    res = fvs_exact(G, budget)
    bound = Fraction(G.n - 2, g - 2)
    is_cg = is_directed_cycle_graph(G)
    equality = res.size == bound
    return {
        "fvs": res.size,
        "digirth": g,
        "bound": bound,
        "equality": equality,
        "equality_is_Cg": is_cg,
        "holds": res.size <= bound and (equality == is_cg),
        "witness": res.witness,
    }
