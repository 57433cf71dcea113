"""Uncrossing of directed cycles and laminarization of cycle multisets.

Two crossing cycles ``C1``, ``C2`` are replaced by simple cycles on the same
arc multiset.  Candidates come from the transition systems of ``C1 + C2``:
at every vertex where both cycles pass (unless they share both the entering
and the leaving arc) the two in-arcs can be paired with the two out-arcs in
two ways.  A system is admissible when every closed trail it produces is a
simple cycle.

The potential of a multiset is the product of ``1 + |interior|`` over its
cycles.  A non-crossing split into two cycles with a smaller potential
exists in the common cases, but not always: when the two cycles share
boundary pieces that end up inside the union, the only laminar splits may
need three cycles or raise the potential.  The ranking in
``uncross_pair`` prefers the good cases and falls back otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import NotCrossing, UncrossingStuck
from .plane import CW, DiCycle, PlaneDigraph, crossing, cycle_region, make_cycle, sort_key

MAX_FREE_VERTICES = 20


@dataclass(frozen=True)
class CycleMultiset:
    cycles: tuple
    psi_trace: tuple = field(default=(), compare=False)


@dataclass(frozen=True)
class UncrossResult:
    cycles: tuple
    same_direction: bool
    psi_before: int
    psi_after: int
    still_crossing: bool


def psi_factor(G: PlaneDigraph, C: DiCycle) -> int:
    return 1 + cycle_region(G, C).size


def psi(G: PlaneDigraph, cycles) -> int:
    out = 1
    for C in cycles:
        out *= psi_factor(G, C)
    return out


def _cycle_key(C: DiCycle) -> tuple:
    return tuple(sort_key(a) for a in C.arcs)


def _decompositions(G: PlaneDigraph, C1: DiCycle, C2: DiCycle):
    """Yield every split of C1 + C2 into simple cycles (two or more)."""
    copies = [(a, 0) for a in C1.arcs] + [(a, 1) for a in C2.arcs]
    ins: dict = {}
    outs: dict = {}
    for c in copies:
        t, h = G.arcs[c[0]]
        outs.setdefault(t, []).append(c)
        ins.setdefault(h, []).append(c)
    fixed: dict = {}
    free = []
    for v in sorted(ins, key=sort_key):
        i_list = sorted(ins[v], key=lambda c: (sort_key(c[0]), c[1]))
        o_list = sorted(outs[v], key=lambda c: (sort_key(c[0]), c[1]))
        if len(i_list) == 1:
            fixed[i_list[0]] = o_list[0]
        elif i_list[0][0] == i_list[1][0] and o_list[0][0] == o_list[1][0]:
            # both copies of one path run through v: pairing is irrelevant
            fixed[i_list[0]] = o_list[0]
            fixed[i_list[1]] = o_list[1]
        else:
            free.append((i_list, o_list))
    if len(free) > MAX_FREE_VERTICES:
        raise UncrossingStuck(f"{len(free)} shared vertices exceed the enumeration limit")
    seen_splits = set()
    for choice in product((0, 1), repeat=len(free)):
        nxt = dict(fixed)
        for (i_list, o_list), b in zip(free, choice):
            nxt[i_list[0]] = o_list[b]
            nxt[i_list[1]] = o_list[1 - b]
        seen = set()
        trails = []
        ok = True
        for c in copies:
            if c in seen:
                continue
            trail = []
            x = c
            while x not in seen:
                seen.add(x)
                trail.append(x[0])
                x = nxt[x]
            verts = [G.tail(a) for a in trail]
            if len(set(verts)) != len(verts):
                ok = False
                break
            trails.append(trail)
        if not ok or len(trails) < 2:
            continue
        split = tuple(sorted((make_cycle(G, t) for t in trails), key=_cycle_key))
        key = tuple(D.arcs for D in split)
        if key not in seen_splits:
            seen_splits.add(key)
            yield split


def uncross_pair(G: PlaneDigraph, C1: DiCycle, C2: DiCycle, *, require_decrease: bool = False) -> UncrossResult:
    """Replace two crossing cycles by simple cycles on the same arcs.

    Ranking of the candidate splits: pairwise non-crossing first, then
    potential below the input's, then exactly two cycles, then the smallest
    potential; ties by arc ids."""
    if not crossing(G, C1, C2):
        raise NotCrossing("cycles do not cross")
    before = psi_factor(G, C1) * psi_factor(G, C2)
    same = cycle_region(G, C1).orientation == cycle_region(G, C2).orientation
    original = tuple(sorted((C1, C2), key=_cycle_key))
    best = None
    for split in _decompositions(G, C1, C2):
        if split == original:
            continue
        after = psi(G, split)
        if require_decrease and after >= before:
            continue
        lam = is_laminar(G, split)
        key = (not lam, after >= before, len(split) != 2, after, [_cycle_key(D) for D in split])
        if best is None or key < best[0]:
            best = (key, split, lam, after)
    if best is None:
        raise UncrossingStuck("the two cycles admit no other split into simple cycles")
    _key, split, lam, after = best
    return UncrossResult(split, same, before, after, not lam)


def is_laminar(G: PlaneDigraph, cycles) -> bool:
    cycles = list(cycles)
    for i in range(len(cycles)):
        for j in range(i + 1, len(cycles)):
            if crossing(G, cycles[i], cycles[j]):
                return False
    return True


def arc_usage(cycles) -> dict:
    out: dict = {}
    for C in cycles:
        for a in C.arcs:
            out[a] = out.get(a, 0) + 1
    return out


def _strict_splits(G: PlaneDigraph, C1: DiCycle, C2: DiCycle) -> list:
    """Two-cycle splits with a smaller potential, best first."""
    before = psi_factor(G, C1) * psi_factor(G, C2)
    out = []
    for split in _decompositions(G, C1, C2):
        if len(split) != 2:
            continue
        after = psi(G, split)
        if after < before:
            out.append(((not is_laminar(G, split), after, [_cycle_key(D) for D in split]), split))
    out.sort(key=lambda t: t[0])
    return [split for _k, split in out]


def _strict_search(G: PlaneDigraph, cycles: list, budget: int):
    """Depth-first search over two-cycle, potential-lowering uncrossing
    steps for a laminar multiset.  Returns (cycles, trace) or None."""
    nodes = [0]
    seen: set = set()

    def rec(cur: list, trace: list):
        key = tuple(sorted(C.arcs for C in cur))
        if key in seen:
            return None
        seen.add(key)
        nodes[0] += 1
        if nodes[0] > budget:
            return None
        pairs = [
            (i, j)
            for i in range(len(cur))
            for j in range(i + 1, len(cur))
            if cur[i].arcs != cur[j].arcs and crossing(G, cur[i], cur[j])
        ]
        if not pairs:
            return cur, trace
        for i, j in pairs:
            try:
                splits = _strict_splits(G, cur[i], cur[j])
            except UncrossingStuck:
                continue
            for split in splits:
                nxt = [C for t, C in enumerate(cur) if t not in (i, j)] + list(split)
                got = rec(nxt, trace + [psi(G, nxt)])
                if got is not None:
                    return got
                if nodes[0] > budget:
                    return None
        return None

    return rec(list(cycles), [psi(G, cycles)])


def laminarize_multiset(G: PlaneDigraph, F, max_steps: int | None = None, search_budget: int = 2000) -> CycleMultiset:
    """Repeatedly uncross crossing pairs until the multiset is laminar.

    Per-arc usage is always preserved.  Steps that are laminar and lower
    the potential psi are taken first.  When no pair allows one, the best
    available split is taken even if psi grows or the cycle count changes;
    ``psi_trace`` records psi after every step so callers can see this.

    A bounded depth-first search restricted to two-cycle, psi-lowering
    steps runs first, so the count and the monotone potential are kept
    whenever that search finds a laminar end state."""
    cycles = list(F.cycles if isinstance(F, CycleMultiset) else F)
    found = _strict_search(G, cycles, search_budget) if search_budget > 0 else None
    if found is not None:
        return CycleMultiset(tuple(found[0]), tuple(found[1]))
    limit = max_steps if max_steps is not None else 50 * (len(cycles) + 1) ** 2
    trace = [psi(G, cycles)]
    steps = 0
    while True:
        options = []
        for i in range(len(cycles)):
            for j in range(i + 1, len(cycles)):
                if cycles[i].arcs == cycles[j].arcs or not crossing(G, cycles[i], cycles[j]):
                    continue
                try:
                    res = uncross_pair(G, cycles[i], cycles[j])
                except UncrossingStuck:
                    continue
                rank = (res.still_crossing, res.psi_after >= res.psi_before)
                options.append((rank, i, j, res))
                if rank == (False, False):
                    break
            if options and options[-1][0] == (False, False):
                break
        if not options:
            if is_laminar(G, cycles):
                break
            raise UncrossingStuck("crossing pairs remain but none can be split differently")
        steps += 1
        if steps > limit:
            raise UncrossingStuck(f"no laminar multiset within {limit} uncrossing steps")
        _rank, i, j, res = min(options, key=lambda o: (o[0], o[1], o[2]))
        cycles = [C for t, C in enumerate(cycles) if t not in (i, j)] + list(res.cycles)
        trace.append(psi(G, cycles))
    return CycleMultiset(tuple(cycles), tuple(trace))


def orientation_split(G: PlaneDigraph, cycles) -> tuple:
    cw = [C for C in cycles if cycle_region(G, C).orientation == CW]
    ccw = [C for C in cycles if cycle_region(G, C).orientation != CW]
    return cw, ccw
