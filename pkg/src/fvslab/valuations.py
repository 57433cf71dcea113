"""Valuations of directed cycles: weights, segment values, multiplicity,
layer forests and the multiplicity-halving step."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .cycles import NormalSet, enumerate_dicycles, is_normal, max_normal_set, normal_sets_of_size
from .errors import (
    CheckFailure,
    EssentialVertexOnD,
    HypothesisViolated,
    NotConsecutive,
    NotLaminar,
)
from .fvs import is_acyclic
from .laminar import is_laminar, laminarize_multiset
from .plane import CCW, DiCycle, PlaneDigraph, cycle_region, make_cycle, sort_key


def _ckey(C: DiCycle) -> tuple:
    return tuple(sort_key(a) for a in C.arcs)


class Valuation:
    """Map from directed cycles of ``host`` to positive integers."""

    def __init__(self, host: PlaneDigraph, values: Mapping[DiCycle, int] | None = None):
        self.host = host
        vals: dict = {}
        for C, k in (values or {}).items():
            if k < 0:
                raise ValueError("valuation values are non-negative")
            if k:
                vals[C] = vals.get(C, 0) + int(k)
        self.values = vals

    @classmethod
    def from_cycles(cls, host: PlaneDigraph, cycles: Iterable[DiCycle]) -> "Valuation":
        vals: dict = {}
        for C in cycles:
            vals[C] = vals.get(C, 0) + 1
        return cls(host, vals)

    @property
    def weight(self) -> int:
        return sum(self.values.values())

    @property
    def support(self) -> list:
        return sorted(self.values, key=_ckey)

    def copies(self) -> list:
        """The multiset C_V as a list (cycle repeated value times)."""
        out = []
        for C in self.support:
            out.extend([C] * self.values[C])
        return out

    def __add__(self, other: "Valuation") -> "Valuation":
        vals = dict(self.values)
        for C, k in other.values.items():
            vals[C] = vals.get(C, 0) + k
        return Valuation(self.host, vals)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Valuation) and self.values == other.values

    def __repr__(self) -> str:
        return f"Valuation(weight={self.weight}, support={len(self.values)})"

    def is_unitary(self) -> bool:
        return all(k == 1 for k in self.values.values())


def arc_usage(V: Valuation, half_arc) -> int:
    """V*(e) for an arc id or a half-arc (arc, sign)."""
    a = half_arc[0] if isinstance(half_arc, tuple) and half_arc not in V.host.arcs else half_arc
    return sum(k for C, k in V.values.items() if a in C.arc_set)


def usage_map(V: Valuation) -> dict:
    out: dict = {}
    for C, k in V.values.items():
        for a in C.arcs:
            out[a] = out.get(a, 0) + k
    return out


def _signed_rotation(G: PlaneDigraph, usage: Mapping, v) -> list:
    return [s * usage.get(a, 0) for a, s in G.rotation[v]]


def segment_value(G: PlaneDigraph, V: Valuation, v, S) -> int:
    """Signed usage over a run of half-arcs, given in clockwise order."""
    S = list(S)
    if not S:
        return 0
    rot = G.rotation[v]
    if len(S) > len(rot) or len(set(S)) != len(S):
        raise NotConsecutive("segment longer than the rotation or repeating a half-arc")
    for h in S:
        if h not in rot:
            raise NotConsecutive(f"half-arc {h!r} is not at vertex {v!r}")
    for x, y in zip(S, S[1:]):
        if G.cw_next(x) != y:
            raise NotConsecutive(f"{x!r} and {y!r} are not consecutive clockwise")
    usage = usage_map(V)
    return sum(s * usage.get(a, 0) for a, s in S)


def _max_abs_run(w: list) -> int:
    """Largest |sum| over cyclic runs of w (including the full cycle)."""
    d = len(w)
    best = 0
    for i in range(d):
        acc = 0
        for L in range(d):
            acc += w[(i + L) % d]
            if abs(acc) > best:
                best = abs(acc)
    return best


def vertex_multiplicity(G: PlaneDigraph, V: Valuation, v, usage: Mapping | None = None) -> int:
    usage = usage_map(V) if usage is None else usage
    return _max_abs_run(_signed_rotation(G, usage, v))


def multiplicity(G: PlaneDigraph, V: Valuation) -> int:
    usage = usage_map(V)
    return max((vertex_multiplicity(G, V, v, usage) for v in G.vertices), default=0)


def is_normal_valuation(G: PlaneDigraph, V: Valuation) -> bool:
    return V.is_unitary() and is_normal(G, V.support)


def is_laminar_valuation(G: PlaneDigraph, V: Valuation) -> bool:
    return is_laminar(G, V.support)


def laminarize_valuation(G: PlaneDigraph, V: Valuation) -> Valuation:
    """Uncross the support; per-arc usage (hence every segment value and
    the multiplicity) is unchanged, and the weight never decreases."""
    if is_laminar(G, V.support):
        return Valuation(G, V.values)
    res = laminarize_multiset(G, V.copies())
    return Valuation.from_cycles(G, res.cycles)


# ----------------------------------------------------------------------
# layer forest


@dataclass(frozen=True)
class LayerForest:
    """Nodes are cycle copies (cycle, i) with 1 <= i <= V(cycle)."""

    nodes: tuple
    parent: tuple
    layer: tuple
    orientation: tuple

    @property
    def roots(self) -> list:
        return [i for i, p in enumerate(self.parent) if p is None]

    def children(self, i: int) -> list:
        return [j for j, p in enumerate(self.parent) if p == i]


def layer_forest(G: PlaneDigraph, V: Valuation) -> LayerForest:
    support = V.support
    if not is_laminar(G, support):
        raise NotLaminar("valuation support has crossing cycles")
    faces = {C: cycle_region(G, C).interior_faces for C in support}
    tight: dict = {}
    for C in support:
        encl = [D for D in support if D is not C and faces[C] < faces[D]]
        tight[C] = min(encl, key=lambda D: (len(faces[D]), _ckey(D))) if encl else None
    nodes = []
    index = {}
    for C in support:
        for i in range(1, V.values[C] + 1):
            index[(C, i)] = len(nodes)
            nodes.append((C, i))
    parent: list = [None] * len(nodes)
    for (C, i), j in index.items():
        if i > 1:
            parent[j] = index[(C, i - 1)]
        elif tight[C] is not None:
            D = tight[C]
            parent[j] = index[(D, V.values[D])]
    layer = [0] * len(nodes)
    for j in range(len(nodes)):
        d, x = 0, parent[j]
        while x is not None:
            d += 1
            x = parent[x]
        layer[j] = d
    orient = tuple(cycle_region(G, C).orientation for C, _i in nodes)
    return LayerForest(tuple(nodes), tuple(parent), tuple(layer), orient)


# ----------------------------------------------------------------------
# parity partition and the split graph


def split_rotation(G: PlaneDigraph, forest: LayerForest) -> dict:
    """Rotation of the split graph G_V: every arc used t times becomes t
    parallel copies, one per cycle copy.  Along an arc the copies run from
    left to right as: cycles with interior on the left, innermost first,
    then cycles with interior on the right, outermost first.  Returns
    vertex -> clockwise list of (node index, sign)."""
    users: dict = {}
    for j, (C, i) in enumerate(forest.nodes):
        for a in C.arcs:
            users.setdefault(a, []).append(j)
    order: dict = {}
    for a, js in users.items():
        left = [j for j in js if forest.orientation[j] == CCW]
        right = [j for j in js if forest.orientation[j] != CCW]

        def size(j):
            return len(cycle_region(G, forest.nodes[j][0]).interior_faces)

        left.sort(key=lambda j: (size(j), -forest.nodes[j][1]))
        right.sort(key=lambda j: (-size(j), forest.nodes[j][1]))
        order[a] = left + right
    out: dict = {}
    for v in G.vertices:
        seq = []
        for a, s in G.rotation[v]:
            lst = order.get(a, [])
            seq.extend((j, s) for j in (lst if s == 1 else reversed(lst)))
        out[v] = seq
    return out


def check_consecutive_half_arcs(G: PlaneDigraph, forest: LayerForest, part: list) -> list:
    """Violations of: for half-arcs e, e' consecutive within one part, the
    signed sum over the half-arcs strictly between them is (mu(e)+mu(e'))/2."""
    bad = []
    rot = split_rotation(G, forest)
    for v, seq in rot.items():
        d = len(seq)
        for p in (1, 2):
            idx = [t for t, (j, _s) in enumerate(seq) if part[j] == p]
            if len(idx) < 2:
                continue
            for u in range(len(idx)):
                i, k = idx[u], idx[(u + 1) % len(idx)]
                between = 0
                t = (i + 1) % d
                while t != k:
                    between += seq[t][1]
                    t = (t + 1) % d
                if 2 * between != seq[i][1] + seq[k][1]:
                    bad.append((v, p, i, k))
    return bad


def parity_partition(G: PlaneDigraph, V: Valuation, *, check: bool = True) -> tuple:
    """(V1, V2): V1 takes copies on even layers oriented clockwise and on
    odd layers oriented counterclockwise; V2 the rest."""
    forest = layer_forest(G, V)
    part = []
    for j in range(len(forest.nodes)):
        even = forest.layer[j] % 2 == 0
        cw = forest.orientation[j] != CCW
        part.append(1 if even == cw else 2)
    if check:
        bad = check_consecutive_half_arcs(G, forest, part)
        if bad:
            raise CheckFailure(f"consecutive half-arc identity fails at {len(bad)} places, first {bad[0]!r}")
    v1: dict = {}
    v2: dict = {}
    for j, (C, _i) in enumerate(forest.nodes):
        tgt = v1 if part[j] == 1 else v2
        tgt[C] = tgt.get(C, 0) + 1
    return Valuation(G, v1), Valuation(G, v2)


# ----------------------------------------------------------------------
# multiplicity reduction


def normal_valuation(G: PlaneDigraph, N: NormalSet | Iterable[DiCycle]) -> Valuation:
    cycles = N.cycles if isinstance(N, NormalSet) else N
    return Valuation.from_cycles(G, [make_cycle(G, C.arcs) for C in cycles])


def reduce_multiplicity(G: PlaneDigraph, V: Valuation, k: int, *, enforce: bool = True, cmax: int | None = None) -> Valuation:
    """One halving step: mult <= k becomes mult <= floor((k+1)/2).

    Even k: the heavier half of the parity partition.  Odd k: add a
    maximum normal valuation, re-laminarize, then halve with k+1.  With
    ``enforce`` the weight hypothesis #V >= k*|C_max|+1 is checked;
    multiplicity and laminarity are always checked."""
    if k < 2:
        raise HypothesisViolated("k must be at least 2")
    if not is_laminar(G, V.support):
        raise HypothesisViolated("valuation must be laminar")
    mu = multiplicity(G, V)
    if mu > k:
        raise HypothesisViolated(f"multiplicity {mu} exceeds k = {k}")
    if cmax is None:
        cmax = len(max_normal_set(G))
    if enforce:
        if mu < 2:
            raise HypothesisViolated(f"multiplicity {mu} is below 2")
        if V.weight < k * cmax + 1:
            raise HypothesisViolated(f"weight {V.weight} below k*|C_max|+1 = {k * cmax + 1}")
    if k % 2:
        W = laminarize_valuation(G, V + normal_valuation(G, max_normal_set(G)))
        return reduce_multiplicity(G, W, k + 1, enforce=False, cmax=cmax)
    V1, V2 = parity_partition(G, V)
    return V1 if V1.weight >= V2.weight else V2


def reduce_to_normal(G: PlaneDigraph, V: Valuation, k: int) -> list:
    """Iterate the halving step until multiplicity <= 1.  Returns the list
    of (k_i, valuation) pairs, starting with the input."""
    steps = [(k, V)]
    cmax = len(max_normal_set(G))
    while k >= 2 and multiplicity(G, V) >= 2:
        V = reduce_multiplicity(G, V, k, enforce=False, cmax=cmax)
        k = (k + 1) // 2
        steps.append((k, V))
    return steps


# ----------------------------------------------------------------------
# essential vertices


def _cmax_without(G: PlaneDigraph, v) -> int:
    return len(max_normal_set(G.delete_vertices([v])))


def essential_vertices(G: PlaneDigraph, method: str = "deletion") -> set:
    """Vertices on some cycle of every maximum normal set.

    ``deletion``: v is essential iff deleting it lowers the maximum normal
    set size (a normal set avoiding v is a normal set of G - v and back).
    ``enumerate``: intersect the vertex supports of all maximum normal
    sets."""
    best = len(max_normal_set(G))
    if best == 0:
        return set()
    if method == "enumerate":
        sets = normal_sets_of_size(G, best)
        out = None
        for S in sets:
            vs = set(S.vertices)
            out = vs if out is None else out & vs
        return out or set()
    return {v for v in G.vertices if _cmax_without(G, v) < best}


def fvs_via_normal(G: PlaneDigraph) -> list:
    """Feedback set built by repeatedly deleting an essential vertex of a
    shortest remaining cycle; its size is at most |C_max(G)|."""
    out = []
    H = G
    while True:
        cycles = enumerate_dicycles(H)
        if not cycles:
            break
        D = min(cycles, key=lambda C: (len(C), _ckey(C)))
        best = len(max_normal_set(H))
        pick = None
        for v in sorted(D.vertices, key=sort_key):
            if _cmax_without(H, v) < best:
                pick = v
                break
        if pick is None:
            raise CheckFailure(f"cycle {D.vertices!r} has no essential vertex")
        out.append(pick)
        H = H.delete_vertices([pick])
    assert is_acyclic(G, out)
    return out


def big_laminar_from_cycle(G: PlaneDigraph, D: DiCycle, *, check: bool = True) -> tuple:
    """Sum of maximum normal sets avoiding each vertex of D, plus D itself,
    laminarized.  Returns (valuation, k = |D|).  With ``check`` every
    vertex of D must be non-essential; without it, the largest normal set
    of G - v_i stands in for N_i."""
    best = len(max_normal_set(G))
    total = Valuation.from_cycles(G, [D])
    for v in D.vertices:
        Hv = G.delete_vertices([v])
        N = max_normal_set(Hv)
        if check and len(N) < best:
            raise EssentialVertexOnD(f"vertex {v!r} of the cycle is essential")
        total = total + normal_valuation(G, N)
    return laminarize_valuation(G, total), len(D)
