"""Coatings of plane skeletons.

Every skeleton vertex ``v`` becomes a clockwise directed cycle ``C_v``.  For
an edge ``e = uv`` a vertex of ``C_u`` and a vertex of ``C_v`` are merged
into the link vertex ``s_e``; two link arcs then run from the in-neighbour
of ``s_e`` on one side to its out-neighbour on the other.  The coating
function ``h`` gives the number of plain vertices in every corner.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import (
    BudgetExhausted,
    LoopTooTight,
    NonFacialRing,
    NonPositiveH,
    NotFeedbackSet,
    NotGCoating,
)
from .fvs import fvs_exact, is_acyclic
from .plane import LEFT, RIGHT, PlaneDigraph, digirth, distances_from, sort_key
from .skeleton import Skeleton, half_token


def _corner_vid(v, h, j: int) -> str:
    return f"c{v}.{half_token(h) if h is not None else 'o'}.{j}"


def _link_vid(e) -> str:
    return f"s{e}"


def _carc(t, h) -> str:
    return f"{t}>{h}"


@dataclass
class Coating:
    """A built coating with its provenance maps."""

    skeleton: Skeleton
    h: dict
    graph: PlaneDigraph
    vertex_cycle: dict  # skeleton vertex -> H vertices of C_v, clockwise
    link_vertex: dict  # edge -> link vertex
    link_arcs: dict  # edge -> (arc a->b, arc b'->a')
    corner_run: dict  # corner -> H vertices strictly inside it
    owner: dict = field(default_factory=dict)  # H vertex -> corner or ("link", e)

    @property
    def n(self) -> int:
        return self.graph.n

    def cycle_length(self, v) -> int:
        return len(self.vertex_cycle[v])

    @property
    def g(self) -> int | None:
        """Common length of the vertex cycles, if they all agree."""
        lens = {len(c) for c in self.vertex_cycle.values()}
        return lens.pop() if len(lens) == 1 else None

    def face_cycle(self, fkey) -> list:
        """H vertices of C_f along the boundary walk of ``fkey``."""
        out = []
        for c in self.skeleton.face_corners(fkey):
            out.extend(self.corner_run[c])
        return out

    def face_cycles(self) -> dict:
        return {f: self.face_cycle(f) for f in self.skeleton.face_keys()}

    def is_link(self, x) -> bool:
        return isinstance(self.owner.get(x), tuple) and self.owner[x][0] == "link"

    def link_vertices(self) -> set:
        return set(self.link_vertex.values())

    def link_neighbours(self, e) -> dict:
        """a, a' on the first endpoint's cycle and b', b on the second."""
        L0, L1 = self.link_arcs[e]
        a, b = self.graph.arcs[L0]
        b2, a2 = self.graph.arcs[L1]
        return {"a": a, "a'": a2, "b'": b2, "b": b}


def validate_coating_function(S: Skeleton, h: Mapping) -> dict:
    out = {}
    for c in S.corner_keys():
        if c not in h:
            raise NonPositiveH(f"coating function misses corner {c!r}")
        val = h[c]
        if int(val) != val or val < 1:
            raise NonPositiveH(f"h{c!r} = {val!r} is not a positive integer")
        out[c] = int(val)
    return out


def build_coating(S: Skeleton, h: Mapping, *, validate: bool = True) -> Coating:
    """Coating of ``S`` with coating function ``h`` (corner -> count)."""
    h = validate_coating_function(S, h)
    emb = S.emb
    cycles: dict = {}
    runs: dict = {}
    owner: dict = {}
    pos: dict = {}  # half-edge -> (index in C_v, vertex)
    for v in S.vertices:
        seq = emb.rotation[v]
        C: list = []
        if not seq:
            run = [_corner_vid(v, None, j) for j in range(h[(v, None)])]
            runs[(v, None)] = run
            for x in run:
                owner[x] = (v, None)
            C.extend(run)
        for hh in seq:
            s = _link_vid(hh[0])
            pos[hh] = (len(C), v)
            C.append(s)
            owner[s] = ("link", hh[0])
            run = [_corner_vid(v, hh, j) for j in range(h[(v, hh)])]
            runs[(v, hh)] = run
            for x in run:
                owner[x] = (v, hh)
            C.extend(run)
        cycles[v] = C
    for e, (u, w) in S.edges.items():
        if u == w:
            C = cycles[u]
            i, j = pos[(e, 1)][0], pos[(e, -1)][0]
            d = abs(i - j)
            if min(d, len(C) - d) < 3:
                raise LoopTooTight(f"loop {e!r}: merged vertices at distance {min(d, len(C) - d)} < 3")

    def nbrs(hh):
        i, v = pos[hh]
        C = cycles[v]
        return C[i - 1], C[(i + 1) % len(C)]

    arcs: dict = {}
    for v, C in cycles.items():
        for i, x in enumerate(C):
            y = C[(i + 1) % len(C)]
            arcs[_carc(x, y)] = (x, y)
    link_arcs: dict = {}
    link_in: dict = {}  # half-edge p -> link arc entering the out-neighbour of p
    link_out: dict = {}  # half-edge p -> link arc leaving the in-neighbour of p
    for e in S.edges:
        a, a2 = nbrs((e, 1))
        b2, b = nbrs((e, -1))
        L0, L1 = f"L{e}.0", f"L{e}.1"
        arcs[L0] = (a, b)
        arcs[L1] = (b2, a2)
        link_arcs[e] = (L0, L1)
        link_out[(e, 1)], link_in[(e, 1)] = L0, L1
        link_out[(e, -1)], link_in[(e, -1)] = L1, L0

    rot: dict = {}
    for v, C in cycles.items():
        seq = emb.rotation[v]
        L = len(C)
        for hh in seq:
            i, _ = pos[hh]
            s = C[i]
            e = hh[0]
            if hh[1] == 1:
                a, a2 = nbrs((e, 1))
                b2, b = nbrs((e, -1))
                rot[s] = [(_carc(a, s), -1), (_carc(s, b), 1), (_carc(b2, s), -1), (_carc(s, a2), 1)]
        at = {x: i for i, x in enumerate(C)}
        for c in S.vertex_corners(v):
            run = runs[c]
            k = len(run)
            for j, x in enumerate(run):
                prev = run[j - 1] if j > 0 else C[at[x] - 1]
                nxt = run[j + 1] if j + 1 < k else C[(at[x] + 1) % L]
                r = [(_carc(prev, x), -1)]
                if c[1] is not None:
                    if j == 0:
                        r.append((link_in[c[1]], -1))
                    if j == k - 1:
                        r.append((link_out[emb.cw_next(c[1])], 1))
                r.append((_carc(x, nxt), 1))
                rot[x] = r
    outer = _coating_outer(S, runs, link_out)
    link_vertex = {e: _link_vid(e) for e in S.edges}
    H = PlaneDigraph(list(owner), arcs, rot, outer, validate=validate)
    return Coating(S, h, H, cycles, link_vertex, link_arcs, runs, owner)


def _coating_outer(S: Skeleton, runs: dict, link_out: dict):
    emb = S.emb
    if S.outer is not None:
        d = emb.faces[emb.outer_face()].boundary[0]
        c = (emb.half_vertex(d), emb.cw_prev(d))
    elif S.vertices:
        c = S.vertex_corners(S.vertices[0])[0]
    else:
        return None
    run = runs[c]
    if len(run) >= 2:
        return (_carc(run[0], run[1]), LEFT)
    if c[1] is None:
        return (_carc(run[0], run[0]), LEFT)
    return (link_out[emb.cw_next(c[1])], LEFT)


# ----------------------------------------------------------------------
# structural audits


def coating_stats_audit(C: Coating, *, fvs_budget: int | None = None) -> dict:
    """Check the structural identities of a coating; list violations."""
    S, H = C.skeleton, C.graph
    nG, mG, fG = S.n, S.m, S.face_count()
    report: dict = {"violations": []}

    def check(name, ok, detail):
        report[name] = {"ok": bool(ok), **detail}
        if not ok:
            report["violations"].append(name)

    sum_h = sum(C.h.values())
    check("sum_h", sum_h == H.n - mG, {"sum_h": sum_h, "n_H_minus_m_G": H.n - mG})
    fH = H.face_count()
    detail = {"f_H": fH, "f_G+n_G+2m_G": fG + nG + 2 * mG}
    ok = fH == fG + nG + 2 * mG
    if S.is_connected() and nG:
        detail["2+3m_G"] = 2 + 3 * mG
        ok = ok and fH == 2 + 3 * mG
    check("ii_faces", ok, detail)
    sum_v = sum(len(c) for c in C.vertex_cycle.values())
    sum_f = sum(len(C.face_cycle(f)) for f in S.face_keys())
    check(
        "iii_sizes",
        H.n == sum_v - mG == sum_f + mG,
        {"n_H": H.n, "sum_Cv_minus_m": sum_v - mG, "sum_Cf_plus_m": sum_f + mG},
    )
    g = C.g
    if g is not None:
        detail = {"g": g, "n_H": H.n, "g*n_G-m_G": g * nG - mG}
        ok = H.n == g * nG - mG
        if S.is_connected() and nG:
            detail["m_H"] = H.m
            detail["g*n_G+2m_G"] = g * nG + 2 * mG
            ok = ok and H.m == g * nG + 2 * mG
        check("iv_g_coating", ok, detail)
        check("v_degree", g >= 2 * S.max_degree(), {"g": g, "2*Delta": 2 * S.max_degree()})
    try:
        res = fvs_exact(H, budget=fvs_budget)
        report["fvs"] = res.size
        check("i_fvs_vs_faces", res.size >= fG, {"fvs": res.size, "f_G": fG})
    except Exception as exc:  # budget exhaustion leaves (i) unchecked
        report["i_fvs_vs_faces"] = {"ok": None, "skipped": type(exc).__name__}
    return report


def strip_link_vertices_from_fvs(C: Coating, F) -> set:
    """Replace link vertices of a minimum feedback set by in-neighbours."""
    H = C.graph
    F = set(F)
    if not is_acyclic(H, F):
        raise NotFeedbackSet("the given set leaves a directed cycle")
    links = C.link_vertices()
    for s in sorted(F & links, key=sort_key):
        ins = sorted(set(H.predecessors(s)), key=sort_key)
        for a in ins:
            cand = (F - {s}) | {a}
            if is_acyclic(H, cand):
                F = cand
                break
        else:
            raise NotFeedbackSet(f"no in-neighbour swap works at {s!r}; F is not minimum")
    return F


# ----------------------------------------------------------------------
# skeleton operations mirrored on the coating


def contract_edge(S: Skeleton, h: Mapping, e) -> tuple:
    """Skeleton G/e and the coating function of H - s_e on it.

    For a loop the rotation at its vertex splits into the two sides of the
    loop and the skeleton falls apart into G_1 and G_2; the vertex keeps its
    name on the side of ``(e, +1)`` and the other side is ``"<v>~"``."""
    emb = S.emb
    u, w = S.edges[e]
    p0, p1 = (e, 1), (e, -1)

    def after(v, start, stop):
        # half-edges strictly between start and stop, clockwise
        out = []
        x = emb.cw_next(start)
        while x != stop:
            out.append(x)
            x = emb.cw_next(x)
        return out

    if u != w:
        # C_u from after s_e, then C_w from after s_e, closed by the link arcs
        pieces = [[(u, p0)] + [(u, x) for x in after(u, p0, p0)], [(w, p1)] + [(w, x) for x in after(w, p1, p1)]]
        groups = {u: pieces[0] + pieces[1]}
    else:
        side1 = after(u, p0, p1)
        side2 = after(u, p1, p0)
        groups = {u: [(u, p0)] + [(u, x) for x in side1], f"{u}~": [(u, p1)] + [(u, x) for x in side2]}
    drop = {w} if u != w else set()
    verts = [x for x in S.vertices if x not in drop and x != u] + list(groups)
    rot = {v: list(seq) for v, seq in S.rotation.items() if v not in (u, w)}
    new_h = {c: val for c, val in h.items() if c[0] not in (u, w)}
    where: dict = {}
    for x, corners in groups.items():
        # corners in cycle order; a run after a removed half-edge joins the
        # corner before it, cyclically
        seq: list = []
        total: dict = {}
        carry = 0
        for c in corners:
            if c[1] in (p0, p1):
                if seq:
                    total[seq[-1]] += h[c]
                else:
                    carry += h[c]
            else:
                seq.append(c[1])
                total[c[1]] = h[c]
        rot[x] = seq
        if not seq:
            new_h[(x, None)] = carry
            continue
        total[seq[-1]] += carry
        for hh in seq:
            where[hh] = x
            new_h[(x, hh)] = total[hh]
    edges: dict = {}
    for f, (a, b) in S.edges.items():
        if f == e:
            continue
        edges[f] = (where.get((f, 1), a), where.get((f, -1), b))
    outer = S.outer if S.outer is not None and S.outer[0] != e else None
    S2 = Skeleton(verts, edges, rot, None, validate=False)
    S2 = Skeleton(verts, edges, rot, outer if outer is not None else (_any_outer(S2) if S2.m else None))
    return S2, new_h


def _any_outer(S: Skeleton):
    e = sorted(S.edges, key=sort_key)[0]
    return (e, LEFT)


def delete_link_vertex(C: Coating, e) -> tuple:
    """H - s_e as a coating of the contracted skeleton.

    Returns ``(coating, H_minus_s)``; the coating is rebuilt from the
    contracted skeleton and ``same_coating`` compares the two digraphs."""
    S2, h2 = contract_edge(C.skeleton, C.h, e)
    C2 = build_coating(S2, h2)
    Hs = C.graph.delete_vertices([C.link_vertex[e]])
    return C2, Hs


def same_digraph(A: PlaneDigraph, B: PlaneDigraph) -> bool:
    """Isomorphism test for plane digraphs up to relabelling, via rotation
    preserving maps started from every vertex of one component."""
    if A.n != B.n or A.m != B.m:
        return False
    if not A.m:
        return True
    if sorted(len(c) for c in A.components()) != sorted(len(c) for c in B.components()):
        return False
    return _canonical(A) == _canonical(B)


def _canonical(G: PlaneDigraph) -> tuple:
    """Smallest code over all start half-arcs of each component's rotation
    traversal; components sorted."""
    comps = []
    for comp in G.components():
        best = None
        for v in comp:
            for start in G.rotation[v]:
                code = _traverse(G, start)
                if best is None or code < best:
                    best = code
        if best is None:
            best = ()
        comps.append(best)
    comps.sort()
    return tuple(comps)


def _traverse(G: PlaneDigraph, start) -> tuple:
    """Breadth-first traversal numbering vertices in rotation order."""
    num: dict = {}
    v0 = G.half_vertex(start)
    num[v0] = 0
    queue = [(v0, start)]
    code = []
    qi = 0
    while qi < len(queue):
        v, first = queue[qi]
        qi += 1
        seq = G.rotation[v]
        k = seq.index(first)
        order = seq[k:] + seq[:k]
        row = []
        for a, s in order:
            t, hd = G.arcs[a]
            w = hd if s == 1 else t
            if w not in num:
                num[w] = len(num)
                queue.append((w, (a, -s)))
            row.append((num[w], s))
        code.append(tuple(row))
    return tuple(code)


def delete_skeleton_edge(S: Skeleton, h: Mapping, e) -> tuple:
    """Skeleton G - e and the coating function of the coating obtained by
    splitting s_e and dropping its link arcs."""
    emb = S.emb
    u, w = S.edges[e]
    edges = {x: ends for x, ends in S.edges.items() if x != e}
    rot = {v: [hh for hh in seq if hh[0] != e] for v, seq in S.rotation.items()}
    new_h: dict = {}
    skip = set()
    for p in ((e, 1), (e, -1)):
        v = emb.half_vertex(p)
        prev = emb.cw_prev(p)
        # corners (v, prev) and (v, p) merge around the freed half-edge
        if prev == p:
            new_h[(v, None)] = h[(v, p)] + 1
        elif prev[0] == e:
            # a loop whose two half-edges are consecutive
            continue
        else:
            new_h[(v, prev)] = new_h.get((v, prev), 0) + h[(v, prev)] + 1 + h[(v, p)]
        skip.add((v, p))
        skip.add((v, prev))
    if u == w:
        # a loop: merge the two sides of u separately
        new_h = {}
        seq = list(emb.rotation[u])
        rest = [x for x in seq if x[0] != e]
        if not rest:
            new_h[(u, None)] = h[(u, (e, 1))] + h[(u, (e, -1))] + 2
        else:
            for x in rest:
                total = h[(u, x)]
                y = emb.cw_next(x)
                while y[0] == e:
                    total += 1 + h[(u, y)]
                    y = emb.cw_next(y)
                new_h[(u, x)] = total
        skip = {(u, x) for x in seq}
    for c, val in h.items():
        if c not in skip and c[0] is not None and c not in new_h:
            new_h[c] = val
    outer = S.outer if S.outer is None or S.outer[0] != e else None
    S2 = Skeleton(S.vertices, edges, rot, None, validate=False)
    S2 = Skeleton(S.vertices, edges, rot, outer if outer is not None else (_any_outer(S2) if S2.m else None))
    return S2, new_h


def delete_skeleton_vertex(S: Skeleton, h: Mapping, v) -> tuple:
    """Skeleton G - v and the coating function after removing the plain
    vertices of C_v: each link vertex on C_v joins its other cycle."""
    emb = S.emb
    edges = {x: ends for x, ends in S.edges.items() if v not in ends}
    rot = {w: [hh for hh in seq if v not in S.edges[hh[0]]] for w, seq in S.rotation.items() if w != v}
    new_h: dict = {}
    for w in S.vertices:
        if w == v:
            continue
        seq = list(emb.rotation[w])
        rest = [x for x in seq if v not in S.edges[x[0]]]
        if len(rest) == len(seq):
            for c in S.vertex_corners(w):
                new_h[c] = h[c]
            continue
        if not rest:
            new_h[(w, None)] = sum(h[(w, x)] for x in seq) + len(seq)
            continue
        for x in rest:
            total = h[(w, x)]
            y = emb.cw_next(x)
            while y not in rest:
                total += 1 + h[(w, y)]
                y = emb.cw_next(y)
            new_h[(w, x)] = total
    verts = [w for w in S.vertices if w != v]
    outer = S.outer if S.outer is not None and S.outer[0] in edges else None
    S2 = Skeleton(verts, edges, rot, None, validate=False)
    S2 = Skeleton(verts, edges, rot, outer if outer is not None else (_any_outer(S2) if S2.m else None))
    return S2, new_h


def skeleton_subgraph_coating(C: Coating, *, edge=None, vertex=None) -> dict:
    """Coating of G - e or G - v obtained as a subgraph of H.

    Returns the rebuilt coating, the subgraph of H it must equal, whether
    the two agree up to relabelling, and both digirths."""
    H = C.graph
    if (edge is None) == (vertex is None):
        raise ValueError("give exactly one of edge or vertex")
    if edge is not None:
        S2, h2 = delete_skeleton_edge(C.skeleton, C.h, edge)
        s = C.link_vertex[edge]
        L0, L1 = C.link_arcs[edge]
        keep = [a for a in H.arcs if a not in (L0, L1)]
        sub = _split_vertex(H.arc_subgraph(keep, H.vertices), s)
    else:
        S2, h2 = delete_skeleton_vertex(C.skeleton, C.h, vertex)
        # plain vertices of C_v and link vertices of loops at v
        drop = {x for x in C.vertex_cycle[vertex] if not C.is_link(x) or C.skeleton.edges[C.owner[x][1]] == (vertex, vertex)}
        sub = H.delete_vertices(drop)
    C2 = build_coating(S2, h2)
    return {
        "coating": C2,
        "subgraph": sub,
        "equal": same_digraph(C2.graph, sub),
        "digirth_before": digirth(H),
        "digirth_after": digirth(C2.graph),
    }


def _split_vertex(G: PlaneDigraph, s) -> PlaneDigraph:
    """Split a vertex with in/out/in/out rotation into two degree-2 vertices."""
    seq = list(G.rotation[s])
    arcs = dict(G.arcs)
    rot = {v: list(r) for v, r in G.rotation.items()}
    if len(seq) != 4:
        return G
    # pairs (in, out) that are consecutive counter-clockwise belong together
    s1, s2 = f"{s}#1", f"{s}#2"
    groups = ([seq[3], seq[0]], [seq[1], seq[2]])
    for new, grp in zip((s1, s2), groups):
        for a, sg in grp:
            t, hd = arcs[a]
            arcs[a] = (new if sg == 1 else t, new if sg == -1 else hd)
        rot[new] = grp
    del rot[s]
    verts = [v for v in G.vertices if v != s] + [s1, s2]
    return PlaneDigraph(verts, arcs, rot, G.outer, validate=False)


# ----------------------------------------------------------------------
# feedback vertex sets of coatings


def audit_coating_fvs(C: Coating, *, budget: int | None = None) -> dict:
    S, H = C.skeleton, C.graph
    dg = digirth(H)
    g = C.g
    res = fvs_exact(H, budget=budget)
    fvs = res.size
    nH, nG, mG = H.n, S.n, S.m
    out = {
        "digirth": dg,
        "g": g,
        "fvs": fvs,
        "n_H": nH,
        "n_G": nG,
        "m_G": mG,
        "checks": {},
    }
    checks = out["checks"]
    checks["fvs_ge_n_G"] = fvs >= nG
    if dg is not None:
        checks["normal_bound"] = dg * fvs <= nH + mG
        checks["low_digirth_bound"] = 3 * dg * fvs <= 4 * nH
    if g is not None:
        checks["g_coating_bound"] = Fraction(fvs) <= Fraction(nH) / (Fraction(g) - Fraction(g // 2, 2))
    if g is not None and dg == g:
        checks["fvs_eq_n_G"] = fvs == nG
    out["ok"] = all(checks.values())
    return out


def compute_fvs_formula(C: Coating, alpha, beta) -> Fraction:
    """(n_H - beta) / (g - alpha) for a g-coating of digirth g whose skeleton
    has m = alpha * n - beta; asserted integral and equal to n_G."""
    g = C.g
    if g is None:
        raise NotGCoating("vertex cycles have different lengths")
    alpha, beta = Fraction(alpha), Fraction(beta)
    if alpha == g:
        raise ValueError("alpha must differ from g")
    S = C.skeleton
    if Fraction(S.m) != alpha * S.n - beta:
        raise ValueError(f"m_G = {S.m} is not {alpha} * {S.n} - {beta}")
    val = (Fraction(C.graph.n) - beta) / (g - alpha)
    if val.denominator != 1 or val != S.n:
        raise NotGCoating(f"formula gives {val}, expected n_G = {S.n}")
    return val


def link_free_min_fvs(C: Coating, *, budget: int | None = None) -> set:
    res = fvs_exact(C.graph, budget=budget)
    return strip_link_vertices_from_fvs(C, res.witness)


def extend_digirth(C: Coating, r: int, *, F=None, budget: int | None = None) -> Coating:
    """(g + r)-coating obtained by adding r to the corners of the vertices
    of a link-free minimum feedback set."""
    g = C.g
    if g is None or digirth(C.graph) != g:
        raise NotGCoating("extension needs a g-coating of digirth g")
    if r < 0:
        raise ValueError("r must be non-negative")
    if r == 0:
        return C
    if F is None:
        F = link_free_min_fvs(C, budget=budget)
    h2 = dict(C.h)
    for x in F:
        c = C.owner[x]
        if c[0] == "link":
            raise NotFeedbackSet("feedback set contains a link vertex")
        h2[c] += r
    # each F vertex sits on a different vertex cycle, so every C_v grows by r
    return build_coating(C.skeleton, h2)


# ----------------------------------------------------------------------
# recursive families


@dataclass
class RecursiveFamily:
    """G_1 with its two facial rings and a coating function on G_1."""

    G1: Skeleton
    h1: dict
    ring_in: tuple  # vertices u_1..u_l of C_in, in order
    ring_out: tuple  # vertices v_1..v_l of C_out, matched to ring_in
    name: str = ""


def _ring_edges(S: Skeleton, ring: tuple) -> list:
    out = []
    L = len(ring)
    for i in range(L):
        a, b = ring[i], ring[(i + 1) % L]
        found = None
        for e, (x, y) in S.edges.items():
            if {x, y} == {a, b}:
                found = e
                break
        if found is None:
            raise NonFacialRing(f"ring vertices {a!r}, {b!r} are not adjacent")
        out.append(found)
    return out


def _ring_face(S: Skeleton, ring: tuple) -> int:
    edges = set(_ring_edges(S, ring))
    for fi, f in enumerate(S.emb.faces):
        if {d[0] for d in f.boundary} == edges and len(f.boundary) == len(ring):
            return fi
    raise NonFacialRing(f"ring {ring!r} does not bound a face")


def build_recursive_family(fam: RecursiveFamily, k: int, *, coords=None) -> tuple:
    """(G_k, h_k) for the chain of k copies of G_1 glued ring to ring.

    The copy ``i`` vertex ``x`` is named ``(i, x)``; C_out of copy i is
    identified with C_in of copy i + 1 (named by copy i + 1).  For k = 0
    the bare ring is returned with the C_in and C_out face values."""
    S1, h1 = fam.G1, fam.h1
    if len(fam.ring_in) != len(fam.ring_out) or set(fam.ring_in) & set(fam.ring_out):
        raise NonFacialRing("C_in and C_out must be disjoint rings of equal length")
    fin, fout = _ring_face(S1, fam.ring_in), _ring_face(S1, fam.ring_out)
    l = len(fam.ring_in)
    if k == 0:
        S0 = Skeleton.from_digraph(S1.emb.arc_subgraph(_ring_edges(S1, fam.ring_in)))
        h0 = {}
        for c in S0.corner_keys():
            x, hh = c
            if S1.corner_face(c) == fin:
                h0[c] = h1[c]
            else:
                xo = fam.ring_out[fam.ring_in.index(x)]
                h0[c] = h1[_ring_corner(S1, fout, xo)]
        return S0, h0
    out_to_in = {fam.ring_out[i]: fam.ring_in[i] for i in range(l)}

    def name(i, x):
        # C_out vertices of copy i are the C_in vertices of copy i + 1
        if x in out_to_in and i < k:
            return (i + 1, out_to_in[x])
        return (i, x)

    ring_in_edges = set(_ring_edges(S1, fam.ring_in))
    ring_out_edges = set(_ring_edges(S1, fam.ring_out))
    emb = S1.emb
    verts: set = set()
    edges: dict = {}
    for i in range(1, k + 1):
        for x in S1.vertices:
            verts.add(name(i, x))
        for e, (x, y) in S1.edges.items():
            if e in ring_out_edges and i < k:
                continue
            edges[(i, e)] = (name(i, x), name(i, y))
    # map copy-i C_out edges onto copy i+1 C_in edges
    out_edge_to_in: dict = {}
    for eo in ring_out_edges:
        x, y = S1.edges[eo]
        xi, yi = out_to_in[x], out_to_in[y]
        for ei in ring_in_edges:
            if set(S1.edges[ei]) == {xi, yi}:
                out_edge_to_in[eo] = (ei, S1.edges[ei][0] == xi)
    rot: dict = {v: [] for v in verts}

    def hname(i, hh):
        e, s = hh
        if e in ring_out_edges and i < k:
            ei, same = out_edge_to_in[e]
            return ((i + 1, ei), s if same else -s)
        return ((i, e), s)

    for i in range(1, k + 1):
        for x in S1.vertices:
            v = name(i, x)
            seq = list(emb.rotation[x])
            if x in out_to_in and i < k:
                continue  # handled when visiting copy i + 1
            if x in fam.ring_in and i > 1:
                # merge with the C_out vertex of copy i - 1
                xo = fam.ring_out[fam.ring_in.index(x)]
                seq_out = list(emb.rotation[xo])
                rot[v] = _merge_ring_rotation(S1, x, seq, fin, xo, seq_out, fout, i, hname)
            else:
                rot[v] = [hname(i, hh) for hh in seq]
    d = emb.faces[fout].boundary[0]
    outer = (hname(k, d)[0], LEFT if hname(k, d)[1] == 1 else RIGHT)
    Sk = Skeleton(verts, edges, rot, outer)
    hk: dict = {}
    for i in range(1, k + 1):
        for c, val in h1.items():
            x, hh = c
            f = S1.corner_face(c)
            if f == fin and i > 1:
                continue
            if f == fout and i < k:
                continue
            hk[(name(i, x), hname(i, hh))] = val
    return Sk, hk


def _merge_ring_rotation(S1, x, seq_in, fin, xo, seq_out, fout, i, hname):
    """Rotation at a glued ring vertex: the half-edges of copy i at its C_in
    vertex x with the C_in face replaced by the non-ring half-edges of copy
    i - 1 at its C_out vertex xo."""
    emb = S1.emb
    # at x (copy i), the C_in face corner lies between two ring half-edges
    k_in = [j for j, hh in enumerate(seq_in) if emb.face_of(emb.cw_next(hh)) == fin]
    k_out = [j for j, hh in enumerate(seq_out) if emb.face_of(emb.cw_next(hh)) == fout]
    if len(k_in) != 1 or len(k_out) != 1:
        raise NonFacialRing("ring vertex meets its ring face more than once")
    j_in, j_out = k_in[0], k_out[0]
    # copy i: start right after the C_in face corner, i.e. from seq_in[j_in + 1]
    # through seq_in[j_in] (the ring half-edge before the corner)
    part_i = [seq_in[(j_in + 1 + t) % len(seq_in)] for t in range(len(seq_in))]
    # part_i begins and ends with the two ring half-edges of C_in
    part_o = [seq_out[(j_out + 1 + t) % len(seq_out)] for t in range(len(seq_out))]
    # the C_out ring half-edges of copy i - 1 coincide with part_i's ends
    inner = part_o[1:-1]
    return [hname(i, hh) for hh in part_i] + [hname(i - 1, hh) for hh in inner]


def _ring_corner(S1: Skeleton, fi: int, x) -> tuple:
    emb = S1.emb
    for hh in emb.rotation[x]:
        if emb.face_of(emb.cw_next(hh)) == fi:
            return (x, hh)
    raise NonFacialRing(f"{x!r} is not on face {fi}")


def recursive_corner_classes(fam: RecursiveFamily, k: int) -> dict:
    """Corner of G_k -> the corner of G_1 it copies."""
    ident = RecursiveFamily(fam.G1, {c: c for c in fam.G1.corner_keys()}, fam.ring_in, fam.ring_out, fam.name)
    return build_recursive_family(ident, k)[1]


def verify_recursive_digirth(fam: RecursiveFamily, g: int) -> dict:
    """Conditions for gluing copies: H_0 and H_1 of digirth g, and link
    vertices of the ring no closer in H_1 than in H_0.  ``ok`` certifies
    digirth g for every H_k."""
    S0, h0 = build_recursive_family(fam, 0)
    C0 = build_coating(S0, h0)
    C1 = build_coating(fam.G1, fam.h1)
    ring = _ring_edges(fam.G1, fam.ring_in)
    d0, d1 = digirth(C0.graph), digirth(C1.graph)
    t0 = link_distance_table(C0, ring)
    t1 = link_distance_table(C1, ring)
    dist_ok = all(
        (b is None and a is None) or (a is not None and (b is None or b >= a)) for r0, r1 in zip(t0, t1) for a, b in zip(r0, r1)
    )
    out = {
        "digirth_H0": d0,
        "digirth_H1": d1,
        "table_H0": t0,
        "table_H1": t1,
        "distances_ok": dist_ok,
        "n_H0": C0.graph.n,
        "n_H1": C1.graph.n,
    }
    out["ok"] = d0 == g and d1 == g and dist_ok
    return out


def link_distance_table(C: Coating, ring_edges) -> list:
    """d(y, z) for link vertices y, z of the given edges; rows z, columns y."""
    H = C.graph
    ys = [C.link_vertex[e] for e in ring_edges]
    dist = {y: distances_from(H, y) for y in ys}
    return [[dist[y].get(z) for y in ys] for z in ys]


# ----------------------------------------------------------------------
# coating-function search


@dataclass
class SearchStats:
    nodes: int = 0
    rejected_digirth: int = 0


def search_coating_function(
    S: Skeleton,
    g: int,
    perfect: bool = False,
    budget: int = 10**6,
    *,
    classes: Mapping | None = None,
    vertex_target: Mapping | None = None,
    face_target: Mapping | None = None,
    fixed: Mapping | None = None,
    accept=None,
    stats: SearchStats | None = None,
    check_digirth: bool = True,
):
    """First coating function (in a deterministic order) of a g-coating of
    ``S`` whose coating has digirth g; ``None`` when none exists.

    Corners in the same class share a value.  ``vertex_target`` and
    ``face_target`` override the per-vertex sum g - deg(v) and the face
    requirement (exactly g if perfect, else at least g).  ``accept`` is an
    extra predicate on the built coating.  With ``check_digirth`` off any
    function meeting the sum constraints is returned.  Raises BudgetExhausted when the
    node budget runs out before the search space is exhausted."""
    if budget <= 0:
        raise ValueError("budget must be positive")
    stats = stats if stats is not None else SearchStats()
    corners = S.corner_keys()
    cls = {c: (classes[c] if classes is not None and c in classes else c) for c in corners}
    keys = sorted(set(cls.values()), key=lambda x: repr(x))
    vt = {v: (vertex_target[v] if vertex_target and v in vertex_target else g - S.degree(v)) for v in S.vertices}
    for v in S.vertices:
        if vt[v] < len(S.vertex_corners(v)):
            return None
    faces = S.face_keys()
    ft: dict = {}
    for f in faces:
        if face_target and f in face_target:
            ft[f] = face_target[f]
        else:
            ft[f] = ("eq", g) if perfect else ("ge", g)
    # constraints as lists of class keys with multiplicity
    cons = []
    for v in S.vertices:
        cons.append((("eq", vt[v]), [cls[c] for c in S.vertex_corners(v)]))
    for f in faces:
        cons.append((ft[f], [cls[c] for c in S.face_corners(f)]))
    # order classes by first appearance in vertex constraints
    order: list = []
    seen = set()
    for v in sorted(S.vertices, key=sort_key):
        for c in S.vertex_corners(v):
            k = cls[c]
            if k not in seen:
                seen.add(k)
                order.append(k)
    for k in keys:
        if k not in seen:
            order.append(k)
    index = {k: i for i, k in enumerate(order)}
    con_terms = []
    for (kind, target), lst in cons:
        mult: dict = {}
        for k in lst:
            mult[index[k]] = mult.get(index[k], 0) + 1
        con_terms.append((kind, target, mult))
    by_var: dict = {i: [] for i in range(len(order))}
    for ci, (_kind, _t, mult) in enumerate(con_terms):
        for i in mult:
            by_var[i].append(ci)
    last_var = [max(m) for _k, _t, m in con_terms]
    fixed_idx = {}
    if fixed:
        for c, val in fixed.items():
            fixed_idx[index[cls[c]]] = int(val)
    vals = [0] * len(order)
    partial = [0] * len(con_terms)
    remaining_min = [sum(m.values()) for _k, _t, m in con_terms]
    nvar = len(order)
    budget_left = [budget]

    def upper(i):
        # tightest "eq" constraint bound on variable i
        ub = None
        for ci in by_var[i]:
            kind, t, mult = con_terms[ci]
            if kind != "eq":
                continue
            room = t - partial[ci] - (remaining_min[ci] - mult[i])
            b = room // mult[i]
            ub = b if ub is None else min(ub, b)
        return ub

    def feasible_after(i):
        for ci in by_var[i]:
            kind, t, mult = con_terms[ci]
            if kind == "eq":
                if partial[ci] + remaining_min[ci] > t:
                    return False
                if last_var[ci] <= i and partial[ci] != t:
                    return False
            else:
                if last_var[ci] <= i and partial[ci] < t:
                    return False
        return True

    def assign(i, val, sign):
        for ci in by_var[i]:
            m = con_terms[ci][2][i]
            partial[ci] += sign * val * m
            remaining_min[ci] -= sign * m

    def rec(i):
        if i == nvar:
            h = {c: vals[index[cls[c]]] for c in corners}
            if not check_digirth and accept is None:
                return h
            try:
                C = build_coating(S, h)
            except LoopTooTight:
                return None
            dg = digirth(C.graph) if check_digirth else g
            if dg is None or dg < g or (accept is not None and not accept(C)):
                stats.rejected_digirth += 1
                return None
            return h
        budget_left[0] -= 1
        stats.nodes += 1
        if budget_left[0] < 0:
            raise BudgetExhausted(f"coating search exceeded {budget} nodes")
        ub = upper(i)
        if i in fixed_idx:
            cands = [fixed_idx[i]]
        else:
            top = ub if ub is not None else g
            cands = range(1, max(top, 0) + 1)
        for val in cands:
            if ub is not None and val > ub:
                break
            vals[i] = val
            assign(i, val, 1)
            if feasible_after(i):
                got = rec(i + 1)
                if got is not None:
                    assign(i, val, -1)
                    return got
            assign(i, val, -1)
        vals[i] = 0
        return None

    return rec(0)


def coating_independence_check(S: Skeleton, h1: Mapping, h2: Mapping, *, budget: int | None = None) -> bool:
    a = fvs_exact(build_coating(S, h1).graph, budget=budget).size
    b = fvs_exact(build_coating(S, h2).graph, budget=budget).size
    return a == b
