"""Deterministic generators for the graph families used in the experiments.

Plane digraph families are laid out with explicit coordinates and their
rotation systems read off the drawing.  Skeleton families are assembled from
small blocks and embedded the same way.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .drawing import embed_straight_line
from .plane import LEFT, RIGHT, PlaneDigraph, subdivide_arc


@dataclass(frozen=True)
class FamilyClaim:
    """Expected invariants of a generated instance, each with its source."""

    family: str
    params: dict
    expected: dict
    provenance: dict = field(default_factory=dict)


# ----------------------------------------------------------------------
# directed cycles


def gen_dicycle(g: int) -> PlaneDigraph:
    """Directed cycle 0 -> 1 -> ... -> g-1 -> 0 drawn clockwise."""
    if g < 1:
        raise ValueError("g must be positive")
    if g == 1:
        return PlaneDigraph([0], {0: (0, 0)}, {0: [(0, 1), (0, -1)]}, (0, LEFT))
    if g == 2:
        return PlaneDigraph([0, 1], {0: (0, 1), 1: (1, 0)}, {0: [(0, 1), (1, -1)], 1: [(1, 1), (0, -1)]}, (0, LEFT))
    coords = {i: (math.cos(math.pi / 2 - 2 * math.pi * i / g), math.sin(math.pi / 2 - 2 * math.pi * i / g)) for i in range(g)}
    arcs = {i: (i, (i + 1) % g) for i in range(g)}
    return embed_straight_line(coords, arcs)


def dicycle_claim(g: int) -> FamilyClaim:
    return FamilyClaim(
        "dicycle",
        {"g": g},
        {"n": g, "m": g, "digirth": g, "fvs": 1, "max_normal": 1},
        {"n": "definition", "fvs": "one vertex breaks the only cycle"},
    )


# ----------------------------------------------------------------------
# nested octahedra O_k


def octahedron_fvs_witness(k: int) -> list:
    """Outer vertex x_0 plus, per level, the new vertex opposite the
    previous level's chosen vertex."""
    return [3 * i + (i % 3) for i in range(k)]


def gen_octahedron_family(k: int) -> PlaneDigraph:
    """O_k: k nested clockwise triangles (x_i, y_i, z_i) = (3i, 3i+1, 3i+2);
    level i+1 sits inside level i, x_{i+1} near the side x_i y_i, y_{i+1}
    near y_i z_i, z_{i+1} near z_i x_i, joined by nine arcs."""
    if k < 1:
        raise ValueError("k must be at least 1")
    coords = {}
    for i in range(k):
        r = 0.35**i
        for j, base in enumerate((90.0, -30.0, 210.0)):
            th = math.radians(base - 60.0 * i)
            coords[3 * i + j] = (r * math.cos(th), r * math.sin(th))
    arcs = {0: (0, 1), 1: (1, 2), 2: (2, 0)}
    for i in range(k - 1):
        x, y, z = 3 * i, 3 * i + 1, 3 * i + 2
        a, c, b = 3 * i + 3, 3 * i + 4, 3 * i + 5
        for t, h in ((x, b), (b, a), (a, x), (y, a), (a, c), (c, y), (z, c), (c, b), (b, z)):
            arcs[len(arcs)] = (t, h)
    return embed_straight_line(coords, arcs)


def gen_Okg(k: int, g: int) -> PlaneDigraph:
    """O_k with every in-arc of the canonical feedback set subdivided
    g - 3 times."""
    if g < 3:
        raise ValueError("g must be at least 3")
    G = gen_octahedron_family(k)
    S = set(octahedron_fvs_witness(k))
    targets = sorted(a for a, (_t, h) in G.arcs.items() if h in S)
    for a in targets:
        G = subdivide_arc(G, a, g - 3)
    return G


def octahedron_claim(k: int, g: int = 3) -> FamilyClaim:
    n = 3 * k + (g - 3) * (3 * k - 2)
    return FamilyClaim(
        "O_k" if g == 3 else "O_k^(g)",
        {"k": k, "g": g},
        {"n": n, "m": 3 + 9 * (k - 1) + (g - 3) * (3 * k - 2), "digirth": g, "fvs": k, "max_normal": 3 * k - 2},
        {
            "n": "3k vertices plus g-3 per subdivided in-arc, 3k-2 in-arcs",
            "fvs": "induction on nested levels",
            "max_normal": "tight upper bound (n-2)/(g-2)",
        },
    )


# ----------------------------------------------------------------------
# frieze


def frieze_vertex(i: int, j: int, g: int):
    """Id of v^i_j (1-based cycles); v^i_{g-1} is v^{i-1}_1 for i >= 2."""
    if i >= 2 and j == g - 1:
        return f"v{i - 1}.1"
    return f"v{i}.{j}"


def gen_frieze(k: int, g: int) -> PlaneDigraph:
    """k clockwise g-cycles in a row, consecutive ones sharing a vertex and
    joined by the link arcs v^{i-1}_0 -> v^i_0 and v^i_{g-2} -> v^{i-1}_2."""
    if g < 4 or k < 1:
        raise ValueError("frieze needs g >= 4 and k >= 1")
    coords: dict = {}
    arcs: dict = {}
    for i in range(1, k + 1):
        cx = 2.0 * i
        angles = {0: 90.0, 1: 0.0, g - 1: 180.0}
        for t in range(1, g - 2):
            angles[t + 1] = -180.0 * t / (g - 2)
        for j in range(g):
            v = frieze_vertex(i, j, g)
            if v not in coords:
                th = math.radians(angles[j])
                coords[v] = (cx + math.cos(th), math.sin(th))
        for j in range(g):
            arcs[f"c{i}.{j}"] = (frieze_vertex(i, j, g), frieze_vertex(i, (j + 1) % g, g))
        if i >= 2:
            arcs[f"l{i}.top"] = (frieze_vertex(i - 1, 0, g), frieze_vertex(i, 0, g))
            arcs[f"l{i}.bot"] = (frieze_vertex(i, g - 2, g), frieze_vertex(i - 1, 2, g))
    return embed_straight_line(coords, arcs)


def frieze_fvs_witness(k: int, g: int) -> list:
    return [frieze_vertex(i, 0, g) for i in range(1, k + 1)]


def frieze_claim(k: int, g: int) -> FamilyClaim:
    return FamilyClaim(
        "frieze",
        {"k": k, "g": g},
        {"n": k * (g - 1) + 1, "m": k * g + 2 * (k - 1), "digirth": g, "fvs": k},
        {"n": "k(g-1)+1", "fvs": "k = (n-1)/(g-1)"},
    )


# ----------------------------------------------------------------------
# random plane digraphs


def _trace_darts(rot: dict, edges: dict) -> list:
    """Faces of an undirected rotation system as lists of darts (e, v):
    dart leaves v along e."""
    pos = {}
    for v, seq in rot.items():
        for i, e in enumerate(seq):
            pos[(e, v)] = i
    seen = set()
    faces = []
    for v in sorted(rot):
        for e in rot[v]:
            if (e, v) in seen:
                continue
            walk = []
            d = (e, v)
            while d not in seen:
                seen.add(d)
                walk.append(d)
                ed, vd = d
                a, b = edges[ed]
                w = b if vd == a else a
                seq = rot[w]
                nxt = seq[(pos[(ed, w)] + 1) % len(seq)]
                d = (nxt, w)
            faces.append(walk)
    return faces


def gen_random_plane_digraph(n: int, seed: int, *, chord_prob: float = 0.5, max_attach: int = 3) -> PlaneDigraph:
    """Connected simple plane digraph on ``n`` vertices.

    Vertices are inserted one at a time into a random face and joined to
    1..max_attach distinct corners of it; then chords are added across
    faces with probability ``chord_prob`` per step.  Arcs get random
    orientations and the outer face is a random face."""
    rng = random.Random(seed)
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return PlaneDigraph([0], {}, {0: []}, None)
    edges: dict = {0: (0, 1)}
    rot: dict = {0: [0], 1: [0]}
    adj = {frozenset((0, 1))}

    def insert_after(v, e_prev, e_new):
        seq = rot[v]
        seq.insert(seq.index(e_prev) + 1, e_new)

    def corners(face):
        # corner i: (vertex, arrival edge) where the walk turns at vertex
        out = []
        L = len(face)
        for i in range(L):
            e_in = face[i - 1][0]
            v = face[i][1]
            out.append((v, e_in))
        return out

    for x in range(2, n):
        faces = _trace_darts(rot, edges)
        face = rng.choice(faces)
        cs = corners(face)
        order = list(range(len(cs)))
        rng.shuffle(order)
        chosen = []
        used_v = set()
        want = rng.randint(1, max_attach)
        for i in order:
            v = cs[i][0]
            if v in used_v:
                continue
            chosen.append(i)
            used_v.add(v)
            if len(chosen) == want:
                break
        chosen.sort()
        rot[x] = []
        new_edges = []
        for i in chosen:
            v, e_in = cs[i]
            e = len(edges)
            edges[e] = (v, x)
            adj.add(frozenset((v, x)))
            insert_after(v, e_in, e)
            new_edges.append(e)
        rot[x] = list(reversed(new_edges))
        if rng.random() < chord_prob:
            faces = _trace_darts(rot, edges)
            face = rng.choice(faces)
            cs = corners(face)
            pairs = [
                (i, j)
                for i in range(len(cs))
                for j in range(i + 1, len(cs))
                if cs[i][0] != cs[j][0] and frozenset((cs[i][0], cs[j][0])) not in adj
            ]
            if pairs:
                i, j = rng.choice(pairs)
                (v, ev), (w, ew) = cs[i], cs[j]
                e = len(edges)
                edges[e] = (v, w)
                adj.add(frozenset((v, w)))
                insert_after(v, ev, e)
                insert_after(w, ew, e)
    arcs = {}
    for e, (u, w) in edges.items():
        arcs[e] = (u, w) if rng.random() < 0.5 else (w, u)
    rotation = {v: [(e, 1 if arcs[e][0] == v else -1) for e in seq] for v, seq in rot.items()}
    faces = _trace_darts(rot, edges)
    e, v = rng.choice(faces)[0]
    outer = (e, LEFT if arcs[e][0] == v else RIGHT)
    return PlaneDigraph(list(range(n)), arcs, rotation, outer)


def random_plane_digraph_with_cycle(n: int, seed: int, **kw) -> PlaneDigraph:
    """First graph of the seeded sequence that has a directed cycle."""
    from .plane import digirth

    if n < 3:
        raise ValueError("a simple digraph needs n >= 3 for a directed cycle")
    k = 0
    while True:
        G = gen_random_plane_digraph(n, seed * 7919 + k, **kw)
        if digirth(G) is not None:
            return G
        k += 1


def random_crossing_multiset(n: int, seed: int, *, extra: int = 2) -> tuple | None:
    """(G, cycles): a crossing pair of directed cycles of a random plane
    digraph plus up to ``extra`` further cycles, repeats allowed.  None when
    the seeded graph has no crossing pair."""
    from .cycles import enumerate_dicycles
    from .plane import crossing

    G = gen_random_plane_digraph(n, seed)
    cycles = enumerate_dicycles(G)
    pairs = [(a, b) for i, a in enumerate(cycles) for b in cycles[i + 1 :] if crossing(G, a, b)]
    if not pairs:
        return None
    rng = random.Random(seed)
    out = list(rng.choice(pairs))
    out += [rng.choice(cycles) for _ in range(rng.randint(0, extra))]
    return G, out


# ----------------------------------------------------------------------
# bounds on tau_g


def tau_report(g: int) -> dict:
    """Known interval for the worst ratio fvs/n at digirth g."""
    if g < 3:
        raise ValueError("g must be at least 3")
    upper = Fraction(1, g - 2)
    if g == 7:
        lower = Fraction(2, 11)
        witness = "digirth-6 recursive family extended by one (r = 1)"
    elif g in SMALL_DIGIRTH_SIZES:
        lower = Fraction(g + 2, g * g)
        witness = f"recursive digirth-{g} coating family"
    elif g >= 6:
        lower = Fraction(g + 2, g * g)
        k, r = divmod(g - 4, 8)
        witness = f"perfect {g}-coatings of G_l^(k,r) with k={k}, r={r}, fractional arboricity {Fraction(2 * g, g + 2)}"
    else:
        lower = Fraction(1, g - 1)
        witness = "g-coatings of C_4 (fvs = n/(g-1))"
    return {"g": g, "lower": lower, "upper": upper, "lower_witness": witness, "upper_witness": "directed cycle C_g attains (n-2)/(g-2)"}


# ----------------------------------------------------------------------
# nested-square skeletons with fractional arboricity 2g/(g+2)

_SQUARE_ANGLES = (45.0, 135.0, -135.0, -45.0)  # positions 0..3, counterclockwise


def _square_pos(t: float, p: int) -> tuple:
    a = math.radians(_SQUARE_ANGLES[p])
    return ((1.0 + t) * math.cos(a), (1.0 + t) * math.sin(a))


def _face_containing(S, verts) -> object:
    want = set(verts)
    hits = [f for f in S.face_keys() if want <= {c[0] for c in S.face_corners(f)}]
    if len(hits) != 1:
        raise ValueError(f"expected one face through {sorted(map(str, want))}, found {len(hits)}")
    return hits[0]


def _corner_at(S, v, f) -> tuple:
    for c in S.face_corners(f):
        if c[0] == v:
            return c
    raise KeyError(v)


# B-block shape: rungs subdivided, then the two ends of the degree-2 paths
# and a vertex on the side where the paths are stacked.  An end is
# (layer offset, position) with offset 0 = inner square, 1 = outer square
# and 0.5 = subdivision vertex.
B_SUBDIVIDED = (0, 1)
B_ENDS = ((0, 0), (0, 1), (1, 0))


def _gap_vertex(t: int, off, p: int) -> str:
    if off == 0.5:
        return f"m{t}.{p}"
    return f"v{t + int(off)}.{p}"


def nested_square_skeleton(k: int, b_extras: list, s_extra: int = 0):
    """Skeleton built from nested 4-cycles (squares).

    From the outside in: a starting cube block, then ``len(b_extras) + 1``
    stacks of ``k`` squares joined by straight rungs; consecutive stacks are
    separated by a B-block.  A B-block with ``x`` extras subdivides rungs 0
    and 1 of its gap and joins the inner vertex at position 0 to the outer
    vertex at position 1 through ``x + 1`` parallel degree-2 vertices.  The
    starting block joins the two outer vertices at positions 0 and 2 through
    ``s_extra`` degree-2 vertices drawn in the outer face.

    Square ``t`` (0 innermost) has vertices ``v{t}.{p}`` at positions
    ``p = 0..3`` counterclockwise."""
    from .skeleton import Skeleton, add_vertex_in_face

    if k < 1:
        raise ValueError("k must be at least 1")
    gaps: list = []  # gap t joins square t to square t+1
    stacks = len(b_extras) + 1
    for i in range(stacks):
        gaps += [None] * (k - 1)
        if i < stacks - 1:
            gaps.append(b_extras[::-1][i])
    gaps.append(None)  # starting block
    top = len(gaps)
    coords: dict = {}
    edges: dict = {}
    for t in range(top + 1):
        for p in range(4):
            coords[f"v{t}.{p}"] = _square_pos(t, p)
            edges[f"q{t}.{p}"] = (f"v{t}.{p}", f"v{t}.{(p + 1) % 4}")
    for t, x in enumerate(gaps):
        for p in range(4):
            a, b = f"v{t}.{p}", f"v{t + 1}.{p}"
            if x is not None and p in B_SUBDIVIDED:
                m = f"m{t}.{p}"
                coords[m] = _square_pos(t + 0.5, p)
                edges[f"r{t}.{p}"] = (a, m)
                edges[f"r{t}.{p}x"] = (m, b)
            else:
                edges[f"r{t}.{p}"] = (a, b)
    S = Skeleton.from_digraph(embed_straight_line(coords, edges))
    for t, x in enumerate(gaps):
        if x is None:
            continue
        (du, pu), (dw, pw), side = B_ENDS
        u, w = _gap_vertex(t, du, pu), _gap_vertex(t, dw, pw)
        for i in range(x + 1):
            f = _face_containing(S, [u, w, _gap_vertex(t, *side)] + ([f"d{t}.{i - 1}"] if i else []))
            d = f"d{t}.{i}"
            S = add_vertex_in_face(S, d, [_corner_at(S, u, f), _corner_at(S, w, f)], [f"b{t}.{i}u", f"b{t}.{i}w"])
    u, w = f"v{top}.0", f"v{top}.2"
    for i in range(s_extra):
        f = S.emb.outer_face()
        d = f"o{i}"
        S = add_vertex_in_face(S, d, [_corner_at(S, u, f), _corner_at(S, w, f)], [f"s{i}u", f"s{i}w"])
    return S


# ----------------------------------------------------------------------
# base blocks of the recursive small-digirth families

_RING_NAMES = ("u", "v", "w", "x")


def layered_ring_vertex(j: int, p: int, layers: int) -> str:
    """Vertex at position p of square j; square 0 is C_in, the last is C_out."""
    if j == 0:
        return f"{_RING_NAMES[p]}0"
    if j == layers - 1:
        return f"{_RING_NAMES[p]}1"
    return f"L{j}p{p}"


def layered_ring_skeleton(middle: int, rungs, ops=()):
    """Nested squares joined by rungs, then edited by ``ops``.

    There are ``middle + 2`` squares; ``rungs[j]`` lists the positions with
    a rung between squares j and j + 1.  Each op is ``("sub", e, x, e_new)``
    (subdivide edge e by vertex x) or ``("deg2", x, corners, edge_ids)``
    (new vertex x in a face joined to the given corners)."""
    from .skeleton import Skeleton, add_vertex_in_face, subdivide_edge

    layers = middle + 2
    if len(rungs) != layers - 1:
        raise ValueError("need one rung list per gap between squares")
    coords: dict = {}
    edges: dict = {}
    for j in range(layers):
        for p in range(4):
            coords[layered_ring_vertex(j, p, layers)] = _square_pos(j, p)
            edges[f"q{j}.{p}"] = (layered_ring_vertex(j, p, layers), layered_ring_vertex(j, (p + 1) % 4, layers))
    for j, ps in enumerate(rungs):
        for p in ps:
            edges[f"r{j}.{p}"] = (layered_ring_vertex(j, p, layers), layered_ring_vertex(j + 1, p, layers))
    S = Skeleton.from_digraph(embed_straight_line(coords, edges))
    for op in ops:
        if op[0] == "sub":
            S = subdivide_edge(S, op[1], op[2], op[3])
        elif op[0] == "deg2":
            S = add_vertex_in_face(S, op[1], [tuple(c) for c in op[2]], list(op[3]))
        else:
            raise ValueError(f"unknown op {op[0]!r}")
    ring_in = tuple(layered_ring_vertex(0, p, layers) for p in range(4))
    ring_out = tuple(layered_ring_vertex(layers - 1, p, layers) for p in range(4))
    return S, ring_in, ring_out


# ----------------------------------------------------------------------
# random skeletons and coating functions


def gen_random_skeleton(n: int, seed: int, *, loops: int = 0, chord_prob: float = 0.5):
    """Connected plane skeleton from the random digraph generator, plus
    ``loops`` loops each drawn inside a random corner."""
    from .skeleton import Skeleton

    S = Skeleton.from_digraph(gen_random_plane_digraph(n, seed, chord_prob=chord_prob))
    if not loops:
        return S
    rng = random.Random(seed * 31 + 7)
    edges = dict(S.edges)
    rot = {v: list(seq) for v, seq in S.rotation.items()}
    for i in range(loops):
        v = rng.choice(list(S.vertices))
        e = f"loop{i}"
        edges[e] = (v, v)
        seq = rot[v]
        at = rng.randrange(len(seq) + 1)
        seq[at:at] = [(e, 1), (e, -1)]
    outer = S.outer
    if outer is None:
        outer = (f"loop0", LEFT)
    return Skeleton(S.vertices, edges, rot, outer)


def random_coating_function(S, seed: int, *, g: int | None = None, top: int = 3) -> dict:
    """Random positive coating function; with ``g`` the corners at each
    vertex sum to g - deg(v) (a g-coating).  Corners inside a loop get at
    least 2 so the loop is never too tight."""
    rng = random.Random(seed)
    h: dict = {}
    for v in S.vertices:
        keys = S.vertex_corners(v)
        low = [2 if hh is not None and S.edges[hh[0]][0] == S.edges[hh[0]][1] else 1 for _v, hh in keys]
        if g is None:
            for c, lo in zip(keys, low):
                h[c] = rng.randint(lo, lo + top - 1)
            continue
        spare = g - S.degree(v) - sum(low)
        if spare < 0:
            raise ValueError(f"g = {g} is too small for vertex {v!r}")
        cuts = sorted(rng.randint(0, spare) for _ in range(len(keys) - 1))
        parts = [b - a for a, b in zip([0] + cuts, cuts + [spare])]
        for c, lo, extra in zip(keys, low, parts):
            h[c] = lo + extra
    return h


# ----------------------------------------------------------------------
# coating families

# new skeleton vertices and edges per copy of G_1 in the recursive families
SMALL_DIGIRTH_SIZES = {6: (8, 12), 8: (10, 16), 9: (11, 18), 10: (12, 20), 11: (13, 22)}


def small_digirth_alpha_beta(base_g: int) -> tuple:
    """(alpha, beta) with m_G = alpha * n_G - beta along the family."""
    N, M = SMALL_DIGIRTH_SIZES[base_g]
    alpha = Fraction(M, N)
    return alpha, 4 * alpha - 4


def small_digirth_base(base_g: int):
    """The recursive family (G_1, h_1, C_in, C_out) for digirth base_g."""
    from .coatings import RecursiveFamily
    from .designs import SMALL_DIGIRTH_DESIGNS

    if base_g not in SMALL_DIGIRTH_DESIGNS:
        raise ValueError(f"no recursive design for digirth {base_g}; known: {sorted(SMALL_DIGIRTH_DESIGNS)}")
    d = SMALL_DIGIRTH_DESIGNS[base_g]
    S, ring_in, ring_out = layered_ring_skeleton(d["middle"], d["rungs"], d["ops"])
    h = {(v, (e, s)): val for v, e, s, val in d["h"]}
    return RecursiveFamily(S, h, ring_in, ring_out, name=f"digirth-{base_g}")


def gen_small_digirth_family(base_g: int, k: int, r: int = 0, *, budget: int | None = None) -> tuple:
    """(G_k, H_k): k glued copies of the digirth-base_g block, coated, then
    extended to digirth base_g + r."""
    from .coatings import build_coating, build_recursive_family, extend_digirth

    if k < 0 or r < 0:
        raise ValueError("k and r must be non-negative")
    fam = small_digirth_base(base_g)
    S, h = build_recursive_family(fam, k)
    C = build_coating(S, h)
    if r:
        C = extend_digirth(C, r, budget=budget)
    return S, C


def small_digirth_claim(base_g: int, k: int, r: int = 0) -> FamilyClaim:
    N, M = SMALL_DIGIRTH_SIZES[base_g]
    g = base_g + r
    nG, mG = 4 + N * k, 4 + M * k
    alpha, beta = small_digirth_alpha_beta(base_g)
    nH = base_g * nG - mG + r * nG
    return FamilyClaim(
        "small_digirth",
        {"base_g": base_g, "k": k, "r": r},
        {"n_G": nG, "m_G": mG, "n_H": nH, "digirth": g, "fvs": nG, "fvs_formula": (base_g * nG - mG - beta) / (base_g - alpha)},
        {"n_G": "per-copy block size", "fvs_formula": "(n_H - beta)/(g - alpha) for a g-coating of digirth g"},
    )


def gen_c4_coating(g: int, length: int = 4, *, budget: int = 10**6):
    """Searched g-coating of digirth g of the undirected cycle C_length."""
    from .coatings import build_coating, search_coating_function
    from .errors import SearchFailed
    from .skeleton import cycle_skeleton

    S = cycle_skeleton(length)
    h = search_coating_function(S, g, budget=budget)
    if h is None:
        raise SearchFailed(f"no {g}-coating of digirth {g} of C_{length}")
    return build_coating(S, h)


def gen_Glk_skeleton(k: int, ell: int):
    """G_ell^k: a starting cube, then ell stacks of k squares separated by
    B-blocks.  n = ell(4k+3)+1, m = ell(8k+4)."""
    if ell < 1:
        raise ValueError("ell must be at least 1")
    return nested_square_skeleton(k, [0] * (ell - 1), 0)


def gen_Glkr_skeleton(k: int, r: int, ell: int):
    """G_ell^{k,r} with r = 2a + b: 2 ell stacks of k squares separated
    alternately by B^{a+b} and B^a blocks, under a starting block S^a."""
    a, b = divmod(r, 2)
    if not 0 <= r <= 7:
        raise ValueError("r must be in 0..7")
    if ell < 1:
        raise ValueError("ell must be at least 1")
    extras = [a + b if i % 2 == 0 else a for i in range(2 * ell - 1)]
    return nested_square_skeleton(k, extras, a)


def gen_perfect_coating(S, g: int, *, budget: int = 10**6, classes=None):
    """Searched perfect g-coating of S whose digirth is g.

    Raises SearchFailed when S is not admissible (then no perfect g-coating
    has digirth g) or when the search finds no perfect function."""
    from .arboricity import perfect_coating_admissible
    from .coatings import build_coating, search_coating_function
    from .errors import SearchFailed

    ok, reasons = perfect_coating_admissible(S, g)
    if not ok:
        raise SearchFailed("skeleton is not admissible: " + "; ".join(reasons))
    h = search_coating_function(S, g, perfect=True, budget=budget, classes=classes)
    if h is None:
        raise SearchFailed(f"no perfect {g}-coating exists")
    return build_coating(S, h)
