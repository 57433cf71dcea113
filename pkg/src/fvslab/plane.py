"""Embedded directed multigraphs given by a rotation system.

Every arc ``a`` has two half-arcs: ``(a, +1)`` sits at its tail and
``(a, -1)`` at its head.  The rotation at a vertex lists its half-arcs in
clockwise order.  Faces are traced by leaving along a half-arc and, on
arrival, continuing with the clockwise successor of the arrival half-arc;
this keeps the face on the left of the direction of travel, so the face
traced from ``(a, +1)`` is the face on the left of ``a`` and the face traced
from ``(a, -1)`` is the face on its right.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

import numpy as np

from . import _kernels
from .errors import (
    DanglingHalfArc,
    DuplicateHalfArc,
    EulerViolation,
    NoOuterFace,
    NotACycle,
    NotSimple,
    UnknownArc,
    UnknownVertex,
)

VertexId = Hashable
ArcId = Hashable
HalfArc = tuple  # (arc id, +1 | -1)

LEFT = "L"
RIGHT = "R"
CW = "clockwise"
CCW = "counterclockwise"


def sort_key(x) -> tuple:
    """Total order on mixed int / str / tuple identifiers."""
    if isinstance(x, bool):
        return (0, int(x))
    if isinstance(x, int):
        return (0, x)
    if isinstance(x, str):
        return (1, x)
    if isinstance(x, tuple):
        return (2, tuple(sort_key(y) for y in x))
    return (3, repr(x))


def fresh_ids(existing: Iterable, count: int, prefix: str) -> list:
    """``count`` identifiers not in ``existing``: ints when possible."""
    existing = set(existing)
    if all(isinstance(x, int) for x in existing):
        start = max(existing, default=-1) + 1
        return list(range(start, start + count))
    out = []
    i = 0
    while len(out) < count:
        cand = f"{prefix}{i}"
        if cand not in existing:
            out.append(cand)
        i += 1
    return out


@dataclass(frozen=True)
class Face:
    boundary: tuple  # half-arcs in tracing order

    @property
    def length(self) -> int:
        return len(self.boundary)


@dataclass(frozen=True)
class DiCycle:
    """A directed cycle stored as its arc sequence, rotated to start at the
    smallest arc id."""

    arcs: tuple
    vertices: tuple = field(compare=False, default=())

    def __len__(self) -> int:
        return len(self.arcs)

    @property
    def arc_set(self) -> frozenset:
        return frozenset(self.arcs)

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)


@dataclass(frozen=True)
class Region:
    cycle: DiCycle
    interior_vertices: frozenset
    interior_arcs: frozenset
    interior_faces: frozenset
    orientation: str

    @property
    def size(self) -> int:
        """Number of interior elements (vertices plus arcs)."""
        return len(self.interior_vertices) + len(self.interior_arcs)


class PlaneDigraph:
    """Immutable plane directed multigraph."""

    def __init__(
        self,
        vertices: Iterable[VertexId],
        arcs: Mapping[ArcId, tuple],
        rotation: Mapping[VertexId, Sequence[HalfArc]],
        outer: tuple | None = None,
        *,
        validate: bool = True,
    ):
        self.vertices: tuple = tuple(sorted(set(vertices), key=sort_key))
        self._vset = frozenset(self.vertices)
        self.arcs: dict = {a: (t, h) for a, (t, h) in arcs.items()}
        rot = {v: tuple((a, int(s)) for a, s in rotation.get(v, ())) for v in self.vertices}
        for v in rotation:
            if v not in self._vset:
                raise UnknownVertex(f"rotation given for undeclared vertex {v!r}")
        self.rotation: dict = rot
        self.outer = None if outer is None else (outer[0], outer[1])
        self._cache: dict = {}
        if validate:
            self._validate()
        self._index_halfarcs()
        if validate:
            self._check_euler()
            if self.outer is not None:
                a, side = self.outer
                if a not in self.arcs or side not in (LEFT, RIGHT):
                    raise NoOuterFace(f"outer designation {self.outer!r} is not an arc side")

    # ------------------------------------------------------------------
    # construction checks

    def _validate(self) -> None:
        for a, (t, h) in self.arcs.items():
            if t not in self._vset:
                raise UnknownVertex(f"arc {a!r} has undeclared tail {t!r}")
            if h not in self._vset:
                raise UnknownVertex(f"arc {a!r} has undeclared head {h!r}")
        seen: set = set()
        for v, seq in self.rotation.items():
            for a, s in seq:
                if a not in self.arcs or s not in (1, -1):
                    raise DanglingHalfArc(f"vertex {v!r} lists unknown half-arc {a!r}{'+' if s == 1 else '-'}")
                end = self.arcs[a][0] if s == 1 else self.arcs[a][1]
                if end != v:
                    raise DanglingHalfArc(f"half-arc {a!r}{'+' if s == 1 else '-'} listed at {v!r} but belongs to {end!r}")
                if (a, s) in seen:
                    raise DuplicateHalfArc(f"half-arc {a!r}{'+' if s == 1 else '-'} appears twice")
                seen.add((a, s))
        for a in self.arcs:
            for s in (1, -1):
                if (a, s) not in seen:
                    raise DanglingHalfArc(f"half-arc {a!r}{'+' if s == 1 else '-'} missing from rotation")

    def _index_halfarcs(self) -> None:
        pos = {}
        for v, seq in self.rotation.items():
            for i, h in enumerate(seq):
                pos[h] = (v, i)
        self._pos = pos

    def _check_euler(self) -> None:
        comps = self.components()
        walks = self.faces
        vcomp = {}
        for ci, comp in enumerate(comps):
            for v in comp:
                vcomp[v] = ci
        per = [0] * len(comps)
        for f in walks:
            per[vcomp[self.half_vertex(f.boundary[0])]] += 1
        marc = [0] * len(comps)
        for a, (t, _h) in self.arcs.items():
            marc[vcomp[t]] += 1
        for ci, comp in enumerate(comps):
            if marc[ci] == 0:
                continue
            if len(comp) - marc[ci] + per[ci] != 2:
                raise EulerViolation(self.n, self.m, self.face_count(), len(comps))

    # ------------------------------------------------------------------
    # basic accessors

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.arcs)

    def has_vertex(self, v) -> bool:
        return v in self._vset

    def tail(self, a):
        return self.arcs[a][0]

    def head(self, a):
        return self.arcs[a][1]

    def half_vertex(self, h: HalfArc):
        a, s = h
        return self.arcs[a][0] if s == 1 else self.arcs[a][1]

    def cw_next(self, h: HalfArc) -> HalfArc:
        v, i = self._pos[h]
        seq = self.rotation[v]
        return seq[(i + 1) % len(seq)]

    def cw_prev(self, h: HalfArc) -> HalfArc:
        v, i = self._pos[h]
        seq = self.rotation[v]
        return seq[(i - 1) % len(seq)]

    def rotation_index(self, h: HalfArc) -> int:
        return self._pos[h][1]

    def out_arcs(self, v) -> list:
        return [a for a, s in self.rotation[v] if s == 1]

    def in_arcs(self, v) -> list:
        return [a for a, s in self.rotation[v] if s == -1]

    def degree(self, v) -> int:
        return len(self.rotation[v])

    def successors(self, v) -> list:
        return [self.arcs[a][1] for a, s in self.rotation[v] if s == 1]

    def predecessors(self, v) -> list:
        return [self.arcs[a][0] for a, s in self.rotation[v] if s == -1]

    def sorted_arcs(self) -> list:
        return sorted(self.arcs, key=sort_key)

    def is_simple(self) -> bool:
        seen = set()
        for t, h in self.arcs.values():
            if t == h or (t, h) in seen:
                return False
            seen.add((t, h))
        return True

    def require_simple(self) -> None:
        if not self.is_simple():
            raise NotSimple("digraph has a loop or parallel arcs")

    def components(self) -> list:
        """Vertex sets of the connected components (underlying graph)."""
        if "components" in self._cache:
            return self._cache["components"]
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for t, h in self.arcs.values():
            rt, rh = find(t), find(h)
            if rt != rh:
                parent[rt] = rh
        groups: dict = {}
        for v in self.vertices:
            groups.setdefault(find(v), []).append(v)
        comps = sorted((tuple(g) for g in groups.values()), key=lambda g: sort_key(g[0]))
        self._cache["components"] = comps
        return comps

    # ------------------------------------------------------------------
    # faces

    @property
    def faces(self) -> list:
        if "faces" not in self._cache:
            self._trace()
        return self._cache["faces"]

    def face_of(self, h: HalfArc) -> int:
        """Index (into ``faces``) of the face traced from half-arc ``h``."""
        if "face_of" not in self._cache:
            self._trace()
        return self._cache["face_of"][h]

    def face_left(self, a) -> int:
        return self.face_of((a, 1))

    def face_right(self, a) -> int:
        return self.face_of((a, -1))

    def _trace(self) -> None:
        face_of: dict = {}
        faces: list = []
        for a in self.sorted_arcs():
            for s in (1, -1):
                start = (a, s)
                if start in face_of:
                    continue
                idx = len(faces)
                walk = []
                h = start
                while True:
                    face_of[h] = idx
                    walk.append(h)
                    arr = (h[0], -h[1])
                    h = self.cw_next(arr)
                    if h == start:
                        break
                faces.append(Face(tuple(walk)))
        self._cache["faces"] = faces
        self._cache["face_of"] = face_of

    def face_count(self) -> int:
        """Number of faces of the plane drawing, n - m + f = 1 + c."""
        comps = self.components()
        isolated = sum(1 for c in comps if len(c) == 1 and not self.rotation[c[0]])
        return len(self.faces) + isolated - len(comps) + 1

    def outer_face(self) -> int:
        if self.outer is None:
            raise NoOuterFace("no outer face designated")
        a, side = self.outer
        return self.face_of((a, 1) if side == LEFT else (a, -1))

    def face_vertices(self, fi: int) -> set:
        return {self.half_vertex(h) for h in self.faces[fi].boundary}

    def face_arcs(self, fi: int) -> set:
        return {h[0] for h in self.faces[fi].boundary}

    def dual_adjacency(self) -> dict:
        """face -> list of (neighbour face, arc) across each arc."""
        if "dual" in self._cache:
            return self._cache["dual"]
        adj: dict = {i: [] for i in range(len(self.faces))}
        for a in self.sorted_arcs():
            fl, fr = self.face_of((a, 1)), self.face_of((a, -1))
            adj[fl].append((fr, a))
            if fr != fl:
                adj[fr].append((fl, a))
        self._cache["dual"] = adj
        return adj

    # ------------------------------------------------------------------
    # CSR view for the array kernels

    def csr(self) -> tuple:
        """(index of vertex, indptr, indices) over simple successor lists."""
        if "csr" in self._cache:
            return self._cache["csr"]
        index = {v: i for i, v in enumerate(self.vertices)}
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        rows = []
        for i, v in enumerate(self.vertices):
            succ = sorted({index[w] for w in self.successors(v)})
            rows.append(succ)
            indptr[i + 1] = indptr[i] + len(succ)
        indices = np.fromiter((w for r in rows for w in r), dtype=np.int64, count=int(indptr[-1]))
        out = (index, indptr, indices)
        self._cache["csr"] = out
        return out

    # ------------------------------------------------------------------
    # derived graphs

    def arc_subgraph(self, keep_arcs: Iterable, keep_vertices: Iterable | None = None) -> "PlaneDigraph":
        """Sub-embedding on the given arcs (and vertices; defaults to the
        endpoints of the kept arcs).  The outer face is carried over to the
        merged face that contains the old one."""
        keep_arcs = set(keep_arcs)
        verts = set(keep_vertices) if keep_vertices is not None else set()
        for a in keep_arcs:
            t, h = self.arcs[a]
            verts.add(t)
            verts.add(h)
        arcs = {a: self.arcs[a] for a in keep_arcs}
        rot = {v: [h for h in self.rotation[v] if h[0] in keep_arcs] for v in verts}
        outer = None
        if self.outer is not None and keep_arcs:
            target = self._merged_faces(keep_arcs)
            home = target[self.outer_face()]
            for a in sorted(keep_arcs, key=sort_key):
                if target[self.face_of((a, 1))] == home:
                    outer = (a, LEFT)
                    break
                if target[self.face_of((a, -1))] == home:
                    outer = (a, RIGHT)
                    break
        return PlaneDigraph(verts, arcs, rot, outer, validate=False)

    def _merged_faces(self, keep_arcs: set) -> dict:
        """face -> representative after deleting every arc not in keep_arcs."""
        parent = list(range(len(self.faces)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in self.arcs:
            if a in keep_arcs:
                continue
            x, y = find(self.face_of((a, 1))), find(self.face_of((a, -1)))
            if x != y:
                parent[x] = y
        return {i: find(i) for i in range(len(self.faces))}

    def merged_face_classes(self, keep_arcs: Iterable) -> dict:
        return self._merged_faces(set(keep_arcs))

    def delete_vertices(self, removed: Iterable) -> "PlaneDigraph":
        removed = set(removed)
        keep_v = [v for v in self.vertices if v not in removed]
        keep_a = [a for a, (t, h) in self.arcs.items() if t not in removed and h not in removed]
        return self.arc_subgraph(keep_a, keep_v)

    def relabel(self, vmap: Mapping, amap: Mapping | None = None) -> "PlaneDigraph":
        amap = amap or {a: a for a in self.arcs}
        arcs = {amap[a]: (vmap[t], vmap[h]) for a, (t, h) in self.arcs.items()}
        rot = {vmap[v]: [(amap[a], s) for a, s in seq] for v, seq in self.rotation.items()}
        outer = None if self.outer is None else (amap[self.outer[0]], self.outer[1])
        return PlaneDigraph([vmap[v] for v in self.vertices], arcs, rot, outer, validate=False)

    # ------------------------------------------------------------------

    def structurally_equal(self, other: "PlaneDigraph") -> bool:
        return (
            self.vertices == other.vertices
            and self.arcs == other.arcs
            and self.rotation == other.rotation
            and self.outer == other.outer
        )

    def __repr__(self) -> str:
        return f"PlaneDigraph(n={self.n}, m={self.m}, f={self.face_count()})"


# ----------------------------------------------------------------------
# construction


def build_plane_digraph(data: Mapping) -> PlaneDigraph:
    """Build and validate from ``{"vertices", "arcs", "rotation", "outer"}``."""
    vertices = data.get("vertices")
    arcs = data["arcs"]
    if vertices is None:
        vertices = set(data.get("rotation", {}))
        for t, h in arcs.values():
            vertices.update((t, h))
    return PlaneDigraph(vertices, arcs, data.get("rotation", {}), data.get("outer"))


def trace_faces(G: PlaneDigraph) -> list:
    return list(G.faces)


# ----------------------------------------------------------------------
# distances


def digirth(G: PlaneDigraph) -> int | None:
    """Length of a shortest directed cycle, ``None`` when acyclic."""
    if "digirth" in G._cache:
        return G._cache["digirth"]
    for t, h in G.arcs.values():
        if t == h:
            G._cache["digirth"] = 1
            return 1
    _index, indptr, indices = G.csr()
    alive = np.ones(G.n, dtype=np.bool_)
    g = int(_kernels.digirth_csr(indptr, indices, alive)) if G.n else 0
    out = g if g > 0 else None
    G._cache["digirth"] = out
    return out


def shortest_dipath_len(G: PlaneDigraph, u, v) -> int | None:
    for x in (u, v):
        if not G.has_vertex(x):
            raise UnknownVertex(f"unknown vertex {x!r}")
    index, indptr, indices = G.csr()
    alive = np.ones(G.n, dtype=np.bool_)
    dist = _kernels.bfs_csr(indptr, indices, index[u], alive)
    d = int(dist[index[v]])
    return d if d >= 0 else None


def distances_from(G: PlaneDigraph, u) -> dict:
    index, indptr, indices = G.csr()
    alive = np.ones(G.n, dtype=np.bool_)
    dist = _kernels.bfs_csr(indptr, indices, index[u], alive)
    return {v: int(dist[i]) for v, i in index.items() if dist[i] >= 0}


# ----------------------------------------------------------------------
# cycles and regions


def make_cycle(G: PlaneDigraph, arcs: Sequence) -> DiCycle:
    """Validate a closed directed walk without repeated vertices."""
    arcs = list(arcs)
    if not arcs:
        raise NotACycle("empty arc sequence")
    for a in arcs:
        if a not in G.arcs:
            raise UnknownArc(f"unknown arc {a!r}")
    verts = []
    for i, a in enumerate(arcs):
        nxt = arcs[(i + 1) % len(arcs)]
        if G.head(a) != G.tail(nxt):
            raise NotACycle(f"arc {a!r} does not lead into arc {nxt!r}")
        verts.append(G.tail(a))
    if len(set(verts)) != len(verts):
        raise NotACycle("closed walk repeats a vertex")
    k = min(range(len(arcs)), key=lambda i: sort_key(arcs[i]))
    arcs = arcs[k:] + arcs[:k]
    verts = verts[k:] + verts[:k]
    return DiCycle(tuple(arcs), tuple(verts))


def cycle_from_vertices(G: PlaneDigraph, verts: Sequence) -> DiCycle:
    """Cycle through the given vertex sequence, picking the smallest arc id
    for each consecutive pair."""
    arcs = []
    for i, u in enumerate(verts):
        w = verts[(i + 1) % len(verts)]
        cands = [a for a in G.out_arcs(u) if G.head(a) == w]
        if not cands:
            raise NotACycle(f"no arc {u!r}->{w!r}")
        arcs.append(min(cands, key=sort_key))
    return make_cycle(G, arcs)


def _component_faces(G: PlaneDigraph, v) -> set:
    comp = next(c for c in G.components() if v in set(c))
    cset = set(comp)
    return {i for i, f in enumerate(G.faces) if G.half_vertex(f.boundary[0]) in cset}


def cycle_region(G: PlaneDigraph, C: DiCycle) -> Region:
    """Interior of the region bounded by ``C`` (the side away from the outer
    face), as vertex, arc and face sets; ``C``'s own elements excluded."""
    cache = G._cache.setdefault("regions", {})
    if C.arcs in cache:
        return cache[C.arcs]
    outer = G.outer_face()
    if len(G.components()) > 1:
        if outer not in _component_faces(G, C.vertices[0]):
            raise NoOuterFace("outer face is not in the component of the cycle")
    cut = C.arc_set
    adj = G.dual_adjacency()
    seen = {outer}
    queue = deque([outer])
    while queue:
        f = queue.popleft()
        for g, a in adj[f]:
            if a in cut or g in seen:
                continue
            seen.add(g)
            queue.append(g)
    comp_faces = _component_faces(G, C.vertices[0]) if len(G.components()) > 1 else range(len(G.faces))
    inner = frozenset(f for f in comp_faces if f not in seen)
    iv, ia = set(), set()
    for f in inner:
        for h in G.faces[f].boundary:
            ia.add(h[0])
            iv.add(G.half_vertex(h))
    iv -= C.vertex_set
    ia -= cut
    a0 = C.arcs[0]
    orient = CW if G.face_of((a0, -1)) in inner else CCW
    reg = Region(C, frozenset(iv), frozenset(ia), inner, orient)
    cache[C.arcs] = reg
    return reg


def orientation(G: PlaneDigraph, C: DiCycle) -> str:
    return cycle_region(G, C).orientation


def crossing(G: PlaneDigraph, C1: DiCycle, C2: DiCycle) -> bool:
    """Each cycle has an element (vertex or arc) inside the other's region."""
    if C1.arcs == C2.arcs:
        return False
    r1, r2 = cycle_region(G, C1), cycle_region(G, C2)
    hit12 = bool(r1.interior_vertices & C2.vertex_set) or bool(r1.interior_arcs & C2.arc_set)
    if not hit12:
        return False
    return bool(r2.interior_vertices & C1.vertex_set) or bool(r2.interior_arcs & C1.arc_set)


def region_contains(G: PlaneDigraph, outer_cycle: DiCycle, inner_cycle: DiCycle) -> bool:
    """Closed-region inclusion, via interior face sets."""
    return cycle_region(G, inner_cycle).interior_faces <= cycle_region(G, outer_cycle).interior_faces


# ----------------------------------------------------------------------
# edits


def subdivide_arc(G: PlaneDigraph, a, t: int) -> PlaneDigraph:
    """Replace arc ``a`` by a directed path of ``t + 1`` arcs.  The first
    piece keeps the id ``a``."""
    if a not in G.arcs:
        raise UnknownArc(f"unknown arc {a!r}")
    if t < 0:
        raise ValueError("t must be non-negative")
    if t == 0:
        return G
    tail, head = G.arcs[a]
    new_v = fresh_ids(G.vertices, t, prefix=f"s{a}_")
    new_a = fresh_ids(G.arcs, t, prefix=f"{a}_")
    chain = [a] + new_a
    path = [tail] + new_v + [head]
    arcs = dict(G.arcs)
    for i, arc in enumerate(chain):
        arcs[arc] = (path[i], path[i + 1])
    rot = {v: list(seq) for v, seq in G.rotation.items()}
    rot[head] = [(chain[-1], -1) if h == (a, -1) else h for h in rot[head]]
    for i, v in enumerate(new_v):
        rot[v] = [(chain[i], -1), (chain[i + 1], 1)]
    return PlaneDigraph(list(G.vertices) + new_v, arcs, rot, G.outer, validate=False)


def iter_half_arcs(G: PlaneDigraph) -> Iterator[HalfArc]:
    for v in G.vertices:
        yield from G.rotation[v]
