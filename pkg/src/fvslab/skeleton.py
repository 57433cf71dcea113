"""Undirected plane multigraphs (skeletons) and their corners.

A skeleton stores its edges as arcs of a :class:`PlaneDigraph` so that the
rotation system, face tracing and Euler checks are shared.  The arc
direction only names the two half-edges: ``(e, +1)`` is token ``<e>a`` at
the first endpoint and ``(e, -1)`` is ``<e>b`` at the second.

A corner is keyed ``(v, h)`` where ``h`` is the half-edge that precedes the
corner in the clockwise rotation at ``v``; an isolated vertex has the single
corner ``(v, None)``.  A degree-1 vertex has one corner and a vertex carrying
only a loop has two, one per half-edge of the loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .drawing import embed_straight_line
from .plane import PlaneDigraph


@dataclass(frozen=True)
class Corner:
    key: tuple
    vertex: object
    face: object  # walk index, or ("iso", v) for an isolated vertex


def half_token(h) -> str:
    if h is None:
        return "-"
    e, s = h
    return f"{e}{'a' if s == 1 else 'b'}"


class Skeleton:
    """Embedded undirected plane multigraph; loops allowed."""

    def __init__(
        self,
        vertices: Iterable,
        edges: Mapping,
        rotation: Mapping,
        outer: tuple | None = None,
        *,
        validate: bool = True,
    ):
        self.emb = PlaneDigraph(vertices, edges, rotation, outer, validate=validate)
        self._corners: list | None = None

    @classmethod
    def from_digraph(cls, G: PlaneDigraph) -> "Skeleton":
        return cls(G.vertices, G.arcs, G.rotation, G.outer, validate=False)

    @classmethod
    def from_coords(cls, coords: Mapping, edges: Mapping) -> "Skeleton":
        return cls.from_digraph(embed_straight_line(coords, edges))

    # ------------------------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return self.emb.vertices

    @property
    def edges(self) -> dict:
        return self.emb.arcs

    @property
    def rotation(self) -> dict:
        return self.emb.rotation

    @property
    def outer(self):
        return self.emb.outer

    @property
    def n(self) -> int:
        return self.emb.n

    @property
    def m(self) -> int:
        return self.emb.m

    def degree(self, v) -> int:
        return len(self.emb.rotation[v])

    def max_degree(self) -> int:
        return max((self.degree(v) for v in self.vertices), default=0)

    def loops(self) -> list:
        return [e for e, (u, v) in self.edges.items() if u == v]

    def is_connected(self) -> bool:
        return len(self.emb.components()) <= 1

    def components(self) -> list:
        return self.emb.components()

    def face_count(self) -> int:
        return self.emb.face_count()

    def neighbours(self, v) -> list:
        out = []
        for e, s in self.emb.rotation[v]:
            u, w = self.edges[e]
            out.append(w if s == 1 else u)
        return out

    def undirected_edges(self) -> list:
        return [(u, v) for u, v in self.edges.values()]

    # ------------------------------------------------------------------
    # corners

    def corners(self) -> list:
        if self._corners is None:
            out = []
            emb = self.emb
            for v in self.vertices:
                seq = emb.rotation[v]
                if not seq:
                    out.append(Corner((v, None), v, ("iso", v)))
                    continue
                for h in seq:
                    out.append(Corner((v, h), v, emb.face_of(emb.cw_next(h))))
            self._corners = out
        return self._corners

    def corner_keys(self) -> list:
        return [c.key for c in self.corners()]

    def corner_face(self, key) -> object:
        v, h = key
        if h is None:
            return ("iso", v)
        return self.emb.face_of(self.emb.cw_next(h))

    def vertex_corners(self, v) -> list:
        seq = self.emb.rotation[v]
        if not seq:
            return [(v, None)]
        return [(v, h) for h in seq]

    def face_keys(self) -> list:
        """Traced boundary walks plus one pseudo-face per isolated vertex."""
        keys: list = list(range(len(self.emb.faces)))
        keys += [("iso", v) for v in self.vertices if not self.emb.rotation[v]]
        return keys

    def face_corners(self, fkey) -> list:
        """Corners met along a boundary walk, in walk order."""
        if isinstance(fkey, tuple):
            return [(fkey[1], None)]
        emb = self.emb
        return [(emb.half_vertex(d), emb.cw_prev(d)) for d in emb.faces[fkey].boundary]

    def outer_walk(self):
        if self.outer is None:
            return None
        return self.emb.outer_face()

    def corner_from_token(self, v, tok: str) -> tuple:
        if tok == "-":
            return (v, None)
        for h in self.emb.rotation[v]:
            if half_token(h) == tok:
                return (v, h)
        raise KeyError(f"vertex {v!r} has no half-edge {tok!r}")

    def __repr__(self) -> str:
        return f"Skeleton(n={self.n}, m={self.m}, f={self.face_count()})"


def cycle_skeleton(length: int, start=0) -> Skeleton:
    """Undirected cycle on vertices start..start+length-1 drawn clockwise."""
    import math

    if length < 3:
        raise ValueError("use a loop or a digon explicitly for length < 3")
    coords = {start + i: (math.cos(math.pi / 2 - 2 * math.pi * i / length), math.sin(math.pi / 2 - 2 * math.pi * i / length)) for i in range(length)}
    edges = {i: (start + i, start + (i + 1) % length) for i in range(length)}
    return Skeleton.from_coords(coords, edges)


def path_skeleton(k: int) -> Skeleton:
    """Path on k vertices 0..k-1 along a horizontal line."""
    coords = {i: (float(i), 0.0) for i in range(k)}
    edges = {i: (i, i + 1) for i in range(k - 1)}
    if not edges:
        return Skeleton([0], {}, {0: []})
    return Skeleton.from_coords(coords, edges)


def subdivide_edge(S: Skeleton, e, x, e_new) -> Skeleton:
    """Insert vertex ``x`` on edge ``e = (u, w)``: ``e`` becomes ``(u, x)``
    and ``e_new`` is ``(x, w)``."""
    u, w = S.edges[e]
    edges = dict(S.edges)
    edges[e] = (u, x)
    edges[e_new] = (x, w)
    rot = {v: list(seq) for v, seq in S.rotation.items()}
    rot[w] = [(e_new, -1) if hh == (e, -1) else hh for hh in rot[w]]
    rot[x] = [(e, -1), (e_new, 1)]
    return Skeleton(list(S.vertices) + [x], edges, rot, S.outer)


def add_vertex_in_face(S: Skeleton, x, corners: list, edge_ids: list) -> Skeleton:
    """New vertex ``x`` inside one face, joined to the given corners
    (listed in boundary-walk order) by edges ``(v, x)`` with the given ids."""
    edges = dict(S.edges)
    rot = {v: list(seq) for v, seq in S.rotation.items()}
    faces = {S.corner_face(c) for c in corners}
    if len(faces) != 1:
        raise ValueError("corners must lie in a single face")
    for (v, hh), e in zip(corners, edge_ids):
        edges[e] = (v, x)
        seq = rot[v]
        seq.insert(seq.index(hh) + 1 if hh is not None else 0, (e, 1))
    rot[x] = [(e, -1) for e in reversed(edge_ids)]
    return Skeleton(list(S.vertices) + [x], edges, rot, S.outer)
