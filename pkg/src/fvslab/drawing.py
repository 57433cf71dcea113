"""Coordinates: rotation systems from straight-line drawings, and Tutte
layouts for pictures."""

from __future__ import annotations

import math
from typing import Mapping

import numpy as np

from .plane import LEFT, RIGHT, PlaneDigraph, sort_key


def _angle(p, q) -> float:
    return math.atan2(q[1] - p[1], q[0] - p[0])


def rotation_from_coords(coords: Mapping, arcs: Mapping) -> dict:
    """Clockwise rotation (decreasing angle) of every vertex."""
    rot: dict = {v: [] for v in coords}
    for a, (t, h) in arcs.items():
        rot[t].append((_angle(coords[t], coords[h]), (a, 1)))
        rot[h].append((_angle(coords[h], coords[t]), (a, -1)))
    out = {}
    for v, items in rot.items():
        items.sort(key=lambda it: (-it[0], sort_key(it[1][0]), -it[1][1]))
        out[v] = [h for _ang, h in items]
    return out


def outer_from_coords(coords: Mapping, arcs: Mapping, rotation: Mapping) -> tuple | None:
    """Arc side of the face seen when looking up from the topmost vertex."""
    if not arcs:
        return None
    cands = [v for v in coords if rotation.get(v)]
    top = max(cands, key=lambda v: (coords[v][1], -coords[v][0]))
    seq = rotation[top]
    ang = []
    for a, s in seq:
        other = arcs[a][1] if s == 1 else arcs[a][0]
        ang.append(math.degrees(_angle(coords[top], coords[other])))
    k = len(seq)
    for i in range(k):
        t1, t2 = ang[i], ang[(i + 1) % k]
        sweep = (t1 - t2) % 360.0 or 360.0
        if 0.0 < (t1 - 90.0) % 360.0 < sweep or k == 1:
            a, s = seq[(i + 1) % k]
            return (a, LEFT if s == 1 else RIGHT)
    a, s = seq[0]
    return (a, LEFT if s == 1 else RIGHT)


def embed_straight_line(coords: Mapping, arcs: Mapping, *, validate: bool = True) -> PlaneDigraph:
    rot = rotation_from_coords(coords, arcs)
    outer = outer_from_coords(coords, arcs, rot)
    return PlaneDigraph(list(coords), arcs, rot, outer, validate=validate)


# ----------------------------------------------------------------------
# Tutte-style layout


def tutte_layout(G: PlaneDigraph, iterations: int = 0) -> dict:
    """Outer face boundary pinned on a regular polygon; every other vertex
    placed at the barycentre of its neighbours (one linear solve).
    Deterministic for identical input."""
    verts = list(G.vertices)
    if not verts:
        return {}
    index = {v: i for i, v in enumerate(verts)}
    pinned: dict = {}
    if G.outer is not None and G.m:
        walk = G.faces[G.outer_face()].boundary
        ring = []
        for h in walk:
            v = G.half_vertex(h)
            if v not in ring:
                ring.append(v)
        k = len(ring)
        for i, v in enumerate(ring):
            th = math.pi / 2 - 2 * math.pi * i / k
            pinned[v] = (math.cos(th), math.sin(th))
    n = len(verts)
    A = np.zeros((n, n))
    bx = np.zeros(n)
    by = np.zeros(n)
    nbrs: dict = {v: set() for v in verts}
    for t, h in G.arcs.values():
        if t != h:
            nbrs[t].add(h)
            nbrs[h].add(t)
    for v in verts:
        i = index[v]
        if v in pinned or not nbrs[v]:
            A[i, i] = 1.0
            x, y = pinned.get(v, (0.0, 0.0))
            if v not in pinned:
                x, y = (-1.2 + 0.1 * i, -1.2)
            bx[i], by[i] = x, y
            continue
        A[i, i] = len(nbrs[v])
        for w in nbrs[v]:
            A[i, index[w]] -= 1.0
    try:
        xs = np.linalg.solve(A, bx)
        ys = np.linalg.solve(A, by)
    except np.linalg.LinAlgError:
        # a component with no pinned vertex: fall back to a circle
        return {v: (math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n)) for i, v in enumerate(verts)}
    return {v: (float(xs[index[v]]), float(ys[index[v]])) for v in verts}
