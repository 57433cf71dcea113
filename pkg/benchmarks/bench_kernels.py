"""Time the compiled kernels against their plain-Python versions.

Run with ``python3 benchmarks/bench_kernels.py``.  Each kernel is called once
to trigger compilation, then timed over a few repeats; the two outputs must
agree.
"""

from __future__ import annotations

import time

import numpy as np

from fvslab import _kernels as K
from fvslab.families import gen_random_plane_digraph, gen_small_digirth_family


def _csr(G):
    verts = list(G.vertices)
    idx = {v: i for i, v in enumerate(verts)}
    succ = [[] for _ in verts]
    for t, h in G.arcs.values():
        succ[idx[t]].append(idx[h])
    indptr = np.zeros(len(verts) + 1, dtype=np.int64)
    for i, s in enumerate(succ):
        indptr[i + 1] = indptr[i] + len(s)
    indices = np.array([w for s in succ for w in s], dtype=np.int64)
    return indptr, indices, succ


def _masks(G):
    verts = list(G.vertices)
    idx = {v: i for i, v in enumerate(verts)}
    succ = np.zeros(len(verts), dtype=np.int64)
    adj = np.zeros(len(verts), dtype=np.int64)
    for t, h in G.arcs.values():
        succ[idx[t]] |= 1 << idx[h]
        if t != h:
            adj[idx[t]] |= 1 << idx[h]
            adj[idx[h]] |= 1 << idx[t]
    return succ, adj


def _time(fn, args, repeats: int = 3) -> tuple:
    out = fn(*args)
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def _same(a, b) -> bool:
    if isinstance(a, np.ndarray):
        return bool(np.array_equal(a, b))
    if isinstance(a, tuple):
        return all(_same(x, y) for x, y in zip(a, b))
    return a == b


def main() -> None:
    _S, C = gen_small_digirth_family(8, 2)
    indptr, indices, _ = _csr(C.graph)
    alive = np.ones(C.graph.n, dtype=np.bool_)
    small = gen_random_plane_digraph(14, 3)
    succ, adj = _masks(small)
    cases = {
        "bfs_csr": (indptr, indices, 0, alive),
        "digirth_csr": (indptr, indices, alive),
        "acyclic_mask": (small.n, succ, 0),
        "fvs_brute_mask": (small.n, succ),
        "densest_subset": (small.n, adj),
    }
    print(f"numba active: {K.USING_NUMBA}")
    print(f"{'kernel':16} {'pure s':>10} {'accel s':>10} {'speedup':>8} same")
    for name, args in cases.items():
        tp, op = _time(K.PURE[name], args, repeats=1)
        ta, oa = _time(K.ACCEL[name], args)
        print(f"{name:16} {tp:10.4f} {ta:10.4f} {tp / max(ta, 1e-9):8.1f} {_same(op, oa)}")


if __name__ == "__main__":
    main()
