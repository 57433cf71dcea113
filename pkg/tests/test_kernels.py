from __future__ import annotations

import os
import subprocess
import sys

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from fvslab import _kernels as K
from fvslab.families import gen_random_plane_digraph


def _csr(G) -> tuple:
    idx = {v: i for i, v in enumerate(G.vertices)}
    succ = [[] for _ in G.vertices]
    for t, h in G.arcs.values():
        succ[idx[t]].append(idx[h])
    indptr = np.zeros(G.n + 1, dtype=np.int64)
    for i, s in enumerate(succ):
        indptr[i + 1] = indptr[i] + len(s)
    return indptr, np.array([w for s in succ for w in s], dtype=np.int64)


def _masks(G) -> tuple:
    idx = {v: i for i, v in enumerate(G.vertices)}
    succ = np.zeros(G.n, dtype=np.int64)
    adj = np.zeros(G.n, dtype=np.int64)
    for t, h in G.arcs.values():
        succ[idx[t]] |= 1 << idx[h]
        if t != h:
            adj[idx[t]] |= 1 << idx[h]
            adj[idx[h]] |= 1 << idx[t]
    return succ, adj


graphs = st.builds(gen_random_plane_digraph, st.integers(1, 12), st.integers(0, 10**6))


@given(graphs)
def test_csr_kernels_agree(G) -> None:
    indptr, indices = _csr(G)
    alive = np.ones(G.n, dtype=np.bool_)
    assert int(K.PURE["digirth_csr"](indptr, indices, alive)) == int(K.ACCEL["digirth_csr"](indptr, indices, alive))
    a = K.PURE["bfs_csr"](indptr, indices, 0, alive)
    b = K.ACCEL["bfs_csr"](indptr, indices, 0, alive)
    assert np.array_equal(np.asarray(a), np.asarray(b))


@given(graphs, st.integers(0, 2**12 - 1))
def test_mask_kernels_agree(G, removed: int) -> None:
    succ, adj = _masks(G)
    removed &= (1 << G.n) - 1
    assert bool(K.PURE["acyclic_mask"](G.n, succ, removed)) == bool(K.ACCEL["acyclic_mask"](G.n, succ, removed))
    assert int(K.PURE["fvs_brute_mask"](G.n, succ)) == int(K.ACCEL["fvs_brute_mask"](G.n, succ))
    pa, pb = K.PURE["densest_subset"](G.n, adj), K.ACCEL["densest_subset"](G.n, adj)
    assert tuple(np.atleast_1d(pa)) == tuple(np.atleast_1d(pb))


def test_fallback_switch() -> None:
    code = "from fvslab import _kernels as K; print(K.USING_NUMBA)"
    env = dict(os.environ, FVSLAB_NO_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "False"
