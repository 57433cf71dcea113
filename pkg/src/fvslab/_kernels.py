"""Array kernels for the hot loops, compiled with numba when available.

Every kernel is written once in plain numpy-compatible Python.  When numba
imports cleanly and ``FVSLAB_NO_NUMBA`` is unset (or ``0``), the functions
are wrapped with ``njit``; otherwise the plain versions run as-is.  Both
paths produce identical results, which the test suite checks.
"""

from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("FVSLAB_NO_NUMBA", "0").strip().lower() not in ("", "0", "false", "no")

try:
    if _DISABLED:
        raise ImportError("disabled by FVSLAB_NO_NUMBA")
    from numba import njit as _njit

    USING_NUMBA = True
except ImportError:  # pragma: no cover - depends on environment
    _njit = None
    USING_NUMBA = False


def _maybe_jit(fn):
    if USING_NUMBA:
        return _njit(cache=True, nogil=True)(fn)
    return fn


# ---------------------------------------------------------------------------
# BFS / digirth


def _bfs_csr(indptr, indices, src, alive):
    n = indptr.shape[0] - 1
    dist = np.full(n, -1, dtype=np.int64)
    if not alive[src]:
        return dist
    queue = np.empty(n, dtype=np.int64)
    head = 0
    tail = 0
    dist[src] = 0
    queue[tail] = src
    tail += 1
    while head < tail:
        u = queue[head]
        head += 1
        for k in range(indptr[u], indptr[u + 1]):
            w = indices[k]
            if alive[w] and dist[w] < 0:
                dist[w] = dist[u] + 1
                queue[tail] = w
                tail += 1
    return dist


bfs_csr = _maybe_jit(_bfs_csr)


def _digirth_csr(indptr, indices, alive):
    # min over arcs (u, s) of 1 + d(s, u); 0 encodes "acyclic"
    n = indptr.shape[0] - 1
    best = 0
    queue = np.empty(n, dtype=np.int64)
    dist = np.empty(n, dtype=np.int64)
    for s in range(n):
        if not alive[s]:
            continue
        for i in range(n):
            dist[i] = -1
        dist[s] = 0
        head = 0
        tail = 1
        queue[0] = s
        found = 0
        while head < tail and found == 0:
            u = queue[head]
            head += 1
            if best > 0 and dist[u] + 1 >= best:
                break
            for k in range(indptr[u], indptr[u + 1]):
                w = indices[k]
                if not alive[w]:
                    continue
                if w == s:
                    found = dist[u] + 1
                    break
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue[tail] = w
                    tail += 1
        if found > 0 and (best == 0 or found < best):
            best = found
            if best == 1:
                return 1
    return best


digirth_csr = _maybe_jit(_digirth_csr)


# ---------------------------------------------------------------------------
# acyclicity and brute-force FVS over bit masks (n <= 62)


def _acyclic_mask(n, succ_mask, removed):
    # Kahn's algorithm on the subgraph induced by ~removed
    alive = ((1 << n) - 1) & ~removed
    while alive != 0:
        progress = False
        for v in range(n):
            if (alive >> v) & 1:
                if (succ_mask[v] & alive) == 0:
                    alive &= ~(1 << v)
                    progress = True
        if not progress:
            return False
    return True


acyclic_mask = _maybe_jit(_acyclic_mask)


def _fvs_brute_mask(n, succ_mask):
    # subsets by increasing size, each size in increasing mask order
    full = (1 << n) - 1
    limit = 1 << n
    for k in range(0, n + 1):
        x = (1 << k) - 1
        while x < limit:
            alive = full & ~x
            while alive != 0:
                progress = False
                for v in range(n):
                    if (alive >> v) & 1:
                        if (succ_mask[v] & alive) == 0:
                            alive &= ~(1 << v)
                            progress = True
                if not progress:
                    break
            if alive == 0:
                return x
            if x == 0:
                break
            c = x & -x
            r = x + c
            x = (((r ^ x) >> 2) // c) | r
    return full


fvs_brute_mask = _maybe_jit(_fvs_brute_mask)


# ---------------------------------------------------------------------------
# densest vertex subset for m_S / (n_S - 1), exhaustive over masks


def _densest_subset(n, adj_mask):
    # returns (best_mask, best_m, best_n); ties keep the first mask found
    best_mask = 0
    best_m = 0
    best_n = 0
    limit = 1 << n
    for mask in range(1, limit):
        ns = 0
        ms = 0
        x = mask
        while x != 0:
            low = x & -x
            v = 0
            t = low
            while t > 1:
                t >>= 1
                v += 1
            ns += 1
            nb = adj_mask[v] & mask
            while nb != 0:
                nb &= nb - 1
                ms += 1
            x ^= low
        if ns < 2:
            continue
        ms //= 2
        # compare ms/(ns-1) > best_m/(best_n-1)
        if best_n == 0 or ms * (best_n - 1) > best_m * (ns - 1):
            best_mask = mask
            best_m = ms
            best_n = ns
    return best_mask, best_m, best_n


densest_subset = _maybe_jit(_densest_subset)


# ---------------------------------------------------------------------------
# pure fallbacks kept addressable for the benchmark and equivalence tests

PURE = {
    "bfs_csr": _bfs_csr,
    "digirth_csr": _digirth_csr,
    "acyclic_mask": _acyclic_mask,
    "fvs_brute_mask": _fvs_brute_mask,
    "densest_subset": _densest_subset,
}

ACCEL = {
    "bfs_csr": bfs_csr,
    "digirth_csr": digirth_csr,
    "acyclic_mask": acyclic_mask,
    "fvs_brute_mask": fvs_brute_mask,
    "densest_subset": densest_subset,
}
