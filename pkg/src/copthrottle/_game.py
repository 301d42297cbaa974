"""Retrograde kernels for the k-cop game.

A cop configuration is a sorted multiset of ``k`` vertices.  Configurations
are indexed by the combinatorial number system: the multiset
``a_0 <= ... <= a_{k-1}`` maps to the strict combination ``b_i = a_i + i``
and gets rank ``sum_i C(b_i, i + 1)``.

``values[c, r]`` is the number of rounds until capture when the cops stand on
configuration ``c``, the robber on ``r`` and the cops are about to move
(``0`` when ``r`` is occupied, :data:`UNRESOLVED` when the robber survives
the horizon).
"""
from __future__ import annotations

from itertools import combinations_with_replacement, product

import numpy as np

from . import _accel
from ._accel import prange

UNRESOLVED = np.int32(2**30)


def binomial_table(n: int, k: int) -> np.ndarray:
    top = n + k
    t = np.zeros((top + 1, k + 2), dtype=np.int64)
    for a in range(top + 1):
        t[a, 0] = 1
        for b in range(1, min(a, k + 1) + 1):
            t[a, b] = t[a - 1, b - 1] + t[a - 1, b]
    return t


def n_configs(n: int, k: int) -> int:
    from math import comb

    return comb(n + k - 1, k)


def enumerate_configs(n: int, k: int, binom: np.ndarray) -> np.ndarray:
    """All multisets as rows, row index equal to the multiset's rank."""
    raw = np.array(list(combinations_with_replacement(range(n), k)), dtype=np.int64).reshape(-1, k)
    ranks = np.zeros(len(raw), dtype=np.int64)
    for i in range(k):
        ranks += binom[raw[:, i] + i, i + 1]
    out = np.empty_like(raw)
    out[ranks] = raw
    return out


def occupancy(configs: np.ndarray, n: int) -> np.ndarray:
    occ = np.zeros((len(configs), n), dtype=np.bool_)
    rows = np.repeat(np.arange(len(configs)), configs.shape[1])
    occ[rows, configs.ravel()] = True
    return occ


def closed_csr(closed_nbrs: list[list[int]]) -> tuple[np.ndarray, np.ndarray]:
    ptr = np.zeros(len(closed_nbrs) + 1, dtype=np.int64)
    ptr[1:] = np.cumsum([len(x) for x in closed_nbrs])
    idx = np.array([v for x in closed_nbrs for v in x], dtype=np.int64)
    return ptr, idx


# ---------------------------------------------------------------- successors

@_accel.njit
def _successors_numba(configs, cn_ptr, cn_idx, binom):
    M, k = configs.shape
    bound = np.empty(M + 1, np.int64)
    bound[0] = 0
    for c in range(M):
        p = 1
        for i in range(k):
            v = configs[c, i]
            p *= cn_ptr[v + 1] - cn_ptr[v]
        bound[c + 1] = bound[c] + p
    buf = np.empty(bound[M], np.int64)
    ptr = np.zeros(M + 1, np.int64)
    digits = np.zeros(k, np.int64)
    tup = np.empty(k, np.int64)
    out = 0
    for c in range(M):
        start = out
        for i in range(k):
            digits[i] = 0
        while True:
            for i in range(k):
                v = configs[c, i]
                tup[i] = cn_idx[cn_ptr[v] + digits[i]]
            tup.sort()
            rank = 0
            for i in range(k):
                rank += binom[tup[i] + i, i + 1]
            buf[out] = rank
            out += 1
            i = k - 1
            while i >= 0:
                v = configs[c, i]
                digits[i] += 1
                if digits[i] < cn_ptr[v + 1] - cn_ptr[v]:
                    break
                digits[i] = 0
                i -= 1
            if i < 0:
                break
        seg = np.sort(buf[start:out])
        w = start
        for j in range(seg.shape[0]):
            if j == 0 or seg[j] != seg[j - 1]:
                buf[w] = seg[j]
                w += 1
        out = w
        ptr[c + 1] = out
    return ptr, buf[:out].copy()


def _successors_python(configs, closed_nbrs, binom):
    k = configs.shape[1]
    ptr = [0]
    idx: list[int] = []
    for row in configs.tolist():
        succ = set()
        for moved in product(*(closed_nbrs[v] for v in row)):
            t = sorted(moved)
            succ.add(sum(int(binom[t[i] + i, i + 1]) for i in range(k)))
        idx.extend(sorted(succ))
        ptr.append(len(idx))
    return np.array(ptr, dtype=np.int64), np.array(idx, dtype=np.int64)


def successors(configs, closed_nbrs, binom):
    """CSR lists of configurations reachable in one cop move (passing allowed)."""
    if _accel.use_numba():
        cn_ptr, cn_idx = closed_csr(closed_nbrs)
        return _successors_numba(configs, cn_ptr, cn_idx, binom)
    return _successors_python(configs, closed_nbrs, binom)


# ---------------------------------------------------------------- value iteration

@_accel.njit(parallel=True)
def _solve_numba(succ_ptr, succ_idx, occ, cn_ptr, cn_idx, max_rounds):
    M, n = occ.shape
    f = np.empty((M, n), np.int32)
    for c in range(M):
        for r in range(n):
            f[c, r] = 0 if occ[c, r] else UNRESOLVED
    p = 0
    while p < max_rounds:
        p += 1
        changed = 0
        for c in prange(M):
            for r in range(n):
                if f[c, r] != UNRESOLVED:
                    continue
                for j in range(succ_ptr[c], succ_ptr[c + 1]):
                    c2 = succ_idx[j]
                    ok = True
                    if not occ[c2, r]:
                        for t in range(cn_ptr[r], cn_ptr[r + 1]):
                            r2 = cn_idx[t]
                            # states settled in this sweep hold p and fail the test
                            if not occ[c2, r2] and f[c2, r2] > p - 1:
                                ok = False
                                break
                    if ok:
                        f[c, r] = p
                        changed += 1
                        break
        if changed == 0:
            break
    return f


def _solve_numpy(succ_ptr, succ_idx, occ, closed_nbrs, max_rounds):
    big = np.int64(UNRESOLVED)
    f = np.where(occ, 0, big).astype(np.int64)
    starts = succ_ptr[:-1]
    p = 0
    while p < max_rounds:
        p += 1
        # robber's best reply after the cops reach configuration c2
        fm = np.where(occ, -1, f)
        reply = np.empty_like(f)
        for r, nb in enumerate(closed_nbrs):
            reply[:, r] = fm[:, nb].max(axis=1)
        reply[occ] = 0
        best = np.minimum.reduceat(reply[succ_idx], starts, axis=0)
        new = np.where(occ, 0, np.where(best >= big, big, best + 1))
        if np.array_equal(new, f):
            break
        f = new
    return f.astype(np.int32)


def solve_values(succ_ptr, succ_idx, occ, closed_nbrs, max_rounds: int) -> np.ndarray:
    if _accel.use_numba():
        cn_ptr, cn_idx = closed_csr(closed_nbrs)
        return _solve_numba(succ_ptr, succ_idx, occ, cn_ptr, cn_idx, max_rounds)
    return _solve_numpy(succ_ptr, succ_idx, occ, closed_nbrs, max_rounds)


def config_capture_times(values: np.ndarray) -> np.ndarray:
    """capt(G; c) per configuration: the robber picks the worst start."""
    return values.max(axis=1) if values.shape[1] else np.zeros(values.shape[0], np.int32)
