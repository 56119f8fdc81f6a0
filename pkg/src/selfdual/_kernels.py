"""Compiled inner loops for low-weight codeword enumeration.

Each kernel walks the k-subsets of ``rows`` whose smallest index lies in
``[lo, hi)`` in lexicographic order, keeping prefix XORs so that every
subset costs one row XOR on average.  Splitting on the smallest index is
how callers partition work between threads.
"""

from __future__ import annotations

import numpy as np
from numba import njit

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


@njit(cache=True, nogil=True, inline="always")
def popcount64(x):
    x = x - ((x >> np.uint64(1)) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return int((x * _H01) >> np.uint64(56))


@njit(cache=True, nogil=True)
def layer_histogram(rows, k, lo, hi, max_total, min_other, hist):
    """Add to ``hist[k + wt(x)]`` for every subset XOR ``x`` with
    ``k + wt(x) <= max_total`` and ``wt(x) >= min_other``."""
    n = rows.shape[0]
    idx = np.empty(k, np.int64)
    pref = np.zeros(k + 1, np.uint64)
    for first in range(lo, hi):
        if n - first < k:
            break
        idx[0] = first
        pref[1] = rows[first]
        for t in range(1, k):
            idx[t] = first + t
            pref[t + 1] = pref[t] ^ rows[idx[t]]
        while True:
            w = popcount64(pref[k])
            if w >= min_other and k + w <= max_total:
                hist[k + w] += 1
            t = k - 1
            while t >= 1 and idx[t] == n - k + t:
                t -= 1
            if t < 1:
                break
            idx[t] += 1
            pref[t + 1] = pref[t] ^ rows[idx[t]]
            for u in range(t + 1, k):
                idx[u] = idx[u - 1] + 1
                pref[u + 1] = pref[u] ^ rows[idx[u]]


@njit(cache=True, nogil=True)
def layer_minimum(rows, k, lo, hi):
    """Smallest ``wt(x)`` over the subsets, with the subset as a bit mask."""
    n = rows.shape[0]
    idx = np.empty(k, np.int64)
    pref = np.zeros(k + 1, np.uint64)
    best = 1 << 30
    best_mask = np.uint64(0)
    for first in range(lo, hi):
        if n - first < k:
            break
        idx[0] = first
        pref[1] = rows[first]
        for t in range(1, k):
            idx[t] = first + t
            pref[t + 1] = pref[t] ^ rows[idx[t]]
        while True:
            w = popcount64(pref[k])
            if w < best:
                best = w
                best_mask = np.uint64(0)
                for u in range(k):
                    best_mask |= np.uint64(1) << np.uint64(idx[u])
            t = k - 1
            while t >= 1 and idx[t] == n - k + t:
                t -= 1
            if t < 1:
                break
            idx[t] += 1
            pref[t + 1] = pref[t] ^ rows[idx[t]]
            for u in range(t + 1, k):
                idx[u] = idx[u - 1] + 1
                pref[u + 1] = pref[u] ^ rows[idx[u]]
    return best, best_mask


@njit(cache=True, nogil=True)
def sigma_rows_from_bits(index, x):
    """Rows of sigma(v) where bit ``index[i, j]`` of ``x`` gives entry (i, j)."""
    n = index.shape[0]
    rows = np.zeros(n, np.uint64)
    for i in range(n):
        r = np.uint64(0)
        for j in range(n):
            if (x >> np.uint64(index[i, j])) & np.uint64(1):
                r |= np.uint64(1) << np.uint64(j)
        rows[i] = r
    return rows


@njit(cache=True, nogil=True)
def violation_count(rows):
    n = rows.shape[0]
    bad = 0
    for i in range(n):
        a = rows[i]
        if popcount64(a) & 1 == 0:
            bad += 1
        for j in range(i + 1, n):
            bad += popcount64(a & rows[j]) & 1
    return bad


@njit(cache=True, nogil=True)
def scan_self_dual(index, start, stop, out):
    """Write into ``out`` every x in [start, stop) with sigma sigma^T = I and
    return how many were written.

    sigma sigma^T is itself sigma of a group-ring element, so it is the
    identity iff its first row is e_1; only row 0 is tested.
    """
    n = index.shape[0]
    found = 0
    for x in range(start, stop):
        rows = sigma_rows_from_bits(index, np.uint64(x))
        a = rows[0]
        ok = popcount64(a) & 1 == 1
        if ok:
            for j in range(1, n):
                if popcount64(a & rows[j]) & 1:
                    ok = False
                    break
        if ok:
            out[found] = x
            found += 1
    return found
