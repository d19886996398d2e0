"""Numba kernels for codeword enumeration and orthogonality scanning.

Codewords live in two 64-bit words: the left and right halves of a
standard-form [I | A] generator (each half <= 64 columns, little-endian
bits). All kernels release the GIL so shard workers can run in threads.
"""

from __future__ import annotations

import numpy as np
from numba import njit

_U1 = np.uint64(1)
_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


@njit(cache=True, nogil=True, inline="always")
def _popcount64(x):
    x = x - ((x >> _U1) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return (x * _H01) >> np.uint64(56)


@njit(cache=True, nogil=True)
def subset_weight_counts(left, right, cap, counts, dups, track_dups):
    """Accumulate weights of all row combinations of size 1..cap.

    left/right: uint64 halves per generator row. counts[w] += 1 for every
    visited codeword of total weight w; when track_dups and the right half
    also has weight <= cap, dups[w] += 1 (the codeword will be seen again
    in the swapped-halves pass).
    """
    k = left.shape[0]
    chosen = np.empty(cap, np.int64)
    xl = np.zeros(cap + 1, np.uint64)
    xr = np.zeros(cap + 1, np.uint64)
    ucap = np.uint64(cap)
    d = 0
    nxt = 0
    while True:
        if d < cap and nxt < k:
            chosen[d] = nxt
            xl[d + 1] = xl[d] ^ left[nxt]
            xr[d + 1] = xr[d] ^ right[nxt]
            d += 1
            wr = _popcount64(xr[d])
            w = _popcount64(xl[d]) + wr
            counts[w] += 1
            if track_dups and wr <= ucap:
                dups[w] += 1
            nxt += 1
        else:
            if d == 0:
                break
            d -= 1
            nxt = chosen[d] + 1


@njit(cache=True, nogil=True)
def find_weight_witness(left, right, cap, target):
    """First row combination (size <= cap) whose codeword weight == target.

    Returns the chosen row indices, or an empty array if none exists within
    the cap.
    """
    k = left.shape[0]
    chosen = np.empty(cap, np.int64)
    xl = np.zeros(cap + 1, np.uint64)
    xr = np.zeros(cap + 1, np.uint64)
    utarget = np.uint64(target)
    d = 0
    nxt = 0
    while True:
        if d < cap and nxt < k:
            chosen[d] = nxt
            xl[d + 1] = xl[d] ^ left[nxt]
            xr[d + 1] = xr[d] ^ right[nxt]
            d += 1
            if _popcount64(xl[d]) + _popcount64(xr[d]) == utarget:
                return chosen[:d].copy()
            nxt += 1
        else:
            if d == 0:
                break
            d -= 1
            nxt = chosen[d] + 1
    return np.empty(0, np.int64)


@njit(cache=True, nogil=True)
def full_weight_counts(left, right, counts):
    """Weight histogram of the full code span (Gray-code walk over 2^k)."""
    k = left.shape[0]
    cl = np.uint64(0)
    cr = np.uint64(0)
    g_prev = np.uint64(0)
    total = np.uint64(1) << np.uint64(k)
    i = np.uint64(1)
    while i < total:
        g = i ^ (i >> _U1)
        ch = g ^ g_prev
        g_prev = g
        j = _popcount64(ch - _U1)  # index of the single changed bit
        cl ^= left[j]
        cr ^= right[j]
        counts[_popcount64(cl) + _popcount64(cr)] += 1
        i += _U1
    counts[0] += 1


@njit(cache=True, nogil=True)
def orthogonal_scan(pattern, draws, out):
    """out[t] = 1 iff M·Mᵀ = I over GF(2), M built from bit-vector draws[t].

    pattern: (n, n) coefficient positions; draws: packed coefficient bits.
    """
    n = pattern.shape[0]
    rows = np.empty(n, np.uint64)
    for t in range(draws.shape[0]):
        bits = np.uint64(draws[t])
        for i in range(n):
            v = np.uint64(0)
            for j in range(n):
                v |= ((bits >> np.uint64(pattern[i, j])) & _U1) << np.uint64(j)
            rows[i] = v
        ok = True
        for i in range(n):
            if _popcount64(rows[i]) & _U1 != _U1:
                ok = False
                break
            for j in range(i):
                if _popcount64(rows[i] & rows[j]) & _U1:
                    ok = False
                    break
            if not ok:
                break
        out[t] = 1 if ok else 0


@njit(cache=True, nogil=True)
def lift_scan(pattern, abits, betas, out):
    """Valid u-plane choices for a lift of an orthogonal base matrix.

    Given M(a) with M(a)·M(a)ᵀ = I, the lift M(a) + u·M(b) is orthogonal
    over F2+uF2 iff M(a)·M(b)ᵀ + M(b)·M(a)ᵀ = 0. out[t] = 1 iff betas[t]
    satisfies that condition (the diagonal vanishes identically).
    """
    n = pattern.shape[0]
    rows_a = np.empty(n, np.uint64)
    ua = np.uint64(abits)
    for i in range(n):
        v = np.uint64(0)
        for j in range(n):
            v |= ((ua >> np.uint64(pattern[i, j])) & _U1) << np.uint64(j)
        rows_a[i] = v
    rows_b = np.empty(n, np.uint64)
    for t in range(betas.shape[0]):
        bits = np.uint64(betas[t])
        for i in range(n):
            v = np.uint64(0)
            for j in range(n):
                v |= ((bits >> np.uint64(pattern[i, j])) & _U1) << np.uint64(j)
            rows_b[i] = v
        ok = True
        for i in range(n):
            for j in range(i):
                p = (_popcount64(rows_a[i] & rows_b[j]) ^ _popcount64(rows_b[i] & rows_a[j])) & _U1
                if p:
                    ok = False
                    break
            if not ok:
                break
        out[t] = 1 if ok else 0
