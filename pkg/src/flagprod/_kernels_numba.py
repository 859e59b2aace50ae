"""Numba kernels, one compiled twin per reference kernel.

The closure keeps its own open-addressing table (FNV-1a over row words,
linear probing, rehash at load factor 3/5) because the hashed keys are whole
rows of runtime-dependent width; collisions are resolved by exact row
comparison, so hashing never affects results.
"""

from __future__ import annotations

import numpy as np
from numba import njit

_FNV_OFF = np.uint64(0xCBF29CE484222325)
_FNV_PRM = np.uint64(0x100000001B3)


@njit(cache=True)
def _closure_impl(start, maps, sort_from, cap):
    n0, w = start.shape
    ngen = maps.shape[0]

    store_cap = 1024
    while store_cap < 2 * n0:
        store_cap *= 2
    store = np.empty((store_cap, w), np.int32)
    count = 0

    bits = 12
    tsize = 1 << bits
    table = np.full(tsize, -1, np.int64)
    mask = np.uint64(tsize - 1)

    cand = np.empty((max(n0, 1024), w), np.int32)
    for i in range(n0):
        for j in range(w):
            cand[i, j] = start[i, j]
        for a in range(sort_from + 1, w):
            key = cand[i, a]
            b = a - 1
            while b >= sort_from and cand[i, b] > key:
                cand[i, b + 1] = cand[i, b]
                b -= 1
            cand[i, b + 1] = key
    ncand = n0

    lo = 0
    while ncand > 0:
        for ci in range(ncand):
            h = _FNV_OFF
            for j in range(w):
                h = (h ^ np.uint64(np.uint32(cand[ci, j]))) * _FNV_PRM
            slot = np.int64(h & mask)
            found = False
            while True:
                e = table[slot]
                if e < 0:
                    break
                eq = True
                for j in range(w):
                    if store[e, j] != cand[ci, j]:
                        eq = False
                        break
                if eq:
                    found = True
                    break
                slot += 1
                if slot == tsize:
                    slot = 0
            if found:
                continue
            if count >= cap:
                return store[:count], True
            if count == store_cap:
                store_cap *= 2
                ns = np.empty((store_cap, w), np.int32)
                ns[:count] = store[:count]
                store = ns
            for j in range(w):
                store[count, j] = cand[ci, j]
            table[slot] = count
            count += 1
            if 5 * count >= 3 * tsize:
                bits += 1
                tsize = 1 << bits
                table = np.full(tsize, -1, np.int64)
                mask = np.uint64(tsize - 1)
                for e2 in range(count):
                    h2 = _FNV_OFF
                    for j in range(w):
                        h2 = (h2 ^ np.uint64(np.uint32(store[e2, j]))) * _FNV_PRM
                    s2 = np.int64(h2 & mask)
                    while table[s2] >= 0:
                        s2 += 1
                        if s2 == tsize:
                            s2 = 0
                    table[s2] = e2

        hi = count
        nnew = hi - lo
        if nnew == 0:
            break
        need = nnew * ngen
        if cand.shape[0] < need:
            cand = np.empty((need, w), np.int32)
        ncand = 0
        for e in range(lo, hi):
            for g in range(ngen):
                for j in range(w):
                    cand[ncand, j] = maps[g, store[e, j]]
                for a in range(sort_from + 1, w):
                    key = cand[ncand, a]
                    b = a - 1
                    while b >= sort_from and cand[ncand, b] > key:
                        cand[ncand, b + 1] = cand[ncand, b]
                        b -= 1
                    cand[ncand, b + 1] = key
                ncand += 1
        lo = hi
    return store[:count], False


def closure(start, maps, sort_from, cap):
    start = np.ascontiguousarray(start, dtype=np.int32)
    maps = np.ascontiguousarray(maps, dtype=np.int32)
    return _closure_impl(start, maps, sort_from, cap)


@njit(cache=True)
def _pair_count_matrix(blocks, v):
    b, k = blocks.shape
    counts = np.zeros(v * v, np.int64)
    for bi in range(b):
        for i in range(k):
            base = np.int64(blocks[bi, i]) * v
            for j in range(i + 1, k):
                counts[base + blocks[bi, j]] += 1
    return counts


def pair_count_matrix(blocks, v):
    return _pair_count_matrix(np.ascontiguousarray(blocks, dtype=np.int32), v)


@njit(cache=True)
def _pair_count_subset(blocks, v, codes_sorted):
    b, k = blocks.shape
    ns = codes_sorted.shape[0]
    counts = np.zeros(ns, np.int64)
    for bi in range(b):
        for i in range(k):
            base = np.int64(blocks[bi, i]) * v
            for j in range(i + 1, k):
                code = base + blocks[bi, j]
                lo = 0
                hi = ns
                while lo < hi:
                    mid = (lo + hi) >> 1
                    if codes_sorted[mid] < code:
                        lo = mid + 1
                    else:
                        hi = mid
                if lo < ns and codes_sorted[lo] == code:
                    counts[lo] += 1
    return counts


def pair_count_subset(blocks, v, codes_sorted):
    return _pair_count_subset(
        np.ascontiguousarray(blocks, dtype=np.int32),
        v,
        np.ascontiguousarray(codes_sorted, dtype=np.int64),
    )


@njit(cache=True)
def _block_pair_class_counts(blocks, omega):
    b, k = blocks.shape
    out = np.zeros((b, 2), np.int64)
    for bi in range(b):
        for i in range(k):
            ai = blocks[bi, i] // omega
            be = blocks[bi, i] % omega
            for j in range(i + 1, k):
                sa = blocks[bi, j] // omega == ai
                sb = blocks[bi, j] % omega == be
                if sa != sb:
                    out[bi, 0] += 2
                elif not sa:
                    out[bi, 1] += 2
    return out


def block_pair_class_counts(blocks, omega):
    return _block_pair_class_counts(np.ascontiguousarray(blocks, dtype=np.int32), omega)


@njit(cache=True)
def _grid_profile_ok(blocks, omega, c, d):
    # exact grid-union test for gcd(c,d)=1: coincidence degrees (c,d) or
    # (d,c) for every point, plus k/(cd) components under shared coordinates
    b, k = blocks.shape
    ok = np.zeros(b, np.bool_)
    m = k // (c * d)
    if m * c * d != k:
        return ok
    comp = np.empty(k, np.int64)
    for bi in range(b):
        plain = True
        swapped = True
        for i in range(k):
            ai = blocks[bi, i] // omega
            be = blocks[bi, i] % omega
            ca = 0
            cb = 0
            for j in range(k):
                if blocks[bi, j] // omega == ai:
                    ca += 1
                if blocks[bi, j] % omega == be:
                    cb += 1
            if ca != c or cb != d:
                plain = False
            if ca != d or cb != c:
                swapped = False
            if not (plain or swapped):
                break
        if not (plain or swapped):
            continue
        for i in range(k):
            comp[i] = i
        changed = True
        while changed:
            changed = False
            for i in range(k):
                ai = blocks[bi, i] // omega
                be = blocks[bi, i] % omega
                for j in range(i + 1, k):
                    if blocks[bi, j] // omega == ai or blocks[bi, j] % omega == be:
                        if comp[j] < comp[i]:
                            comp[i] = comp[j]
                            changed = True
                        elif comp[i] < comp[j]:
                            comp[j] = comp[i]
                            changed = True
        roots = 0
        for i in range(k):
            if comp[i] == i:
                roots += 1
        ok[bi] = roots == m
    return ok


def grid_profile_ok(blocks, omega, c, d):
    return _grid_profile_ok(np.ascontiguousarray(blocks, dtype=np.int32), omega, c, d)
