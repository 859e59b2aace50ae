"""Pure numpy reference kernels.

Rows are int32 vectors of point indices.  Orbit closure canonicalizes each
row by sorting the tail row[sort_from:] (sort_from=0 for blocks, 1 for flags,
whose leading entry is the incident point and must stay put).  Dedup keys are
the raw row bytes, so equality is exact.
"""

from __future__ import annotations

import numpy as np


def closure(start: np.ndarray, maps: np.ndarray, sort_from: int, cap: int):
    """Breadth-first closure of `start` rows under the index maps.

    maps has shape (n_generators, n_points); applying a generator to a row is
    elementwise index translation.  Returns (rows, overflowed); rows are in
    discovery order and overflowed means the closure passed `cap` rows.
    """
    w = start.shape[1]
    start = np.ascontiguousarray(start, dtype=np.int32).copy()
    start[:, sort_from:] = np.sort(start[:, sort_from:], axis=1)
    start = np.unique(start, axis=0)

    seen = set()
    chunks = []
    total = 0

    def admit(batch):
        nonlocal total
        fresh = [r for r in batch if r.tobytes() not in seen]
        if not fresh:
            return None
        new = np.array(fresh, dtype=np.int32)
        for r in new:
            seen.add(r.tobytes())
        chunks.append(new)
        total += len(new)
        return new

    frontier = admit(start)
    if total > cap:
        return np.concatenate(chunks)[:cap], True
    while frontier is not None and len(frontier):
        level = []
        for g in range(maps.shape[0]):
            cand = maps[g][frontier]
            cand[:, sort_from:] = np.sort(cand[:, sort_from:], axis=1)
            cand = np.unique(cand, axis=0)
            new = admit(cand)
            if total > cap:
                return np.concatenate(chunks)[:cap], True
            if new is not None:
                level.append(new)
        frontier = np.concatenate(level) if level else None
    return np.concatenate(chunks), False


def pair_count_matrix(blocks: np.ndarray, v: int) -> np.ndarray:
    """Flat (v*v,) matrix of unordered pair counts at code p*v+q, p < q.

    Block rows are strictly increasing, so blocks[:, i] < blocks[:, j] for
    i < j and no min/max normalization is needed.
    """
    counts = np.zeros(v * v, dtype=np.int64)
    k = blocks.shape[1]
    for i in range(k):
        lo = blocks[:, i].astype(np.int64) * v
        for j in range(i + 1, k):
            counts += np.bincount(lo + blocks[:, j], minlength=v * v)
    return counts


def pair_count_subset(blocks: np.ndarray, v: int, codes_sorted: np.ndarray) -> np.ndarray:
    """Counts for just the sampled pair codes (sorted int64 array)."""
    ns = len(codes_sorted)
    counts = np.zeros(ns, dtype=np.int64)
    k = blocks.shape[1]
    for i in range(k):
        lo = blocks[:, i].astype(np.int64) * v
        for j in range(i + 1, k):
            codes = lo + blocks[:, j]
            pos = np.searchsorted(codes_sorted, codes)
            pos[pos == ns] = ns - 1
            hit = codes_sorted[pos] == codes
            if hit.any():
                counts += np.bincount(pos[hit], minlength=ns)
    return counts


def block_pair_class_counts(blocks: np.ndarray, omega: int) -> np.ndarray:
    """(b, 2) ordered pair counts per block: column 0 shares exactly one
    coordinate, column 1 shares neither."""
    alpha = blocks // omega
    beta = blocks % omega
    b, k = blocks.shape
    out = np.zeros((b, 2), dtype=np.int64)
    for i in range(k):
        for j in range(i + 1, k):
            sa = alpha[:, i] == alpha[:, j]
            sb = beta[:, i] == beta[:, j]
            out[:, 0] += 2 * (sa ^ sb)
            out[:, 1] += 2 * (~sa & ~sb)
    return out


def grid_profile_ok(blocks: np.ndarray, omega: int, c: int, d: int) -> np.ndarray:
    """(b,) flags: each block is a disjoint union of complete c x d grids in
    either orientation (the swap half of the group transposes them).

    Two checks together are exact when gcd(c, d) = 1, as it is for the
    (c, c+1) shapes this gets called with: per-point coincidence counts are
    (c, d) or (d, c) uniformly, and "shares a coordinate" has exactly k/(cd)
    connected components, each then forced to be one full grid.
    """
    b, k = blocks.shape
    m, rem = divmod(k, c * d)
    if rem:
        return np.zeros(b, dtype=bool)
    ok = np.empty(b, dtype=bool)
    idx = np.arange(k)
    step = max(1, (1 << 22) // max(1, k * k))
    for lo in range(0, b, step):
        chunk = blocks[lo : lo + step]
        alpha = chunk // omega
        beta = chunk % omega
        same_a = alpha[:, :, None] == alpha[:, None, :]
        same_b = beta[:, :, None] == beta[:, None, :]
        ca = same_a.sum(axis=2)
        cb = same_b.sum(axis=2)
        deg = ((ca == c) & (cb == d)).all(axis=1) | ((ca == d) & (cb == c)).all(axis=1)
        adj = same_a | same_b
        comp = np.broadcast_to(idx, chunk.shape).copy()
        while True:  # min-label propagation along shared coordinates
            nxt = np.where(adj, comp[:, None, :], k).min(axis=2)
            if np.array_equal(nxt, comp):
                break
            comp = nxt
        ok[lo : lo + step] = deg & ((comp == idx).sum(axis=1) == m)
    return ok
