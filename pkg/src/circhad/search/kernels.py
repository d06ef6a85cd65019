"""Compiled inner loops for the exhaustive search.

Rows are packed into uint64 words, bit i set iff position i holds -1, so
orders up to 64 are supported. Two independent kernels exist:

* ``dfs_chunk``: left-to-right branch-and-prune with one partial
  autocorrelation accumulator per shift.
* ``scan_range``: plain enumeration of every word in a range, testing the
  autocorrelation of each complete row with popcounts.
"""
from __future__ import annotations

import numba
import numpy as np

MAX_ORDER = 64


@numba.njit(cache=True)
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)


@numba.njit(cache=True)
def _count_feasible(pos, remaining, lo, hi):
    return (pos <= lo <= pos + remaining) or (pos <= hi <= pos + remaining)


@numba.njit(cache=True)
def dfs_chunk(n, prefixes, prefix_len, max_depth, use_counts, pos_lo, pos_hi, budget):
    """Extend every prefix (first ``prefix_len`` positions) down to ``max_depth``.

    Returns ``(found, n_found, nodes, pruned_paf, pruned_counts, exhausted)``.
    ``found`` holds the surviving words at ``max_depth``; when that equals n
    each one is a complete row with every periodic autocorrelation zero.
    Each assignment of one position counts as one node; prefix positions are
    replayed without being counted.
    """
    S = n // 2
    h = np.zeros(n, np.int64)
    part = np.zeros((n + 1, S + 1), np.int64)
    negs = np.zeros(n + 1, np.int64)
    # slack[K, s]: terms of the shift-s sum still unknown with K positions set
    slack = np.zeros((n + 1, S + 1), np.int64)
    for K in range(n + 1):
        for s in range(1, S + 1):
            slack[K, s] = n - (max(0, K - s) + max(0, K - n + s))
    choice = np.zeros(n + 1, np.int64)

    found = np.empty(16, np.uint64)
    n_found = 0
    nodes = 0
    pruned_paf = 0
    pruned_counts = 0
    exhausted = False

    for p in range(prefixes.shape[0]):
        word = prefixes[p]
        # replay the prefix
        for k in range(prefix_len):
            v = -1 if (word >> np.uint64(k)) & np.uint64(1) else 1
            h[k] = v
            negs[k + 1] = negs[k] + (1 if v == -1 else 0)
            for s in range(1, S + 1):
                d = 0
                if k - s >= 0:
                    d += h[k - s] * v
                if k + s >= n:
                    d += v * h[k + s - n]
                part[k + 1, s] = part[k, s] + d

        if prefix_len == max_depth:
            ok = True
            if max_depth == n:
                for s in range(1, S + 1):
                    if part[n, s] != 0:
                        ok = False
            if ok:
                if n_found == found.shape[0]:
                    grown = np.empty(2 * n_found, np.uint64)
                    grown[:n_found] = found
                    found = grown
                found[n_found] = word
                n_found += 1
            continue

        k = prefix_len
        choice[k] = 0
        while k >= prefix_len:
            if choice[k] == 2:
                k -= 1
                if k >= prefix_len:
                    choice[k] += 1
                continue
            if nodes >= budget:
                exhausted = True
                break
            nodes += 1
            v = 1 if choice[k] == 0 else -1
            h[k] = v
            K = k + 1
            negs[K] = negs[k] + (1 if v == -1 else 0)
            if use_counts and not _count_feasible(K - negs[K], n - K, pos_lo, pos_hi):
                pruned_counts += 1
                choice[k] += 1
                continue
            ok = True
            for s in range(1, S + 1):
                d = 0
                if k - s >= 0:
                    d += h[k - s] * v
                if k + s >= n:
                    d += v * h[k + s - n]
                q = part[k, s] + d
                part[K, s] = q
                if abs(q) > slack[K, s]:
                    ok = False
                    break
            if not ok:
                pruned_paf += 1
                choice[k] += 1
                continue
            if K == max_depth:
                w = np.uint64(0)
                for i in range(K):
                    if h[i] == -1:
                        w |= np.uint64(1) << np.uint64(i)
                if n_found == found.shape[0]:
                    grown = np.empty(2 * n_found, np.uint64)
                    grown[:n_found] = found
                    found = grown
                found[n_found] = w
                n_found += 1
                choice[k] += 1
            else:
                k = K
                choice[k] = 0
        if exhausted:
            break

    return found[:n_found].copy(), n_found, nodes, pruned_paf, pruned_counts, exhausted


@numba.njit(cache=True)
def scan_range(n, lo, hi, pinned, use_counts, neg_lo, neg_hi, budget):
    """Test every word y in [lo, hi) as a complete row.

    With ``pinned`` the row is ``y << 1`` (position 0 fixed to +1).
    Returns ``(found, n_found, visited, rejected_paf, rejected_counts, exhausted)``.
    """
    if n == 64:
        mask = np.uint64(0xFFFFFFFFFFFFFFFF)
    else:
        mask = (np.uint64(1) << np.uint64(n)) - np.uint64(1)
    S = n // 2
    found = np.empty(16, np.uint64)
    n_found = 0
    visited = 0
    rejected_paf = 0
    rejected_counts = 0
    exhausted = False
    un = np.uint64(n)
    for y in range(lo, hi):
        if visited >= budget:
            exhausted = True
            break
        visited += 1
        x = np.uint64(y)
        if pinned:
            x = (x << np.uint64(1)) & mask
        if use_counts:
            c = _popcount(x)
            if c != neg_lo and c != neg_hi:
                rejected_counts += 1
                continue
        ok = True
        for s in range(1, S + 1):
            us = np.uint64(s)
            r = ((x << us) | (x >> (un - us))) & mask
            if n - 2 * np.int64(_popcount(x ^ r)) != 0:
                ok = False
                break
        if not ok:
            rejected_paf += 1
            continue
        if n_found == found.shape[0]:
            grown = np.empty(2 * n_found, np.uint64)
            grown[:n_found] = found
            found = grown
        found[n_found] = x
        n_found += 1
    return found[:n_found].copy(), n_found, visited, rejected_paf, rejected_counts, exhausted
