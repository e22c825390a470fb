"""Compiled inner loops for exhaustive partition scans.

Partitions are walked as restricted growth strings (RGS): ``rgs[i]`` is the
block index of element ``i`` (0-based), blocks numbered by first occurrence.
Every leaf is classified by genus and by reduction class, then either tallied
or copied out.  Kernels release the GIL so prefix shards can run on worker
threads.
"""

import numpy as np
from numba import njit

CLASS_OTHER = 0
CLASS_PRIMITIVE = 1
CLASS_SEMIPRIMITIVE = 2


@njit(cache=True, nogil=True)
def _classify(n, rgs, size, nblocks, prev, first, last, seen, stamp):
    """Return ``(genus, class)`` of the completed string ``rgs``.

    ``prev`` receives tau^{-1}; the face permutation is ``i -> prev[i] + 1``.
    """
    for b in range(nblocks):
        last[b] = -1
    for i in range(n):
        b = rgs[i]
        if last[b] < 0:
            first[b] = i
        else:
            prev[i] = last[b]
        last[b] = i
    for b in range(nblocks):
        prev[first[b]] = last[b]

    faces = 0
    has1 = False
    has2 = False
    bad2 = False
    for i in range(n):
        if seen[i] == stamp:
            continue
        faces += 1
        j = i
        length = 0
        while seen[j] != stamp:
            seen[j] = stamp
            length += 1
            j = prev[j] + 1
            if j == n:
                j = 0
        if length == 1:
            has1 = True
        elif length == 2:
            has2 = True
            # the face {i, phi(i)}: block of i holds phi(i)-1, block of phi(i) holds i-1
            k = prev[i] + 1
            if k == n:
                k = 0
            if size[rgs[i]] <= 2 or size[rgs[k]] <= 2:
                bad2 = True

    g = (n + 1 - nblocks - faces) // 2

    cls = CLASS_OTHER
    has_singleton = False
    for b in range(nblocks):
        if size[b] == 1:
            has_singleton = True
            break
    if not has_singleton and not has1:
        if not has2:
            cls = CLASS_PRIMITIVE
        elif not bad2:
            cls = CLASS_SEMIPRIMITIVE
    return g, cls


@njit(cache=True, nogil=True, inline="always")
def _feasible(n, pos, v, rgs, size, cnt_ge, tgt_ge, filtered, singles,
              singleton_free, forbid_adjacent, anchor):
    c = size[v]
    if filtered and cnt_ge[c + 1] + 1 > tgt_ge[c + 1]:
        return False
    if forbid_adjacent and pos > 0 and rgs[pos - 1] == v:
        return False
    if singleton_free:
        ns = singles + (1 if c == 0 else 0) - (1 if c == 1 else 0)
        if ns > n - pos - 1:
            return False
    if anchor > 0:
        if v == 0:
            if c >= anchor:
                return False
        elif n - pos - 1 < anchor - size[0]:
            return False
    return True


@njit(cache=True, nogil=True)
def scan(n, prefix, tgt_ge, singleton_free, forbid_adjacent, anchor, radix,
         type_keys, counts, collect_genus, collect_class, out, budget):
    """Walk every RGS of length ``n`` extending ``prefix``.

    tgt_ge[s]        number of target parts of size >= s, or tgt_ge[0] < 0
                     for "no type filter".
    singleton_free   reject leaves with a part of size 1.
    forbid_adjacent  reject two cyclically consecutive elements in one part
                     (sound only for primitive/semi-primitive scans).
    anchor           if > 0, element 1 must lie in a part of exactly this size.
    radix, type_keys a part of size s adds radix[s] to the leaf's type key;
                     keys are sorted, the ``counts`` row is found by bisection.
    counts           int64[ntypes, n // 2 + 1, 3]: type x genus x class.
    collect_*        leaves with that genus (-1: any) and class (-1: any) are
                     copied into ``out`` while room remains.
    budget           stop and return ``leaves = -1`` past this many leaves.

    Returns ``(leaves, matched)``; ``matched`` may exceed ``len(out)``.
    """
    filtered = tgt_ge[0] >= 0
    rgs = np.zeros(n, np.int64)
    val = np.full(n + 1, -1, np.int64)
    nb = np.zeros(n + 1, np.int64)
    size = np.zeros(n + 1, np.int64)
    cnt_ge = np.zeros(n + 2, np.int64)
    prev = np.zeros(n, np.int64)
    first = np.zeros(n + 1, np.int64)
    last = np.zeros(n + 1, np.int64)
    seen = np.zeros(n, np.int64)
    stamp = 0
    singles = 0
    leaves = 0
    matched = 0
    cap = out.shape[0]

    k = prefix.shape[0]
    for pos in range(k):
        v = prefix[pos]
        if v < 0 or v > nb[pos]:
            return 0, 0
        if not _feasible(n, pos, v, rgs, size, cnt_ge, tgt_ge, filtered, singles,
                         singleton_free, forbid_adjacent, anchor):
            return 0, 0
        c = size[v]
        if singleton_free:
            singles += (1 if c == 0 else 0) - (1 if c == 1 else 0)
        size[v] = c + 1
        cnt_ge[c + 1] += 1
        rgs[pos] = v
        val[pos] = v
        nb[pos + 1] = nb[pos] + 1 if v == nb[pos] else nb[pos]

    pos = k
    at_leaf = k == n
    while True:
        if at_leaf:
            at_leaf = False
            if not (forbid_adjacent and n > 1 and rgs[n - 1] == rgs[0]):
                leaves += 1
                if leaves > budget:
                    return -1, matched
                stamp += 1
                g, cls = _classify(n, rgs, size, nb[n], prev, first, last, seen, stamp)
                row = 0
                if not filtered:
                    key = 0
                    for b in range(nb[n]):
                        key += radix[size[b]]
                    row = np.searchsorted(type_keys, key)
                counts[row, g, cls] += 1
                if (collect_genus < 0 or collect_genus == g) and \
                        (collect_class < 0 or collect_class == cls):
                    if matched < cap:
                        for i in range(n):
                            out[matched, i] = rgs[i]
                    matched += 1
            if k == n:
                break
            pos = n - 1
        if pos < k:
            break
        v = val[pos]
        if v >= 0:
            c = size[v] - 1
            size[v] = c
            cnt_ge[c + 1] -= 1
            if singleton_free:
                singles -= (1 if c == 0 else 0) - (1 if c == 1 else 0)
        v += 1
        while v <= nb[pos] and not _feasible(n, pos, v, rgs, size, cnt_ge, tgt_ge,
                                             filtered, singles, singleton_free,
                                             forbid_adjacent, anchor):
            v += 1
        if v > nb[pos]:
            val[pos] = -1
            pos -= 1
            continue
        c = size[v]
        if singleton_free:
            singles += (1 if c == 0 else 0) - (1 if c == 1 else 0)
        size[v] = c + 1
        cnt_ge[c + 1] += 1
        rgs[pos] = v
        val[pos] = v
        nb[pos + 1] = nb[pos] + 1 if v == nb[pos] else nb[pos]
        if pos == n - 1:
            at_leaf = True
        else:
            pos += 1
            val[pos] = -1
    return leaves, matched
