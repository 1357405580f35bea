"""Compiled subset dynamic program behind every path-length query.

For a fixed source ``s`` the table is indexed by subsets ``m`` of the other
``p - 1`` vertices. The source is relabelled to the top index ``q = p - 1``
and the remaining vertices are compressed, in increasing order, onto
``0 .. q - 1``. ``table[m]`` is the set of vertices ``v`` (compressed labels)
such that some path starting at ``s`` visits exactly ``{s} | m`` and ends at
``v``. Subsets only grow, so one pass in increasing integer order suffices.

Arithmetic is done in ``int64``; the table is stored as ``uint32``.
"""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True, nogil=True)
def _permutation(p, s):
    perm = np.empty(p, dtype=np.int64)
    j = 0
    for v in range(p):
        if v == s:
            perm[v] = p - 1
        else:
            perm[v] = j
            j += 1
    return perm


@njit(cache=True, nogil=True)
def _in_masks(out, perm):
    p = out.shape[0]
    inm = np.zeros(p, dtype=np.int64)
    for v in range(p):
        row = np.int64(out[v])
        pv = np.int64(1) << perm[v]
        for w in range(p):
            if (row >> w) & 1:
                inm[perm[w]] |= pv
    return inm


@njit(cache=True, nogil=True)
def _fill(inm, table, lens):
    # lens[v] gets bit L iff some path of L arcs ends at v (compressed label)
    q = inm.shape[0] - 1
    size = np.int64(1) << q
    full = size - 1
    table[:] = 0
    table[0] = np.int64(1) << q
    for m in range(size):
        e = np.int64(table[m])
        if e == 0:
            continue
        if m:
            length = _popcount(m)
            ee = e
            while ee:
                low = ee & -ee
                lens[_popcount(low - 1)] |= np.int64(1) << length
                ee ^= low
        free = full & ~m
        while free:
            low = free & -free
            if e & inm[_popcount(low - 1)]:
                table[m | low] = table[m | low] | low
            free ^= low


@njit(cache=True, nogil=True)
def source_spectra(out, s):
    """Length bitmasks from ``s`` to every vertex, in original labels."""
    p = out.shape[0]
    res = np.zeros(p, dtype=np.int64)
    if p < 2:
        return res
    perm = _permutation(p, s)
    table = np.zeros(np.int64(1) << (p - 1), dtype=np.uint32)
    lens = np.zeros(p, dtype=np.int64)
    _fill(_in_masks(out, perm), table, lens)
    for v in range(p):
        if v != s:
            res[v] = lens[perm[v]]
    return res


@njit(cache=True, nogil=True)
def all_spectra(out):
    """``res[x, y]`` has bit ``k`` iff an (x, y)-path with ``k`` arcs exists."""
    p = out.shape[0]
    res = np.zeros((p, p), dtype=np.int64)
    if p < 2:
        return res
    table = np.zeros(np.int64(1) << (p - 1), dtype=np.uint32)
    lens = np.zeros(p, dtype=np.int64)
    for s in range(p):
        perm = _permutation(p, s)
        lens[:] = 0
        _fill(_in_masks(out, perm), table, lens)
        for v in range(p):
            if v != s:
                res[s, v] = lens[perm[v]]
    return res


@njit(cache=True, nogil=True)
def source_table(out, s):
    """The raw DP table for ``s`` together with its in-masks (compressed labels)."""
    p = out.shape[0]
    perm = _permutation(p, s)
    inm = _in_masks(out, perm)
    table = np.zeros(np.int64(1) << (p - 1), dtype=np.uint32)
    lens = np.zeros(p, dtype=np.int64)
    _fill(inm, table, lens)
    return table, inm
