# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled forcing kernels for orders up to 64 (single-word bitsets).

Twin of _kernels_py; same call signatures, same failed-closure cache
policy, so search results and node counts match the pure path exactly.
"""

from libc.stdint cimport uint64_t, int64_t

cdef extern from *:
    """
    #define zf_popcount(x) __builtin_popcountll(x)
    """
    int zf_popcount(uint64_t x) nogil



cdef inline uint64_t _closure_standard(uint64_t *adj, int n, uint64_t black) nogil:
    cdef uint64_t full = (<uint64_t>0 - 1) if n == 64 else ((<uint64_t>1 << n) - 1)
    cdef uint64_t white = full & ~black
    cdef uint64_t newly, m, t
    cdef int u
    while white:
        newly = 0
        m = black
        while m:
            u = zf_popcount((m & (~m + 1)) - 1)
            m &= m - 1
            t = adj[u] & white
            if t != 0 and (t & (t - 1)) == 0:
                newly |= t
        if newly == 0:
            break
        black |= newly
        white &= ~newly
    return black


cdef inline uint64_t _closure_psd(uint64_t *adj, int n, uint64_t black) nogil:
    cdef uint64_t full = (<uint64_t>0 - 1) if n == 64 else ((<uint64_t>1 << n) - 1)
    cdef uint64_t white, newly, rem, comp, frontier, nxt, f, m, t
    cdef int u, v
    while True:
        white = full & ~black
        if white == 0:
            return black
        newly = 0
        rem = white
        while rem:
            comp = rem & (~rem + 1)
            frontier = comp
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    v = zf_popcount((f & (~f + 1)) - 1)
                    f &= f - 1
                    nxt |= adj[v]
                frontier = nxt & rem & ~comp
                comp |= frontier
            rem &= ~comp
            m = black
            while m:
                u = zf_popcount((m & (~m + 1)) - 1)
                m &= m - 1
                t = adj[u] & comp
                if t != 0 and (t & (t - 1)) == 0:
                    newly |= t
        if newly == 0:
            return black
        black |= newly


cdef int _load_adj(object adj, int n, uint64_t *rows) except -1:
    if n < 1 or n > 64:
        raise ValueError("compiled kernels support 1 <= n <= 64")
    cdef int i
    for i in range(n):
        rows[i] = <uint64_t>adj[i]
    return 0


def closure_standard(adj, int n, black):
    cdef uint64_t rows[64]
    _load_adj(adj, n, rows)
    return _closure_standard(rows, n, <uint64_t>black)


def closure_psd(adj, int n, black):
    cdef uint64_t rows[64]
    _load_adj(adj, n, rows)
    return _closure_psd(rows, n, <uint64_t>black)


cdef inline bint _advance(int *c, int n, int k) nogil:
    cdef int i = k - 1
    cdef int j
    while i >= 0 and c[i] == n - k + i:
        i -= 1
    if i < 0:
        return False
    c[i] += 1
    for j in range(i + 1, k):
        c[j] = c[j - 1] + 1
    return True


def first_forcing_lex(adj, int n, int k, bint psd, start=None, int64_t count=-1,
                      bint prune=True):
    cdef uint64_t rows[64]
    cdef int comb[64]
    cdef uint64_t failed[64]
    cdef int nfailed = 0
    cdef int64_t slot = 0
    cdef int64_t explored = 0
    cdef uint64_t full, mask, d
    cdef int i
    cdef bint skip, subsumed, found = False

    _load_adj(adj, n, rows)
    if k < 1 or k > n:
        raise ValueError("need 1 <= k <= n")
    if start is None:
        for i in range(k):
            comb[i] = i
    else:
        for i in range(k):
            comb[i] = start[i]
    full = (<uint64_t>0 - 1) if n == 64 else ((<uint64_t>1 << n) - 1)
    mask = 0

    with nogil:
        while count != 0:
            mask = 0
            for i in range(k):
                mask |= <uint64_t>1 << comb[i]
            skip = False
            if prune:
                for i in range(nfailed):
                    if mask & ~failed[i] == 0:
                        skip = True
                        break
            if not skip:
                explored += 1
                if psd:
                    d = _closure_psd(rows, n, mask)
                else:
                    d = _closure_standard(rows, n, mask)
                if d == full:
                    found = True
                    break
                if prune:
                    subsumed = False
                    for i in range(nfailed):
                        if d & ~failed[i] == 0:
                            subsumed = True
                            break
                    if not subsumed:
                        if nfailed < 64:
                            failed[nfailed] = d
                            nfailed += 1
                        else:
                            failed[slot % 64] = d
                            slot += 1
            count -= 1
            if not _advance(comb, n, k):
                break

    if found:
        return int(mask), int(explored)
    return None, int(explored)


def all_forcing_lex(adj, int n, int k, bint psd):
    cdef uint64_t rows[64]
    cdef int comb[64]
    cdef uint64_t full, mask, d
    cdef int i
    _load_adj(adj, n, rows)
    if k < 1 or k > n:
        raise ValueError("need 1 <= k <= n")
    for i in range(k):
        comb[i] = i
    full = (<uint64_t>0 - 1) if n == 64 else ((<uint64_t>1 << n) - 1)
    out = []
    while True:
        mask = 0
        for i in range(k):
            mask |= <uint64_t>1 << comb[i]
        if psd:
            d = _closure_psd(rows, n, mask)
        else:
            d = _closure_standard(rows, n, mask)
        if d == full:
            out.append(int(mask))
        if not _advance(comb, n, k):
            return out
