"""Pure-Python forcing kernels over bitmask adjacency.

Reference implementation of the hot loops; works for any order because
masks are plain Python ints.  The compiled twin in _kernels.pyx mirrors
these semantics exactly (including the failed-closure cache policy, so
node counts agree) for n <= 64.
"""

from __future__ import annotations

_PRUNE_CAP = 64


def closure_standard(adj, n: int, black: int) -> int:
    """Fixpoint of the standard color change rule from the given black mask."""
    full = (1 << n) - 1
    white = full & ~black
    while white:
        newly = 0
        m = black
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            t = adj[u] & white
            if t and t & (t - 1) == 0:
                newly |= t
        if not newly:
            break
        black |= newly
        white &= ~newly
    return black


def closure_psd(adj, n: int, black: int) -> int:
    """Fixpoint of the positive semidefinite color change rule.

    Forces are applied in batched rounds (components recomputed per round);
    the fixpoint is the same as for one-force-at-a-time application.
    """
    full = (1 << n) - 1
    while True:
        white = full & ~black
        if not white:
            return black
        newly = 0
        rem = white
        while rem:
            comp = rem & -rem
            frontier = comp
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    v = (f & -f).bit_length() - 1
                    f &= f - 1
                    nxt |= adj[v]
                frontier = nxt & rem & ~comp
                comp |= frontier
            rem &= ~comp
            m = black
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                t = adj[u] & comp
                if t and t & (t - 1) == 0:
                    newly |= t
        if not newly:
            return black
        black |= newly


def _advance(c: list[int], n: int, k: int) -> bool:
    """Step a sorted index combination to its lexicographic successor."""
    i = k - 1
    while i >= 0 and c[i] == n - k + i:
        i -= 1
    if i < 0:
        return False
    c[i] += 1
    for j in range(i + 1, k):
        c[j] = c[j - 1] + 1
    return True


def first_forcing_lex(adj, n, k, psd, start=None, count=-1, prune=True):
    """First k-subset (in lexicographic order) whose closure is all of V.

    Scans `count` combinations starting from the sorted tuple `start`
    (count < 0 means to the end).  Returns (mask_or_None, closures_run).
    The failed-closure cache skips candidates contained in a recorded
    non-forcing closed set; it never changes which subset is found first.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    closure = closure_psd if psd else closure_standard
    full = (1 << n) - 1
    c = list(range(k)) if start is None else list(start)
    explored = 0
    failed: list[int] = []
    slot = 0
    while count != 0:
        mask = 0
        for i in c:
            mask |= 1 << i
        skip = False
        if prune:
            for d in failed:
                if mask & ~d == 0:
                    skip = True
                    break
        if not skip:
            explored += 1
            d = closure(adj, n, mask)
            if d == full:
                return mask, explored
            if prune and not any(d & ~e == 0 for e in failed):
                if len(failed) < _PRUNE_CAP:
                    failed.append(d)
                else:
                    failed[slot % _PRUNE_CAP] = d
                    slot += 1
        count -= 1
        if not _advance(c, n, k):
            break
    return None, explored


def all_forcing_lex(adj, n, k, psd):
    """All forcing k-subsets as masks, in lexicographic order."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    closure = closure_psd if psd else closure_standard
    full = (1 << n) - 1
    out = []
    c = list(range(k))
    while True:
        mask = 0
        for i in c:
            mask |= 1 << i
        if closure(adj, n, mask) == full:
            out.append(mask)
        if not _advance(c, n, k):
            return out
