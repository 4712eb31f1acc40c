"""Pure-Python backtracking kernel for constrained mapping search.

Finds a bijection p on {0..n-1} with dst[p(u)*n + p(v)] == src[u*n + v] for
every pair u != v, subject to per-vertex candidate bitmasks. Labels are small
dense non-negative ints; entry 0 plays no special role. The diagonal is
ignored.

The compiled twin in _kernel_c.pyx implements the identical policy (lowest
(candidate-count, vertex) branch choice, ascending image order) so both
backends return bit-identical witnesses.
"""

from __future__ import annotations

BACKEND = "python"


def search_mapping(n, src, dst, allowed):
    if n == 0:
        return []
    full = (1 << n) - 1
    nlabels = max(max(src), max(dst)) + 1

    # image rows bucketed by label: rows[w][l] = vertices w2 with dst[w][w2] == l
    rows = [[0] * nlabels for _ in range(n)]
    for w in range(n):
        base = w * n
        for w2 in range(n):
            if w2 != w:
                rows[w][dst[base + w2]] |= 1 << w2

    # per-vertex label histograms; mismatched histograms can never map
    def histo(mat, v):
        h = [0] * nlabels
        base = v * n
        for u in range(n):
            if u != v:
                h[mat[base + u]] += 1
        return tuple(h)

    sig_src = [histo(src, v) for v in range(n)]
    sig_dst = [histo(dst, w) for w in range(n)]

    cand = []
    for v in range(n):
        m = allowed[v] & full
        mm = 0
        while m:
            low = m & -m
            w = low.bit_length() - 1
            m ^= low
            if sig_dst[w] == sig_src[v]:
                mm |= low
        if mm == 0:
            return None
        cand.append(mm)

    p = [-1] * n

    def rec(cand, remaining):
        if remaining == 0:
            return True
        # fail-first: fewest candidates, lowest vertex on ties
        best_v = -1
        best_c = 0
        best_n = n + 1
        m = remaining
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            c = cand[v]
            pc = c.bit_count()
            if pc == 0:
                return False
            if pc < best_n:
                best_n = pc
                best_v = v
                best_c = c
        v = best_v
        rest = remaining ^ (1 << v)
        base = v * n
        choices = best_c
        while choices:
            low = choices & -choices
            w = low.bit_length() - 1
            choices ^= low
            nc = list(cand)
            ok = True
            m = rest
            wrow = rows[w]
            notw = ~low
            while m:
                lu = m & -m
                u = lu.bit_length() - 1
                m ^= lu
                cu = nc[u] & wrow[src[base + u]] & notw
                if cu == 0:
                    ok = False
                    break
                nc[u] = cu
            if ok:
                p[v] = w
                if rec(nc, rest):
                    return True
        return False

    if rec(cand, full):
        return p
    return None
