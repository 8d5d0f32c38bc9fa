# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels for the hot GF(2) inner loops (column count <= 64).

Same contracts as ``_purepy``; the backend selector falls back to the
pure-Python twins when this module is unavailable or rows are too wide.
"""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free

BACKEND_NAME = "compiled"

cdef extern from *:
    """
    static inline int rs_popcount(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int rs_ctz(unsigned long long x) { return __builtin_ctzll(x); }
    """
    int rs_popcount(unsigned long long x) nogil
    int rs_ctz(unsigned long long x) nogil


cdef inline bint _lex_less(uint64_t a, uint64_t b) nogil:
    cdef uint64_t d = a ^ b
    if d == 0:
        return False
    return (a & (d & (~d + 1))) != 0


def lex_less(a, b):
    """Order bit sets by ascending column-index sequence."""
    return bool(_lex_less(<uint64_t> a, <uint64_t> b))


def coset_min_weight(particular, basis, budget):
    """Minimum-weight vector in particular + span(basis), or -1."""
    cdef int n = len(basis)
    cdef uint64_t cur = <uint64_t> particular
    cdef uint64_t best = 0
    cdef int best_w = <int> budget + 1
    cdef bint have = False
    cdef uint64_t *vecs = <uint64_t *> malloc(n * sizeof(uint64_t))
    if vecs == NULL and n > 0:
        raise MemoryError()
    cdef int i
    for i in range(n):
        vecs[i] = <uint64_t> basis[i]
    cdef int64_t total = <int64_t> 1 << n
    cdef int64_t step
    cdef int w
    with nogil:
        w = rs_popcount(cur)
        if w <= best_w - 1:
            best = cur
            best_w = w
            have = True
        for step in range(1, total):
            cur ^= vecs[rs_ctz(<uint64_t> step)]
            w = rs_popcount(cur)
            if w < best_w or (w == best_w and have and _lex_less(cur, best)):
                best = cur
                best_w = w
                have = True
    free(vecs)
    if not have:
        return -1
    return int(best)


def exhaustive_feasible(rows, rhs, ncols):
    """Brute-force feasibility over all 2^ncols column subsets."""
    cdef int m = len(rows)
    cdef int n = <int> ncols
    cdef uint64_t target = <uint64_t> rhs
    if target == 0:
        return True
    cdef uint64_t *cols = <uint64_t *> malloc(n * sizeof(uint64_t))
    if cols == NULL and n > 0:
        raise MemoryError()
    cdef int i, j
    cdef uint64_t r, pat
    for j in range(n):
        pat = 0
        for i in range(m):
            r = <uint64_t> rows[i]
            if (r >> j) & 1:
                pat |= (<uint64_t> 1) << i
        cols[j] = pat
    cdef uint64_t cur = 0
    cdef int64_t total = (<int64_t> 1) << n
    cdef int64_t step
    cdef bint found = False
    with nogil:
        for step in range(1, total):
            cur ^= cols[rs_ctz(<uint64_t> step)]
            if cur == target:
                found = True
                break
    free(cols)
    return bool(found)
