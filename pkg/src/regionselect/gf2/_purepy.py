"""Pure-Python kernels for the hot GF(2) inner loops.

These are the fallback twins of the compiled routines in ``_gf2core``.
Rows are Python ints used as bit masks (bit j = column j), so there is
no column-count limit here, only speed.
"""

from __future__ import annotations

BACKEND_NAME = "python"


def lex_less(a: int, b: int) -> bool:
    """Order bit sets by ascending column-index sequence.

    {0,5} < {1,2} because the first differing column (0) belongs to a.
    """
    d = a ^ b
    if d == 0:
        return False
    low = d & -d
    return (a & low) != 0


def coset_min_weight(particular: int, basis: list[int], budget: int) -> int:
    """Minimum-weight vector in particular + span(basis), or -1.

    Enumerates the full coset with a Gray-code walk (one XOR per step).
    Returns the best mask of weight <= budget; ties broken by lex_less.
    """
    cur = particular
    best = -1
    best_w = budget + 1
    w = cur.bit_count()
    if w < best_w or (w == best_w and best >= 0 and lex_less(cur, best)):
        if w <= budget:
            best, best_w = cur, w
    n = len(basis)
    for i in range(1, 1 << n):
        cur ^= basis[(i & -i).bit_length() - 1]
        w = cur.bit_count()
        if w < best_w or (w == best_w and best >= 0 and lex_less(cur, best)):
            best, best_w = cur, w
    return best


def exhaustive_feasible(rows: list[int], rhs: int, ncols: int) -> bool:
    """Check by brute force whether some column subset XORs to rhs.

    Column j's pattern over the rows is assembled once, then all 2^ncols
    subsets are walked Gray-code style.  Only sensible for small ncols.
    """
    cols = []
    for j in range(ncols):
        pat = 0
        for i, r in enumerate(rows):
            if (r >> j) & 1:
                pat |= 1 << i
        cols.append(pat)
    target = rhs
    if target == 0:
        return True
    cur = 0
    for i in range(1, 1 << ncols):
        cur ^= cols[(i & -i).bit_length() - 1]
        if cur == target:
            return True
    return False
