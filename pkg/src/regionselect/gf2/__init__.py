"""Exact linear algebra over GF(2).

Vectors are Python ints used as bit masks (bit j = coordinate j).
Matrices are tuples of such row masks.  Everything here is pure and
immutable, so concurrent callers can share instances freely.

The minimum-weight search walks the kernel coset; that inner loop runs
on the compiled backend when the extension built (see ``_backend``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from ._backend import backend_name, coset_min_weight, exhaustive_feasible, lex_less

__all__ = [
    "Gf2Matrix",
    "SolveOutcome",
    "solve",
    "solve_constrained",
    "min_weight_solution",
    "indices_to_bits",
    "bits_to_indices",
    "backend_name",
    "exhaustive_feasible",
    "lex_less",
    "KERNEL_ENUM_LIMIT",
    "DEFAULT_BUDGET",
]

# Coset enumeration is used while the kernel dimension stays below this;
# past it the increasing-weight search takes over.  2^24 single-XOR steps
# keep the worst case around 16M vector operations.
KERNEL_ENUM_LIMIT = 24
DEFAULT_BUDGET = 16

SOLVED = "solved"
INFEASIBLE = "infeasible"


def indices_to_bits(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def bits_to_indices(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class Gf2Matrix:
    """Bit matrix over GF(2), row-major bit rows."""

    rows: tuple[int, ...]
    cols: int

    def __post_init__(self) -> None:
        limit = 1 << self.cols
        for r in self.rows:
            if r < 0 or r >= limit:
                raise ValueError("row has bits outside the declared column range")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Gf2Matrix":
        """Build from dense 0/1 rows; row[j] is column j."""
        cols = len(rows[0]) if rows else 0
        packed = []
        for row in rows:
            if len(row) != cols:
                raise ValueError("ragged rows")
            packed.append(indices_to_bits(j for j, v in enumerate(row) if v & 1))
        return cls(tuple(packed), cols)

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "Gf2Matrix":
        """Parse row bit-strings like '0101' (leftmost char = column 0)."""
        return cls.from_rows([[int(ch) for ch in s] for s in rows])

    def to_strings(self) -> list[str]:
        return [
            "".join("1" if (r >> j) & 1 else "0" for j in range(self.cols))
            for r in self.rows
        ]

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def mul_vec(self, x: int) -> int:
        """A @ x over GF(2); x is a column-bit mask, result a row-bit mask."""
        out = 0
        for i, r in enumerate(self.rows):
            if (r & x).bit_count() & 1:
                out |= 1 << i
        return out

    def transpose(self) -> "Gf2Matrix":
        cols = [0] * self.cols
        for i, r in enumerate(self.rows):
            m = r
            while m:
                j = (m & -m).bit_length() - 1
                cols[j] |= 1 << i
                m &= m - 1
        return Gf2Matrix(tuple(cols), len(self.rows))

    def rank(self) -> int:
        return len(_eliminate(list(self.rows), self.cols)[1])


def _eliminate(rows: list[int], cols: int):
    """Gauss-Jordan over GF(2), tracking row operations.

    Returns (reduced rows, pivot list [(row, col)], ops) where ops[i] is the
    mask of original rows XORed into reduced row i.
    """
    ops = [1 << i for i in range(len(rows))]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(cols):
        pivot = None
        for k in range(r, len(rows)):
            if (rows[k] >> c) & 1:
                pivot = k
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        ops[r], ops[pivot] = ops[pivot], ops[r]
        for k in range(len(rows)):
            if k != r and ((rows[k] >> c) & 1):
                rows[k] ^= rows[r]
                ops[k] ^= ops[r]
        pivots.append((r, c))
        r += 1
        if r == len(rows):
            break
    return rows, pivots, ops


@dataclass(frozen=True)
class SolveOutcome:
    """Result of solving A x = b over GF(2).

    solved:     particular holds one solution; kernel_basis spans the
                full null space, so the solution set is the coset.
    infeasible: certificate is a row mask y with y^T A = 0, y^T b = 1.
    """

    status: str
    particular: Optional[int] = None
    kernel_basis: tuple[int, ...] = ()
    certificate: Optional[int] = None

    @property
    def solved(self) -> bool:
        return self.status == SOLVED


def solve(a: Gf2Matrix, b: int) -> SolveOutcome:
    """Solve A x = b; b is a row-bit mask of length a.nrows."""
    if b < 0 or b >= (1 << max(a.nrows, 1)):
        raise ValueError("right-hand side has bits outside the row range")
    work = []
    for i, r in enumerate(a.rows):
        work.append(r | (((b >> i) & 1) << a.cols))
    rows, pivots, ops = _eliminate(work, a.cols)
    for i in range(len(rows)):
        if rows[i] == (1 << a.cols):
            return SolveOutcome(INFEASIBLE, certificate=ops[i])
    particular = 0
    pivot_cols = set()
    for r, c in pivots:
        pivot_cols.add(c)
        if (rows[r] >> a.cols) & 1:
            particular |= 1 << c
    basis = []
    for f in range(a.cols):
        if f in pivot_cols:
            continue
        vec = 1 << f
        for r, c in pivots:
            if (rows[r] >> f) & 1:
                vec |= 1 << c
        basis.append(vec)
    return SolveOutcome(SOLVED, particular=particular, kernel_basis=tuple(basis))


def solve_constrained(
    a: Gf2Matrix,
    b: int,
    forced_one: Iterable[int] = (),
    forced_zero: Iterable[int] = (),
) -> SolveOutcome:
    """Solve A x = b with some coordinates pinned to 1 or 0.

    Implemented by substituting the forced values and solving the reduced
    system on the remaining columns.  An infeasibility certificate refers
    to the same rows as the original system.
    """
    one = indices_to_bits(forced_one)
    zero = indices_to_bits(forced_zero)
    if one & zero:
        raise ValueError("forced_one and forced_zero overlap")
    if one >> a.cols or zero >> a.cols:
        raise ValueError("forced column outside matrix")
    fixed = one | zero
    keep = [j for j in range(a.cols) if not ((fixed >> j) & 1)]
    reduced_rows = []
    for r in a.rows:
        reduced_rows.append(indices_to_bits(k for k, j in enumerate(keep) if (r >> j) & 1))
    reduced = Gf2Matrix(tuple(reduced_rows), len(keep))
    out = solve(reduced, b ^ a.mul_vec(one))
    if not out.solved:
        return out
    lift = lambda v: indices_to_bits(keep[k] for k in bits_to_indices(v))
    return SolveOutcome(
        SOLVED,
        particular=lift(out.particular) | one,
        kernel_basis=tuple(lift(v) for v in out.kernel_basis),
    )


def _lex_min_equal_weight(best: int, cand: int) -> int:
    if cand.bit_count() < best.bit_count():
        return cand
    if cand.bit_count() == best.bit_count() and lex_less(cand, best):
        return cand
    return best


def min_weight_solution(a: Gf2Matrix, b: int, budget: int = DEFAULT_BUDGET) -> Optional[int]:
    """Minimum Hamming-weight solution of A x = b, or None.

    Returns None when the system is infeasible or every solution weighs
    more than ``budget``.  Ties break to the lexicographically smallest
    column set.
    """
    if budget < 0:
        raise ValueError("budget must be >= 0")
    out = solve(a, b)
    if not out.solved:
        return None
    k = len(out.kernel_basis)
    if k <= KERNEL_ENUM_LIMIT:
        best = coset_min_weight(out.particular, list(out.kernel_basis), a.cols, budget)
        return None if best < 0 else best
    # Kernel too large to enumerate: try subsets by increasing weight.
    for w in range(budget + 1):
        for combo in combinations(range(a.cols), w):
            x = indices_to_bits(combo)
            if a.mul_vec(x) == b:
                return x
    return None
