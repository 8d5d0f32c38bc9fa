"""Backend selection: compiled kernels when available, pure Python otherwise.

Set REGSEL_PURE_PYTHON=1 to force the fallback (used by the benchmark and
the backend parity tests).
"""

from __future__ import annotations

import os

from . import _purepy

_forced = os.environ.get("REGSEL_PURE_PYTHON", "") not in ("", "0")

if not _forced:
    try:
        from . import _gf2core as _fast  # type: ignore[attr-defined]
    except ImportError:
        _fast = None
else:
    _fast = None


def backend_name() -> str:
    return "python" if _fast is None else "compiled"


def coset_min_weight(particular: int, basis: list[int], ncols: int, budget: int) -> int:
    if _fast is not None and ncols <= 64:
        return _fast.coset_min_weight(particular, basis, budget)
    return _purepy.coset_min_weight(particular, basis, budget)


def exhaustive_feasible(rows: list[int], rhs: int, ncols: int, nrows: int) -> bool:
    if _fast is not None and ncols <= 62 and nrows <= 64:
        return _fast.exhaustive_feasible(rows, rhs, ncols)
    return _purepy.exhaustive_feasible(rows, rhs, ncols)


def lex_less(a: int, b: int) -> bool:
    return _purepy.lex_less(a, b)
