"""Necessary flat-foldability checks for crease patterns.

Two classical conditions are tested at every interior vertex: even
degree, and the two alternating sector-angle sums both reaching 180
degrees.  Passing both is necessary but NOT sufficient for flat
foldability; the report says so explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .crease import CreasePattern

ANGLE_TOL = 1e-6


@dataclass(frozen=True)
class VertexFoldReport:
    vertex: int
    degree: int
    even_degree: bool
    alternating_sums: tuple[float, float]
    angle_sums_ok: bool

    @property
    def passes(self) -> bool:
        return self.even_degree and self.angle_sums_ok


@dataclass(frozen=True)
class FoldabilityReport:
    vertices: tuple[VertexFoldReport, ...]
    necessary_only: bool = True

    @property
    def passes(self) -> bool:
        return all(v.passes for v in self.vertices)


def check_flat_foldable_necessary(pattern: CreasePattern) -> FoldabilityReport:
    reports = []
    for v in pattern.interior_vertices():
        angles = pattern.sector_angles(v)
        deg = len(angles)
        s_even = sum(angles[0::2])
        s_odd = sum(angles[1::2])
        # both sums always total the full turn; check that before 180
        if not math.isclose(s_even + s_odd, 360.0, abs_tol=1e-9):
            raise AssertionError(f"sector angles at vertex {v} do not close up")
        sums_ok = abs(s_even - 180.0) <= ANGLE_TOL and abs(s_odd - 180.0) <= ANGLE_TOL
        reports.append(
            VertexFoldReport(
                vertex=v,
                degree=deg,
                even_degree=deg % 2 == 0,
                alternating_sums=(s_even, s_odd),
                angle_sums_ok=sums_ok,
            )
        )
    return FoldabilityReport(vertices=tuple(reports))
