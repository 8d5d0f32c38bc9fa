"""Lamp boards: a diagram's lamp sites, regions, and incidence matrix.

The matrix row for a site has a 1 in the column of every region whose
corner count there is odd; a region touching a site twice contributes
nothing, so selecting a region toggles exactly the sites where it has
an odd number of corners.  Boards can also be built directly from an
explicit matrix for game positions that exist only as linear systems.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Optional, Sequence, Union

from .crease import CreasePattern, parse_fold
from .gf2 import Gf2Matrix, indices_to_bits
from .link import LinkDiagram, parse_pd
from .planar import DiagramError

Diagram = Union[LinkDiagram, CreasePattern]


@dataclass(frozen=True)
class LampBoard:
    """Sites with lamps over a region structure.

    lamps is a bit mask over sites, bit set = ON.  site_keys holds the
    underlying crossing/vertex ids for diagram-backed boards.
    """

    matrix: Gf2Matrix
    site_labels: tuple[str, ...]
    region_labels: tuple[str, ...]
    lamps: int = 0
    diagram: Optional[Diagram] = None
    site_keys: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if len(self.site_labels) != self.matrix.nrows:
            raise DiagramError("one label per lamp site required")
        if len(self.region_labels) != self.matrix.cols:
            raise DiagramError("one label per region required")
        if self.lamps >> max(self.matrix.nrows, 1):
            raise DiagramError("lamp bits outside the site range")

    @property
    def site_count(self) -> int:
        return self.matrix.nrows

    @property
    def region_count(self) -> int:
        return self.matrix.cols

    def with_lamps(self, lamps: int) -> "LampBoard":
        return replace(self, lamps=lamps)

    def site_index(self, label: str) -> int:
        return self.site_labels.index(label)

    def region_index(self, label: str) -> int:
        return self.region_labels.index(label)

    def all_on(self) -> int:
        return (1 << self.site_count) - 1


def incidence_matrix(diagram: Diagram) -> Gf2Matrix:
    """Rows = lamp sites, columns = regions, entries = corner count mod 2."""
    if isinstance(diagram, LinkDiagram):
        regions = diagram.regions()
        sites = list(range(diagram.crossing_count))
    else:
        regions = list(diagram.regions)
        sites = diagram.lamp_vertices()
    rows = []
    for s in sites:
        rows.append(indices_to_bits(r.id for r in regions if r.corner_parity(s)))
    return Gf2Matrix(tuple(rows), len(regions))


def board_from_link(diagram: LinkDiagram, lamps: int = 0) -> LampBoard:
    sites = tuple(range(diagram.crossing_count))
    return LampBoard(
        matrix=incidence_matrix(diagram),
        site_labels=tuple(f"c{i + 1}" for i in sites),
        region_labels=tuple(f"R{i + 1}" for i in range(diagram.region_count())),
        lamps=lamps,
        diagram=diagram,
        site_keys=sites,
    )


def board_from_pattern(pattern: CreasePattern, lamps: int = 0) -> LampBoard:
    sites = tuple(pattern.lamp_vertices())
    return LampBoard(
        matrix=incidence_matrix(pattern),
        site_labels=tuple(f"v{i + 1}" for i in range(len(sites))),
        region_labels=tuple(f"R{i + 1}" for i in range(len(pattern.regions))),
        lamps=lamps,
        diagram=pattern,
        site_keys=sites,
    )


def board_from_matrix(
    matrix: Gf2Matrix,
    site_labels: Optional[Sequence[str]] = None,
    region_labels: Optional[Sequence[str]] = None,
    lamps: int = 0,
) -> LampBoard:
    return LampBoard(
        matrix=matrix,
        site_labels=tuple(site_labels or (f"v{i + 1}" for i in range(matrix.nrows))),
        region_labels=tuple(region_labels or (f"R{i + 1}" for i in range(matrix.cols))),
        lamps=lamps,
    )


def region_adjacency(board: LampBoard) -> list[tuple[int, int]]:
    """Pairs of region ids sharing an edge; diagram-backed boards only."""
    d = board.diagram
    if d is None:
        raise DiagramError("abstract boards carry no region adjacency")
    if isinstance(d, LinkDiagram):
        return sorted({(min(a, b), max(a, b)) for a, b, _ in d.dual_edges() if a != b})
    pairs = set()
    from .planar import dart_region_map

    all_regions = list(d.regions) + [d.outer_region]
    by_dart = dart_region_map(all_regions)
    n = len(d.regions)
    for dart in range(d.diagram.dart_count):
        a, b = by_dart[dart], by_dart[d.diagram.opposite[dart]]
        if a != b and a < n and b < n:
            pairs.add((min(a, b), max(a, b)))
    return sorted(pairs)


# -- board files -------------------------------------------------------------


def load_board(source: Union[str, dict]) -> LampBoard:
    """Board file: {"diagram": <payload>, "lamps": {"<site>": 0|1}}.

    The diagram payload is PD text ({"pd": ...}), FOLD-style arrays, or
    an explicit matrix ({"matrix": [...], "sites": [...], "regions": [...]}).
    """
    data = json.loads(source) if isinstance(source, str) else source
    if "diagram" not in data:
        raise DiagramError("board file needs a 'diagram' payload")
    payload = data["diagram"]
    if isinstance(payload, str):
        board = board_from_link(parse_pd(payload))
    elif "pd" in payload:
        board = board_from_link(parse_pd(payload["pd"]))
    elif "matrix" in payload:
        board = board_from_matrix(
            Gf2Matrix.from_strings(payload["matrix"]),
            payload.get("sites"),
            payload.get("regions"),
        )
    elif "vertices_coords" in payload:
        board = board_from_pattern(parse_fold(payload))
    else:
        raise DiagramError("unrecognized diagram payload")
    lamps = 0
    for label, bit in (data.get("lamps") or {}).items():
        if bit not in (0, 1):
            raise DiagramError(f"lamp value for {label} must be 0 or 1")
        lamps |= bit << board.site_index(label)
    return board.with_lamps(lamps)


def dump_board(board: LampBoard) -> dict:
    from .link import emit_pd

    if isinstance(board.diagram, LinkDiagram):
        payload: dict = {"pd": emit_pd(board.diagram)}
    elif isinstance(board.diagram, CreasePattern):
        payload = {
            "vertices_coords": [[float(x), float(y)] for x, y in board.diagram.vertices],
            "edges_vertices": [list(e) for e in board.diagram.edges],
            "edges_assignment": [
                "B" if b else "U" for b in board.diagram.boundary_edge
            ],
        }
    else:
        payload = {
            "matrix": board.matrix.to_strings(),
            "sites": list(board.site_labels),
            "regions": list(board.region_labels),
        }
    lamps = {
        label: (board.lamps >> i) & 1 for i, label in enumerate(board.site_labels)
    }
    return {"diagram": payload, "lamps": lamps}
