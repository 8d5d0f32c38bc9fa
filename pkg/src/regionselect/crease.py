"""Crease patterns on the unit square sheet.

Input is the two-array subset of the community FOLD format:
``vertices_coords`` and ``edges_vertices``; an optional
``edges_assignment`` is honored only for ``"B"`` (boundary) marks.
Decimal coordinates parse to exact rationals, so incidence decisions
(collinearity, angular order) are exact whenever the input is.

The sheet is a disk: the four square sides are part of the map, and the
face outside the square is excluded from the playable regions.  Creases
may bend at degree-2 vertices; those are subdivision points of a single
drawn curve, not crossings, and never carry lamps.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Optional, Sequence, Union

from .planar import DISK, DiagramError, PlanarDiagram, Region, regions_from_cycles

Coord = tuple[Fraction, Fraction]

GEOM_TOL = Fraction(1, 10**9)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return Fraction(str(x))


def _cross(o: Coord, a: Coord, b: Coord) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _between(a: Coord, b: Coord, p: Coord) -> bool:
    """p strictly inside segment ab, assuming collinear."""
    if a == p or b == p:
        return False
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def _segments_clash(a: Coord, b: Coord, c: Coord, d: Coord) -> bool:
    """True when segments ab and cd meet anywhere except shared endpoints."""
    shared = {a, b} & {c, d}
    if shared:
        # Touching at a shared vertex is fine; anything more is not.
        d1, d2 = ({a, b} - shared), ({c, d} - shared)
        if not d1 or not d2:
            return False
        (p,) = d1
        (q,) = d2
        (s,) = shared
        if _cross(s, p, q) == 0 and (p[0] - s[0]) * (q[0] - s[0]) + (p[1] - s[1]) * (q[1] - s[1]) > 0:
            return True  # overlapping collinear edges out of the shared vertex
        return False
    o1 = _cross(a, b, c)
    o2 = _cross(a, b, d)
    o3 = _cross(c, d, a)
    o4 = _cross(c, d, b)
    if ((o1 > 0) != (o2 > 0) and o1 != 0 and o2 != 0
            and (o3 > 0) != (o4 > 0) and o3 != 0 and o4 != 0):
        return True
    if o1 == 0 and _between(a, b, c):
        return True
    if o2 == 0 and _between(a, b, d):
        return True
    if o3 == 0 and _between(c, d, a):
        return True
    if o4 == 0 and _between(c, d, b):
        return True
    return False


def _dir_cmp(u: tuple[Fraction, Fraction], v: tuple[Fraction, Fraction]) -> int:
    """Counterclockwise comparison of direction vectors starting at angle 0."""
    hu = 0 if (u[1] > 0 or (u[1] == 0 and u[0] > 0)) else 1
    hv = 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1
    if hu != hv:
        return -1 if hu < hv else 1
    c = u[0] * v[1] - u[1] * v[0]
    if c > 0:
        return -1
    if c < 0:
        return 1
    return 0


@dataclass(frozen=True)
class CreasePattern:
    """A validated pattern with its derived planar map and regions."""

    vertices: tuple[Coord, ...]
    edges: tuple[tuple[int, int], ...]
    boundary_edge: tuple[bool, ...]
    diagram: PlanarDiagram
    regions: tuple[Region, ...]
    outer_region: Region

    # -- structure queries -------------------------------------------------

    def is_boundary_vertex(self, v: int) -> bool:
        x, y = self.vertices[v]
        return x == 0 or x == 1 or y == 0 or y == 1

    def edges_at(self, v: int) -> list[int]:
        return [e for e, (a, b) in enumerate(self.edges) if v in (a, b)]

    def interior_edges_at(self, v: int) -> list[int]:
        return [e for e in self.edges_at(v) if not self.boundary_edge[e]]

    def degree(self, v: int) -> int:
        return len(self.edges_at(v))

    def interior_vertices(self) -> list[int]:
        return [v for v in range(len(self.vertices)) if not self.is_boundary_vertex(v)]

    def lamp_vertices(self) -> list[int]:
        """Vertices that carry lamps: interior meeting points of creases
        (degree >= 3; degree-2 bends are drawing artifacts) plus boundary
        vertices with at least two interior edges.  Sheet corners and
        plain crease feet stay lamp-free."""
        out = []
        for v in range(len(self.vertices)):
            if self.is_boundary_vertex(v):
                if len(self.interior_edges_at(v)) >= 2:
                    out.append(v)
            elif self.degree(v) >= 3:
                out.append(v)
        return out

    def dart_edge(self, dart: int) -> int:
        return dart // 2

    def dart_dir(self, dart: int) -> tuple[Fraction, Fraction]:
        e = dart // 2
        a, b = self.edges[e]
        if dart % 2 == 1:
            a, b = b, a
        ax, ay = self.vertices[a]
        bx, by = self.vertices[b]
        return (bx - ax, by - ay)

    def darts_at(self, v: int) -> list[int]:
        return [d for d in range(2 * len(self.edges)) if self.diagram.vertex_of[d] == v]

    def sector_angles(self, v: int) -> list[float]:
        """Angles in degrees between consecutive creases around an
        interior vertex, counterclockwise."""
        darts = self.darts_at(v)
        darts.sort(key=cmp_to_key(lambda d1, d2: _dir_cmp(self.dart_dir(d1), self.dart_dir(d2))))
        angs = [math.atan2(float(self.dart_dir(d)[1]), float(self.dart_dir(d)[0])) for d in darts]
        out = []
        for i in range(len(angs)):
            a = angs[(i + 1) % len(angs)] - angs[i]
            if a <= 0:
                a += 2 * math.pi
            out.append(math.degrees(a))
        return out

    def boundary_side_edges(self, v: int) -> tuple[list[int], Optional[int]]:
        """For a boundary vertex with 3 interior edges: ([side, side], center).

        Side edges bound a sector touching the sheet boundary; for 2
        interior edges both are sides and center is None.
        """
        inner = self.interior_edges_at(v)
        if not self.is_boundary_vertex(v):
            raise DiagramError(f"vertex {v} is not on the sheet boundary")
        bdarts = [d for d in self.darts_at(v) if self.boundary_edge[d // 2]]
        idarts = [d for d in self.darts_at(v) if not self.boundary_edge[d // 2]]
        if len(bdarts) != 2:
            raise DiagramError(f"boundary vertex {v} lacks its two boundary edges")
        alldarts = sorted(
            bdarts + idarts,
            key=cmp_to_key(lambda d1, d2: _dir_cmp(self.dart_dir(d1), self.dart_dir(d2))),
        )
        k = len(alldarts)
        order = []
        start = alldarts.index(bdarts[0])
        for i in range(k):
            order.append(alldarts[(start + i) % k])
        if order[-1] != bdarts[1]:
            # walk the other way so the interior darts sit between the
            # two boundary darts
            start = alldarts.index(bdarts[1])
            order = [alldarts[(start + i) % k] for i in range(k)]
        mid = [d // 2 for d in order[1:-1]]
        if sorted(mid) != sorted(inner):
            raise DiagramError(f"inconsistent sector structure at boundary vertex {v}")
        if len(mid) == 3:
            return [mid[0], mid[2]], mid[1]
        return list(mid), None


def _perimeter_pos(p: Coord) -> Fraction:
    x, y = p
    if y == 0:
        return x
    if x == 1:
        return 1 + y
    if y == 1:
        return 3 - x
    if x == 0:
        return 4 - y
    raise DiagramError(f"vertex {p} is not on the sheet boundary")


def parse_fold(source: Union[str, dict]) -> CreasePattern:
    """Build a validated CreasePattern from FOLD-style data."""
    if isinstance(source, str):
        data = json.loads(source, parse_float=lambda s: Fraction(s))
    else:
        data = source
    try:
        raw_coords = data["vertices_coords"]
        raw_edges = data["edges_vertices"]
    except (KeyError, TypeError) as exc:
        raise DiagramError("need vertices_coords and edges_vertices") from exc
    assignment = data.get("edges_assignment")

    verts: list[Coord] = []
    for i, pair in enumerate(raw_coords):
        x, y = _frac(pair[0]), _frac(pair[1])
        if not (-GEOM_TOL <= x <= 1 + GEOM_TOL and -GEOM_TOL <= y <= 1 + GEOM_TOL):
            raise DiagramError(f"vertex {i} at ({x}, {y}) is outside the unit square")
        x = Fraction(0) if abs(x) <= GEOM_TOL else (Fraction(1) if abs(x - 1) <= GEOM_TOL else x)
        y = Fraction(0) if abs(y) <= GEOM_TOL else (Fraction(1) if abs(y - 1) <= GEOM_TOL else y)
        verts.append((x, y))
    if len(set(verts)) != len(verts):
        raise DiagramError("duplicate vertex coordinates")

    edges: list[tuple[int, int]] = []
    is_boundary: list[bool] = []
    seen_pairs = set()
    for k, (i, j) in enumerate(raw_edges):
        if i == j or not (0 <= i < len(verts) and 0 <= j < len(verts)):
            raise DiagramError(f"edge {k} has bad endpoints")
        key = (min(i, j), max(i, j))
        if key in seen_pairs:
            raise DiagramError(f"edge {k} duplicates another edge")
        seen_pairs.add(key)
        edges.append((i, j))
        mark = assignment[k] if assignment and k < len(assignment) else None
        on_rim = False
        a, b = verts[i], verts[j]
        for coord in (0, 1):
            for val in (Fraction(0), Fraction(1)):
                if a[coord] == val and b[coord] == val:
                    on_rim = True
        is_boundary.append(bool(mark == "B" or on_rim))
        if mark == "B" and not on_rim:
            raise DiagramError(f"edge {k} is marked boundary but not on the square rim")

    # complete the square rim: corners, then consecutive perimeter vertices
    def ensure_vertex(p: Coord) -> int:
        if p in verts:
            return verts.index(p)
        verts.append(p)
        return len(verts) - 1

    for corner in ((Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)),
                   (Fraction(1), Fraction(1)), (Fraction(0), Fraction(1))):
        ensure_vertex(corner)
    rim = [v for v in range(len(verts))
           if verts[v][0] in (0, 1) or verts[v][1] in (0, 1)]
    rim.sort(key=lambda v: _perimeter_pos(verts[v]))
    for idx, v in enumerate(rim):
        w = rim[(idx + 1) % len(rim)]
        key = (min(v, w), max(v, w))
        if key not in seen_pairs:
            seen_pairs.add(key)
            edges.append((v, w))
            is_boundary.append(True)

    # geometric validation: creases meet only at shared vertices
    for e, (i, j) in enumerate(edges):
        for v in range(len(verts)):
            if v in (i, j):
                continue
            if _cross(verts[i], verts[j], verts[v]) == 0 and _between(verts[i], verts[j], verts[v]):
                raise DiagramError(
                    f"vertex {v} lies inside edge {e}; subdivide the pattern first"
                )
    for e1 in range(len(edges)):
        for e2 in range(e1 + 1, len(edges)):
            a, b = (verts[k] for k in edges[e1])
            c, d = (verts[k] for k in edges[e2])
            if _segments_clash(a, b, c, d):
                raise DiagramError(
                    f"edges {e1} and {e2} cross away from a shared vertex; "
                    "subdivide the pattern first"
                )

    return _assemble(tuple(verts), tuple(edges), tuple(is_boundary))


def _assemble(
    verts: tuple[Coord, ...],
    edges: tuple[tuple[int, int], ...],
    is_boundary: tuple[bool, ...],
) -> CreasePattern:
    ndarts = 2 * len(edges)
    vertex_of = [0] * ndarts
    opposite = [0] * ndarts
    for e, (i, j) in enumerate(edges):
        vertex_of[2 * e] = i
        vertex_of[2 * e + 1] = j
        opposite[2 * e] = 2 * e + 1
        opposite[2 * e + 1] = 2 * e

    def ddir(d: int) -> tuple[Fraction, Fraction]:
        e = d // 2
        a, b = edges[e]
        if d % 2 == 1:
            a, b = b, a
        return (verts[b][0] - verts[a][0], verts[b][1] - verts[a][1])

    rotation = [0] * ndarts
    darts_by_vertex: dict[int, list[int]] = {}
    for d in range(ndarts):
        darts_by_vertex.setdefault(vertex_of[d], []).append(d)
    for v, darts in darts_by_vertex.items():
        darts.sort(key=cmp_to_key(lambda d1, d2: _dir_cmp(ddir(d1), ddir(d2))))
        for i, d in enumerate(darts):
            rotation[d] = darts[(i + 1) % len(darts)]

    probe = PlanarDiagram(tuple(opposite), tuple(rotation), tuple(vertex_of))
    probe.euler_check()
    cycles = probe.face_cycles()

    def area2(cyc: Sequence[int]) -> Fraction:
        s = Fraction(0)
        pts = [verts[vertex_of[d]] for d in cyc]
        for i in range(len(pts)):
            x1, y1 = pts[i]
            x2, y2 = pts[(i + 1) % len(pts)]
            s += x1 * y2 - x2 * y1
        return s

    # With counterclockwise rotations, interior faces trace clockwise
    # (negative area); outer walks of components trace counterclockwise.
    # Tree-like components give zero-area walks and count as holes too.
    solids = []
    holes = []
    for cyc in cycles:
        a = area2(cyc)
        if a < 0:
            solids.append((-a, cyc))
        else:
            holes.append(cyc)
    if not holes:
        raise DiagramError("no outer walk found; boundary construction failed")

    def contains(cyc: Sequence[int], p: Coord) -> bool:
        # ray cast to the right from p along y = p.y
        pts = [verts[vertex_of[d]] for d in cyc]
        inside = False
        for i in range(len(pts)):
            x1, y1 = pts[i]
            x2, y2 = pts[(i + 1) % len(pts)]
            if (y1 > p[1]) != (y2 > p[1]):
                t = (p[1] - y1) / (y2 - y1)
                x = x1 + t * (x2 - x1)
                if x > p[0]:
                    inside = not inside
        return inside

    solids.sort(key=lambda ac: ac[0])
    groups: list[list[tuple[int, ...]]] = [[cyc] for _, cyc in solids]
    top_level: list[tuple[int, ...]] = []
    for h in holes:
        rep = verts[vertex_of[h[0]]]
        owner = None
        for gi, (a, cyc) in enumerate(solids):
            if vertex_of[h[0]] in {vertex_of[d] for d in cyc}:
                continue
            if contains(cyc, rep):
                owner = gi
                break
        if owner is None:
            top_level.append(h)
        else:
            groups[owner].append(h)
    if len(top_level) != 1:
        raise DiagramError("expected exactly one outer walk outside the sheet")

    groups.sort(key=lambda cycs: min(min(c) for c in cycs))
    all_groups = groups + [top_level]
    boundary_walk = tuple(top_level[0])
    diagram = PlanarDiagram(
        tuple(opposite), tuple(rotation), tuple(vertex_of), DISK, boundary_walk
    )
    regions = regions_from_cycles(diagram, all_groups, outer_group=len(all_groups) - 1)
    return CreasePattern(
        vertices=verts,
        edges=edges,
        boundary_edge=is_boundary,
        diagram=diagram,
        regions=tuple(regions[:-1]),
        outer_region=regions[-1],
    )


def pattern_from_segments(
    segments: Iterable[tuple[Coord, Coord]],
    scale: int = 1,
) -> CreasePattern:
    """Build a pattern from raw crease segments on a scale x scale grid.

    Segments are subdivided at shared endpoints only; they must already
    meet the no-crossing rule.  Convenience for fixtures.
    """
    verts: list[Coord] = []
    index: dict[Coord, int] = {}

    def vid(p) -> int:
        q = (_frac(p[0]) / scale, _frac(p[1]) / scale)
        if q not in index:
            index[q] = len(verts)
            verts.append(q)
        return index[q]

    edges = []
    for a, b in segments:
        edges.append([vid(a), vid(b)])
    return parse_fold(
        {
            "vertices_coords": [[x, y] for x, y in verts],
            "edges_vertices": edges,
        }
    )
