"""Combinatorial planar maps: darts, rotations, face tracing, regions.

A map is a set of darts (half-edge ends) with a fixed-point-free
involution pairing them into edges and a rotation giving the next dart
counterclockwise around each vertex.  Faces are the orbits of
``rotation[opposite[d]]``; the Euler formula over the traced faces is
the planarity check for every diagram constructed here.

All values are immutable after construction; operations are pure.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

SPHERE = "sphere"
DISK = "disk"


class DiagramError(ValueError):
    """Structurally invalid diagram data."""


@dataclass(frozen=True)
class Region:
    """A face of the diagram, possibly with several boundary cycles.

    Most regions have one cycle; a region of a disconnected pattern picks
    up one extra cycle per component nested inside it.  ``corners`` maps
    a vertex to the number of corners this region has there.
    """

    id: int
    cycles: tuple[tuple[int, ...], ...]
    corners: dict[int, int] = field(compare=False)
    is_outer: bool = False

    @property
    def darts(self) -> tuple[int, ...]:
        return tuple(d for cyc in self.cycles for d in cyc)

    def corner_parity(self, vertex: int) -> int:
        return self.corners.get(vertex, 0) & 1


@dataclass(frozen=True)
class PlanarDiagram:
    """Dart-based combinatorial map.

    opposite:        fixed-point-free involution on darts
    vertex_rotation: next dart counterclockwise around the same vertex
    vertex_of:       dart -> vertex id
    surface:         'sphere' or 'disk'
    boundary_walk:   for a disk, the dart cycle tracing the sheet boundary
                     from inside (identifies the outer face)
    """

    opposite: tuple[int, ...]
    vertex_rotation: tuple[int, ...]
    vertex_of: tuple[int, ...]
    surface: str = SPHERE
    boundary_walk: Optional[tuple[int, ...]] = None

    def __post_init__(self) -> None:
        n = len(self.opposite)
        if len(self.vertex_rotation) != n or len(self.vertex_of) != n:
            raise DiagramError("dart arrays disagree in length")
        for d in range(n):
            o = self.opposite[d]
            if o == d or not 0 <= o < n or self.opposite[o] != d:
                raise DiagramError("opposite is not a fixed-point-free involution")
        seen = [False] * n
        for d in range(n):
            r = self.vertex_rotation[d]
            if not 0 <= r < n or self.vertex_of[r] != self.vertex_of[d]:
                raise DiagramError("vertex_rotation leaves its vertex")
            if seen[r]:
                raise DiagramError("vertex_rotation is not a permutation")
            seen[r] = True
        if self.surface == DISK and self.boundary_walk is None:
            raise DiagramError("disk diagrams need a boundary walk")
        if self.surface not in (SPHERE, DISK):
            raise DiagramError(f"unknown surface {self.surface!r}")

    @property
    def dart_count(self) -> int:
        return len(self.opposite)

    @property
    def edge_count(self) -> int:
        return len(self.opposite) // 2

    @property
    def vertex_count(self) -> int:
        return len(set(self.vertex_of))

    def next_in_face(self, dart: int) -> int:
        return self.vertex_rotation[self.opposite[dart]]

    def face_cycles(self) -> list[tuple[int, ...]]:
        """Partition darts into face orbits, ordered by smallest dart."""
        n = self.dart_count
        seen = [False] * n
        cycles = []
        for start in range(n):
            if seen[start]:
                continue
            cyc = []
            d = start
            while not seen[d]:
                seen[d] = True
                cyc.append(d)
                d = self.next_in_face(d)
            if d != start:
                raise DiagramError("face tracing did not close")
            cycles.append(tuple(cyc))
        return cycles

    def component_count(self) -> int:
        """Connected components of the underlying graph."""
        n = self.dart_count
        if n == 0:
            return 0
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a: int, b: int) -> None:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        for d in range(n):
            union(d, self.opposite[d])
            union(d, self.vertex_rotation[d])
        return len({find(d) for d in range(n)})

    def euler_check(self) -> None:
        """Require genus zero: every component satisfies V - E + F = 2."""
        if self.dart_count == 0:
            return
        v = self.vertex_count
        e = self.edge_count
        f = len(self.face_cycles())
        if v - e + f != 2 * self.component_count():
            raise DiagramError(
                f"rotation data is not planar (V={v} E={e} F={f})"
            )

    def degree(self, vertex: int) -> int:
        return sum(1 for v in self.vertex_of if v == vertex)


def regions_from_cycles(
    diagram: PlanarDiagram,
    groups: Sequence[Sequence[tuple[int, ...]]],
    outer_group: Optional[int] = None,
) -> list[Region]:
    """Assemble Region objects from grouped face cycles.

    ``groups`` lists, per region, the face cycles bounding it (more than
    one when components nest).  Regions are numbered in the given order.
    """
    regions = []
    for i, cycles in enumerate(groups):
        corners: Counter[int] = Counter()
        for cyc in cycles:
            for d in cyc:
                corners[diagram.vertex_of[d]] += 1
        regions.append(
            Region(
                id=i,
                cycles=tuple(tuple(c) for c in cycles),
                corners=dict(corners),
                is_outer=(i == outer_group),
            )
        )
    return regions


def simple_regions(diagram: PlanarDiagram) -> list[Region]:
    """One region per face cycle, for connected sphere diagrams."""
    cycles = diagram.face_cycles()
    cycles.sort(key=lambda c: min(c))
    return regions_from_cycles(diagram, [[c] for c in cycles])


def dart_region_map(regions: Iterable[Region]) -> dict[int, int]:
    out: dict[int, int] = {}
    for reg in regions:
        for d in reg.darts:
            out[d] = reg.id
    return out


def dual_edges(
    diagram: PlanarDiagram, regions: Sequence[Region]
) -> list[tuple[int, int, int]]:
    """One dual edge per diagram edge: (region_a, region_b, edge_dart).

    The edge is named by its smaller dart.  Loops appear when both sides
    of an edge lie in the same region.
    """
    by_dart = dart_region_map(regions)
    out = []
    for d in range(diagram.dart_count):
        o = diagram.opposite[d]
        if d < o:
            out.append((by_dart[d], by_dart[o], d))
    return out


def checkerboard_colors(
    regions: Sequence[Region], duals: Sequence[tuple[int, int, int]]
) -> list[int]:
    """Proper 2-coloring of regions across edges; region 0 gets color 0.

    Exists for every 4-valent diagram; raises DiagramError when the dual
    has an odd cycle (some vertex degree is odd).
    """
    colors: dict[int, int] = {}
    adj: dict[int, list[int]] = {r.id: [] for r in regions}
    for a, b, _ in duals:
        adj[a].append(b)
        adj[b].append(a)
    for root in sorted(adj):
        if root in colors:
            continue
        colors[root] = 0
        stack = [root]
        while stack:
            cur = stack.pop()
            for nxt in adj[cur]:
                if nxt not in colors:
                    colors[nxt] = colors[cur] ^ 1
                    stack.append(nxt)
                elif colors[nxt] == colors[cur]:
                    raise DiagramError("no checkerboard coloring: adjacent regions clash")
    return [colors[r.id] for r in sorted(regions, key=lambda r: r.id)]
