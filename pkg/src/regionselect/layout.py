"""Planar layouts for the UI: region outlines and lamp positions.

Crease patterns render with their own coordinates.  Link diagrams get a
Tutte (barycentric) embedding of the subdivided map with the largest
face as the outer boundary, which realizes exactly the combinatorial
faces the engine numbers.
"""

from __future__ import annotations

import math
from typing import Optional

import numpy as np

from .board import LampBoard
from .crease import CreasePattern
from .link import LinkDiagram


def _tutte_positions(diagram: LinkDiagram) -> dict:
    """Positions for crossings and one midpoint per edge."""
    n = diagram.crossing_count
    # nodes: crossings 0..n-1, midpoints n+k for edge k
    edges = []
    seen = set()
    for c in range(n):
        for p in range(4):
            key = tuple(sorted([(c, p), diagram.adj[c][p]]))
            if key in seen:
                continue
            seen.add(key)
            edges.append(key)
    mid_of = {key: n + i for i, key in enumerate(edges)}
    total = n + len(edges)
    adj: dict[int, list[int]] = {i: [] for i in range(total)}
    for key in edges:
        (c1, _p1), (c2, _p2) = key
        m = mid_of[key]
        adj[c1].append(m)
        adj[c2].append(m)
        adj[m].extend([c1, c2])

    regions = diagram.regions()
    outer = max(regions, key=lambda r: len(r.darts), default=None)
    boundary: list[int] = []
    if outer is not None:
        for d in outer.darts:
            c, p = divmod(d, 4)
            key = tuple(sorted([(c, p), diagram.adj[c][p]]))
            boundary.extend([c, mid_of[key]])
    # dedupe, preserving order
    ring = []
    for v in boundary:
        if v not in ring:
            ring.append(v)
    pos = {}
    k = max(len(ring), 1)
    for i, v in enumerate(ring):
        ang = 2 * math.pi * i / k
        pos[v] = (math.cos(ang), math.sin(ang))
    free = [v for v in range(total) if v not in pos]
    if free:
        index = {v: i for i, v in enumerate(free)}
        a = np.zeros((len(free), len(free)))
        bx = np.zeros(len(free))
        by = np.zeros(len(free))
        for v in free:
            i = index[v]
            nbrs = adj[v]
            a[i, i] = len(nbrs)
            for w in nbrs:
                if w in index:
                    a[i, index[w]] -= 1
                else:
                    bx[i] += pos[w][0]
                    by[i] += pos[w][1]
        xs = np.linalg.solve(a, bx)
        ys = np.linalg.solve(a, by)
        for v in free:
            pos[v] = (float(xs[index[v]]), float(ys[index[v]]))
    return {"pos": pos, "mid_of": mid_of, "outer": outer.id if outer else None}


def link_layout(diagram: LinkDiagram) -> dict:
    """Region polygons and lamp markers for a link diagram."""
    data = _tutte_positions(diagram)
    pos, mid_of = data["pos"], data["mid_of"]
    regions = diagram.regions()
    polys = []
    for reg in regions:
        pts = []
        for d in reg.darts:
            c, p = divmod(d, 4)
            key = tuple(sorted([(c, p), diagram.adj[c][p]]))
            pts.append(pos[c])
            pts.append(pos[mid_of[key]])
        polys.append({"region": reg.id, "points": [[round(x, 4), round(y, 4)] for x, y in pts],
                      "outer": reg.id == data["outer"]})
    lamps = [
        {"site": c, "at": [round(pos[c][0], 4), round(pos[c][1], 4)]}
        for c in range(diagram.crossing_count)
    ]
    return {"kind": "link", "regions": polys, "lamps": lamps}


def pattern_layout(pattern: CreasePattern) -> dict:
    """Region polygons and lamp markers straight from the sheet."""
    polys = []
    vs = pattern.vertices
    for reg in pattern.regions:
        outline = reg.cycles[0]
        pts = [vs[pattern.diagram.vertex_of[d]] for d in outline]
        polys.append(
            {
                "region": reg.id,
                "points": [[float(x), float(y)] for x, y in pts],
                "outer": False,
                "holes": [
                    [[float(vs[pattern.diagram.vertex_of[d]][0]),
                      float(vs[pattern.diagram.vertex_of[d]][1])] for d in cyc]
                    for cyc in reg.cycles[1:]
                ],
            }
        )
    lamps = [
        {"site": i, "at": [float(vs[v][0]), float(vs[v][1])]}
        for i, v in enumerate(pattern.lamp_vertices())
    ]
    return {"kind": "pattern", "regions": polys, "lamps": lamps}


def board_layout(board: LampBoard) -> Optional[dict]:
    if isinstance(board.diagram, CreasePattern):
        return pattern_layout(board.diagram)
    if isinstance(board.diagram, LinkDiagram):
        return link_layout(board.diagram)
    return None
