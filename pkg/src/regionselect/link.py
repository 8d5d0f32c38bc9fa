"""Link diagrams as 4-valent sphere maps with over/under data.

A diagram is a list of crossings, each with four ports numbered
counterclockwise.  Strands continue through opposite ports (p -> p+2).
By PD convention the strand through ports 1-3 passes over; a crossing
change flips that flag.  Crossing-free unknot components are tracked by
count only (``free_loops``), since they carry no map structure.

PD text format: one ``X(a,b,c,d)`` line per crossing, labels listed
counterclockwise starting from the incoming under-strand edge; ``O(k)``
adds k crossing-free loops; ``#`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .planar import (
    DiagramError,
    PlanarDiagram,
    Region,
    checkerboard_colors,
    dual_edges,
    simple_regions,
)

Port = tuple[int, int]


def _dart(c: int, p: int) -> int:
    return 4 * c + p


@dataclass(frozen=True)
class LinkDiagram:
    """Immutable 4-valent diagram; adj[c][p] is the port glued to (c, p)."""

    adj: tuple[tuple[Port, Port, Port, Port], ...]
    over_swapped: tuple[bool, ...] = ()
    free_loops: int = 0
    pd_labels: Optional[tuple[tuple[int, int, int, int], ...]] = None

    def __post_init__(self) -> None:
        n = len(self.adj)
        if not self.over_swapped:
            object.__setattr__(self, "over_swapped", tuple(False for _ in range(n)))
        if len(self.over_swapped) != n:
            raise DiagramError("over_swapped length mismatch")
        for c in range(n):
            for p in range(4):
                c2, p2 = self.adj[c][p]
                if not (0 <= c2 < n and 0 <= p2 < 4):
                    raise DiagramError("port out of range")
                if self.adj[c2][p2] != (c, p):
                    raise DiagramError("port gluing is not an involution")
                if (c2, p2) == (c, p):
                    raise DiagramError("port glued to itself")

    @property
    def crossing_count(self) -> int:
        return len(self.adj)

    def planar(self) -> PlanarDiagram:
        n = len(self.adj)
        opposite = [0] * (4 * n)
        rotation = [0] * (4 * n)
        vertex_of = [0] * (4 * n)
        for c in range(n):
            for p in range(4):
                c2, p2 = self.adj[c][p]
                opposite[_dart(c, p)] = _dart(c2, p2)
                rotation[_dart(c, p)] = _dart(c, (p + 1) % 4)
                vertex_of[_dart(c, p)] = c
        return PlanarDiagram(tuple(opposite), tuple(rotation), tuple(vertex_of))

    def validate(self) -> None:
        self.planar().euler_check()

    def regions(self) -> list[Region]:
        """Faces of the diagram; for a bare unknot diagram, the two sides."""
        if self.crossing_count == 0:
            n = self.free_loops + 1 if self.free_loops else 0
            return [Region(id=i, cycles=(), corners={}) for i in range(n)]
        return simple_regions(self.planar())

    def region_count(self) -> int:
        return len(self.regions())

    def dual_edges(self) -> list[tuple[int, int, int]]:
        return dual_edges(self.planar(), self.regions())

    def checkerboard(self) -> list[int]:
        """Two-coloring of regions, adjacent regions differing."""
        return checkerboard_colors(self.regions(), self.dual_edges())

    # -- strands ---------------------------------------------------------

    def components(self) -> list[list[Port]]:
        """Strand decomposition: each component as its directed port walk.

        The walk lists the ports a traveller exits through; entry ports
        are implied by the gluing.  Deterministic: components start from
        their smallest unused exit port.
        """
        n = self.crossing_count
        used = set()
        comps = []
        for c0 in range(n):
            for p0 in range(4):
                if (c0, p0) in used:
                    continue
                walk = []
                c, p = c0, p0
                while (c, p) not in used:
                    used.add((c, p))
                    walk.append((c, p))
                    c2, p2 = self.adj[c][p]
                    used.add((c2, p2))
                    c, p = c2, (p2 + 2) % 4
                comps.append(walk)
        return comps

    def component_count(self) -> int:
        return len(self.components()) + self.free_loops

    def component_of_port(self) -> dict[Port, int]:
        out = {}
        for i, walk in enumerate(self.components()):
            for c, p in walk:
                out[(c, p)] = i
                c2, p2 = self.adj[c][p]
                out[(c2, p2)] = i
        return out

    def crossing_components(self, c: int) -> tuple[int, int]:
        """Components of the two strands through crossing c (0-2 and 1-3)."""
        by_port = self.component_of_port()
        return by_port[(c, 0)], by_port[(c, 1)]

    def is_self_crossing(self, c: int) -> bool:
        a, b = self.crossing_components(c)
        return a == b

    # -- orientation and signs -------------------------------------------

    def _incoming_ports(self) -> dict[Port, bool]:
        """incoming[(c, p)] is True when the strand enters c at port p."""
        incoming: dict[Port, bool] = {}
        for walk in self.components():
            for c, p in walk:
                incoming[(c, p)] = False
                c2, p2 = self.adj[c][p]
                incoming[(c2, p2)] = True
        return incoming

    def crossing_sign(self, c: int) -> int:
        """+1 or -1 with the canonical strand orientations."""
        incoming = self._incoming_ports()
        under_ports = (0, 2) if not self.over_swapped[c] else (1, 3)
        over_ports = (1, 3) if not self.over_swapped[c] else (0, 2)
        u_in = under_ports[0] if incoming[(c, under_ports[0])] else under_ports[1]
        o_in = over_ports[0] if incoming[(c, over_ports[0])] else over_ports[1]
        return 1 if (o_in - u_in) % 4 == 3 else -1

    def linking_matrix(self) -> list[list[float]]:
        """Pairwise linking numbers of the mapped components."""
        k = len(self.components())
        by_port = self.component_of_port()
        lk = [[0.0] * k for _ in range(k)]
        for c in range(self.crossing_count):
            a, b = by_port[(c, 0)], by_port[(c, 1)]
            if a == b:
                continue
            s = self.crossing_sign(c) / 2.0
            lk[a][b] += s
            lk[b][a] += s
        return lk

    # -- surgery ----------------------------------------------------------

    def with_crossing_changed(self, c: int) -> "LinkDiagram":
        flags = list(self.over_swapped)
        flags[c] = not flags[c]
        return LinkDiagram(self.adj, tuple(flags), self.free_loops, self.pd_labels)

    def with_crossings_changed(self, cs: Iterable[int]) -> "LinkDiagram":
        flags = list(self.over_swapped)
        for c in cs:
            flags[c] = not flags[c]
        return LinkDiagram(self.adj, tuple(flags), self.free_loops, self.pd_labels)

    def reducible_crossings(self) -> dict[int, int]:
        """Crossings some region touches twice, mapped to that region id."""
        out = {}
        for reg in self.regions():
            for v, k in reg.corners.items():
                if k >= 2:
                    out[v] = reg.id
        return out


# -- PD code I/O -----------------------------------------------------------

_X_RE = re.compile(r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)")
_O_RE = re.compile(r"O\(\s*(\d+)\s*\)")


def parse_pd(text: str) -> LinkDiagram:
    """Parse PD-code text into a LinkDiagram.

    Each edge label must occur exactly twice; the traced map must pass
    the planarity (Euler) check.
    """
    tuples: list[tuple[int, int, int, int]] = []
    free_loops = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        pos = 0
        while pos < len(line):
            m = _X_RE.match(line, pos)
            if m:
                tuples.append(tuple(int(g) for g in m.groups()))  # type: ignore[arg-type]
                pos = m.end()
            else:
                m = _O_RE.match(line, pos)
                if m:
                    free_loops += int(m.group(1))
                    pos = m.end()
                else:
                    raise DiagramError(f"line {lineno}: cannot parse {line[pos:]!r}")
            while pos < len(line) and line[pos] in " ,;\t":
                pos += 1
    slots: dict[int, list[Port]] = {}
    for c, labels in enumerate(tuples):
        for p, lab in enumerate(labels):
            slots.setdefault(lab, []).append((c, p))
    adj: list[list[Port]] = [[(-1, -1)] * 4 for _ in tuples]
    for lab, ends in sorted(slots.items()):
        if len(ends) != 2:
            raise DiagramError(f"edge label {lab} appears {len(ends)} times, need exactly 2")
        (c1, p1), (c2, p2) = ends
        adj[c1][p1] = (c2, p2)
        adj[c2][p2] = (c1, p1)
    diagram = LinkDiagram(
        tuple(tuple(row) for row in adj),  # type: ignore[arg-type]
        free_loops=free_loops,
        pd_labels=tuple(tuples) if tuples else None,
    )
    if diagram.crossing_count:
        diagram.validate()
        if diagram.planar().component_count() > 1:
            raise DiagramError("PD code describes a split diagram; one connected piece only")
    return diagram


def emit_pd(diagram: LinkDiagram) -> str:
    """Emit PD-code text; labels are preserved when the diagram has them."""
    if diagram.pd_labels is not None:
        labels = diagram.pd_labels
    else:
        lab: dict[Port, int] = {}
        nxt = 1
        for walk in diagram.components():
            for c, p in walk:
                lab[(c, p)] = nxt
                lab[diagram.adj[c][p]] = nxt
                nxt += 1
        labels = tuple(
            (lab[(c, 0)], lab[(c, 1)], lab[(c, 2)], lab[(c, 3)])
            for c in range(diagram.crossing_count)
        )
    lines = [f"X({a},{b},{c},{d})" for a, b, c, d in labels]
    if diagram.free_loops:
        lines.append(f"O({diagram.free_loops})")
    return "\n".join(lines) + "\n"


# -- constructors -----------------------------------------------------------


def braid_closure(word: Sequence[int], strands: int) -> LinkDiagram:
    """Close a braid word into a diagram.

    Letter +i crosses strands i, i+1 (1-based) with the left strand
    passing over; -i puts the right strand over.  Unused strands close
    into free loops.
    """
    if strands < 2:
        raise ValueError("need at least 2 strands")
    crossings: list[int] = []
    tops: dict[int, Port] = {}
    bottoms: dict[int, Port] = {}
    adj: list[list[Port]] = []
    over: list[bool] = []

    def glue(a: Port, b: Port) -> None:
        adj[a[0]][a[1]] = b
        adj[b[0]][b[1]] = a

    for letter in word:
        i = abs(letter)
        if not 1 <= i < strands:
            raise ValueError(f"letter {letter} out of range")
        c = len(adj)
        adj.append([(-1, -1)] * 4)
        # ports: 3=NW in, 2=NE in, 0=SW out, 1=SE out
        over.append(letter < 0)
        for pos, port_in in ((i, 3), (i + 1, 2)):
            if pos in bottoms:
                glue(bottoms[pos], (c, port_in))
            else:
                tops[pos] = (c, port_in)
        bottoms[i] = (c, 0)
        bottoms[i + 1] = (c, 1)
        crossings.append(c)
    free = 0
    for pos in range(1, strands + 1):
        if pos in bottoms:
            glue(bottoms[pos], tops[pos])
        else:
            free += 1
    diagram = LinkDiagram(
        tuple(tuple(row) for row in adj),  # type: ignore[arg-type]
        tuple(over),
        free_loops=free,
    )
    if diagram.crossing_count:
        diagram.validate()
    return diagram


def torus_link(n: int) -> LinkDiagram:
    """Standard (2, n) torus diagram: the closed 2-braid with n crossings."""
    if n < 1:
        raise ValueError("need at least one crossing")
    return braid_closure([1] * n, 2)
