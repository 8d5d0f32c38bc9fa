"""Circled region changes on link diagrams.

A splitting circle crosses diagram edges transversally, avoiding
crossings.  Selecting a region of the diagram-with-circle changes every
crossing with an odd corner count on that region; the circled unlinking
number is the least number of such selections that provably trivialize
the diagram (the certifier is sound but incomplete, so every number
reported here is an upper bound whose matching lower bound comes from
exhausting smaller budgets).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .gf2 import Gf2Matrix, bits_to_indices, indices_to_bits
from .link import LinkDiagram
from .moves import (
    TrivialityCertificate,
    _MapEditor,
    _r3_apply,
    _r3_applicable,
    _triangles,
    push_strand,
    simplify,
)
from .planar import DiagramError

Port = tuple[int, int]


def _edge_key(diagram: LinkDiagram, end: Port) -> tuple[Port, Port]:
    other = diagram.adj[end[0]][end[1]]
    return (end, other) if end <= other else (other, end)


def _face_of_dart(faces: Sequence[tuple[Port, ...]], dart: Port) -> int:
    for i, f in enumerate(faces):
        if dart in f:
            return i
    raise DiagramError(f"dart {dart} missing from face structure")


@dataclass(frozen=True)
class Transit:
    """One crossing of the circle over a diagram edge.

    edge:     the edge as its ordered port pair
    position: where along the edge (from the smaller port end)
    arc_face: the diagram face carrying the arc to the next transit
    """

    edge: tuple[Port, Port]
    position: Fraction
    arc_face: int


@dataclass(frozen=True)
class CirclePlacement:
    """Cyclic sequence of transits; empty means no circle at all."""

    transits: tuple[Transit, ...]

    def key(self) -> tuple:
        """Dedup key: the multiset of crossed edges plus arc faces."""
        return tuple(sorted((t.edge, t.arc_face) for t in self.transits))


# -- overlay construction -----------------------------------------------------


@dataclass(frozen=True)
class SplitDiagram:
    """The diagram cut by the circle: regions, sides, incidence."""

    diagram: LinkDiagram
    placement: Optional[CirclePlacement]
    matrix: Gf2Matrix              # rows = crossings, cols = regions
    region_sides: tuple[int, ...]  # 0 = north, 1 = south
    crossing_sides: tuple[int, ...]
    region_corners: tuple[dict[int, int], ...]

    @property
    def region_count(self) -> int:
        return self.matrix.cols

    def north_crossings(self) -> list[int]:
        return [c for c, s in enumerate(self.crossing_sides) if s == 0]

    def south_crossings(self) -> list[int]:
        return [c for c, s in enumerate(self.crossing_sides) if s == 1]


def split_by_circle(
    diagram: LinkDiagram, placement: Optional[CirclePlacement]
) -> SplitDiagram:
    """Overlay the circle on the diagram and compute the region algebra.

    With no circle this degenerates to the plain region structure (all
    regions on one side).
    """
    n = diagram.crossing_count
    if placement is None or not placement.transits:
        regions = diagram.regions()
        rows = tuple(
            indices_to_bits(r.id for r in regions if r.corner_parity(c))
            for c in range(n)
        )
        return SplitDiagram(
            diagram=diagram,
            placement=None,
            matrix=Gf2Matrix(rows, len(regions)),
            region_sides=tuple(0 for _ in regions),
            crossing_sides=tuple(0 for _ in range(n)),
            region_corners=tuple(dict(r.corners) for r in regions),
        )

    base_faces = [tuple(f) for f in _MapEditor(diagram).faces()]
    # vertices: 0..n-1 crossings, n.. transit points
    conn: dict[Port, Port] = {}
    for c in range(n):
        for p in range(4):
            conn[(c, p)] = diagram.adj[c][p]

    transits = placement.transits
    k = len(transits)
    by_edge: dict[tuple[Port, Port], list[int]] = {}
    for i, t in enumerate(transits):
        by_edge.setdefault(t.edge, []).append(i)
    # subdivide each crossed edge at its transit points
    for edge, idxs in by_edge.items():
        idxs.sort(key=lambda i: transits[i].position)
        positions = [transits[i].position for i in idxs]
        if len(set(positions)) != len(positions):
            raise DiagramError("two transits at the same edge position")
        lo, hi = edge
        chain = [lo] + [(n + i, 0) for i in idxs] + [hi]
        # port 0 of a transit faces the smaller end, port 2 the larger
        for a, b in zip(chain, chain[1:]):
            a_out = a if a == lo else (a[0], 2)
            b_in = b
            conn[a_out] = b_in
            conn[b_in] = a_out
    # wire the circle arcs; the port facing the arc's face is 1 when
    # that face contains the dart of the edge's smaller end
    def circle_port(i: int, face: int) -> Port:
        t = transits[i]
        lo, hi = t.edge
        return (n + i, 1 if _face_of_dart(base_faces, lo) == face else 3)

    for i in range(k):
        j = (i + 1) % k
        face = transits[i].arc_face
        a = circle_port(i, face)
        b = circle_port(j, face)
        if conn.get(a) is not None or conn.get(b) is not None:
            raise DiagramError("circle arc ports collide; placement invalid")
        conn[a] = b
        conn[b] = a

    # face trace of the overlay
    seen: set[Port] = set()
    faces: list[tuple[Port, ...]] = []
    for start in sorted(conn):
        if start in seen:
            continue
        cyc = []
        d = start
        while d not in seen:
            seen.add(d)
            cyc.append(d)
            c2, p2 = conn[d]
            d = (c2, (p2 + 1) % 4)
        if d != start:
            raise DiagramError("overlay face tracing failed; placement invalid")
        faces.append(tuple(cyc))
    v = n + k
    e = len(conn) // 2
    if v - e + len(faces) != 2 * _overlay_components(conn):
        raise DiagramError("circle placement is not embeddable")

    # sides: regions across a circle arc differ, across diagram edges agree
    region_of: dict[Port, int] = {}
    for i, f in enumerate(faces):
        for d in f:
            region_of[d] = i
    sides = [-1] * len(faces)
    sides[0] = 0
    stack = [0]
    order = {i: f for i, f in enumerate(faces)}
    while stack:
        cur = stack.pop()
        for d in order[cur]:
            o = conn[d]
            neighbor = region_of[(o[0], (o[1]))]
            is_circle_edge = d[0] >= n and o[0] >= n and d[1] in (1, 3) and o[1] in (1, 3)
            want = sides[cur] ^ (1 if is_circle_edge else 0)
            if sides[neighbor] == -1:
                sides[neighbor] = want
                stack.append(neighbor)
            elif sides[neighbor] != want:
                raise DiagramError("circle does not separate; placement invalid")

    corners: list[dict[int, int]] = [dict() for _ in faces]
    for i, f in enumerate(faces):
        for c, _p in f:
            if c < n:
                corners[i][c] = corners[i].get(c, 0) + 1
    rows = []
    for c in range(n):
        rows.append(indices_to_bits(i for i in range(len(faces)) if corners[i].get(c, 0) % 2))
    crossing_sides = []
    for c in range(n):
        adj_sides = {sides[region_of[(c, p)]] for p in range(4)}
        if len(adj_sides) != 1:
            raise DiagramError(f"crossing {c} touches both sides; placement invalid")
        crossing_sides.append(adj_sides.pop())
    # normalize: the side of region 0 is north
    return SplitDiagram(
        diagram=diagram,
        placement=placement,
        matrix=Gf2Matrix(tuple(rows), len(faces)),
        region_sides=tuple(sides),
        crossing_sides=tuple(crossing_sides),
        region_corners=tuple(corners),
    )


def _overlay_components(conn: dict[Port, Port]) -> int:
    verts = {v for v, _ in conn}
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (v, _), (w, _) in conn.items():
        rv, rw = find(v), find(w)
        if rv != rw:
            parent[rv] = rw
    return len({find(v) for v in verts})


# -- circle generators --------------------------------------------------------


def crossing_circle(diagram: LinkDiagram, c: int) -> CirclePlacement:
    """Small circle around one crossing, crossing its four edges."""
    faces = [tuple(f) for f in _MapEditor(diagram).faces()]
    transits = []
    for p in range(4):
        edge = _edge_key(diagram, (c, p))
        lo, hi = edge
        pos = Fraction(1, 4) if lo == (c, p) else Fraction(3, 4)
        # the arc from this transit runs through the wedge between
        # ports p and p+1, which is the face holding dart (c, p+1)
        arc_face = _face_of_dart(faces, (c, (p + 1) % 4))
        transits.append(Transit(edge=edge, position=pos, arc_face=arc_face))
    return CirclePlacement(tuple(transits))


def _incidence_graph(diagram: LinkDiagram):
    """Nodes: ('c', crossing) and ('r', region); region-region edges
    remember the diagram edge they share."""
    regions = diagram.regions()
    adj: dict = {}
    for r in regions:
        adj[("r", r.id)] = set()
    for c in range(diagram.crossing_count):
        adj[("c", c)] = set()
    for r in regions:
        for v, k in r.corners.items():
            adj[("r", r.id)].add(("c", v))
            adj[("c", v)].add(("r", r.id))
    edge_between: dict = {}
    for a, b, dart in diagram.dual_edges():
        if a == b:
            continue
        adj[("r", a)].add(("r", b))
        adj[("r", b)].add(("r", a))
        edge_between.setdefault((min(a, b), max(a, b)), dart)
    return adj, edge_between


def neighborhood_circle(
    diagram: LinkDiagram, sites: Sequence, path: Optional[list] = None
) -> CirclePlacement:
    """Boundary of a thickened simple path through the given sites.

    Sites are crossing ids or ('edge', port-pair) basepoints.  When no
    explicit path is given, consecutive sites are joined by shortest
    paths in the region-incidence structure.
    """
    if not sites:
        raise DiagramError("need at least one site")
    norm = []
    for s in sites:
        if isinstance(s, int):
            norm.append(("c", s))
        else:
            kind, edge = s
            if kind != "edge":
                raise DiagramError(f"unknown site {s}")
            norm.append(("edge", edge))
    if path is None:
        path = _connect_sites(diagram, norm)
    return _corridor(diagram, path)


def _connect_sites(diagram: LinkDiagram, sites: list) -> list:
    """Join consecutive sites with shortest region paths (BFS)."""
    adj, _ = _incidence_graph(diagram)
    regions = diagram.regions()
    region_of_dart = {}
    for r in regions:
        for d in r.darts:
            region_of_dart[d] = r.id

    def anchors(site):
        if site[0] == "c":
            return {site}
        lo, hi = site[1]
        a = region_of_dart[4 * lo[0] + lo[1]]
        b = region_of_dart[4 * hi[0] + hi[1]]
        return {("r", a), ("r", b)}

    full: list = [sites[0]]
    for nxt in sites[1:]:
        src_site = full[-1]
        starts = sorted(anchors(src_site))
        goal = anchors(nxt)
        prev: dict = {s: None for s in starts}
        queue = list(starts)
        hit = None
        while queue:
            cur = queue.pop(0)
            if cur in goal or cur == nxt:
                hit = cur
                break
            if cur[0] == "c" and cur != src_site:
                continue
            for nb in sorted(adj.get(cur, ())):
                if nb in prev:
                    continue
                if nb[0] == "r" or nb == nxt:
                    prev[nb] = cur
                    queue.append(nb)
        if hit is None:
            raise DiagramError(
                "no connecting path between sites (should not happen on a sphere)"
            )
        chain = []
        cur = hit
        while cur is not None:
            chain.append(cur)
            cur = prev.get(cur)
        chain.reverse()
        if chain and chain[0] == src_site:
            chain = chain[1:]
        for item in chain:
            if item[0] == "r":
                full.append(item)
        full.append(nxt)
    return full


def _corridor(diagram: LinkDiagram, path: list) -> CirclePlacement:
    """Transit sequence around a thickened path, walked counterclockwise.

    The path alternates sites and regions.  Swallowed crossings have all
    four stub edges crossed once, endpoint wraps inside the forward
    sweep; region-to-region steps cross the shared diagram edge with
    both corridor walls; edge basepoints at the ends are wrapped by two
    nearby transits.  Every transit records the face its outgoing arc
    runs through, so the overlay needs no guessing.
    """
    faces = [tuple(f) for f in _MapEditor(diagram).faces()]
    _, edge_between = _incidence_graph(diagram)

    def face_of_wedge(c: int, p: int) -> int:
        # wedge between ports p and p+1 holds dart (c, p+1)
        return _face_of_dart(faces, (c, (p + 1) % 4))

    def stub(c: int, p: int) -> tuple:
        edge = _edge_key(diagram, (c, p))
        lo, _hi = edge
        pos = Fraction(1, 4) if lo == (c, p) else Fraction(3, 4)
        return (edge, pos)

    def edge_faces(edge) -> tuple[int, int]:
        return (_face_of_dart(faces, edge[0]), _face_of_dart(faces, edge[1]))

    if len(path) == 1:
        site = path[0]
        if site[0] == "c":
            return crossing_circle(diagram, site[1])
        lo, hi = site[1]
        edge = (lo, hi) if lo <= hi else (hi, lo)
        fa, fb = edge_faces(edge)
        return CirclePlacement(
            (
                Transit(edge=edge, position=Fraction(2, 5), arc_face=fa),
                Transit(edge=edge, position=Fraction(3, 5), arc_face=fb),
            )
        )

    m = len(path)
    if path[0][0] == "r" or path[-1][0] == "r":
        raise DiagramError("corridor paths start and end at sites")
    events: list[tuple] = []   # (edge, position, after_face)

    def region_id(item) -> int:
        if item[0] != "r":
            raise DiagramError("expected a region in the path")
        return item[1]

    # forward sweep, including both endpoint wraps
    for idx, item in enumerate(path):
        if item[0] == "r":
            nxt = path[idx + 1]
            if nxt[0] == "r":
                dart = edge_between.get((min(item[1], nxt[1]), max(item[1], nxt[1])))
                if dart is None:
                    raise DiagramError(f"regions {item[1]} and {nxt[1]} share no edge")
                c, p = divmod(dart, 4)
                edge = _edge_key(diagram, (c, p))
                # keep the face-boundary order of chord endpoints: the
                # forward wall sits nearer the end whose dart departs in
                # the incoming region
                lo_face = _face_of_dart(faces, edge[0])
                lam = Fraction(9, 20) if lo_face == item[1] else Fraction(11, 20)
                events.append((edge, lam, nxt[1]))
            continue
        if item[0] == "edge":
            lo, hi = item[1]
            edge = (lo, hi) if lo <= hi else (hi, lo)
            fa, fb = edge_faces(edge)
            if idx == 0:
                after = region_id(path[1])
                cap = fb if fa == after else fa
                # the corridor-side transit sits farther along the face
                # walk of the corridor region
                far = Fraction(11, 20) if fa == after else Fraction(9, 20)
                near = Fraction(1, 2) - (far - Fraction(1, 2))
                events.append((edge, near, cap))
                events.append((edge, far, after))
            elif idx == m - 1:
                before = region_id(path[-2])
                cap = fb if fa == before else fa
                arrive = Fraction(9, 20) if fa == before else Fraction(11, 20)
                leave = Fraction(1, 2) - (arrive - Fraction(1, 2))
                events.append((edge, arrive, cap))
                events.append((edge, leave, before))
            else:
                raise DiagramError("edge basepoints may only start or end a path")
            continue
        c = item[1]
        wedges = [face_of_wedge(c, p) for p in range(4)]

        def wedge_of(rid: int) -> int:
            if rid not in wedges:
                raise DiagramError(f"region {rid} has no corner at crossing {c}")
            return wedges.index(rid)

        if idx == 0:
            after = region_id(path[1])
            w = wedge_of(after)
            run = [(w + 1) % 4, (w + 2) % 4, (w + 3) % 4, w % 4]
        elif idx == m - 1:
            before = region_id(path[-2])
            w = wedge_of(before)
            run = [(w + 1) % 4, (w + 2) % 4, (w + 3) % 4, w % 4]
            after = before
        else:
            w_in = wedge_of(region_id(path[idx - 1]))
            w_out = wedge_of(region_id(path[idx + 1]))
            run = []
            p = (w_in + 1) % 4
            while p != (w_out + 1) % 4:
                run.append(p)
                p = (p + 1) % 4
            after = region_id(path[idx + 1])
        for i, p in enumerate(run):
            edge, pos = stub(c, p)
            if i + 1 < len(run):
                events.append((edge, pos, face_of_wedge(c, p)))
            else:
                events.append((edge, pos, after))

    # return sweep: middle elements in reverse
    for ridx in range(m - 2, 0, -1):
        item = path[ridx]
        if item[0] == "r":
            prv = path[ridx - 1]
            if prv[0] == "r":
                dart = edge_between.get((min(item[1], prv[1]), max(item[1], prv[1])))
                c, p = divmod(dart, 4)
                edge = _edge_key(diagram, (c, p))
                lo_face = _face_of_dart(faces, edge[0])
                lam = Fraction(11, 20) if lo_face == prv[1] else Fraction(9, 20)
                events.append((edge, lam, prv[1]))
            continue
        if item[0] == "edge":
            raise DiagramError("edge basepoints may only start or end a path")
        c = item[1]
        wedges = [face_of_wedge(c, p) for p in range(4)]
        w_in = wedges.index(region_id(path[ridx - 1]))
        w_out = wedges.index(region_id(path[ridx + 1]))
        run = []
        p = (w_out + 1) % 4
        while p != (w_in + 1) % 4:
            run.append(p)
            p = (p + 1) % 4
        before = region_id(path[ridx - 1])
        for i, p in enumerate(run):
            edge, pos = stub(c, p)
            if i + 1 < len(run):
                events.append((edge, pos, face_of_wedge(c, p)))
            else:
                events.append((edge, pos, before))

    return CirclePlacement(
        tuple(Transit(edge=e, position=pos, arc_face=f) for e, pos, f in events)
    )


def _common_face(diagram, faces, edge_a, edge_b):
    fa = set()
    for end in edge_a:
        fa.add(_face_of_dart(faces, end))
    fb = set()
    for end in edge_b:
        fb.add(_face_of_dart(faces, end))
    common = fa & fb
    if len(common) != 1:
        if not common:
            raise DiagramError("corridor arc spans no common face")
        # ambiguous: take the smallest id for determinism
    return min(common)


def circle_family(
    diagram: LinkDiagram, max_len: int = 6
) -> list[Optional[CirclePlacement]]:
    """The searched circles: none, one around each crossing, and the
    corridors of simple site paths up to the length bound."""
    out: list[Optional[CirclePlacement]] = [None]
    seen = set()
    for c in range(diagram.crossing_count):
        pl = crossing_circle(diagram, c)
        if pl.key() not in seen:
            seen.add(pl.key())
            out.append(pl)
    adj, _ = _incidence_graph(diagram)

    def extend(path: list, used: set):
        if len(path) > max_len:
            return
        if path and path[0][0] == "c" and path[-1][0] == "c" and len(path) >= 3:
            try:
                pl = _corridor(diagram, path)
                if pl.key() not in seen:
                    seen.add(pl.key())
                    out.append(pl)
            except DiagramError:
                pass
        last = path[-1]
        for nb in sorted(adj.get(last, ())):
            if nb in used:
                continue
            if last[0] == "c" and nb[0] != "r":
                continue
            if last[0] == "r" and nb[0] == "r":
                continue  # corridor paths go region-crossing-region here
            extend(path + [nb], used | {nb})

    for c in range(diagram.crossing_count):
        extend([("c", c)], {("c", c)})
    return out


# -- unlinking numbers --------------------------------------------------------


@dataclass(frozen=True)
class UnlinkResult:
    count: Optional[int]
    changed_crossings: tuple[int, ...] = ()
    regions: tuple[int, ...] = ()
    certificate: Optional[TrivialityCertificate] = None


def circled_unlink_number(
    diagram: LinkDiagram,
    placement: Optional[CirclePlacement],
    budget: int,
) -> UnlinkResult:
    """Minimum number of region selections trivializing the diagram.

    Upper-bound semantics: a selection counts only when the certifier
    proves the changed diagram trivial.
    """
    if budget < 0:
        raise ValueError("budget must be >= 0")
    split = split_by_circle(diagram, placement)
    a = split.matrix
    tried: set[int] = set()
    for w in range(budget + 1):
        for combo in combinations(range(a.cols), w):
            x = indices_to_bits(combo)
            delta = a.mul_vec(x)
            if delta in tried:
                continue
            tried.add(delta)
            changed = bits_to_indices(delta)
            cert = simplify(diagram.with_crossings_changed(changed))
            if cert.trivial:
                return UnlinkResult(
                    count=w,
                    changed_crossings=changed,
                    regions=combo,
                    certificate=cert,
                )
    return UnlinkResult(count=None)


def circled_unlink_number_over_circles(
    diagram: LinkDiagram,
    budget: int,
    circles: Optional[Iterable[Optional[CirclePlacement]]] = None,
) -> tuple[UnlinkResult, Optional[CirclePlacement]]:
    """Minimum circled unlinking number over a family of circles.

    The reported value is an upper bound for the true minimum over all
    circles; the family covers the constructions the search needs.
    """
    family = list(circles) if circles is not None else circle_family(diagram)
    best: UnlinkResult = UnlinkResult(count=None)
    best_circle: Optional[CirclePlacement] = None
    cap = budget
    for pl in family:
        res = circled_unlink_number(diagram, pl, cap)
        if res.count is not None and (best.count is None or res.count < best.count):
            best = res
            best_circle = pl
            cap = res.count - 1 if res.count else 0
            if best.count == 0:
                break
    return best, best_circle


def classical_unlink_number(diagram: LinkDiagram, budget: int) -> UnlinkResult:
    """Minimum number of crossing changes certified to trivialize."""
    if budget < 0:
        raise ValueError("budget must be >= 0")
    n = diagram.crossing_count
    for w in range(budget + 1):
        for combo in combinations(range(n), w):
            cert = simplify(diagram.with_crossings_changed(combo))
            if cert.trivial:
                return UnlinkResult(count=w, changed_crossings=combo, certificate=cert)
    return UnlinkResult(count=None)


# -- properness ---------------------------------------------------------------


@dataclass(frozen=True)
class ProperLinkReport:
    component_totals: tuple[int, ...]
    proper: bool
    linking: tuple[tuple[float, ...], ...]


def proper_link_check(diagram: LinkDiagram) -> ProperLinkReport:
    """Every component must have even total linking number with the rest."""
    lk = diagram.linking_matrix()
    totals = []
    for i, row in enumerate(lk):
        total = sum(row)
        if total != int(total):
            raise DiagramError("non-integral total linking number")
        totals.append(int(total))
    return ProperLinkReport(
        component_totals=tuple(totals),
        proper=all(t % 2 == 0 for t in totals),
        linking=tuple(tuple(r) for r in lk),
    )


# -- the spur construction ----------------------------------------------------


@dataclass(frozen=True)
class SpurResult:
    diagram: LinkDiagram
    moved_crossing: int
    added_crossings: tuple[int, ...]


def spur_move(
    diagram: LinkDiagram, crossing: int, region_path: Sequence[int]
) -> SpurResult:
    """Drag a crossing along a dual path, passing over every arc met.

    The path lists region ids starting at a region incident to the
    crossing; each transit pushes the crossing's two corner strands over
    the shared edge and slides the crossing through, adding four
    crossings with the moved strands on top.  Beyond the first step the
    ids refer to the face list of the intermediate diagram, so multi
    transit paths are easiest built one step at a time.
    """
    ed = _MapEditor(diagram)
    if len(region_path) < 2:
        return SpurResult(diagram, crossing, ())
    added: list[int] = []
    cur = crossing

    for step in range(len(region_path) - 1):
        faces = ed.faces()
        src, dst = region_path[step], region_path[step + 1]
        if not (0 <= src < len(faces) and 0 <= dst < len(faces)):
            raise DiagramError("region id out of range for this step")
        face_src, face_dst = faces[src], faces[dst]
        wedge = None
        for p in range(4):
            if (cur, (p + 1) % 4) in face_src:
                wedge = p
                break
        if wedge is None:
            raise DiagramError(f"crossing not incident to region {src}")
        transit_dart = None
        for d in face_src:
            o = ed.conn[d]
            if o in face_dst and d[0] != cur and o[0] != cur:
                transit_dart = d
                break
        if transit_dart is None:
            raise DiagramError(f"regions {src} and {dst} share no usable edge")
        stub_low = ed.conn[(cur, wedge)]     # far dart of the wedge's first stub
        stub_high = (cur, (wedge + 1) % 4)   # near dart of the second stub
        n1, n2 = push_strand(ed, stub_low, transit_dart)
        added.extend((n1, n2))
        faces2 = ed.faces()
        face2 = next(f for f in faces2 if stub_high in f)
        under2 = None
        for d in face2:
            far = ed.conn[d]
            on_under_pair = (d[0] in (n1, n2) and d[1] in (0, 2)) or (
                far[0] in (n1, n2) and far[1] in (0, 2)
            )
            if on_under_pair and d != stub_high:
                under2 = d
                break
        if under2 is None:
            raise DiagramError("second push found no transit piece")
        n3, n4 = push_strand(ed, stub_high, under2)
        added.extend((n3, n4))
        tri = None
        for f in _triangles(ed):
            cs = {c for c, _ in f}
            if cur in cs and cs & {n1, n2} and cs & {n3, n4} and _r3_applicable(ed, f):
                tri = f
                break
        if tri is None:
            raise DiagramError("no slide triangle after pushes")
        _r3_apply(ed, tri)
        ed.validate()

    out = ed.to_diagram()
    ids = sorted(ed.over)
    renum = {c: i for i, c in enumerate(ids)}
    return SpurResult(
        diagram=out,
        moved_crossing=renum[cur],
        added_crossings=tuple(renum[a] for a in added),
    )
