"""Strand decomposition of 4-regular crease patterns into tangles.

Tracing runs opposite-edge continuation through 4-valent vertices
(degree-2 vertices are polyline bends and pass straight through).  The
plain flavor stops at crease feet on the sheet boundary; the
generalized flavor adds contact rules for boundary vertices carrying
two or three interior edges.

Also here: reducible crossings with their nesting order, lamp-linking
numbers of closed components, and the constructive changing sets built
from splice-and-checkerboard colorings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .board import board_from_pattern
from .crease import CreasePattern
from .gf2 import bits_to_indices
from .planar import DiagramError, Region

TYPE_I = "typeI"
TYPE_II = "typeII"


class TangleError(DiagramError):
    pass


class UnchangeableCrossingError(TangleError):
    """The requested crossing admits no changing set of regions."""


@dataclass(frozen=True)
class TangleComponent:
    id: int
    closed: bool
    edges: tuple[int, ...]
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class Contact:
    """A boundary vertex where a component touches the sheet edge."""

    vertex: int
    interior_edges: int          # 2 or 3
    through_component: int       # component bouncing along the boundary
    stop_component: Optional[int]  # component ending here (3-edge centers)


@dataclass(frozen=True)
class Tangle:
    pattern: CreasePattern
    kind: str
    components: tuple[TangleComponent, ...]
    contacts: tuple[Contact, ...] = ()

    def closed_components(self) -> list[TangleComponent]:
        return [c for c in self.components if c.closed]

    def open_components(self) -> list[TangleComponent]:
        return [c for c in self.components if not c.closed]

    def component_label(self, cid: int) -> str:
        closed_ids = [c.id for c in self.closed_components()]
        open_ids = [c.id for c in self.open_components()]
        if cid in closed_ids:
            return f"K{closed_ids.index(cid) + 1}"
        return f"L{open_ids.index(cid) + 1}"

    def crossings(self) -> list[int]:
        return [
            v
            for v in self.pattern.interior_vertices()
            if self.pattern.degree(v) == 4
        ]

    def crossing_owner(self, v: int) -> tuple[int, int]:
        """Components of the two strands through crossing v."""
        owners = []
        for comp in self.components:
            owners.extend([comp.id] * _passages(comp, v))
        if len(owners) != 2:
            raise TangleError(f"vertex {v} is not a crossing of the tangle")
        return owners[0], owners[1]

    def is_self_crossing(self, v: int) -> bool:
        a, b = self.crossing_owner(v)
        return a == b

    def contacts_of(self, cid: int) -> list[Contact]:
        return [c for c in self.contacts if c.through_component == cid]


ContactTangle = Tangle


def _passages(comp: TangleComponent, v: int) -> int:
    verts = comp.vertices
    if comp.closed:
        return verts.count(v)
    # endpoints of open components are stops, not passages
    return verts[1:-1].count(v)


def _arrival_dart(pattern: CreasePattern, edge: int, vertex: int) -> int:
    a, b = pattern.edges[edge]
    if vertex == a:
        return 2 * edge
    if vertex == b:
        return 2 * edge + 1
    raise TangleError(f"edge {edge} does not meet vertex {vertex}")


def _continue_through(
    pattern: CreasePattern, edge: int, vertex: int, kind: str
) -> Optional[int]:
    """Next crease edge after arriving at ``vertex`` along ``edge``.

    None means the path stops here.  Raises for vertices the tangle
    rules do not allow.
    """
    if not pattern.is_boundary_vertex(vertex):
        deg = pattern.degree(vertex)
        if deg == 2:
            (other,) = [e for e in pattern.edges_at(vertex) if e != edge]
            return other
        if deg == 4:
            d = _arrival_dart(pattern, edge, vertex)
            rot = pattern.diagram.vertex_rotation
            return rot[rot[d]] // 2
        raise TangleError(
            f"interior vertex {vertex} has degree {deg}; tangles need degree 4"
        )
    inner = pattern.interior_edges_at(vertex)
    if kind == TYPE_I:
        if len(inner) == 1:
            return None
        raise TangleError(
            f"boundary vertex {vertex} carries {len(inner)} interior edges; "
            "plain tanglize allows only simple crease feet"
        )
    if len(inner) == 1:
        raise TangleError(
            f"boundary vertex {vertex} has only one interior edge; "
            "generalized tanglize assumes none exist"
        )
    if len(inner) == 2:
        (other,) = [e for e in inner if e != edge]
        return other
    if len(inner) == 3:
        sides, center = pattern.boundary_side_edges(vertex)
        if edge == center:
            return None
        (other,) = [e for e in sides if e != edge]
        return other
    raise TangleError(
        f"boundary vertex {vertex} has {len(inner)} interior edges; at most 3 allowed"
    )


def _trace(pattern: CreasePattern, kind: str) -> tuple[list[TangleComponent], list[Contact]]:
    crease_edges = [
        e for e in range(len(pattern.edges)) if not pattern.boundary_edge[e]
    ]
    unused = set(crease_edges)
    comps: list[TangleComponent] = []
    touch_events: dict[int, list[tuple[str, int]]] = {}

    def other_end(edge: int, vertex: int) -> int:
        a, b = pattern.edges[edge]
        return b if vertex == a else a

    def walk(start_edge: int, start_vertex: int):
        """Follow the strand leaving start_vertex along start_edge."""
        edges = [start_edge]
        verts = [start_vertex]
        edge, vertex = start_edge, start_vertex
        while True:
            vertex = other_end(edge, vertex)
            verts.append(vertex)
            nxt = _continue_through(pattern, edge, vertex, kind)
            if nxt is None:
                return edges, verts, False
            if nxt == start_edge and vertex == start_vertex:
                return edges, verts, True
            edge = nxt
            edges.append(edge)

    for e0 in crease_edges:
        if e0 not in unused:
            continue
        a0 = pattern.edges[e0][0]
        edges_f, verts_f, closed = walk(e0, a0)
        if closed:
            edges, verts = edges_f, verts_f[:-1]
        else:
            # trace the other direction and glue the halves
            edges_b, verts_b, closed_b = walk(e0, pattern.edges[e0][1])
            if closed_b:
                raise TangleError("open walk closed up in reverse; tracing bug")
            # both half-walks cover the seed edge and its two endpoints
            edges = list(reversed(edges_b)) + edges_f[1:]
            verts = list(reversed(verts_b)) + verts_f[2:]
        cid = len(comps)
        comps.append(
            TangleComponent(
                id=cid,
                closed=closed,
                edges=tuple(edges),
                vertices=tuple(verts),
            )
        )
        for e in edges:
            unused.discard(e)
        inner_verts = verts if closed else verts[1:-1]
        for v in inner_verts:
            if pattern.is_boundary_vertex(v):
                touch_events.setdefault(v, []).append(("through", cid))
        if not closed:
            for v in (verts[0], verts[-1]):
                if pattern.is_boundary_vertex(v) and len(pattern.interior_edges_at(v)) == 3:
                    touch_events.setdefault(v, []).append(("stop", cid))

    contacts: list[Contact] = []
    if kind == TYPE_II:
        for v in sorted(touch_events):
            events = touch_events[v]
            through = [cid for what, cid in events if what == "through"]
            stops = [cid for what, cid in events if what == "stop"]
            k = len(pattern.interior_edges_at(v))
            if len(through) != 1 or len(stops) != (1 if k == 3 else 0):
                raise TangleError(f"inconsistent contact structure at vertex {v}")
            contacts.append(
                Contact(
                    vertex=v,
                    interior_edges=k,
                    through_component=through[0],
                    stop_component=stops[0] if stops else None,
                )
            )
    return comps, contacts


def tanglize(pattern: CreasePattern) -> Tangle:
    """Plain strand decomposition; creases may only meet the boundary
    at simple feet."""
    comps, _ = _trace(pattern, TYPE_I)
    return Tangle(pattern=pattern, kind=TYPE_I, components=tuple(comps))


def generalized_tanglize(pattern: CreasePattern) -> ContactTangle:
    """Strand decomposition with boundary contacts (two or three
    interior edges per boundary vertex; simple feet are not allowed)."""
    comps, contacts = _trace(pattern, TYPE_II)
    return Tangle(
        pattern=pattern, kind=TYPE_II, components=tuple(comps), contacts=tuple(contacts)
    )


# -- lamp-linking numbers ----------------------------------------------------


@dataclass(frozen=True)
class LampLinkingReport:
    component: int
    value: Fraction
    contributions: dict[int, int]


def _lamp_sites(pattern: CreasePattern) -> list[int]:
    return pattern.lamp_vertices()


def lamp_linking(tangle: Tangle, component: int, lamps: int) -> LampLinkingReport:
    """Half the signed lamp sum over the component's mixed crossings
    and boundary contacts; ON counts +1, OFF counts -1."""
    comp = tangle.components[component]
    if not comp.closed:
        raise TangleError("lamp-linking numbers are defined for closed components")
    sites = _lamp_sites(tangle.pattern)
    contributions: dict[int, int] = {}
    for idx, v in enumerate(sites):
        lamp_on = (lamps >> idx) & 1
        f = 0
        if tangle.pattern.is_boundary_vertex(v):
            for contact in tangle.contacts:
                if contact.vertex == v and contact.through_component == component:
                    f = 1 if lamp_on else -1
        else:
            a, b = tangle.crossing_owner(v)
            if (a == component) != (b == component):
                f = 1 if lamp_on else -1
        contributions[v] = f
    total = sum(contributions.values())
    return LampLinkingReport(
        component=component, value=Fraction(total, 2), contributions=contributions
    )


def even_components(tangle: Tangle) -> list[int]:
    """Closed components whose mixed-crossing-plus-contact count is even
    on the boundary of every region."""
    out = []
    for comp in tangle.closed_components():
        sites = set()
        for v in tangle.crossings():
            a, b = tangle.crossing_owner(v)
            if (a == comp.id) != (b == comp.id):
                sites.add(v)
        for contact in tangle.contacts:
            if contact.through_component == comp.id:
                sites.add(contact.vertex)
        even = True
        for region in tangle.pattern.regions:
            count = sum(region.corners.get(v, 0) for v in sites)
            if count % 2:
                even = False
                break
        if even:
            out.append(comp.id)
    return out


# -- reducible crossings and their nesting order -----------------------------


@dataclass(frozen=True)
class Piece:
    """One strand piece of a splice: its crease edges, and its boundary
    end vertices when open."""

    edges: tuple[int, ...]
    closed: bool
    ends: Optional[tuple[int, int]] = None


@dataclass(frozen=True)
class ReducibleCrossing:
    crossing: int
    region: int                  # the region touching the crossing twice
    lobes: tuple["Piece", "Piece"]
    enclosed: int                # index (0/1) of the enclosable lobe


@dataclass(frozen=True)
class ReducibleCrossingPoset:
    crossings: tuple[ReducibleCrossing, ...]
    relations: tuple[tuple[int, int], ...]  # (a, b) with a before b

    def sweep_order(self) -> list[int]:
        ids = [rc.crossing for rc in self.crossings]
        before = {c: set() for c in ids}
        for a, b in self.relations:
            before[b].add(a)
        order = []
        remaining = set(ids)
        while remaining:
            ready = sorted(c for c in remaining if not (before[c] & remaining))
            if not ready:
                raise TangleError("nesting order has a cycle")
            order.append(ready[0])
            remaining.discard(ready[0])
        return order


def _wedge_regions(pattern: CreasePattern, v: int) -> list[int]:
    """Region id at each wedge of a degree-4 vertex, in rotation order.

    Wedge i sits between rotation-consecutive darts i and i+1; a face
    cycle entering along dart d occupies the wedge before d.
    """
    rot = pattern.diagram.vertex_rotation
    darts = [d for d in pattern.darts_at(v)]
    order = [darts[0]]
    while len(order) < len(darts):
        order.append(rot[order[-1]])
    all_regions = list(pattern.regions) + [pattern.outer_region]
    wedge = [-1] * len(order)
    for reg in all_regions:
        for cyc in reg.cycles:
            for d in cyc:
                if pattern.diagram.vertex_of[d] == v:
                    # a face cycle through dart d occupies the wedge
                    # between rot^-1(d) and d
                    i = (order.index(d) - 1) % len(order)
                    wedge[i] = reg.id if reg is not pattern.outer_region else -2
    if -1 in wedge:
        raise TangleError(f"wedge structure incomplete at vertex {v}")
    return wedge


def _splice_pieces(
    tangle: Tangle, v: int, pairing: tuple[tuple[int, int], tuple[int, int]]
) -> list["Piece"]:
    """Walk the strands with crossing v re-wired per ``pairing`` of its
    rotation-order stub positions.  Returns (edge tuple, closed) pieces."""
    pattern = tangle.pattern
    rot = pattern.diagram.vertex_rotation
    darts = pattern.darts_at(v)
    order = [darts[0]]
    while len(order) < len(darts):
        order.append(rot[order[-1]])
    stub_edge = [d // 2 for d in order]
    partner_pos = {}
    for i, j in pairing:
        partner_pos[i] = j
        partner_pos[j] = i

    def other_end(edge: int, vertex: int) -> int:
        a, b = pattern.edges[edge]
        return b if vertex == a else a

    def walk_from(pos: int) -> tuple[list[int], bool, list[int], Optional[int]]:
        used = [pos]
        edges = [stub_edge[pos]]
        edge, vertex = stub_edge[pos], v
        while True:
            w = other_end(edge, vertex)
            if w == v:
                p = stub_edge.index(edge)
                used.append(p)
                q = partner_pos[p]
                if q == pos:
                    return edges, True, used, None
                used.append(q)
                edge, vertex = stub_edge[q], v
                edges.append(edge)
                continue
            nxt = _continue_through(pattern, edge, w, tangle.kind)
            if nxt is None:
                return edges, False, used, w
            vertex, edge = w, nxt
            edges.append(edge)

    pieces = []
    consumed: set[int] = set()
    for pos in range(4):
        if pos in consumed:
            continue
        edges, closed, used, end_f = walk_from(pos)
        ends = None
        if not closed:
            back_pos = partner_pos[pos]
            edges_b, closed_b, used_b, end_b = walk_from(back_pos)
            if closed_b:
                raise TangleError("open splice walk closed in reverse; tracing bug")
            edges = list(reversed(edges_b)) + edges
            used = used + used_b
            ends = (end_b, end_f)
        consumed.update(used)
        pieces.append(Piece(edges=tuple(edges), closed=closed, ends=ends))
    return pieces


def _touches_boundary(tangle: Tangle, piece_edges: Iterable[int]) -> bool:
    pattern = tangle.pattern
    for e in piece_edges:
        for vtx in pattern.edges[e]:
            if pattern.is_boundary_vertex(vtx):
                return True
    return False


def _crossings_on(tangle: Tangle, piece_edges: Iterable[int], exclude: int) -> set[int]:
    pattern = tangle.pattern
    out = set()
    crossings = set(tangle.crossings())
    for e in piece_edges:
        for vtx in pattern.edges[e]:
            if vtx in crossings and vtx != exclude:
                out.add(vtx)
    return out


def reducible_poset(tangle: Tangle) -> ReducibleCrossingPoset:
    """Reducible crossings (a region touches them twice) with the
    nesting order: a crossing precedes every reducible crossing whose
    loop its own enclosable lobe surrounds.  Crossings on split,
    non-intersecting components stay incomparable."""
    pattern = tangle.pattern
    entries: list[ReducibleCrossing] = []
    for v in tangle.crossings():
        wedges = _wedge_regions(pattern, v)
        double = None
        for i in range(4):
            for j in range(i + 1, 4):
                if wedges[i] == wedges[j] and wedges[i] >= 0:
                    double = (i, j, wedges[i])
        if double is None:
            continue
        i, j, reg = double
        if (j - i) % 4 != 2:
            raise TangleError(f"double region at crossing {v} is not at opposite wedges")
        k = i
        # reducing curve enters wedge k, leaves wedge k+2: lobes split
        # stubs {k+1, k+2} versus {k+3, k}
        pairing = (((k + 1) % 4, (k + 2) % 4), ((k + 3) % 4, k % 4))
        pieces = _splice_pieces(tangle, v, pairing)
        if len(pieces) != 2:
            raise TangleError(f"reducing split at crossing {v} gave {len(pieces)} pieces")
        lobes = (pieces[0], pieces[1])
        touches = [_touches_boundary(tangle, lob.edges) for lob in lobes]
        if touches[0] and touches[1]:
            enclosed = -1
        elif touches[0]:
            enclosed = 1
        elif touches[1]:
            enclosed = 0
        else:
            sizes = [
                (len(_crossings_on(tangle, lobes[i_].edges, v)), min(lobes[i_].edges))
                for i_ in range(2)
            ]
            enclosed = 0 if sizes[0] <= sizes[1] else 1
        entries.append(
            ReducibleCrossing(crossing=v, region=reg, lobes=lobes, enclosed=enclosed)
        )

    # component intersection graph for comparability
    owners = {rc.crossing: set(tangle.crossing_owner(rc.crossing)) for rc in entries}
    crossing_pairs = {
        frozenset(tangle.crossing_owner(v))
        for v in tangle.crossings()
    }

    def comparable(a: ReducibleCrossing, b: ReducibleCrossing) -> bool:
        ca, cb = owners[a.crossing], owners[b.crossing]
        if ca & cb:
            return True
        return any(
            frozenset((x, y)) in crossing_pairs for x in ca for y in cb
        )

    relations = set()
    for a in entries:
        if a.enclosed < 0:
            continue
        inside = _crossings_on(tangle, a.lobes[a.enclosed].edges, a.crossing)
        for b in entries:
            if a.crossing == b.crossing or not comparable(a, b):
                continue
            if b.crossing in inside:
                relations.add((a.crossing, b.crossing))
    # transitive closure
    changed = True
    while changed:
        changed = False
        for x, y in list(relations):
            for y2, z in list(relations):
                if y == y2 and (x, z) not in relations and x != z:
                    relations.add((x, z))
                    changed = True
    for x, y in relations:
        if (y, x) in relations:
            raise TangleError("nesting relation is not antisymmetric")
    return ReducibleCrossingPoset(
        crossings=tuple(sorted(entries, key=lambda rc: rc.crossing)),
        relations=tuple(sorted(relations)),
    )


# -- constructive changing sets ----------------------------------------------


class ContactResidueError(TangleError):
    """The construction toggled boundary contacts besides the target."""

    def __init__(self, residue_sites: tuple[int, ...]):
        super().__init__(f"construction also toggles contacts {residue_sites}")
        self.residue_sites = residue_sites


def _color_subcurve(
    tangle: Tangle,
    curve_edges: Iterable[int],
    open_ends: Optional[tuple[int, int]] = None,
) -> int:
    """Checkerboard the faces of the sub-curve and return the mask of
    playable regions in the shaded class; the sheet's outside is unshaded.

    An open curve is conceptually closed up beyond the sheet boundary:
    the closing arc splits the outside into two pieces which must take
    opposite colors.
    """
    from .crease import _perimeter_pos
    from .planar import dart_region_map

    pattern = tangle.pattern
    curve = set(curve_edges)
    regions = list(pattern.regions)
    out_a = len(regions)
    out_b = out_a + 1  # used only for open curves
    parent = list(range(out_b + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    def outside_piece(edge: int) -> int:
        if open_ends is None:
            return out_a
        lo, hi = sorted(_perimeter_pos(pattern.vertices[v]) for v in open_ends)
        u, w = pattern.edges[edge]
        pu, pw = _perimeter_pos(pattern.vertices[u]), _perimeter_pos(pattern.vertices[w])
        if abs(pu - pw) > 2:  # the wrap-around rim edge through position 0
            mid = (min(pu, pw) + 4 + max(pu, pw)) / 2 % 4
        else:
            mid = (pu + pw) / 2
        return out_a if lo < mid < hi else out_b

    all_regions = regions + [pattern.outer_region]
    by_dart = dart_region_map(all_regions)

    def side(dart: int) -> int:
        rid = by_dart[dart]
        if rid != pattern.outer_region.id:
            return rid
        return outside_piece(dart // 2)

    for e in range(len(pattern.edges)):
        if e in curve:
            continue
        union(side(2 * e), side(2 * e + 1))
    adj: list[tuple[int, int]] = []
    for e in curve:
        adj.append((side(2 * e), side(2 * e + 1)))
    if open_ends is not None:
        adj.append((out_a, out_b))  # the closing arc separates the outside
    colors: dict[int, int] = {}
    edges_by_class: dict[int, set[int]] = {}
    for a, b in adj:
        ra, rb = find(a), find(b)
        edges_by_class.setdefault(ra, set()).add(rb)
        edges_by_class.setdefault(rb, set()).add(ra)
    root = find(out_a)
    colors[root] = 0
    stack = [root]
    while stack:
        cur = stack.pop()
        for nxt in edges_by_class.get(cur, ()):
            if nxt not in colors:
                colors[nxt] = colors[cur] ^ 1
                stack.append(nxt)
            elif colors[nxt] == colors[cur]:
                raise TangleError("sub-curve faces admit no checkerboard coloring")
    mask = 0
    for reg in regions:
        if colors.get(find(reg.id), 0) == 1:
            mask |= 1 << reg.id
    return mask


def _splice_choice(tangle: Tangle, v: int) -> "Piece":
    """Two-piece smoothing at v; returns the piece to color (the one
    avoiding the smallest dart present, per the fixed convention)."""
    for pairing in (((0, 1), (2, 3)), ((1, 2), (3, 0))):
        pieces = _splice_pieces(tangle, v, pairing)
        if len(pieces) == 2:
            min0 = min(pieces[0].edges)
            min1 = min(pieces[1].edges)
            return pieces[1] if min0 < min1 else pieces[0]
    raise TangleError(f"no two-piece smoothing at crossing {v}")


def constructive_changing_set(tangle: Tangle, crossing: int) -> int:
    """Region set changing only ``crossing``, built by splicing there,
    checkerboard-coloring one resulting piece (sheet outside unshaded),
    then correcting reducible crossings in nesting order.

    Raises UnchangeableCrossingError for crossings between a closed
    component and anything else, and ContactResidueError when boundary
    contacts absorb part of the toggle (see single_contact_changing_set).
    """
    a, b = tangle.crossing_owner(crossing)
    comps = {c.id: c for c in tangle.components}
    if a != b and (comps[a].closed or comps[b].closed):
        raise UnchangeableCrossingError(
            f"crossing {crossing} joins a closed component to another component"
        )
    board = board_from_pattern(tangle.pattern)
    site_of = {v: i for i, v in enumerate(board.site_keys)}
    x = constructive_changing_set_raw(tangle, crossing)
    residue = board.matrix.mul_vec(x) ^ (1 << site_of[crossing])
    if residue:
        sites = tuple(board.site_keys[i] for i in bits_to_indices(residue))
        if all(tangle.pattern.is_boundary_vertex(v) for v in sites):
            raise ContactResidueError(sites)
        raise TangleError(f"construction failed; residue at sites {sites}")
    return x


def single_contact_changing_set(
    tangle: Tangle, component: int, self_crossing: Optional[int] = None
) -> int:
    """For a closed component touching the boundary at exactly one
    two-edge contact: toggle that contact lamp alone, or with
    ``self_crossing`` given, toggle that self-crossing alone."""
    comp = tangle.components[component]
    if not comp.closed:
        raise TangleError("the component must be closed")
    contacts = tangle.contacts_of(component)
    if len(contacts) != 1 or contacts[0].interior_edges != 2:
        raise TangleError(
            "need exactly one boundary contact with two interior edges"
        )
    board = board_from_pattern(tangle.pattern)
    matrix = board.matrix
    site_of = {v: i for i, v in enumerate(board.site_keys)}
    contact_vertex = contacts[0].vertex

    def contact_toggle() -> int:
        x = _color_subcurve(tangle, comp.edges)
        target = 1 << site_of[contact_vertex]
        poset = reducible_poset(tangle)
        by_id = {rc.crossing: rc for rc in poset.crossings}
        for c_i in poset.sweep_order():
            wrong = (matrix.mul_vec(x) ^ target) & (1 << site_of[c_i])
            if wrong:
                rc = by_id[c_i]
                lobe = rc.lobes[rc.enclosed]
                x ^= _color_subcurve(tangle, lobe.edges, lobe.ends)
        if matrix.mul_vec(x) != target:
            raise TangleError("contact toggle construction failed")
        return x

    if self_crossing is None:
        return contact_toggle()

    owner = tangle.crossing_owner(self_crossing)
    if owner != (component, component):
        raise TangleError("the crossing is not a self-crossing of the component")
    try:
        return constructive_changing_set(tangle, self_crossing)
    except ContactResidueError as err:
        if err.residue_sites != (contact_vertex,):
            raise
        x = constructive_changing_set_raw(tangle, self_crossing)
        x ^= contact_toggle()
        target = 1 << site_of[self_crossing]
        if matrix.mul_vec(x) != target:
            raise TangleError("self-crossing toggle construction failed")
        return x


def constructive_changing_set_raw(tangle: Tangle, crossing: int) -> int:
    """The splice-and-color set with reducible corrections but contact
    residues left in place."""
    board = board_from_pattern(tangle.pattern)
    matrix = board.matrix
    site_of = {v: i for i, v in enumerate(board.site_keys)}
    target = 1 << site_of[crossing]
    piece = _splice_choice(tangle, crossing)
    x = _color_subcurve(tangle, piece.edges, piece.ends)
    poset = reducible_poset(tangle)
    by_id = {rc.crossing: rc for rc in poset.crossings}
    for c_i in poset.sweep_order():
        wrong = (matrix.mul_vec(x) ^ target) & (1 << site_of[c_i])
        if wrong:
            rc = by_id[c_i]
            if rc.enclosed < 0:
                raise TangleError(
                    f"reducible crossing {c_i} has no enclosable side to correct with"
                )
            lobe = rc.lobes[rc.enclosed]
            x ^= _color_subcurve(tangle, lobe.edges, lobe.ends)
    return x


def tangle_report(tangle: Tangle, lamps: int = 0) -> dict:
    """JSON-friendly summary: components, contacts, reducible order,
    lamp-linking values."""
    poset = reducible_poset(tangle)
    report = {
        "kind": tangle.kind,
        "components": [
            {
                "label": tangle.component_label(c.id),
                "closed": c.closed,
                "edges": len(c.edges),
                "vertices": list(c.vertices),
            }
            for c in tangle.components
        ],
        "contacts": [
            {
                "vertex": c.vertex,
                "interior_edges": c.interior_edges,
                "through": tangle.component_label(c.through_component),
                "stop": tangle.component_label(c.stop_component)
                if c.stop_component is not None
                else None,
            }
            for c in tangle.contacts
        ],
        "reducible_crossings": [rc.crossing for rc in poset.crossings],
        "nesting": [list(rel) for rel in poset.relations],
        "even_components": [
            tangle.component_label(cid) for cid in even_components(tangle)
        ],
        "lamp_linking": {
            tangle.component_label(c.id): str(lamp_linking(tangle, c.id, lamps).value)
            for c in tangle.closed_components()
        },
    }
    return report
