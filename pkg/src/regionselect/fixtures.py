"""Bundled diagrams, patterns and boards used by tests, docs and the UI.

Knot and link diagrams come from two generators: closed braids and
rational (two-bridge) twist stacks.  Crease patterns are stored as
segment lists on integer-ish grids.  The seven-lamp twelve-region
board is bundled as its explicit linear system together with a games
catalog entry reconstructing the unsolvable position.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .board import LampBoard, board_from_link, board_from_matrix, board_from_pattern
from .crease import CreasePattern, pattern_from_segments
from .gf2 import Gf2Matrix, indices_to_bits
from .link import LinkDiagram, braid_closure, parse_pd, torus_link
from .planar import DiagramError

# -- rational tangle stacks ---------------------------------------------------


class _TangleStack:
    """Builds a rational tangle by twisting the right or bottom stub pair.

    The four tangle corners hold the free ends of "wires"; a wire is a
    connector whose two ends are each a crossing port or a free corner.
    Twisting splices new crossings into the corner wires; numerator
    closure joins the remaining free ends.
    """

    NW, NE, SW, SE = "NW", "NE", "SW", "SE"

    def __init__(self) -> None:
        self.adj: list[list] = []
        self.over: list[bool] = []
        # 0-tangle: two horizontal strands
        self.wires: list[list] = [
            [("stub", self.NW), ("stub", self.NE)],
            [("stub", self.SW), ("stub", self.SE)],
        ]
        self.at: dict = {self.NW: (0, 0), self.NE: (0, 1),
                         self.SW: (1, 0), self.SE: (1, 1)}
        self.free_loops = 0

    def _attach(self, corner: str, port: tuple) -> None:
        """Solder the wire end at ``corner`` to a crossing port and open
        a fresh wire from that corner."""
        w, e = self.at[corner]
        self.wires[w][e] = ("port", port)

    def _fresh(self, corner: str, port: tuple) -> None:
        self.wires.append([("port", port), ("stub", corner)])
        self.at[corner] = (len(self.wires) - 1, 1)

    def _new_crossing(self, over_swapped: bool) -> int:
        self.adj.append([None] * 4)
        self.over.append(over_swapped)
        return len(self.adj) - 1

    def twist_right(self, over_swapped: bool) -> None:
        # ports of the new crossing: 3=NW 2=NE 0=SW 1=SE
        c = self._new_crossing(over_swapped)
        self._attach(self.NE, (c, 3))
        self._attach(self.SE, (c, 0))
        self._fresh(self.NE, (c, 2))
        self._fresh(self.SE, (c, 1))

    def twist_bottom(self, over_swapped: bool) -> None:
        c = self._new_crossing(over_swapped)
        self._attach(self.SW, (c, 3))
        self._attach(self.SE, (c, 2))
        self._fresh(self.SW, (c, 0))
        self._fresh(self.SE, (c, 1))

    def _join(self, corner_a: str, corner_b: str) -> None:
        wa, ea = self.at.pop(corner_a)
        wb, eb = self.at.pop(corner_b)
        if wa == wb:
            # the wire's two ends were these corners: it closes into a
            # crossing-free circle
            self.free_loops += 1
            self.wires[wa] = None  # type: ignore[call-overload]
            return
        keep_a = self.wires[wa][1 - ea]
        keep_b = self.wires[wb][1 - eb]
        self.wires[wa] = None  # type: ignore[call-overload]
        self.wires[wb] = None  # type: ignore[call-overload]
        self.wires.append([keep_a, keep_b])
        for idx, (kind, val) in enumerate(self.wires[-1]):
            if kind == "stub":
                self.at[val] = (len(self.wires) - 1, idx)

    def close(self, denominator: bool = False) -> LinkDiagram:
        """Numerator closure (NW-NE, SW-SE) or denominator (NW-SW, NE-SE)."""
        if denominator:
            self._join(self.NW, self.SW)
            self._join(self.NE, self.SE)
        else:
            self._join(self.NW, self.NE)
            self._join(self.SW, self.SE)
        for wire in self.wires:
            if wire is None:
                continue
            (ka, va), (kb, vb) = wire
            if ka != "port" or kb != "port":
                raise DiagramError("closure left a dangling wire end")
            self.adj[va[0]][va[1]] = vb
            self.adj[vb[0]][vb[1]] = va
        diagram = LinkDiagram(
            tuple(tuple(row) for row in self.adj),
            tuple(self.over),
            free_loops=self.free_loops if self.adj else self.free_loops,
        )
        if diagram.crossing_count:
            diagram.validate()
        return diagram


def rational_link(twists: Sequence[int]) -> LinkDiagram:
    """Closed rational tangle for the continued fraction
    [a_1, ..., a_k] (a_k + 1/(a_{k-1} + ...)).

    Produces the standard reduced alternating diagram of the two-bridge
    knot or link with that fraction.
    """
    stack = _TangleStack()
    # groups alternate right/bottom starting from the right pair; the
    # closure arcs must meet the final group sideways or its last
    # crossing degenerates into a kink
    for i, count in enumerate(twists):
        if count < 0:
            raise ValueError("positive twist counts only")
        for _ in range(count):
            if i % 2 == 0:
                stack.twist_right(False)
            else:
                stack.twist_bottom(False)
    return stack.close(denominator=len(twists) % 2 == 0)


def rational_fraction(twists: Sequence[int]) -> Fraction:
    value = Fraction(0)
    for a in twists:
        value = Fraction(a) + (1 / value if value else 0)
    return value


def twist_knot(half_twists: int) -> LinkDiagram:
    """Twist knots: a clasp over ``half_twists`` twists; 2 gives the
    figure-eight, 3 the 5_2 knot, and so on."""
    return rational_link([half_twists, 2])


# -- named diagrams -----------------------------------------------------------

TREFOIL_PD = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
FIGURE_EIGHT_PD = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"


def trefoil() -> LinkDiagram:
    return parse_pd(TREFOIL_PD)


def figure_eight() -> LinkDiagram:
    return parse_pd(FIGURE_EIGHT_PD)


def hopf_link() -> LinkDiagram:
    return torus_link(2)


def solomon_link() -> LinkDiagram:
    """The standard 4-crossing diagram of the (2,4) torus link."""
    return torus_link(4)


def borromean_rings() -> LinkDiagram:
    return braid_closure([1, -2, 1, -2, 1, -2], 3)


def knot_fixtures() -> dict[str, LinkDiagram]:
    """Standard one-component diagrams, 3 to 9 crossings."""
    out = {
        "3_1": trefoil(),
        "4_1": figure_eight(),
        "5_1": torus_link(5),
        "5_2": twist_knot(3),
        "6_1": twist_knot(4),
        "7_1": torus_link(7),
        "7_2": twist_knot(5),
        "8_1": twist_knot(6),
        "9_1": torus_link(9),
        "9_2": twist_knot(7),
    }
    for name, d in out.items():
        if d.component_count() != 1:
            raise DiagramError(f"fixture {name} is not a knot")
    return out


def two_component_fixtures() -> dict[str, LinkDiagram]:
    """Two-component diagrams with inter-component crossings; some have
    self-crossings too."""
    out = {
        "hopf": hopf_link(),
        "4^2_1": solomon_link(),
        "6^2_3": rational_link([2, 2, 2]),
        "t2_6": torus_link(6),
        "t2_8": torus_link(8),
        "whitehead": rational_link([2, 1, 2]),
        "7^2_1": rational_link([2, 1, 4]),
    }
    for name, d in out.items():
        if d.component_count() != 2:
            raise DiagramError(f"fixture {name} is not a 2-component link")
    return out


# -- crease patterns ----------------------------------------------------------


def _closed(points) -> list:
    pts = points[:] if points[0] != points[-1] else points[:-1]
    return [(pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts))]


def _open(points) -> list:
    return [(points[i], points[i + 1]) for i in range(len(points) - 1)]


def square_diagonals_pattern() -> CreasePattern:
    """Both diagonals, subdivided at the center; flat-foldable checks pass."""
    return pattern_from_segments(
        _open([(0, 0), (6, 6), (12, 12)]) + _open([(0, 12), (6, 6), (12, 0)]),
        scale=12,
    )


def ring_pattern() -> CreasePattern:
    """A closed diamond crossed by a horizontal and a vertical crease.

    Tanglizes into one closed component and two open ones; with lamps
    alternating around the diamond its lamp-linking number vanishes.
    """
    return pattern_from_segments(
        _closed([(6, 2), (10, 6), (6, 10), (2, 6)])
        + _open([(0, 6), (2, 6), (6, 6), (10, 6), (12, 6)])
        + _open([(6, 0), (6, 2), (6, 6), (6, 10), (6, 12)]),
        scale=12,
    )


def reducible_garden_pattern() -> CreasePattern:
    """Open strand carrying a looped flower (two petals) and a double
    spiral, plus a split floating two-petal daisy.

    Seven reducible crossings; the loop crossing precedes both petals
    and the outer spiral crossing precedes the inner one.
    """
    L1 = _open([
        (22, 0), (22, 6), (14, 9), (15, 14),
        (19, 16), (19, 13), (15, 14),
        (18, 21), (25, 21), (28, 15),
        (24, 16), (24, 13), (28, 15),
        (29, 9), (22, 6), (16, 2), (12, 4), (10, 6),
        (4, 9), (7, 15), (13, 12), (10, 8),
        (6, 10), (8, 13), (10, 8),
        (10.8, 6.8), (10, 6), (8, 0),
    ])
    K1 = _closed([
        (6, 24), (2, 25), (4, 28), (6, 24),
        (10, 22), (14, 24), (18, 25), (16, 28), (14, 24),
        (13, 28), (10, 30), (7, 28),
    ])
    return pattern_from_segments(L1 + K1, scale=40)


def contact_loop_pattern() -> CreasePattern:
    """T1-style: one closed loop bouncing off the sheet edge once, with
    one self-crossing curl.  Every lamp is changeable."""
    return pattern_from_segments(
        _closed([
            (10, 0), (4, 6), (6, 12), (10, 14),
            (8, 17), (12, 18), (10, 14),
            (14, 12), (16, 6),
        ]),
        scale=20,
    )


def crossed_contact_pattern() -> CreasePattern:
    """T2-style: two closed loops, each touching the boundary, crossing
    four times.  No even components, yet some lamps are unchangeable."""
    K1 = _closed([(0, 10), (8, 12), (10, 14), (12, 12), (14, 10), (12, 8), (10, 6), (8, 8)])
    K2 = _closed([
        (10, 20), (8, 16), (8, 12), (8, 8), (8, 4),
        (10, 0), (12, 4), (12, 8), (12, 12), (12, 16),
    ])
    return pattern_from_segments(K1 + K2, scale=20)


def even_ring_pattern() -> CreasePattern:
    """T3-style: a floating diamond pierced twice by a tall loop with
    two boundary contacts.  The diamond is an even component."""
    K1 = _closed([(6, 10), (8, 12), (10, 14), (12, 12), (14, 10), (12, 8), (10, 6), (8, 8)])
    K2 = _closed([
        (10, 20), (8, 16), (8, 12), (8, 8), (8, 4),
        (10, 0), (12, 4), (12, 8), (12, 12), (12, 16),
    ])
    return pattern_from_segments(K1 + K2, scale=20)


def stop_vertex_pattern() -> CreasePattern:
    """Closed loop providing the side edges at two three-edge boundary
    vertices where an open strand starts and ends; the open strand also
    bounces off a two-edge contact.  Exercises all traversal rules."""
    K1 = _closed([(10, 0), (4, 4), (0, 14), (6, 18), (8, 16.5), (10, 15), (14, 12), (14, 4)])
    L1 = _open([(10, 0), (10, 6), (10, 15), (16, 17), (20, 17), (12, 19), (8, 16.5), (0, 14)])
    return pattern_from_segments(K1 + L1, scale=20)


# -- the seven-lamp board ----------------------------------------------------

SEVEN_LAMP_EQUATIONS = (
    (1, 5, 7, 8),
    (4, 5, 6, 9, 10),
    (3, 6, 10, 11),
    (1, 2, 4, 5),
    (2, 3, 4, 6),
    (7, 8, 9, 12),
    (9, 10, 11, 12),
)


def seven_lamp_matrix() -> Gf2Matrix:
    """The 7x12 incidence system of the bundled seven-lamp board."""
    rows = tuple(
        indices_to_bits(j - 1 for j in eq) for eq in SEVEN_LAMP_EQUATIONS
    )
    return Gf2Matrix(rows, 12)


def seven_lamp_board(lamps: Optional[int] = None) -> LampBoard:
    """Seven lamps v1..v7 over regions R1..R12.

    Lamp v1 cannot be toggled alone (the rows 1,3,4,5,6,7 sum to zero),
    so the all-on-but-v1 start is unsolvable; v2 is toggled by R9+R12.
    """
    board = board_from_matrix(
        seven_lamp_matrix(),
        site_labels=[f"v{i}" for i in range(1, 8)],
        region_labels=[f"R{i}" for i in range(1, 13)],
    )
    if lamps is not None:
        board = board.with_lamps(lamps)
    return board


def unsolvable_board() -> LampBoard:
    """The bundled unsolvable game: every lamp on except v1."""
    return seven_lamp_board(lamps=0b1111110)


GAME_CATALOG = {
    "seven-lamps": lambda: seven_lamp_board(),
    "seven-lamps-unsolvable": unsolvable_board,
    "trefoil": lambda: board_from_link(trefoil()),
    "figure-eight": lambda: board_from_link(figure_eight()),
    "hopf": lambda: board_from_link(hopf_link()),
    "ring-pattern": lambda: board_from_pattern(ring_pattern()),
    "diagonals": lambda: board_from_pattern(square_diagonals_pattern()),
}
