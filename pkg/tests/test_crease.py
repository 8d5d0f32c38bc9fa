"""FOLD-subset parsing and crease pattern geometry."""

import json
from fractions import Fraction

import pytest

from regionselect.crease import parse_fold, pattern_from_segments
from regionselect.fixtures import ring_pattern, square_diagonals_pattern
from regionselect.planar import DiagramError

DIAGONALS = {
    "vertices_coords": [[0, 0], [1, 0], [1, 1], [0, 1], [0.5, 0.5]],
    "edges_vertices": [[0, 4], [1, 4], [2, 4], [3, 4]],
}


def test_diagonals_structure():
    p = parse_fold(DIAGONALS)
    assert p.interior_vertices() == [4]
    assert p.degree(4) == 4
    assert len(p.regions) == 4
    assert p.sector_angles(4) == [90.0, 90.0, 90.0, 90.0]


def test_single_horizontal_crease():
    p = parse_fold({"vertices_coords": [[0, 0.5], [1, 0.5]], "edges_vertices": [[0, 1]]})
    assert p.interior_vertices() == []
    assert len(p.regions) == 2


def test_unknown_keys_ignored_and_assignment_B():
    data = dict(DIAGONALS)
    data["frame_title"] = "ignored"
    data["edges_assignment"] = ["U", "U", "U", "U"]
    p = parse_fold(json.dumps(data))
    assert len(p.regions) == 4


def test_coordinates_outside_square_rejected():
    with pytest.raises(DiagramError):
        parse_fold({"vertices_coords": [[0, 0], [1.5, 0.5]], "edges_vertices": [[0, 1]]})


def test_unsubdivided_crossing_rejected():
    with pytest.raises(DiagramError):
        parse_fold(
            {
                "vertices_coords": [[0.1, 0.1], [0.9, 0.9], [0.1, 0.9], [0.9, 0.1]],
                "edges_vertices": [[0, 1], [2, 3]],
            }
        )


def test_vertex_inside_edge_rejected():
    with pytest.raises(DiagramError):
        parse_fold(
            {
                "vertices_coords": [[0.1, 0.5], [0.9, 0.5], [0.5, 0.5], [0.5, 0.9]],
                "edges_vertices": [[0, 1], [2, 3]],
            }
        )


def test_exact_rational_coordinates():
    p = parse_fold('{"vertices_coords": [[0, 0.5], [1, 0.5]], "edges_vertices": [[0, 1]]}')
    ys = {v[1] for v in p.vertices if v[1] not in (0, 1)}
    assert Fraction(1, 2) in ys


def test_ring_pattern_counts():
    # hand count: diamond (4 crossings) + center crossing; 8 faces inside
    p = ring_pattern()
    assert len(p.regions) == 8
    assert len(p.lamp_vertices()) == 5
    for r in p.regions:
        for v, k in r.corners.items():
            assert k >= 1


def test_boundary_auto_completion():
    p = square_diagonals_pattern()
    rim = [e for e, b in enumerate(p.boundary_edge) if b]
    assert len(rim) >= 4
    # every rim vertex lies on the square sides
    for e in rim:
        for v in p.edges[e]:
            x, y = p.vertices[v]
            assert x in (0, 1) or y in (0, 1)


def test_floating_component_regions_merge():
    p = pattern_from_segments(
        [((6, 3), (9, 6)), ((9, 6), (6, 9)), ((6, 9), (3, 6)), ((3, 6), (6, 3))],
        scale=12,
    )
    assert len(p.regions) == 2
    cycles = sorted(len(r.cycles) for r in p.regions)
    assert cycles == [1, 2]  # the outside-the-diamond region carries the rim walk


def test_corner_sums_match_degree():
    p = ring_pattern()
    all_regions = list(p.regions) + [p.outer_region]
    for v in range(len(p.vertices)):
        total = sum(r.corners.get(v, 0) for r in all_regions)
        assert total == p.degree(v)


def test_eightfold_center_pattern_hand_count():
    # both diagonals plus the center cross: one degree-8 interior vertex,
    # eight triangular faces (V=9, E=16, F=8 checks out on the disk)
    p = parse_fold(
        {
            "vertices_coords": [
                [0, 0], [1, 0], [1, 1], [0, 1], [0.5, 0.5],
                [0.5, 0], [1, 0.5], [0.5, 1], [0, 0.5],
            ],
            "edges_vertices": [[i, 4] for i in (0, 1, 2, 3, 5, 6, 7, 8)],
        }
    )
    assert p.interior_vertices() == [4]
    assert p.degree(4) == 8
    assert len(p.regions) == 8
    assert sorted(p.sector_angles(4)) == [45.0] * 8
    from regionselect.foldability import check_flat_foldable_necessary

    assert check_flat_foldable_necessary(p).passes
