"""Combinatorial map invariants."""

import pytest

from regionselect.fixtures import figure_eight, hopf_link, trefoil
from regionselect.link import parse_pd
from regionselect.planar import (
    DiagramError,
    PlanarDiagram,
    checkerboard_colors,
    dual_edges,
    simple_regions,
)


def test_involution_validation():
    with pytest.raises(DiagramError):
        PlanarDiagram((0, 1), (1, 0), (0, 0))  # opposite has a fixed point


def test_rotation_validation():
    with pytest.raises(DiagramError):
        PlanarDiagram((1, 0), (1, 0), (0, 1))  # rotation leaves its vertex


def test_face_partition_covers_every_dart():
    d = trefoil().planar()
    darts = [x for cyc in d.face_cycles() for x in cyc]
    assert sorted(darts) == list(range(d.dart_count))


def test_euler_check_passes_on_fixtures():
    for diagram in (trefoil(), figure_eight(), hopf_link()):
        diagram.validate()


def test_corner_counts_sum_to_degree():
    d = trefoil().planar()
    regions = simple_regions(d)
    for v in set(d.vertex_of):
        assert sum(r.corners.get(v, 0) for r in regions) == 4


def test_checkerboard_trefoil_split():
    colors = trefoil().checkerboard()
    assert sorted(colors) == [0, 0, 1, 1, 1]
    duals = trefoil().dual_edges()
    for a, b, _ in duals:
        assert colors[a] != colors[b]


def test_checkerboard_single_circle():
    d = parse_pd("O(1)")
    assert d.region_count() == 2


def test_checkerboard_figure_eight_split():
    assert sorted(figure_eight().checkerboard()) == [0, 0, 0, 1, 1, 1]


def test_dual_edge_counts():
    assert len(trefoil().dual_edges()) == 6
    assert len(hopf_link().dual_edges()) == 4
