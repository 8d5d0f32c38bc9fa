"""Necessary flat-foldability conditions."""

from regionselect.crease import parse_fold
from regionselect.fixtures import square_diagonals_pattern
from regionselect.foldability import check_flat_foldable_necessary


def test_diagonals_pass():
    rep = check_flat_foldable_necessary(square_diagonals_pattern())
    assert rep.passes
    assert rep.necessary_only
    (v,) = rep.vertices
    assert v.alternating_sums == (180.0, 180.0)


def test_odd_degree_fails():
    p = parse_fold(
        {
            "vertices_coords": [[0.5, 0.5], [0.5, 0], [0, 1], [1, 1]],
            "edges_vertices": [[0, 1], [0, 2], [0, 3]],
        }
    )
    rep = check_flat_foldable_necessary(p)
    assert not rep.passes
    (v,) = rep.vertices
    assert not v.even_degree


def test_unbalanced_angles_fail():
    # degree-4 vertex with sectors 100/80/100/80: alternating sums 200/160
    import math

    a = math.radians(100)
    cx, cy = 0.5, 0.5
    r = 0.3
    dirs = [0.0, a, math.pi, math.pi + a]
    coords = [[cx, cy]] + [
        [cx + r * math.cos(t), cy + r * math.sin(t)] for t in dirs
    ]
    p = parse_fold(
        {
            "vertices_coords": coords,
            "edges_vertices": [[0, i] for i in range(1, 5)],
        }
    )
    rep = check_flat_foldable_necessary(p)
    v = next(r for r in rep.vertices if r.degree == 4)
    assert v.even_degree
    assert not v.angle_sums_ok
    assert abs(sum(v.alternating_sums) - 360.0) < 1e-9
    got = sorted(round(s) for s in v.alternating_sums)
    assert got == [160, 200]
    assert not rep.passes


def test_alternating_sums_closure_identity():
    rep = check_flat_foldable_necessary(square_diagonals_pattern())
    for v in rep.vertices:
        assert abs(sum(v.alternating_sums) - 360.0) < 1e-9
