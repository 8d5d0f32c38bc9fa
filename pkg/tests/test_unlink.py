"""Circled region changes, unlinking numbers, the spur construction."""

import pytest

from regionselect.fixtures import (
    borromean_rings,
    figure_eight,
    hopf_link,
    solomon_link,
    trefoil,
    two_component_fixtures,
)
from regionselect.link import torus_link
from regionselect.planar import DiagramError
from regionselect.unlink import (
    CirclePlacement,
    circle_family,
    circled_unlink_number,
    circled_unlink_number_over_circles,
    classical_unlink_number,
    crossing_circle,
    neighborhood_circle,
    proper_link_check,
    split_by_circle,
    spur_move,
)


def test_split_no_circle_matches_regions():
    sp = split_by_circle(hopf_link(), None)
    assert sp.region_count == 4
    assert set(sp.crossing_sides) == {0}


def test_split_crossing_circle_hopf():
    h = hopf_link()
    sp = split_by_circle(h, crossing_circle(h, 0))
    assert sp.region_count == 8
    assert sorted(sp.region_sides).count(0) == 4
    assert sp.crossing_sides[0] != sp.crossing_sides[1]


def test_hopf_circled_is_one_plain_is_impossible():
    h = hopf_link()
    assert circled_unlink_number(h, crossing_circle(h, 0), budget=2).count == 1
    assert circled_unlink_number(h, None, budget=2).count is None
    best, _ = circled_unlink_number_over_circles(h, budget=2)
    assert best.count == 1


def test_solomon_numbers():
    t24 = solomon_link()
    classical = classical_unlink_number(t24, 3)
    assert classical.count == 2
    wit = classical.changed_crossings
    corridor = neighborhood_circle(t24, list(wit))
    # hand count for the two-crossing corridor: 8 transits on 6 edges,
    # V = 12, E = 24, so 14 faces
    sp = split_by_circle(t24, corridor)
    assert sp.region_count == 14
    assert circled_unlink_number(t24, corridor, budget=2).count == 1
    best, _ = circled_unlink_number_over_circles(t24, budget=2)
    assert best.count == 1


def test_u_one_gives_circled_one():
    for d in (trefoil(), figure_eight()):
        assert classical_unlink_number(d, 2).count == 1
        best, _ = circled_unlink_number_over_circles(d, budget=2)
        assert best.count == 1


def test_upper_bound_chain():
    fixtures = {
        "hopf": hopf_link(),
        "4^2_1": solomon_link(),
        "trefoil": trefoil(),
        "fig8": figure_eight(),
    }
    for name, d in fixtures.items():
        u = classical_unlink_number(d, d.crossing_count // 2).count
        assert u is not None, name
        assert u <= d.crossing_count / 2
        best, _ = circled_unlink_number_over_circles(d, budget=u)
        assert best.count is not None and best.count <= u


def test_trivial_diagram_needs_nothing():
    unl = hopf_link().with_crossing_changed(0)
    assert classical_unlink_number(unl, 0).count == 0
    assert circled_unlink_number(unl, None, budget=0).count == 0


def test_proper_link_checks():
    assert not proper_link_check(hopf_link()).proper
    assert proper_link_check(borromean_rings()).proper
    assert proper_link_check(solomon_link()).proper
    assert not proper_link_check(two_component_fixtures()["7^2_1"]).proper
    assert not proper_link_check(torus_link(6)).proper


def test_improper_links_resist_plain_rcc():
    # plain region selections cannot unlink improper links; exhaust the
    # whole region space on the small ones
    for d in (hopf_link(), torus_link(6)):
        res = circled_unlink_number(d, None, budget=d.region_count())
        assert res.count is None


def test_proper_fixture_unlinks_by_plain_rcc():
    res = circled_unlink_number(solomon_link(), None, budget=2)
    assert res.count == 1


def test_circle_family_contents():
    h = hopf_link()
    fam = circle_family(h)
    assert fam[0] is None
    assert len(fam) >= 1 + h.crossing_count
    for pl in fam:
        split_by_circle(h, pl)  # all placements embed


def test_neighborhood_circle_single_crossing():
    h = hopf_link()
    pl = neighborhood_circle(h, [0])
    assert len(pl.transits) == 4
    edges = {t.edge for t in pl.transits}
    assert len(edges) == 4


def test_basepoint_corridor_on_unlink():
    unl = hopf_link().with_crossing_changed(0)
    bp1 = ("edge", ((0, 0), unl.adj[0][0]))
    bp2 = ("edge", ((0, 2), unl.adj[0][2]))
    pl = neighborhood_circle(unl, [bp1, bp2])
    sp = split_by_circle(unl, pl)
    assert sp.region_count > 4
    assert circled_unlink_number(unl, pl, budget=0).count == 0


def test_spur_zero_transits_is_identity():
    d = trefoil()
    res = spur_move(d, 0, [d.regions()[0].id])
    assert res.diagram.crossing_count == 3


def test_spur_single_transit_adds_four():
    d = trefoil()
    regions = d.regions()
    incident = [r.id for r in regions if 0 in r.corners]
    away = [r.id for r in regions if 0 not in r.corners]
    path = None
    for a, b, _ in d.dual_edges():
        if a in incident and b in away:
            path = [a, b]
        if b in incident and a in away:
            path = [b, a]
    res = spur_move(d, 0, path)
    assert res.diagram.crossing_count == 7
    assert len(res.added_crossings) == 4
    assert res.diagram.component_count() == 1


def test_spur_preserves_linking():
    d = solomon_link()
    regions = d.regions()
    incident = [r.id for r in regions if 0 in r.corners]
    away = [r.id for r in regions if 0 not in r.corners]
    path = None
    for a, b, _ in d.dual_edges():
        if a in incident and b in away:
            path = [a, b]
        if b in incident and a in away:
            path = [b, a]
    if path is None:
        pytest.skip("no one-transit path available")
    res = spur_move(d, 0, path)
    assert sorted(map(tuple, res.diagram.linking_matrix())) == sorted(
        map(tuple, d.linking_matrix())
    )


def test_spur_then_single_selection_unlinks():
    for d, witness in ((trefoil(), 0), (figure_eight(), 1), (hopf_link(), 0)):
        regions = d.regions()
        incident = [r.id for r in regions if witness in r.corners]
        away = [r.id for r in regions if witness not in r.corners]
        path = [incident[0]]
        for a, b, _ in d.dual_edges():
            if a in incident and b in away:
                path = [a, b]
                break
            if b in incident and a in away:
                path = [b, a]
                break
        res = spur_move(d, witness, path)
        pl = neighborhood_circle(res.diagram, [res.moved_crossing])
        out = circled_unlink_number(res.diagram, pl, budget=1)
        assert out.count == 1


def test_invalid_circle_rejected():
    h = hopf_link()
    pl = crossing_circle(h, 0)
    # drop one transit: the curve no longer closes consistently
    broken = CirclePlacement(pl.transits[:3])
    with pytest.raises(DiagramError):
        split_by_circle(h, broken)
