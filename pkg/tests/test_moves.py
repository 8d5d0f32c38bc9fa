"""Reidemeister machinery: moves, certificates, soundness."""

import itertools

import pytest

from regionselect.fixtures import (
    borromean_rings,
    figure_eight,
    hopf_link,
    rational_link,
    solomon_link,
    trefoil,
)
from regionselect.link import braid_closure, torus_link
from regionselect.moves import (
    _MapEditor,
    _monogons,
    _r3_applicable,
    _r3_apply,
    _triangles,
    push_strand,
    replay,
    simplify,
)


def test_kink_removal():
    curl = braid_closure([1], 2)
    cert = simplify(curl)
    assert cert.trivial
    assert [m.kind for m in cert.moves if m.kind != "loops"] == ["r1"]
    assert replay(curl, cert) == 0


def test_bigon_removal_unlinks_changed_hopf():
    changed = hopf_link().with_crossing_changed(0)
    cert = simplify(changed)
    assert cert.trivial
    assert cert.loops == 2
    assert replay(changed, cert) == 0


def test_soundness_on_knotted_diagrams():
    assert not simplify(trefoil()).trivial
    assert not simplify(hopf_link()).trivial
    assert not simplify(figure_eight()).trivial
    assert not simplify(solomon_link()).trivial


def test_single_changes_unknot_small_knots():
    assert simplify(trefoil().with_crossing_changed(0)).trivial
    assert simplify(figure_eight().with_crossing_changed(1)).trivial


def test_whitehead_clasp_change():
    wh = rational_link([2, 1, 2])
    results = [simplify(wh.with_crossing_changed(c)).trivial for c in range(5)]
    assert any(results)
    assert not all(results)


def test_borromean_needs_two_changes():
    borr = borromean_rings()
    assert not any(
        simplify(borr.with_crossing_changed(c)).trivial for c in range(6)
    )
    assert any(
        simplify(borr.with_crossings_changed(pair)).trivial
        for pair in itertools.combinations(range(6), 2)
    )


def test_r3_preserves_invariants():
    d = braid_closure([1, 2, 1], 3)
    ed = _MapEditor(d)
    tri = next(f for f in _triangles(ed) if _r3_applicable(ed, f))
    ed2 = ed.copy()
    _r3_apply(ed2, tri)
    ed2.validate()
    d2 = ed2.to_diagram()
    assert d2.crossing_count == d.crossing_count
    assert d2.component_count() == d.component_count()
    assert sorted(map(tuple, d2.linking_matrix())) == sorted(
        map(tuple, d.linking_matrix())
    )


def test_r3_not_applicable_on_alternating_triangles():
    ed = _MapEditor(borromean_rings())
    for f in _triangles(ed):
        assert not _r3_applicable(ed, f)


def test_push_strand_everywhere_on_trefoil():
    d = trefoil()
    base_faces = _MapEditor(d).faces()
    for face in base_faces:
        for d1, d2 in itertools.permutations(face, 2):
            ed = _MapEditor(d)
            push_strand(ed, d1, d2)
            ed.validate()
            out = ed.to_diagram()
            assert out.crossing_count == 5
            assert out.component_count() == 1
            # the push is undoable: the result is still a trefoil diagram
            assert not simplify(out).trivial


def test_certificate_replay_rejects_wrong_diagram():
    curl = braid_closure([1], 2)
    cert = simplify(curl)
    with pytest.raises(Exception):
        replay(trefoil(), cert)


def test_torus_links_simplify_after_enough_changes():
    t6 = torus_link(6)
    assert simplify(t6.with_crossings_changed([0, 1, 2])).trivial
    assert not simplify(t6.with_crossings_changed([0, 1])).trivial
