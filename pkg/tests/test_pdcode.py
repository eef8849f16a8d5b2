"""Diagram parsing, orientation, and surgery operations."""

import pytest

from ttkh.pdcode import (
    DegenerateCrossing,
    EdgeDegree,
    LinkDiagram,
    MalformedToken,
    connect_sum,
    mirror,
    parse_batch,
    parse_pd,
    reverse_component,
    smooth_crossing,
)

TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"


def test_parse_trefoil():
    d = parse_pd(TREFOIL)
    assert d.n == 3
    assert d.n_edges == 6
    assert d.n_components == 1
    assert d.is_connected


def test_parse_rejects_garbage():
    with pytest.raises(MalformedToken):
        parse_pd("hello world")
    with pytest.raises(MalformedToken):
        parse_pd(TREFOIL + " Y[1,2]")


def test_parse_rejects_bad_degree():
    with pytest.raises(EdgeDegree):
        parse_pd("X[1,2,3,4] X[1,2,3,5]")


def test_empty_diagram_rejected():
    with pytest.raises(MalformedToken):
        LinkDiagram([])


def test_marked_edge_roundtrip():
    d = parse_pd(TREFOIL + " mark=3")
    assert d.edge_names[d.marked_edge] == 3
    with pytest.raises(MalformedToken):
        parse_pd(TREFOIL + " mark=99")


def test_parse_batch_names_and_errors():
    batch = parse_batch(f"# comment\n\ntref: {TREFOIL}\ncurl: X[1,1,2,2]\n")
    assert [name for name, _ in batch] == ["tref", "curl"]
    with pytest.raises(EdgeDegree):
        parse_batch("bad: X[1,2,3,4] X[1,2,3,5]")


def test_signs_sum_to_writhe():
    d = parse_pd(TREFOIL)
    assert sorted(d.signs) == [-1, -1, -1]
    assert d.n_plus == 0 and d.n_minus == 3


def test_mirror_swaps_signs():
    d = parse_pd(TREFOIL)
    m = mirror(d)
    assert (m.n_plus, m.n_minus) == (d.n_minus, d.n_plus)
    assert mirror(m).n_plus == d.n_plus


def test_connect_sum_adds_crossings_and_components():
    d = parse_pd(TREFOIL)
    s = connect_sum(d, d)
    assert s.n == 6
    assert s.n_components == 1
    assert s.is_connected


def test_reverse_component_keeps_shape():
    d = parse_pd(TREFOIL)
    r = reverse_component(d, 0)
    assert r.n == d.n
    assert r.n_components == d.n_components
    # reversing a knot flips every edge's direction but not the signs
    assert sorted(r.signs) == sorted(d.signs)


def test_smooth_crossing_drops_one():
    d = parse_pd(TREFOIL)
    for which in (0, 1):
        s = smooth_crossing(d, 0, which)
        assert s.n == 2
    # smoothing a kink the wrong way strands a crossingless circle
    from ttkh.catalog import add_kink, trefoil

    kinked = add_kink(trefoil(), positive=True)
    with pytest.raises(DegenerateCrossing):
        smooth_crossing(kinked, 3, 0)
    assert smooth_crossing(kinked, 3, 1).n == 3


def test_components_of_torus_link():
    from ttkh.catalog import torus_link

    assert torus_link(2, 2).n_components == 2
    assert torus_link(3, 3).n_components == 3
    assert torus_link(3, 5).n_components == 1
