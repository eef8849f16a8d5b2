"""Twisted cube complex, its homology, and reduced Khovanov ranks."""

import pytest

from ttkh.catalog import (
    disjoint_union,
    figure_eight,
    hopf,
    t2,
    torus_link,
    trefoil,
    unknot_curl,
    unlink2,
)
from ttkh.planar import trace_faces
from ttkh.spantree import spanning_tree_homology
from ttkh.twisted import (
    build_twisted_complex,
    cube_d_squared_violations,
    reduced_khovanov_delta,
    resolve,
    twisted_homology,
)

KHR_ANCHORS = [
    (trefoil(True), {-2: 3}),
    (trefoil(False), {2: 3}),
    (figure_eight(), {0: 5}),
    (unknot_curl(True), {0: 1}),
    (unknot_curl(False), {0: 1}),
    (hopf(True), {-1: 2}),
    (t2(4), {-3: 4}),
    (unlink2(), {-1: 1, 1: 1}),
]


@pytest.mark.parametrize("d,expect", KHR_ANCHORS, ids=[str(i) for i in range(len(KHR_ANCHORS))])
def test_reduced_khovanov_anchors(d, expect):
    assert reduced_khovanov_delta(d) == expect


def test_resolution_circles():
    d = trefoil()
    fs = trace_faces(d)
    all_zero = resolve(d, fs, 0)
    all_one = resolve(d, fs, (1 << d.n) - 1)
    assert all_zero.n_circles == 2
    assert all_one.n_circles == 3
    single = [S for S in range(1 << d.n) if resolve(d, fs, S).n_circles == 1]
    assert len(single) == 3
    for S in single:
        assert resolve(d, fs, S).unmarked == ()


def test_areas_partition_behavior():
    d = trefoil()
    fs = trace_faces(d)
    r = resolve(d, fs, 0)
    for c in range(r.n_circles):
        if c == r.marked:
            assert r.areas[c] is None
        else:
            area = r.areas[c]
            assert area is not None and area
            assert all(0 <= f < fs.n_faces for f in area)
            # the faces seen from the marked point stay outside the area
            assert 0 not in area and 1 not in area


def test_cube_d_squared_symbolic_small():
    for d in (trefoil(), figure_eight(), hopf(True), unlink2(), t2(5)):
        assert cube_d_squared_violations(d, point=None, limit=3) == []


def test_cube_matches_tree_homology():
    for d in (trefoil(), trefoil(False), figure_eight(), hopf(True),
              t2(4), torus_link(3, 4)):
        cube = twisted_homology(d)["betti"]
        tree = spanning_tree_homology(d, mode="evaluated")["betti"]
        assert cube == tree


def test_split_twisted_homology_vanishes():
    d = disjoint_union(trefoil(), unknot_curl())
    assert twisted_homology(d)["betti"] == {}
    # while the untwisted reduced ranks double instead
    kh = reduced_khovanov_delta(d)
    assert sum(kh.values()) == 6


def test_cube_marked_point_invariance():
    d = figure_eight()
    base = twisted_homology(d)["betti"]
    from ttkh.pdcode import LinkDiagram

    for mark in (1, 3, 5):
        dm = LinkDiagram(d.crossings, marked=mark)
        assert twisted_homology(dm)["betti"] == base


def test_cube_dimension_counts_states():
    d = trefoil()
    cx = build_twisted_complex(d)
    # over all eight subsets the circle counts are 2,1,1,1,2,2,2,3 and the
    # reduced cube carries 2^(circles-1) generators per subset
    assert cx.dim() == sum(2 ** (c - 1) for c in (2, 1, 1, 1, 2, 2, 2, 3))


def test_twisted_report_fields():
    res = twisted_homology(trefoil(), seed=9)
    assert res["seed"] == 9
    assert res["mode"] == "evaluated"
    assert res["n_plus"] == 3
