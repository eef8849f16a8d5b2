"""Determinant, signature, and weighted tree polynomials against known values."""

import pytest

from ttkh.catalog import (
    figure_eight,
    hopf,
    pretzel,
    standard_catalog,
    torus_link,
    trefoil,
    twist_knot,
    unknot_curl,
)
from ttkh.classical import (
    determinant,
    determinant_from_trees,
    goritz_matrix,
    histogram_from_trees,
    integer_determinant,
    signature,
    symmetric_signature,
    tree_polynomial,
)
from ttkh.pdcode import mirror

KNOWN = [
    # (diagram, determinant, signature)
    (trefoil(True), 3, -2),
    (trefoil(False), 3, 2),
    (figure_eight(), 5, 0),
    (unknot_curl(True), 1, 0),
    (unknot_curl(False), 1, 0),
    (twist_knot(5), 5, -4),
    (twist_knot(7), 7, -6),
    (torus_link(3, 4), 3, -6),
    (pretzel(-2, 3, 5), 1, -8),
    (torus_link(3, 5), 1, -8),
]


@pytest.mark.parametrize("d,det,sig", KNOWN, ids=[str(i) for i in range(len(KNOWN))])
def test_determinant_and_signature(d, det, sig):
    assert determinant(d) == det
    assert signature(d) == sig


def test_hopf_links():
    assert determinant(hopf(True)) == 2
    assert signature(hopf(True)) == -1
    assert signature(hopf(False)) == 1


def test_mirror_negates_signature():
    for d in (trefoil(), figure_eight(), torus_link(3, 4)):
        assert signature(mirror(d)) == -signature(d)
        assert determinant(mirror(d)) == determinant(d)


def test_integer_determinant_small_matrices():
    assert integer_determinant([[2]]) == 2
    assert integer_determinant([[2, 1], [1, 2]]) == 3
    assert integer_determinant([]) == 1


def test_symmetric_signature_diagonal():
    assert symmetric_signature([[3]]) == 1
    assert symmetric_signature([[-2, 0], [0, 5]]) == 0
    assert symmetric_signature([[-1, 0], [0, -4]]) == -2


def test_goritz_matrix_is_symmetric():
    for d in (trefoil(), figure_eight(), torus_link(3, 4)):
        g = goritz_matrix(d)
        n = len(g)
        for i in range(n):
            for j in range(n):
                assert g[i][j] == g[j][i]


def test_tree_polynomial_identity():
    # R(delta) = delta^nu Q(delta^2), and both count all trees
    for d in (trefoil(), figure_eight(), torus_link(3, 4), pretzel(-2, 3, 5)):
        poly = tree_polynomial(d)
        assert sum(poly["Q"].values()) == poly["trees"]
        expect = {poly["nu"] + 2 * w: c for w, c in poly["Q"].items()}
        assert poly["R"] == expect


def test_determinant_via_trees_matches_goritz():
    for name, d in standard_catalog().items():
        if not d.is_connected:
            continue
        assert determinant_from_trees(d) == determinant(d), name


def test_histogram_total_is_tree_count():
    d = pretzel(-2, 3, 5)
    hist = histogram_from_trees(d)
    assert sum(hist.values()) == 31
    assert hist == {-8: 16, -6: 15}
