"""Frozen invariants for every catalog entry plus pretzel builder checks."""

import pytest

from ttkh import determinant, signature, spanning_tree_homology
from ttkh.catalog import pretzel

# name: (crossings, components, generators, determinant, signature)
FROZEN = {
    "unknot+": (1, 1, 1, 1, 0),
    "unknot-": (1, 1, 1, 1, 0),
    "trefoil": (3, 1, 3, 3, -2),
    "trefoil_m": (3, 1, 3, 3, 2),
    "fig8": (4, 1, 5, 5, 0),
    "hopf+": (2, 2, 2, 2, -1),
    "hopf-": (2, 2, 2, 2, 1),
    "unlink2": (2, 2, 2, 0, 0),
    "t2_4": (4, 2, 4, 4, -3),
    "t2_5": (5, 1, 5, 5, -4),
    "t2_7": (7, 1, 7, 7, -6),
    "t5_3": (10, 1, 31, 1, -8),
    "t5_3_braid": (10, 1, 121, 1, -8),
    "t7_3": (14, 1, 841, 1, -8),
    "t5_4": (15, 1, 1805, 5, -8),
    "t3_3": (6, 3, 16, 4, -4),
    "l6n1": (6, 3, 16, 4, 0),
    "l7n1": (7, 2, 16, 4, 5),
    "11n19": (11, 1, 65, 5, 4),
    "11n38": (11, 1, 75, 3, -2),
    "11n57": (11, 1, 95, 7, -6),
}


def test_catalog_names_are_stable(catalog):
    assert set(catalog) == set(FROZEN)


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_catalog_invariants(catalog, name):
    d = catalog[name]
    n, comps, gens, det, sig = FROZEN[name]
    assert d.n == n
    assert d.n_components == comps
    r = spanning_tree_homology(d, mode="evaluated", trials=1, seed=0)
    assert r["generators"] == gens
    assert determinant(d) == det
    assert signature(d) == sig


def test_same_knot_two_diagrams(catalog):
    a = spanning_tree_homology(catalog["t5_3"], mode="evaluated", trials=3, seed=0)
    b = spanning_tree_homology(
        catalog["t5_3_braid"], mode="evaluated", trials=3, seed=0
    )
    assert a["generators"] != b["generators"]
    assert a["betti"] == b["betti"] == {-8: 4, -6: 3}


@pytest.mark.parametrize(
    "params,det,sig",
    [
        ((1, 1, 1), 3, 2),
        ((-1, -1, -1), 3, -2),
        ((2, 2, 2), 12, -2),
        ((2, 3, 7), 41, -8),
        ((-2, 3, 5), 1, -8),
    ],
)
def test_pretzel_invariants(params, det, sig):
    d = pretzel(*params)
    assert d.n == sum(abs(p) for p in params)
    assert determinant(d) == det
    assert signature(d) == sig


def test_pretzel_determinant_identity():
    for a, b, c in [(1, 1, 1), (1, 3, 5), (3, 3, 3), (2, 3, 7)]:
        assert determinant(pretzel(a, b, c)) == a * b + b * c + c * a


def test_pretzel_component_counts():
    assert pretzel(2, 2, 2).n_components == 3
    assert pretzel(2, 4, 2).n_components == 3
    assert pretzel(1, 2, 2).n_components == 2
    assert pretzel(1, 1, 2).n_components == 1


def test_pretzel_alternating_family_is_thin():
    d = pretzel(2, 3, 5)
    r = spanning_tree_homology(d, mode="evaluated", trials=2, seed=0)
    assert r["betti"] == {signature(d): determinant(d)}
