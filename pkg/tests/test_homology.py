"""Graded complex machinery on small hand-built complexes."""

import pytest

from ttkh.gf2algebra import GF2k, MultiPoly, RationalFn
from ttkh.homology import (
    EvalField,
    ExactField,
    GradedComplex,
    cancel,
    matrix_rank,
)


def f2():
    return EvalField(GF2k(8))


def test_grading_validation():
    field = f2()
    with pytest.raises(ValueError):
        GradedComplex(field, {"a": 0, "b": 1}, {"a": {"b": 1}})
    GradedComplex(field, {"a": 0, "b": 2}, {"a": {"b": 1}})


def test_two_term_acyclic():
    field = f2()
    cx = GradedComplex(field, {"a": 0, "b": 2}, {"a": {"b": 5}})
    assert cx.betti() == {}
    assert not cx.d_squared_violations()


def test_isolated_generator_survives():
    field = f2()
    cx = GradedComplex(field, {"a": 0, "b": 2, "c": 4}, {"a": {"b": 3}})
    assert cx.betti() == {4: 1}


def test_square_complex_is_acyclic():
    # a -> b + c, both b and c -> d: d^2 = 0 over GF(2), homology vanishes
    field = f2()
    gradings = {"a": 0, "b": 2, "c": 2, "d": 4}
    diff = {"a": {"b": 1, "c": 1}, "b": {"d": 1}, "c": {"d": 1}}
    cx = GradedComplex(field, gradings, diff)
    assert not cx.d_squared_violations()
    assert cx.betti() == {}
    assert cx.rank_by_grading() == {0: 1, 2: 1}


def test_d_squared_violation_detected():
    field = f2()
    gradings = {"a": 0, "b": 2, "c": 2, "d": 4}
    diff = {"a": {"b": 1, "c": 1}, "b": {"d": 1}, "c": {"d": 3}}
    cx = GradedComplex(field, gradings, diff)
    bad = cx.d_squared_violations()
    assert bad


def test_matrix_rank_gf2k():
    field = f2()
    cols = [{0: 1, 1: 1}, {1: 1, 2: 1}, {0: 1, 2: 1}]
    # third column is the sum of the first two in characteristic 2
    assert matrix_rank(cols, field) == 2


def test_matrix_rank_exact_rationals():
    field = ExactField(2)
    x = MultiPoly(2, [(1, 0)])
    y = MultiPoly(2, [(0, 1)])
    fx = RationalFn.from_poly(x)
    fy = RationalFn.from_poly(y)
    cols = [{0: fx, 1: fy}, {0: fx * fx, 1: fx * fy}]
    # second column is x times the first: rank 1
    assert matrix_rank(cols, field) == 1


def test_cancel_preserves_betti():
    field = f2()
    gradings = {"a": 0, "b": 2, "c": 2, "d": 4, "e": 0}
    diff = {
        "a": {"b": 1, "c": 1},
        "b": {"d": 1},
        "c": {"d": 1},
        "e": {"b": 1, "c": 1},
    }
    cx = GradedComplex(field, gradings, diff)
    assert not cx.d_squared_violations()
    before = cx.betti()
    assert before == {0: 1}
    smaller = cancel(cx, "a", "b")
    assert smaller.dim() == cx.dim() - 2
    assert not smaller.d_squared_violations()
    assert smaller.betti() == before
