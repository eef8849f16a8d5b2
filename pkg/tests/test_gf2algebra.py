"""Characteristic-two polynomial, rational, and finite-field arithmetic."""

import pytest

from ttkh.gf2algebra import (
    GF2k,
    MultiPoly,
    RationalFn,
    ZeroDenominator,
    area_sum,
    parse_poincare,
    poincare_str,
    random_point,
)


def xvar(i, n):
    mono = [0] * n
    mono[i] = 1
    return MultiPoly(n, [tuple(mono)])


def test_addition_is_symmetric_difference():
    x = xvar(0, 2)
    assert (x + x).is_zero()
    y = xvar(1, 2)
    s = x + y
    assert not s.is_zero()
    assert (s + x) == y


def test_multiplication_distributes():
    x, y = xvar(0, 3), xvar(1, 3)
    z = xvar(2, 3)
    assert (x + y) * z == x * z + y * z


def test_area_sum_collects_faces():
    a = area_sum([0, 2], 3)
    assert a == xvar(0, 3) + xvar(2, 3)
    assert area_sum([], 3).is_zero()


def test_rational_addition_char2():
    # 1/x + 1/y = (x + y)/(xy)
    x, y = xvar(0, 2), xvar(1, 2)
    one = MultiPoly(2, [(0, 0)])
    r = RationalFn(one, x) + RationalFn(one, y)
    expect = RationalFn(x + y, x * y)
    assert r == expect
    # and 1/x + 1/x = 0
    assert (RationalFn(one, x) + RationalFn(one, x)).is_zero()


def test_rational_zero_denominator_rejected():
    x = xvar(0, 1)
    with pytest.raises(ZeroDivisionError):
        RationalFn(x, MultiPoly(1))


def test_rational_vanishing_point_flagged():
    # a denominator that is nonzero as a polynomial can still vanish at a
    # point; that case must raise the retryable error
    from ttkh.gf2algebra import EvaluationPoint

    gf = GF2k(8)
    x, y = xvar(0, 2), xvar(1, 2)
    r = RationalFn(MultiPoly.one(2), x + y)
    pt = EvaluationPoint(gf, (5, 5))
    with pytest.raises(ZeroDenominator):
        r.evaluate(pt)


def test_gf2k_field_axioms():
    gf = GF2k(8)
    a, b, c = 57, 130, 201
    assert gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c))
    assert gf.mul(a, gf.inv(a)) == 1
    assert gf.add(a, a) == 0
    # Frobenius: squaring is additive
    assert gf.mul(gf.add(a, b), gf.add(a, b)) == gf.add(gf.mul(a, a), gf.mul(b, b))


def test_gf2k_inverse_of_zero_rejected():
    gf = GF2k(8)
    with pytest.raises(ZeroDivisionError):
        gf.inv(0)


def test_evaluation_specializes_polynomials():
    gf = GF2k(16)
    pt = random_point(2, gf, seed=7)
    x, y = xvar(0, 2), xvar(1, 2)
    lhs = (x * y + y).evaluate(pt)
    rhs = gf.add(gf.mul(x.evaluate(pt), y.evaluate(pt)), y.evaluate(pt))
    assert lhs == rhs
    assert all(v != 0 for v in pt.values)


def test_rational_evaluation_matches_parts():
    gf = GF2k(16)
    pt = random_point(2, gf, seed=3)
    x, y = xvar(0, 2), xvar(1, 2)
    r = RationalFn(x + y, x * y)
    expect = gf.mul(
        gf.add(x.evaluate(pt), y.evaluate(pt)),
        gf.inv(gf.mul(x.evaluate(pt), y.evaluate(pt))),
    )
    assert r.evaluate(pt) == expect


def test_poincare_round_trip():
    cases = [
        {},
        {0: 4},
        {-2: 3},
        {-8: 4, -6: 3},
        {3: 1, 5: 5},
    ]
    for betti in cases:
        assert parse_poincare(poincare_str(betti)) == {
            g: r for g, r in betti.items() if r
        }


def test_poincare_str_format():
    assert poincare_str({-2: 3}) == "3d^-2"
    assert poincare_str({0: 4}) == "4"
    assert poincare_str({}) == "0"
