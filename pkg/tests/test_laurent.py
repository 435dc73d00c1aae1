from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from latticeknots.laurent import LaurentPoly

polys = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentPoly)
points = st.sampled_from([Fraction(2), Fraction(-3), Fraction(1, 2), Fraction(-2, 3)])


def test_zero_terms_dropped():
    p = LaurentPoly({1: 0, 2: 3, -1: 0})
    assert p.terms == {2: 3}
    assert LaurentPoly({0: 0}).is_zero()


def test_variables_must_match():
    with pytest.raises(ValueError):
        LaurentPoly.one("A") + LaurentPoly.one("t")


def test_exact_div():
    a = LaurentPoly({-2: 1, 0: 2, 3: -1})
    b = LaurentPoly({1: 1, 2: -1})
    assert (a * b).exact_div(b) == a
    with pytest.raises(ValueError):
        LaurentPoly({0: 1, 1: 1}).exact_div(LaurentPoly({0: 2}))
    with pytest.raises(ZeroDivisionError):
        a.exact_div(LaurentPoly.zero())


def test_negative_power_of_unit_monomial():
    m = LaurentPoly({3: -1})
    assert m ** -2 == LaurentPoly({-6: 1})
    with pytest.raises(ValueError):
        LaurentPoly({0: 1, 1: 1}) ** -1


def test_format():
    assert LaurentPoly({-4: -1, -3: 1, -1: 1}, "q").format("t") == "-t^(-4) + t^(-3) + t^(-1)"
    assert LaurentPoly({1: 2, 3: -1}, "q").format("t", denominator=2) == "2*t^(1/2) - t^(3/2)"
    assert LaurentPoly.zero().format() == "0"


def test_dict_round_trip():
    p = LaurentPoly({-3: 2, 5: -1}, "q")
    assert LaurentPoly.from_dict(p.to_dict(), "q") == p


@given(polys, polys, points)
def test_product_evaluates(p, q, x):
    assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)


@given(polys, polys, points)
def test_sum_evaluates(p, q, x):
    assert (p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x)
    assert (p - q).evaluate(x) == p.evaluate(x) - q.evaluate(x)


@given(polys, polys.filter(lambda q: not q.is_zero()))
def test_division_inverts_multiplication(p, q):
    assert (p * q).exact_div(q) == p


@given(polys, st.integers(0, 4))
def test_power_matches_repeated_product(p, n):
    out = LaurentPoly.one()
    for _ in range(n):
        out = out * p
    assert p ** n == out


@given(polys)
def test_mirror_is_involution(p):
    assert p.mirror().mirror() == p
    assert hash(p) == hash(LaurentPoly(p.terms))
