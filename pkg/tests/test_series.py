from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxq.series import (
    BivarSeries,
    Series,
    SeriesError,
    TrivarPoly,
    q_binomial,
    q_binomial_pascal,
    q_factorial,
    q_int,
    q_number,
    q_pochhammer,
    q_pochhammer_infinity,
)


def S(coeffs, order):
    return Series.from_coeffs(coeffs, order)


def series_st(order=8, unit=False):
    head = st.sampled_from([1, -1]) if unit else st.integers(-20, 20)
    return st.builds(
        lambda h, tail: S([h] + tail, order),
        head,
        st.lists(st.integers(-20, 20), min_size=order, max_size=order),
    )


def test_difference_of_squares():
    assert S([1, 1], 3) * S([1, -1], 3) == S([1, 0, -1], 3)
    assert (S([1, 1], 3) * Series.zero(3)) == 0


def test_bivariate_product():
    a = BivarSeries.build([S([1, 1], 4), S([0, 1], 4)], "s")
    b = BivarSeries.build([S([1, 1], 4), S([0, -1], 4)], "s")
    expected = BivarSeries.build([S([1, 2, 1], 4), Series.zero(4), S([0, 0, -1], 4)], "s")
    assert a * b == expected


def test_invert_examples():
    assert S([1, 1], 4).invert() == S([1, -1, 1, -1, 1], 4)
    assert Series.one(6).invert() == 1
    assert S([1, 0, -1], 5).invert() == S([1, 0, 1, 0, 1], 5)


@pytest.mark.parametrize("c0", [0, 2, -3])
def test_invert_needs_unit(c0):
    with pytest.raises(SeriesError):
        S([c0, 1], 3).invert()


def test_substitute_power():
    assert S([1, 1], 5).substitute_power(2) == S([1, 0, 1], 5)
    assert Series.constant(7, 5).substitute_power(3) == 7
    assert q_int(3, 6).substitute_power(2) == S([1, 0, 1, 0, 1], 6)
    with pytest.raises(SeriesError):
        S([1, 1], 3).substitute_power(0)


def test_q_numbers():
    assert q_int(4, 6) == S([1, 1, 1, 1], 6)
    assert q_binomial(4, 2, 6) == S([1, 1, 2, 1, 1], 6)
    assert q_pochhammer(-1, 1, 2, 6) == S([1, 1], 6) * S([1, 0, 1], 6)
    assert q_number("factorial", 3, order=6) == S([1, 2, 2, 1], 6)
    assert q_number("binomial", 4, 2, order=6) == q_binomial(4, 2, 6)
    with pytest.raises(ValueError):
        q_binomial(3, 4, 6)
    with pytest.raises(ValueError):
        q_binomial(3, -1, 6)


def test_distinct_parts_product():
    # (-q; q)_inf counts partitions into distinct parts
    assert q_pochhammer_infinity(-1, 1, 8) == S([1, 1, 1, 2, 2, 3, 4, 5, 6], 8)


def test_mixed_orders_take_minimum():
    assert (S([1, 1], 3) + S([1, 1, 1, 1, 1, 1], 5)).order == 3
    assert (S([1, 1], 3) * S([1, 1], 5)).order == 3


def test_text_and_json():
    a = S([1, 0, 0, 2, 0, -1], 24)
    assert str(a) == "1 + 2*q^3 - q^5 + O(q^25)"
    assert a.to_json() == {"var": "q", "order": 24, "coeffs": list(a.coeffs)}
    assert Series.from_json(a.to_json()) == a


def test_bivariate_specialization():
    t = BivarSeries.build([S([1, 1], 4), S([0, 1], 4)], "s")
    assert t.specialize_outer(-1) == 1
    assert t.specialize_outer(1) == S([1, 2], 4)
    assert t.polynomial_str() == "(1+q) + q*s"


def test_trivariate():
    t = TrivarPoly.from_dict({(2, 0): (1, 1), (0, 1): (0, 1)})
    assert str(t) == "x^2 + q*x^2 + q*s"
    assert t.at_x_one() == {0: (1, 1), 1: (0, 1)}


@settings(max_examples=60, deadline=None)
@given(series_st(), series_st(), series_st())
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a + b) - b == a


@settings(max_examples=200, deadline=None)
@given(series_st(order=10, unit=True))
def test_invert_roundtrip(a):
    assert a * a.invert() == 1
    assert a.invert() * a == 1


@pytest.mark.parametrize("n", range(13))
def test_q_binomial_routes_agree(n):
    for k in range(n + 1):
        x = q_binomial(n, k, n * n)
        assert x == q_binomial_pascal(n, k, n * n)
        assert x.evaluate_at_one() == comb(n, k)
        assert x * q_factorial(k, n * n) * q_factorial(n - k, n * n) == q_factorial(n, n * n)
