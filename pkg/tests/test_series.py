from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphkoszul.series import (
    IntSeries,
    SeriesError,
    binomial_series,
    global_dimension,
    invert_trunc,
    koszul_numeric_check,
    mul_trunc,
    palindrome_report,
)


def test_mul_trunc():
    assert mul_trunc(IntSeries([1, 1, 0]), IntSeries([1, -1, 0])) == IntSeries([1, 0, -1])
    assert mul_trunc(IntSeries([1, 1, 1]), IntSeries([1, 1, 1])) == IntSeries([1, 2, 3])
    a = IntSeries([1, 4, -2])
    assert mul_trunc(a, IntSeries([1, 0, 0])) == a
    with pytest.raises(SeriesError):
        mul_trunc(IntSeries([1, 1]), IntSeries([1, 1, 1]))


def test_invert_trunc():
    assert invert_trunc(IntSeries([1, -1, 0, 0, 0])) == IntSeries([1] * 5)
    assert invert_trunc(IntSeries([1, 5, 5, 1]).negate_variable()) == IntSeries([1, 5, 20, 76])
    with pytest.raises(SeriesError):
        invert_trunc(IntSeries([2, 1]))


@given(st.integers(0, 6), st.integers(0, 8))
def test_polynomial_ring_vs_exterior(n, D):
    poly = IntSeries(comb(n + d - 1, d) if n else int(d == 0) for d in range(D + 1))
    ext = binomial_series(n, D)
    assert invert_trunc(ext.negate_variable()) == poly
    assert koszul_numeric_check(poly, ext)


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=6))
def test_inverse_roundtrip(tail):
    a = IntSeries([1] + tail)
    one = IntSeries([1] + [0] * len(tail))
    assert mul_trunc(a, invert_trunc(a)) == one
    assert invert_trunc(invert_trunc(a)) == a


def test_koszul_numeric_check():
    p = IntSeries([1, 5, 5, 1])
    assert koszul_numeric_check(IntSeries([1, 5, 20, 76]), p)
    assert not koszul_numeric_check(IntSeries([1, 5, 20, 77]), p)


def test_palindrome_report():
    assert palindrome_report([1, 5, 5, 1], 3).is_palindrome
    k3 = palindrome_report([1, 6, 5, 1], 3)
    assert not k3.is_palindrome and k3.inequalities_hold
    assert palindrome_report([1, 8, 16, 8, 1], 4).is_palindrome
    assert not palindrome_report([1, 4, 6], 2).inequalities_hold
    with pytest.raises(SeriesError):
        palindrome_report([1, 1, 1], 1)


def test_global_dimension():
    assert global_dimension(IntSeries([1, 5, 5, 1, 0])) == 3
    assert global_dimension(binomial_series(5, 7)) == 5
    with pytest.raises(SeriesError):
        global_dimension(IntSeries([0, 0]))


def test_rendering():
    assert str(IntSeries([1, 5, 5, 1])) == "1 + 5z + 5z^2 + z^3"
    assert str(IntSeries([1, -1, 0, -3])) == "1 - z - 3z^3"
    assert str(IntSeries([0])) == "0"
    assert IntSeries([1, 6]).to_json() == "[1, 6]"
