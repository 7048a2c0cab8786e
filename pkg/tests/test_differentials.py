from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rectifiable.algebra import T, Poly, RatFunc
from rectifiable.differentials import (
    KDifferential,
    divisor_of,
    monomial_normal_form,
    stratum_of,
)
from strategies import factored_ratfuncs


def test_semicubic_divisor():
    q = KDifferential(2, T ** 2 * (9 * T ** 2 + 4))
    div = divisor_of(q)
    assert div.infinity_order == -8
    assert div.order_of(T) == 2
    assert div.order_of(T ** 2 + Fraction(4, 9)) == 1
    assert stratum_of(q).orders == (2, 1, 1, -8)
    assert str(stratum_of(q)) == "Omega^2 M_0(2,1,1,-8)"


def test_lemniscate_cubic_infinity():
    d = KDifferential(3, RatFunc(-12 * T, (T ** 4 + 1) ** 2))
    assert divisor_of(d).infinity_order == 1
    assert stratum_of(d).orders == (1, 1, -2, -2, -2, -2)


def test_zero_differential_rejected():
    with pytest.raises(ValueError):
        KDifferential(2, 0)


def test_monomial_normal_form():
    assert monomial_normal_form(KDifferential(2, RatFunc(3, T ** 2))) == (3, -2)
    assert monomial_normal_form(KDifferential(2, T + 1)) is None


@settings(max_examples=100)
@given(factored_ratfuncs(), st.integers(1, 3))
def test_orders_sum_to_minus_2k(fp, k):
    f, _ = fp
    sig = stratum_of(KDifferential(k, f))
    assert sig.total == -2 * k
    assert divisor_of(KDifferential(k, f)).degree == -2 * k


@settings(max_examples=50)
@given(factored_ratfuncs(), factored_ratfuncs(), st.integers(1, 2), st.integers(1, 2))
def test_product_divisor_is_additive(fp1, fp2, k1, k2):
    d1, d2 = KDifferential(k1, fp1[0]), KDifferential(k2, fp2[0])
    assert divisor_of(d1 * d2) == divisor_of(d1) + divisor_of(d2)


@settings(max_examples=50)
@given(factored_ratfuncs(), st.integers(1, 3),
       st.fractions(min_value=-3, max_value=3, max_denominator=3))
def test_stratum_chart_invariance(fp, k, c):
    d = KDifferential(k, fp[0])
    assert stratum_of(d.inverted_chart()) == stratum_of(d)
    assert stratum_of(d.shifted(c)) == stratum_of(d)
    assert d.inverted_chart().inverted_chart() == d
