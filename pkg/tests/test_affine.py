from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from rectifiable.affine import affine_cubic_diff, affine_rectify, graph_cubic
from rectifiable.algebra import T, RatFunc
from rectifiable.corpus import FIXTURES
from rectifiable.differentials import stratum_of
from rectifiable.errors import ZeroCubicDifferential
from rectifiable.geometry import PlaneCurve
from rectifiable.integration import Exact, NotExact
from strategies import nonconstant_ratfuncs, ratfuncs

CURVES = {name: fx.spec.to_curve() for name, fx in sorted(FIXTURES.items())}


def test_lemniscate_cubic():
    cubic = affine_cubic_diff(CURVES["lemniscate"])
    assert cubic.coeff == RatFunc(-12 * T, (T ** 4 + 1) ** 2)
    assert stratum_of(cubic.differential).orders == (1, 1, -2, -2, -2, -2)


def test_semicubic_cubic_scales_with_a():
    for a in (1, 2, Fraction(1, 3)):
        c = PlaneCurve(RatFunc(a * T ** 2), RatFunc(a * T ** 3))
        cubic = affine_cubic_diff(c)
        assert cubic.coeff == RatFunc(6 * a * a * T ** 2)
        assert isinstance(affine_rectify(c), Exact)


def test_conic_cubics():
    a, b = 2, 1
    ellipse = affine_cubic_diff(CURVES["ellipse"])
    assert ellipse.coeff == RatFunc(-8 * a * b, (1 + T ** 2) ** 3)
    assert isinstance(affine_rectify(CURVES["ellipse"]), NotExact)
    assert affine_cubic_diff(CURVES["hyperbola"]).coeff == RatFunc(2, T ** 3)


def test_parabola_cubic_is_constant():
    cubic = affine_cubic_diff(CURVES["parabola"])
    assert cubic.coeff.is_constant
    v = affine_rectify(CURVES["parabola"])
    assert isinstance(v, Exact)
    assert v.primitive.p == RatFunc(T) and v.primitive.scalar == 2


def test_nodal_cubic_coefficient():
    cubic = affine_cubic_diff(CURVES["nodal_cubic"])
    assert cubic.coeff == RatFunc(6 * T ** 2 + 2)
    assert stratum_of(cubic.differential).orders == (1, 1, -8)


def test_line_cubic_is_zero():
    with pytest.raises(ZeroCubicDifferential):
        affine_cubic_diff(CURVES["line"])
    with pytest.raises(ZeroCubicDifferential):
        graph_cubic(RatFunc(3 * T + 1))


def test_graph_examples():
    assert graph_cubic(RatFunc(T ** 3)).coeff == RatFunc(6 * T)
    assert graph_cubic(RatFunc(1, T)).coeff == RatFunc(2, T ** 3)
    assert graph_cubic(RatFunc(T ** 2)).coeff == affine_cubic_diff(CURVES["parabola"]).coeff


@pytest.mark.parametrize("name", [n for n in sorted(CURVES) if n != "line"])
def test_affine_stratum_degree(name):
    assert stratum_of(affine_cubic_diff(CURVES[name]).differential).total == -6


unimodular = st.tuples(
    st.fractions(min_value=-3, max_value=3, max_denominator=3).filter(bool),
    st.fractions(min_value=-3, max_value=3, max_denominator=3),
    st.fractions(min_value=-3, max_value=3, max_denominator=3),
    st.fractions(min_value=-3, max_value=3, max_denominator=3),
    st.fractions(min_value=-3, max_value=3, max_denominator=3),
)


@settings(max_examples=50)
@given(ratfuncs(2), ratfuncs(2), unimodular)
def test_unimodular_invariance(x, y, m):
    a, b, c, e, f = m
    d = (1 + b * c) / a
    assert a * d - b * c == 1
    assume(not (x.is_constant and y.is_constant))
    curve = PlaneCurve(x, y)
    w = curve.x.derivative() * curve.y.derivative().derivative() - \
        curve.x.derivative().derivative() * curve.y.derivative()
    assume(not w.is_zero)
    moved = PlaneCurve(x * a + y * b + e, x * c + y * d + f)
    assert affine_cubic_diff(moved).coeff == affine_cubic_diff(curve).coeff


@settings(max_examples=50)
@given(nonconstant_ratfuncs(2), st.fractions(min_value=-2, max_value=2, max_denominator=3))
def test_reparametrisation_shift(R, s):
    assume(not R.derivative().derivative().is_zero)
    curve = PlaneCurve(RatFunc(T), R)
    shift = RatFunc(T) + s
    moved = PlaneCurve(curve.x.compose(shift), curve.y.compose(shift))
    before, after = affine_cubic_diff(curve), affine_cubic_diff(moved)
    assert after.coeff == before.coeff.compose(shift)
    assert stratum_of(after.differential) == stratum_of(before.differential)


@settings(max_examples=50)
@given(nonconstant_ratfuncs(3))
def test_graph_cubic_matches_curve(R):
    assume(not R.derivative().derivative().is_zero)
    assert graph_cubic(R).coeff == affine_cubic_diff(PlaneCurve(RatFunc(T), R)).coeff
