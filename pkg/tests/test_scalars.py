"""Gaussian-rational scalar layer."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from superbialg.errors import DivisionByZeroError, ScalarParseError
from superbialg.scalars import GScalar, GradedDims, parse_scalar

rationals = st.fractions(
    min_value=-8, max_value=8, max_denominator=6)
scalars = st.builds(GScalar, rationals, rationals)


def test_construction_and_predicates():
    assert GScalar(2).is_real()
    assert GScalar(0, 3).is_pure_imaginary()
    assert GScalar(0).is_zero()
    # zero counts as both real and pure imaginary
    assert GScalar(0).is_real() and GScalar(0).is_pure_imaginary()
    assert not GScalar(1, 1).is_real()
    assert GScalar(1).is_rational_one()


@given(scalars, scalars)
def test_mul_matches_complex_rule(a, b):
    p = a * b
    assert p.re == a.re * b.re - a.im * b.im
    assert p.im == a.re * b.im + a.im * b.re


@given(scalars)
def test_inverse_is_exact(a):
    if a.is_zero():
        with pytest.raises(DivisionByZeroError):
            a.inverse()
    else:
        assert (a * a.inverse()) == GScalar(1)


@given(scalars)
def test_conjugation_norm(a):
    n = a * a.conj()
    assert n.im == 0
    assert n.re == a.re * a.re + a.im * a.im


@given(scalars)
def test_str_parse_round_trip(a):
    assert parse_scalar(str(a)) == a


@pytest.mark.parametrize("text,value", [
    ("0", GScalar(0)),
    ("i", GScalar(0, 1)),
    ("-i", GScalar(0, -1)),
    ("3/2", GScalar(Fraction(3, 2))),
    ("-5i/2", GScalar(0, Fraction(-5, 2))),
    ("1+i", GScalar(1, 1)),
    ("1/2-3i", GScalar(Fraction(1, 2), -3)),
])
def test_parse_scalar_forms(text, value):
    assert parse_scalar(text) == value


def test_parse_scalar_rejects_garbage():
    with pytest.raises(ScalarParseError):
        parse_scalar("two")


def test_graded_dims_parities():
    d = GradedDims(2, 1)
    assert d.total == 3
    assert [d.parity(i) for i in d.indices()] == [0, 0, 1]
    assert d.parity_sign(3, 3) == GScalar(-1)
    assert d.parity_sign(1, 3) == GScalar(1)
    assert d.sign_pow(2) == GScalar(1)
    assert d.sign_pow(3) == GScalar(-1)


def test_graded_dims_index_bounds():
    d = GradedDims(1, 1)
    with pytest.raises(Exception):
        d.check_index(3)
