"""Polynomial fields: exact derivatives, canonical printing, parsing."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from circulant4 import ParseError, ScalarField, as_point, fd_gradient, parse_field

from helpers import PARSER_CORPUS

x1, x2, x3, x4 = (ScalarField.coordinate(i) for i in (1, 2, 3, 4))


def test_evaluation():
    f = parse_field("x1^2 + 2*x2*x4")
    assert f((1, 2, 3, 4)) == 17.0
    assert ScalarField.constant(2.5)((0, 0, 0, 0)) == 2.5
    assert x3((1, 2, 3, 4)) == 3.0


def test_coordinate_index_validation():
    with pytest.raises(ValueError):
        ScalarField.coordinate(0)
    with pytest.raises(ValueError):
        ScalarField.coordinate(5)


def test_arithmetic():
    assert (x1 + x2) ** 2 == x1**2 + 2 * x1 * x2 + x2**2
    assert (x1 - x2) * (x1 + x2) == x1**2 - x2**2
    assert 2 + x1 == x1 + 2
    assert 1 - x1 == -(x1 - 1)
    assert x1 * 0 == ScalarField()
    assert x1**0 == ScalarField.constant(1.0)


def test_pow_rejects_bad_exponents():
    with pytest.raises(ValueError):
        x1 ** (-1)
    with pytest.raises(ValueError):
        x1**0.5


def test_degree():
    assert ScalarField().degree == 0
    assert ScalarField.constant(3).degree == 0
    assert (x1 * x2**2 + x3).degree == 3


def test_terms_are_canonical():
    f = x2 + x1**2 + 1
    assert list(f.terms()) == [(2, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 0)]


def test_gradient_exact():
    f = x1**2 * x3 + 2 * x2
    assert np.array_equal(f.gradient((1, 2, 3, 4)), [6.0, 2.0, 1.0, 0.0])
    with pytest.raises(ValueError):
        f.partial(5)


def test_hessian_exact_and_symmetric():
    f = x1**3 * x4 + x2 * x3
    h = f.hessian((1, 2, 3, 4))
    assert np.array_equal(h, h.T)
    assert h[0, 0] == 24.0
    assert h[0, 3] == 3.0
    assert h[1, 2] == 1.0
    assert h[2, 2] == 0.0


def test_fd_gradient_agrees():
    rng = np.random.default_rng(3)
    for _ in range(10):
        f = ScalarField(
            {
                tuple(int(e) for e in rng.integers(0, 3, size=4)): float(c)
                for c in rng.uniform(-2, 2, size=5)
            }
        )
        p = rng.uniform(-2, 2, size=4)
        exact = f.gradient(p)
        approx = fd_gradient(f, p)
        assert np.max(np.abs(approx - exact)) <= 1e-6 * (1 + np.max(np.abs(exact)))


def test_fd_gradient_step_handling():
    f = x1**2
    # the adaptive step keeps the estimate sane far from the origin
    p = (1000.0, 0.0, 0.0, 0.0)
    assert abs(fd_gradient(f, p)[0] - 2000.0) <= 1e-3
    assert abs(fd_gradient(f, p, h=1e-3)[0] - 2000.0) <= 1e-6
    with pytest.raises(ValueError):
        fd_gradient(f, p, h=0.0)
    with pytest.raises(ValueError):
        fd_gradient(f, p, h=-1e-5)


def test_immutability_and_equality():
    f = x1 + x2
    with pytest.raises(AttributeError):
        f.extra = 1
    with pytest.raises(TypeError):
        hash(f)
    assert f == parse_field("x2 + x1")
    assert f != x1
    assert not (f == "x1 + x2")


def test_bad_term_construction():
    with pytest.raises(ValueError):
        ScalarField({(1, 0, 0): 1.0})
    with pytest.raises(ValueError):
        ScalarField({(1, 0, 0, -1): 1.0})


def test_to_string_forms():
    assert ScalarField().to_string() == "0"
    assert (-x1).to_string() == "-x1"
    assert (x1 * x2).to_string() == "x1*x2"
    assert (x1**2 - 2.5 * x2 + 1).to_string() == "x1^2 - 2.5*x2 + 1.0"
    assert str(ScalarField.constant(-3)) == "-3.0"
    assert repr(x4) == "ScalarField('x4')"


@pytest.mark.parametrize("text", PARSER_CORPUS)
def test_round_trip_corpus(text):
    f = parse_field(text)
    assert parse_field(f.to_string()) == f


def test_rational_literals():
    assert parse_field("1/2*x1") == 0.5 * x1
    assert parse_field("3/4") == ScalarField.constant(0.75)
    assert parse_field("1/ 2") == ScalarField.constant(0.5)


def test_whitespace_insensitive():
    assert parse_field(" x1+x2 ") == parse_field("x1 + x2")


@pytest.mark.parametrize(
    "text, position, fragment",
    [
        ("x5", 0, "unknown identifier"),
        ("2*y + 1", 2, "unknown identifier"),
        ("x1^-1", 3, "negative exponent"),
        ("x1^1.5", 3, "non-integer exponent"),
        ("x1^", 3, "expected an integer exponent"),
        ("x1^(2)", 3, "expected an integer exponent"),
        ("(x1", 3, "expected ')'"),
        ("x1 + + x2", 5, "unexpected '+'"),
        ("", 0, "unexpected end of expression"),
        ("x1 $", 3, "unexpected character"),
        ("x1 x2", 3, "unexpected 'x2'"),
        ("1/0", 2, "zero denominator"),
        ("x1/2", 2, "integer rational literal"),
        ("1.5/2", 3, "integer numerator"),
        ("1/2.5", 2, "integer denominator"),
    ],
)
def test_parse_errors(text, position, fragment):
    with pytest.raises(ParseError) as err:
        parse_field(text)
    assert err.value.position == position
    assert fragment in str(err.value)
    assert f"position {position}" in str(err.value)


def test_as_point():
    p = as_point([1, 2, 3, 4])
    assert p.dtype == float and p.shape == (4,)
    with pytest.raises(ValueError):
        as_point([1, 2, 3])
    with pytest.raises(ValueError):
        as_point([1, 2, 3, float("nan")])
    with pytest.raises(ValueError):
        as_point([1, 2, 3, float("inf")])


_exponents = st.tuples(*[st.integers(0, 3)] * 4)
_coefficients = st.floats(
    min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False
).filter(lambda c: c != 0.0)
_fields = st.dictionaries(_exponents, _coefficients, min_size=0, max_size=6).map(
    ScalarField
)


@given(_fields)
def test_print_parse_round_trip(f):
    assert parse_field(f.to_string()) == f


@given(_fields, _fields, st.tuples(*[st.floats(-2, 2)] * 4))
def test_product_rule(f, g, p):
    # exact coefficient arithmetic must satisfy d(fg) = f dg + g df
    lhs = (f * g).partial(1)
    rhs = f * g.partial(1) + g * f.partial(1)
    assert abs(lhs(p) - rhs(p)) <= 1e-6 * (1 + abs(lhs(p)))
