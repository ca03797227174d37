from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from logsymp.errors import (
    DerivativeOfParameter,
    DivisionByZeroPolynomial,
    InputError,
    NegativeExponent,
    NotDivisible,
    NotQuasiHomogeneous,
    PolySyntaxError,
    UndeclaredIdentifier,
    ZeroPolynomialError,
)
from logsymp.polyring import (
    Polynomial,
    VariableContext,
    exact_divide,
    parse_poly,
    partial_derivative,
    quasi_degree,
    render,
)

from conftest import XYZ, from_sympy, nonzero_polynomials, polynomials, to_sympy

XYZT = VariableContext(("x", "y", "z"), ("t",))


# parsing


def test_parse_table_cubic_has_four_terms():
    f = parse_poly("x^3+y^3+z^3 + t*x*y*z", XYZT)
    assert len(f.terms) == 4
    assert f.terms[(1, 1, 1, 1)] == 1


def test_parse_zero_and_ring_identity():
    assert parse_poly("0", XYZ).terms == {}
    assert parse_poly("(x+y)^2 - x^2 - 2*x*y - y^2", XYZ).is_zero()


def test_parse_rationals_and_unary_signs():
    p = parse_poly("-1/2*x + +3/4 - -y", XYZ)
    assert p == XYZ.const(Fraction(3, 4)) + XYZ.gen("y") - XYZ.gen("x") * Fraction(1, 2)


def test_parse_unicode_identifiers():
    ctx = VariableContext(("x",), ("η", "ν"))
    p = parse_poly("η*x^3 + ν", ctx)
    assert str(p) == "x^3*η + ν"


@pytest.mark.parametrize(
    "source, exc, position",
    [
        ("x + q", UndeclaredIdentifier, 4),
        ("2x", PolySyntaxError, 1),
        ("x y", PolySyntaxError, 2),
        ("x^-2", NegativeExponent, 2),
        ("(x+y", PolySyntaxError, 4),
        ("x ^ 1/2", PolySyntaxError, 4),
        ("x $ y", PolySyntaxError, 2),
        ("", PolySyntaxError, 0),
        ("x^2^3", PolySyntaxError, 3),
        ("1/0", PolySyntaxError, 0),
    ],
)
def test_parse_errors_carry_positions(source, exc, position):
    with pytest.raises(exc) as info:
        parse_poly(source, XYZ)
    assert info.value.position == position


def test_context_validation():
    with pytest.raises(InputError):
        VariableContext(("x", "x"))
    with pytest.raises(InputError):
        VariableContext(("x",), ("x",))
    with pytest.raises(InputError):
        VariableContext(("x", "y"), weights=(1, 0))
    with pytest.raises(InputError):
        VariableContext(("x", "y"), weights={"x": 1})
    assert VariableContext(("x", "y"), weights={"y": 2, "x": 1}).weights == (1, 2)


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        XYZ.gen("x") * 0.5


# rendering


def test_render_is_grevlex_then_parameters():
    p = parse_poly("t*x*y*z + z^3 + y^3 + x^3 - 1/2", XYZT)
    assert render(p) == "x^3 + y^3 + x*y*z*t + z^3 - 1/2"
    q = parse_poly("x*z^2 + y^2*z + x^2*y", XYZ)
    assert render(q) == "x^2*y + y^2*z + x*z^2"


@given(polynomials(XYZT, max_terms=5, max_degree=3))
def test_parse_render_roundtrip(p):
    assert parse_poly(render(p), XYZT) == p


@given(polynomials(XYZT, max_terms=5, max_degree=3))
def test_render_agrees_with_sympy(p):
    assert sympy.expand(sympy.sympify(render(p).replace("^", "**")) - to_sympy(p)) == 0


# derivatives


def test_partial_derivative_examples():
    f = parse_poly("x^3+y^3+z^3+t*x*y*z", XYZT)
    assert partial_derivative(f, "x") == parse_poly("3*x^2+t*y*z", XYZT)
    ctx = VariableContext(("w", "x", "y", "z"), ("t",))
    assert partial_derivative(parse_poly("x^3", ctx), "w").is_zero()
    e8 = parse_poly("x^6+y^3+z^2+t*x*y*z", XYZT)
    assert partial_derivative(e8, "x") == parse_poly("6*x^5+t*y*z", XYZT)


def test_partial_derivative_errors():
    f = XYZT.gen("x")
    with pytest.raises(DerivativeOfParameter):
        partial_derivative(f, "t")
    with pytest.raises(UndeclaredIdentifier):
        partial_derivative(f, "q")


@given(polynomials(XYZT, max_terms=5, max_degree=4), st.sampled_from("xyz"))
def test_partial_derivative_matches_sympy(p, v):
    expected = sympy.diff(to_sympy(p), sympy.Symbol(v))
    assert partial_derivative(p, v) == from_sympy(expected, XYZT)


# quasi-homogeneity


def test_quasi_degree_examples():
    e6 = parse_poly("x^3+y^3+z^3+t*x*y*z", XYZT.with_weights((1, 1, 1)))
    assert quasi_degree(e6) == 3
    e8 = parse_poly("x^6+y^3+z^2+t*x*y*z", XYZT.with_weights((1, 2, 3)))
    assert quasi_degree(e8) == 6
    ctx = VariableContext(("x", "y"), weights=(1, 1))
    with pytest.raises(NotQuasiHomogeneous) as info:
        quasi_degree(parse_poly("x^2+y^3", ctx))
    assert {info.value.term1, info.value.term2} == {"y^3", "x^2"}
    with pytest.raises(ZeroPolynomialError):
        quasi_degree(ctx.zero())


@st.composite
def quasi_homogeneous(draw):
    weights = tuple(draw(st.integers(1, 3)) for _ in range(3))
    ctx = XYZ.with_weights(weights)
    k = draw(st.integers(1, 8))
    monos = [
        (a, b, c)
        for a in range(k + 1)
        for b in range(k + 1)
        for c in range(k + 1)
        if weights[0] * a + weights[1] * b + weights[2] * c == k
    ]
    if not monos:
        monos = [(0, 0, 0)]
        k = 0
    chosen = draw(st.lists(st.sampled_from(monos), min_size=1, max_size=4))
    coeffs = [draw(st.integers(1, 5)) for _ in chosen]
    return Polynomial(ctx, dict(zip(chosen, coeffs))), k


@given(quasi_homogeneous())
def test_euler_identity(pk):
    p, k = pk
    ctx = p.context
    euler = sum(
        (w * ctx.gen(v) * partial_derivative(p, v) for v, w in zip(ctx.variables, ctx.weights)),
        ctx.zero(),
    )
    assert euler == p * k


# ring axioms and division


@given(polynomials(XYZT), polynomials(XYZT), polynomials(XYZT))
def test_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p - p == XYZT.zero()


@given(polynomials(XYZT, max_terms=3), polynomials(XYZT, max_terms=3))
def test_multiplication_matches_sympy(p, q):
    assert p * q == from_sympy(to_sympy(p) * to_sympy(q), XYZT)


def test_exact_divide_examples():
    x, y = XYZ.gen("x"), XYZ.gen("y")
    assert exact_divide(x**2 * y - x * y**2, x - y) == x * y
    with pytest.raises(NotDivisible):
        exact_divide(x, y)
    with pytest.raises(DivisionByZeroPolynomial):
        exact_divide(x, XYZ.zero())


@given(polynomials(XYZT, max_terms=4, max_degree=3))
def test_exact_divide_monomial(A):
    x = XYZT.gen("x")
    assert exact_divide(x**2 * A, x) == x * A


@given(polynomials(XYZT, max_terms=4, max_degree=3), nonzero_polynomials(XYZT, max_terms=3, max_degree=2))
def test_exact_divide_inverts_multiplication(p, d):
    assert exact_divide(p * d, d) == p


@given(polynomials(XYZ, max_terms=3), nonzero_polynomials(XYZ, max_terms=3))
def test_exact_divide_agrees_with_sympy(p, d):
    divisible = sympy.cancel(to_sympy(p) / to_sympy(d)).is_polynomial(*sympy.symbols("x y z"))
    try:
        exact_divide(p, d)
        ours = True
    except NotDivisible:
        ours = False
    assert ours == bool(divisible)


def test_substitute_and_evaluate():
    f = parse_poly("x^2*t + y", XYZT)
    assert f.substitute({"t": 3}) == parse_poly("3*x^2 + y", XYZT)
    assert f.evaluate({"x": 2, "y": Fraction(1, 2), "z": 0, "t": 1}) == Fraction(9, 2)
