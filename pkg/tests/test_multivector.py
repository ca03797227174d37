from itertools import combinations
from math import factorial

import pytest
import sympy
from hypothesis import given, strategies as st

from logsymp.errors import ContextMismatch, DegreeZero, NotBivector, OddDimension
from logsymp.multivector import (
    Multivector,
    contract_exact,
    divergence,
    pfaffian,
    schouten,
    volume,
    wedge,
)
from logsymp.polyring import VariableContext, partial_derivative
from logsymp.poisson import e6tilde_structure, log_darboux_structure, normal_form_structure

from conftest import WXYZ, XYZ, multivectors, polynomials, to_sympy

X4 = VariableContext(("x1", "x2", "x3", "x4"))


def parity(k):
    return -1 if k % 2 else 1


def d(ctx, *names, coeff=1):
    return Multivector.basis(ctx, *names, coeff=coeff)


def sort_sign(idx):
    idx = list(idx)
    sign = 1
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if idx[j] > idx[j + 1]:
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                sign = -sign
    return sign, tuple(idx)


def naive_wedge(A, B):
    out = {}
    for ka, pa in A.components.items():
        for kb, pb in B.components.items():
            if set(ka) & set(kb):
                continue
            sign, key = sort_sign(ka + kb)
            out[key] = out.get(key, A.context.zero()) + pa * pb * sign
    return Multivector(A.context, A.degree + B.degree, out)


def naive_contract(h, A):
    names = A.context.variables
    out = {}
    for key, p in A.components.items():
        for j, i in enumerate(key):
            rest = key[:j] + key[j + 1:]
            term = partial_derivative(h, names[i]) * p * (-1) ** j
            out[rest] = out.get(rest, A.context.zero()) + term
    return Multivector(A.context, A.degree - 1, out)


def jacobiator(pi, i, j, k):
    ctx = pi.context
    names = ctx.variables

    def br(f, g):
        total = ctx.zero()
        for (a, b), p in pi.components.items():
            da, db = names[a], names[b]
            total += p * (partial_derivative(f, da) * partial_derivative(g, db)
                          - partial_derivative(f, db) * partial_derivative(g, da))
        return total

    xi, xj, xk = (ctx.gen(names[t]) for t in (i, j, k))
    return br(xi, br(xj, xk)) + br(xj, br(xk, xi)) + br(xk, br(xi, xj))


# wedge


def test_wedge_examples():
    assert wedge(d(XYZ, "x"), d(XYZ, "y")).components == {(0, 1): XYZ.one()}
    assert wedge(d(X4, "x1", "x2"), d(X4, "x3", "x4")) == volume(X4)
    omega = d(X4, "x1", "x2") + d(X4, "x3", "x4")
    assert wedge(omega, omega) == volume(X4) * 2
    assert wedge(wedge(d(XYZ, "x"), d(XYZ, "y")), d(XYZ, "z", "x")).is_zero()


def test_wedge_context_mismatch():
    with pytest.raises(ContextMismatch):
        wedge(d(XYZ, "x"), d(WXYZ, "x"))


@given(st.integers(0, 2), st.integers(0, 2), st.data())
def test_wedge_matches_naive_expansion(a, b, data):
    A = data.draw(multivectors(XYZ, a))
    B = data.draw(multivectors(XYZ, b))
    assert wedge(A, B) == naive_wedge(A, B)
    assert wedge(A, B) == wedge(B, A) * parity(a * b)


# schouten


def test_schouten_examples():
    x = XYZ.gen("x")
    assert schouten(d(XYZ, "x"), Multivector.function(x**2)) == Multivector.function(x * 2)
    assert schouten(d(XYZ, "x", "y"), d(XYZ, "x", "y")).is_zero()
    P = e6tilde_structure()
    assert schouten(P.bivector, P.bivector).is_zero()


def test_schouten_degree():
    A = d(XYZ, "x", coeff=XYZ.gen("y"))
    B = d(XYZ, "y", "z", coeff=XYZ.gen("x"))
    assert schouten(A, B).degree == 2


@given(multivectors(XYZ, 1), multivectors(XYZ, 1))
def test_schouten_of_vector_fields_is_lie_bracket(X, Y):
    names = XYZ.variables

    def coeff(V, i):
        return V.components.get((i,), XYZ.zero())

    expected = {}
    for i in range(3):
        expected[(i,)] = sum(
            (coeff(X, j) * partial_derivative(coeff(Y, i), names[j])
             - coeff(Y, j) * partial_derivative(coeff(X, i), names[j]) for j in range(3)),
            XYZ.zero(),
        )
    assert schouten(X, Y) == Multivector(XYZ, 1, expected)


@given(multivectors(XYZ, 1), polynomials(XYZ, max_degree=3))
def test_schouten_vector_field_on_function(X, f):
    names = XYZ.variables
    expected = sum(
        (X.components.get((i,), XYZ.zero()) * partial_derivative(f, names[i]) for i in range(3)),
        XYZ.zero(),
    )
    assert schouten(X, Multivector.function(f)) == Multivector.function(expected)


@given(multivectors(X4, 2, max_terms=6))
def test_schouten_square_is_twice_jacobiator(pi):
    obstruction = schouten(pi, pi)
    for i, j, k in combinations(range(4), 3):
        assert obstruction.components.get((i, j, k), X4.zero()) == jacobiator(pi, i, j, k) * 2


@given(st.integers(0, 2), st.integers(0, 2), st.data())
def test_schouten_graded_antisymmetry(a, b, data):
    A = data.draw(multivectors(XYZ, a))
    B = data.draw(multivectors(XYZ, b))
    sign = -(parity((a - 1) * (b - 1)))
    assert schouten(A, B) == schouten(B, A) * sign


@given(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.data())
def test_schouten_graded_jacobi(a, b, c, data):
    A = data.draw(multivectors(XYZ, a, max_terms=3))
    B = data.draw(multivectors(XYZ, b, max_terms=3))
    C = data.draw(multivectors(XYZ, c, max_terms=3))
    total = (
        schouten(A, schouten(B, C)) * parity((a - 1) * (c - 1))
        + schouten(B, schouten(C, A)) * parity((b - 1) * (a - 1))
        + schouten(C, schouten(A, B)) * parity((c - 1) * (b - 1))
    )
    assert total.is_zero()


@given(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.data())
def test_schouten_graded_leibniz(a, b, c, data):
    A = data.draw(multivectors(XYZ, a, max_terms=3))
    B = data.draw(multivectors(XYZ, b, max_terms=3))
    C = data.draw(multivectors(XYZ, c, max_terms=3))
    lhs = schouten(A, wedge(B, C))
    rhs = wedge(schouten(A, B), C) + wedge(B, schouten(A, C)) * parity((a - 1) * b)
    assert lhs == rhs


# contraction


def test_contract_examples():
    ctx = VariableContext(("x1", "y1"))
    x1 = ctx.gen("x1")
    assert contract_exact(x1, d(ctx, "x1", "y1", coeff=x1)) == d(ctx, "y1", coeff=x1)
    assert contract_exact(ctx.const(7), d(ctx, "x1", "y1", coeff=x1)).is_zero()
    with pytest.raises(DegreeZero):
        contract_exact(x1, Multivector.function(x1))


@pytest.mark.parametrize("label", ["E6tilde", "E7tilde", "E8tilde"])
def test_contract_top_power_of_normal_forms(label):
    P = normal_form_structure(label, 1, 1)
    ctx = P.context
    f = pfaffian(P.bivector)
    top = P.bivector.power(2)
    assert top == volume(ctx) * f * 2
    expected = {}
    names = ctx.variables
    for j in range(4):
        rest = tuple(i for i in range(4) if i != j)
        expected[rest] = partial_derivative(f * 2, names[j]) * f * (-1) ** j
    assert contract_exact(f, top) == Multivector(ctx, 3, expected)


@given(st.integers(1, 3), st.data())
def test_contract_matches_definition(k, data):
    A = data.draw(multivectors(X4, k))
    h = data.draw(polynomials(X4, max_degree=3))
    assert contract_exact(h, A) == naive_contract(h, A)


@given(multivectors(X4, 2, max_terms=6), polynomials(X4, max_degree=3))
def test_contraction_identity(pi, h):
    m = 2
    lhs = wedge(contract_exact(h, pi), pi.power(m - 1)) * m
    assert lhs == contract_exact(h, pi.power(m))


# pfaffian


def test_pfaffian_examples():
    assert pfaffian(d(X4, "x1", "x2") + d(X4, "x3", "x4")) == 1
    darboux = log_darboux_structure()
    assert pfaffian(darboux.bivector) == darboux.context.gen("x1")
    P = e6tilde_structure()
    ctx = P.context
    f = ctx.poly("1/3*eta*(x^3+y^3+z^3) + nu*x*y*z")
    assert pfaffian(P.bivector) == f * 3


def test_pfaffian_errors():
    with pytest.raises(OddDimension):
        pfaffian(d(XYZ, "x", "y"))
    with pytest.raises(NotBivector):
        pfaffian(d(X4, "x1"))


@given(multivectors(X4, 2, max_terms=6))
def test_pfaffian_squared_is_determinant(pi):
    n = 4
    M = sympy.zeros(n, n)
    for (i, j), p in pi.components.items():
        M[i, j] = to_sympy(p)
        M[j, i] = -to_sympy(p)
    assert sympy.expand(to_sympy(pfaffian(pi)) ** 2 - M.det(method="berkowitz")) == 0


@given(multivectors(X4, 2, max_terms=6))
def test_pfaffian_matches_top_power(pi):
    assert pi.power(2) == volume(X4) * pfaffian(pi) * factorial(2)


def test_divergence():
    x, y = XYZ.gen("x"), XYZ.gen("y")
    Z = d(XYZ, "x", coeff=x**2) + d(XYZ, "y", coeff=x * y)
    assert divergence(Z) == x * 3


def test_rendering_uses_basis_tags():
    assert str(d(XYZ, "y", "x", coeff=XYZ.gen("z"))) == "(-z)*d/dx^d/dy"


X6 = VariableContext(("x1", "y1", "x2", "y2", "x3", "y3"))


@given(multivectors(X6, 2, max_terms=5, max_degree=1), polynomials(X6, max_terms=3, max_degree=2))
def test_contraction_identity_six_variables(pi, h):
    m = 3
    lhs = wedge(contract_exact(h, pi), pi.power(m - 1)) * m
    assert lhs == contract_exact(h, pi.power(m))
