from fractions import Fraction
from itertools import combinations

import pytest
import sympy
from hypothesis import HealthCheck, settings, strategies as st

from logsymp.multivector import Multivector
from logsymp.polyring import Polynomial, VariableContext

settings.register_profile(
    "logsymp",
    max_examples=200,
    deadline=None,
    suppress_health_check=[
        HealthCheck.too_slow,
        HealthCheck.data_too_large,
        HealthCheck.function_scoped_fixture,
    ],
)
settings.load_profile("logsymp")

XYZ = VariableContext(("x", "y", "z"))
WXYZ = VariableContext(("w", "x", "y", "z"))

small_rationals = st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3))


@st.composite
def polynomials(draw, ctx, max_terms=4, max_degree=2, coeffs=small_rationals):
    n = ctx.ngens
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        total = draw(st.integers(0, max_degree))
        exp = [0] * n
        for _ in range(total):
            exp[draw(st.integers(0, n - 1))] += 1
        terms[tuple(exp)] = terms.get(tuple(exp), 0) + draw(coeffs)
    return Polynomial(ctx, terms)


def nonzero_polynomials(ctx, **kw):
    return polynomials(ctx, **kw).filter(lambda p: not p.is_zero())


@st.composite
def multivectors(draw, ctx, degree, max_terms=4, max_degree=2):
    keys = list(combinations(range(ctx.nvars), degree))
    comps = {}
    if not keys:
        return Multivector.zero(ctx, degree)
    for key in draw(st.lists(st.sampled_from(keys), max_size=max_terms, unique=True)):
        comps[key] = draw(polynomials(ctx, max_terms=2, max_degree=max_degree))
    return Multivector(ctx, degree, comps)


def to_sympy(p: Polynomial):
    syms = sympy.symbols(p.context.names)
    expr = sympy.Integer(0)
    for exp, c in p.terms.items():
        mono = sympy.Integer(1)
        for s, e in zip(syms, exp):
            mono *= s**e
        expr += sympy.Rational(c.numerator, c.denominator) * mono
    return expr


def from_sympy(expr, ctx: VariableContext) -> Polynomial:
    syms = sympy.symbols(ctx.names)
    poly = sympy.Poly(sympy.expand(expr), *syms)
    return Polynomial(ctx, {e: Fraction(int(c.p), int(c.q)) for e, c in poly.terms()})


def assert_reduced_groebner(G):
    """Buchberger criterion plus reducedness, monicity and source membership."""
    from logsymp.ideals import is_groebner, normal_form

    assert is_groebner(G)
    lms = G.leading_monomials()
    for i, g in enumerate(G.generators):
        assert g.terms[lms[i]] == 1
        for j, other in enumerate(lms):
            if i != j:
                assert not any(all(a <= b for a, b in zip(other, t)) for t in g.terms)
    for s in G.source:
        assert normal_form(s, G).is_zero()


@pytest.fixture(autouse=True)
def checked_groebner(monkeypatch):
    """Every basis produced during a test must pass the Buchberger criterion."""
    from logsymp import cli, ideals, poisson

    original = ideals.groebner

    def wrapped(*args, **kwargs):
        G = original(*args, **kwargs)
        assert_reduced_groebner(G)
        return G

    monkeypatch.setattr(ideals, "groebner", wrapped)
    monkeypatch.setattr(poisson, "groebner", wrapped)
    monkeypatch.setattr(cli, "groebner", wrapped)
    yield
