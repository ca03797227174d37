import pytest
import sympy
from hypothesis import given, strategies as st

from logsymp.chern import CohomologyElement, Hypersurface, ProductP1, c1c2_minus_c3, pair_with, total_chern
from logsymp.errors import DegreeOutOfRange, InputError, NotTotalChernClass, WrongDegree


def H(ring):
    return CohomologyElement.gen(ring, "H")


def test_total_chern_examples():
    cubic = Hypersurface(6, 3)
    assert str(total_chern(cubic)) == "1 + 3H + 6H^2 + 2H^3 + 9H^4"
    h = H(Hypersurface(6, 1))
    assert total_chern(Hypersurface(6, 1)) == (1 + h) ** 5
    prod = ProductP1(3)
    c1 = total_chern(prod).graded(1)
    assert c1 == CohomologyElement.gen(prod, "A") * 2 + CohomologyElement.gen(prod, "B") * 2


def test_ring_relations():
    X = ProductP1(2)
    A, B = CohomologyElement.gen(X, "A"), CohomologyElement.gen(X, "B")
    assert (A * A).coeffs == {}
    assert (B**4).coeffs == {}
    assert (A * B**3).coefficient("AB^3") == 1
    Y = Hypersurface(6, 2)
    assert (H(Y) ** 5).coeffs == {}
    assert (H(Y) ** 4).coefficient("H^4") == 1


@pytest.mark.parametrize("d", range(1, 6))
def test_multiplicativity(d):
    X = Hypersurface(6, d)
    assert total_chern(X) * (1 + H(X) * d) == (1 + H(X)) ** 6


def _sympy_hypersurface(d, ambient=6):
    h = sympy.Symbol("h")
    series = sympy.series((1 + h) ** ambient / (1 + d * h), h, 0, ambient - 1).removeO()
    return [int(sympy.Poly(series, h).coeff_monomial(h**k)) for k in range(ambient - 1)]


@pytest.mark.parametrize("d", range(1, 11))
def test_hypersurface_total_chern_matches_series(d):
    c = total_chern(Hypersurface(6, d))
    assert [c.coeffs.get((k,), 0) for k in range(5)] == _sympy_hypersurface(d)


@pytest.mark.parametrize("d", range(1, 11))
def test_product_total_chern_matches_series(d):
    a, b = sympy.symbols("a b")
    expr = sympy.expand(
        (1 + a) ** 2 * sympy.series((1 + b) ** 5 / (1 + d * b), b, 0, 4).removeO()
    )
    poly = sympy.Poly(expr, a, b)
    c = total_chern(ProductP1(d))
    for (i, j) in ProductP1(d).basis():
        assert c.coeffs.get((i, j), 0) == int(poly.coeff_monomial(a**i * b**j))


@pytest.mark.parametrize("d", range(1, 11))
def test_hypersurface_closed_form(d):
    X = Hypersurface(6, d)
    assert c1c2_minus_c3(total_chern(X)) == H(X) ** 3 * (6 * d * d - 36 * d + 70)


@pytest.mark.parametrize("d", range(1, 11))
def test_product_closed_form(d):
    X = ProductP1(d)
    A, B = CohomologyElement.gen(X, "A"), CohomologyElement.gen(X, "B")
    expected = A * B**2 * (2 * (d - 5) ** 2) + B**3 * (5 * d * d - 25 * d + 40)
    assert c1c2_minus_c3(total_chern(X)) == expected


def test_c1c2_minus_c3_of_one_and_errors():
    X = Hypersurface(6, 2)
    assert c1c2_minus_c3(CohomologyElement.one(X)) == CohomologyElement(X)
    with pytest.raises(NotTotalChernClass):
        c1c2_minus_c3(H(X))


def test_pairing_examples():
    X = Hypersurface(6, 3)
    assert pair_with(H(X) ** 3 * 16, "H") == 48
    Y = Hypersurface(6, 1)
    assert pair_with(H(Y) ** 3 * 40, "H") == 40
    Z = ProductP1(3)
    A, B = CohomologyElement.gen(Z, "A"), CohomologyElement.gen(Z, "B")
    cls = A * B**2 * 8 + B**3 * 10
    assert str(cls) == "8AB^2 + 10B^3"
    assert pair_with(cls, "A") == 30
    assert pair_with(cls, "B") == 24


def test_pairing_errors():
    X = Hypersurface(6, 3)
    with pytest.raises(WrongDegree):
        pair_with(H(X) ** 2, "H")
    with pytest.raises(WrongDegree):
        pair_with(H(X) ** 3 + H(X), "H")
    with pytest.raises(InputError):
        pair_with(H(X) ** 3, "A")
    with pytest.raises(DegreeOutOfRange):
        Hypersurface(6, 0)
    with pytest.raises(DegreeOutOfRange):
        ProductP1(0)


@given(st.integers(1, 5), st.integers(-50, 50), st.integers(-50, 50))
def test_hypersurface_pairing_linear(d, s, t):
    X = Hypersurface(6, d)
    u, v = H(X) ** 3 * 7, H(X) ** 3 * (-2)
    assert pair_with(u * s + v * t, "H") == s * pair_with(u, "H") + t * pair_with(v, "H")


@given(
    st.integers(1, 4),
    st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20),
    st.sampled_from("AB"),
)
def test_product_pairing_linear(d, a1, b1, a2, b2, nef):
    X = ProductP1(d)
    A, B = CohomologyElement.gen(X, "A"), CohomologyElement.gen(X, "B")
    u = A * B**2 * a1 + B**3 * b1
    v = A * B**2 * a2 + B**3 * b2
    assert pair_with(u + v, nef) == pair_with(u, nef) + pair_with(v, nef)
    assert pair_with(u * 3, nef) == 3 * pair_with(u, nef)
