"""Poisson bivectors on affine charts and the elliptic normal forms.

Brackets transcribe directly: ``pi = sum_{i<j} {x_i, x_j} d/dx_i ^ d/dx_j`` so
that ``{f, g} = <df ^ dg, pi>``.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Mapping, Sequence

from .errors import (
    DuplicateConflictingPair,
    InputError,
    NonIsolated,
    NotDivisible,
    NotLogarithmic,
    ParameterNotSpecialized,
    WrongDimension,
    ZeroLambda,
    ZeroPfaffian,
    ZeroPolynomialError,
)
from .ideals import INFINITE, groebner, jacobian_ideal, krull_dimension, milnor_number
from .multivector import Multivector, contract_exact, pfaffian, schouten, wedge
from .polyring import Polynomial, VariableContext, exact_divide, parse_poly, partial_derivative, quasi_degree

__all__ = [
    "JacobiStatus",
    "PoissonStructure",
    "Verdict",
    "EllipticityReport",
    "SingularityType",
    "Unclassified",
    "E6",
    "E7",
    "E8",
    "SINGULARITY_TYPES",
    "from_brackets",
    "jacobi_obstruction",
    "degeneracy_divisor",
    "modular_field",
    "is_log_tangent",
    "ellipticity_report",
    "classify_singularity",
    "normal_form_structure",
    "table_polynomial",
    "atiyah_top_pfaffian",
    "singular_locus_ideal",
    "e6tilde_structure",
    "log_darboux_structure",
    "toric_structure",
    "structure_from_document",
    "structure_to_document",
]


class JacobiStatus(enum.Enum):
    UNCHECKED = "unchecked"
    HOLDS = "holds"
    FAILS = "fails"


@dataclass
class PoissonStructure:
    bivector: Multivector
    jacobi: JacobiStatus = JacobiStatus.UNCHECKED
    witness: Multivector | None = None

    def __post_init__(self):
        if self.bivector.degree != 2:
            raise InputError(f"Poisson structure needs a bivector, got degree {self.bivector.degree}")

    @property
    def context(self) -> VariableContext:
        return self.bivector.context

    def bracket(self, f: Polynomial, g: Polynomial) -> Polynomial:
        """{f, g} = <df ^ dg, pi>."""
        vs = self.context.variables
        total = self.context.zero()
        for (i, j), p in self.bivector.components.items():
            fi, fj = partial_derivative(f, vs[i]), partial_derivative(f, vs[j])
            gi, gj = partial_derivative(g, vs[i]), partial_derivative(g, vs[j])
            total = total + p * (fi * gj - fj * gi)
        return total

    def bracket_table(self) -> dict[tuple[str, str], Polynomial]:
        vs = self.context.variables
        return {(vs[i], vs[j]): p for (i, j), p in sorted(self.bivector.components.items())}

    def specialize(self, values: Mapping[str, object]) -> PoissonStructure:
        return PoissonStructure(self.bivector.substitute(values))

    def has_parameters(self) -> bool:
        return any(p.has_parameters() for p in self.bivector.components.values())


def _pair_key(key, ctx):
    if isinstance(key, str):
        parts = [s.strip() for s in key.split(",")]
        if len(parts) != 2:
            raise InputError(f"bracket key {key!r} must be two comma-separated variables")
        key = tuple(parts)
    a, b = key
    i, j = ctx.var_index(a), ctx.var_index(b)
    if i == j:
        raise InputError(f"bracket key {key!r} repeats a variable")
    return i, j


def from_brackets(table: Mapping, ctx: VariableContext) -> PoissonStructure:
    """Build a bivector from ``{("w", "x"): poly_or_text, "y,z": ..., ...}``.

    Pairs not listed are zero.  Listing both orders is allowed only when the two
    values are negatives of each other.
    """
    comps: dict[tuple[int, int], Polynomial] = {}
    for key, value in table.items():
        i, j = _pair_key(key, ctx)
        p = parse_poly(value, ctx) if isinstance(value, str) else value
        if not isinstance(p, Polynomial):
            p = ctx.const(p)
        if i > j:
            i, j, p = j, i, -p
        if (i, j) in comps and comps[(i, j)] != p:
            raise DuplicateConflictingPair(
                f"brackets for ({ctx.variables[i]}, {ctx.variables[j]}) given twice inconsistently"
            )
        comps[(i, j)] = p
    return PoissonStructure(Multivector(ctx, 2, comps))


def jacobi_obstruction(P: PoissonStructure) -> Multivector:
    """[pi, pi]; zero iff pi is Poisson for every value of the parameters."""
    t = schouten(P.bivector, P.bivector)
    if t.is_zero():
        P.jacobi, P.witness = JacobiStatus.HOLDS, None
    else:
        P.jacobi, P.witness = JacobiStatus.FAILS, t
    return t


def _sample_values(ctx: VariableContext, rng: random.Random) -> dict[str, Fraction]:
    out = {}
    for name in ctx.parameters:
        num = rng.choice([n for n in range(-9, 10) if n])
        out[name] = Fraction(num, rng.randint(1, 5))
    return out


def _specializations(ctx, specialize, samples, seed):
    if specialize is not None:
        return [dict(specialize)]
    if not ctx.parameters:
        return [{}]
    rng = random.Random(seed)
    return [_sample_values(ctx, rng) for _ in range(samples)]


def singular_locus_ideal(h: Polynomial) -> list[Polynomial]:
    """Generators (h, dh/dx_1, ..., dh/dx_n) of the singular scheme of {h = 0}."""
    return [h] + jacobian_ideal(h)


def degeneracy_divisor(
    P: PoissonStructure,
    specialize: Mapping[str, object] | None = None,
    *,
    samples: int = 3,
    seed: int = 0,
) -> tuple[Polynomial, bool]:
    """Pfaffian h and a reducedness proxy.

    The proxy holds when the singular locus of {h = 0} has codimension >= 2 in
    the ambient space.  With parameters present and no ``specialize`` given,
    several random rational specializations are tried and all must pass.
    """
    h = pfaffian(P.bivector)
    if h.is_zero():
        return h, False
    n = P.context.nvars
    for values in _specializations(P.context, specialize, samples, seed):
        hs = h.substitute(values)
        if hs.is_zero() or hs.has_parameters():
            return h, False
        if krull_dimension(groebner(singular_locus_ideal(hs))) > n - 2:
            return h, False
    return h, True


def modular_field(P: PoissonStructure) -> Multivector:
    """Z = h^{-1} i_{dh} pi for the standard coordinate volume."""
    h = pfaffian(P.bivector)
    if h.is_zero():
        raise ZeroPfaffian("Pfaffian vanishes identically; structure is not generically symplectic")
    c = contract_exact(h, P.bivector)
    ctx = P.context
    out = {}
    for key, p in c.components.items():
        try:
            out[key] = exact_divide(p, h)
        except NotDivisible:
            raise NotLogarithmic(f"d/d{ctx.variables[key[0]]}") from None
    return Multivector(ctx, 1, out)


def is_log_tangent(A: Multivector, h: Polynomial) -> bool:
    """Whether A preserves the ideal (h), i.e. every component of i_{dh} A is divisible by h."""
    if h.is_zero():
        raise ZeroPolynomialError("log tangency needs a nonzero defining equation")
    for p in contract_exact(h, A).components.values():
        try:
            exact_divide(p, h)
        except NotDivisible:
            return False
    return True


def atiyah_top_pfaffian(P: PoissonStructure) -> tuple[Polynomial, Multivector]:
    """Normalized top Pfaffian of the Atiyah lift, split as (h, Z ^ pi^(m-1) / (m-1)!).

    For a log structure the second part equals ``contract_exact(h, volume)``,
    whose components are the partials of h up to sign.
    """
    n = P.context.nvars
    m = n // 2
    h = pfaffian(P.bivector)
    Z = modular_field(P)
    top = wedge(Z, P.bivector.power(m - 1)) * Fraction(1, factorial(m - 1))
    return h, top


class Verdict(enum.Enum):
    ELLIPTIC = "elliptic"
    NOT_ELLIPTIC = "not_elliptic"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class EllipticityReport:
    point: tuple[Fraction, ...]
    divisor_vanishes_at_point: bool
    normal_proxy: bool
    modular_nonzero: bool
    verdict: Verdict
    reasons: tuple[str, ...] = ()

    @property
    def is_elliptic(self) -> bool:
        return self.verdict is Verdict.ELLIPTIC


def ellipticity_report(
    P: PoissonStructure, point: Sequence, specialize: Mapping[str, object] | None = None
) -> EllipticityReport:
    """Test the four-dimensional ellipticity conditions at a rational point.

    ``divisor_vanishes_at_point`` records whether p lies in the singular locus
    of the degeneracy divisor (h and dh vanish).  The normality proxy asks that
    the singular locus have dimension <= 1; the transversality condition reduces
    to Z(p) != 0.
    """
    ctx = P.context
    if ctx.nvars != 4:
        raise WrongDimension(f"ellipticity is implemented on 4-dimensional charts, got {ctx.nvars}")
    if specialize:
        P = P.specialize(specialize)
    if P.has_parameters():
        raise ParameterNotSpecialized("specialize all parameters before testing ellipticity")
    pt = tuple(Fraction(c) for c in point)
    if len(pt) != 4:
        raise InputError("point must have 4 coordinates")
    at = dict(zip(ctx.variables, pt))

    h = pfaffian(P.bivector)
    if h.is_zero():
        return EllipticityReport(pt, False, False, False, Verdict.NOT_APPLICABLE,
                                 ("Pfaffian vanishes identically",))
    in_sing = all(g.evaluate(at) == 0 for g in singular_locus_ideal(h))
    normal = krull_dimension(groebner(singular_locus_ideal(h))) <= ctx.nvars - 3
    try:
        Z = modular_field(P)
        z_nonzero = any(p.evaluate(at) != 0 for p in Z.components.values())
    except NotLogarithmic:
        z_nonzero = False

    if not in_sing:
        return EllipticityReport(pt, False, normal, z_nonzero, Verdict.NOT_APPLICABLE,
                                 ("point is not a singular point of the degeneracy divisor",))
    reasons = []
    if not normal:
        reasons.append("normality proxy fails: singular locus has dimension > 1")
    if not z_nonzero:
        reasons.append("modular vector field vanishes at the point")
    verdict = Verdict.ELLIPTIC if not reasons else Verdict.NOT_ELLIPTIC
    return EllipticityReport(pt, True, normal, z_nonzero, verdict, tuple(reasons))


# ---------------------------------------------------------------------------
# simple elliptic singularities


@dataclass(frozen=True)
class SingularityType:
    label: str
    weights: tuple[int, int, int]
    milnor: int
    exponents: tuple[int, int, int] = field(compare=False, repr=False, default=(0, 0, 0))

    @property
    def degree(self) -> int:
        return sum(self.weights)


# f = x^p + y^q + z^r + tau*x*y*z
E6 = SingularityType("E6tilde", (1, 1, 1), 8, (3, 3, 3))
E7 = SingularityType("E7tilde", (1, 1, 2), 9, (4, 4, 2))
E8 = SingularityType("E8tilde", (1, 2, 3), 10, (6, 3, 2))
SINGULARITY_TYPES = {t.label: t for t in (E6, E7, E8)}
_ALIASES = {"e6": E6, "e7": E7, "e8": E8}


def _lookup_type(t) -> SingularityType:
    if isinstance(t, SingularityType):
        return t
    key = str(t).lower().replace("tilde", "").replace("~", "").strip()
    try:
        return _ALIASES[key]
    except KeyError:
        raise InputError(f"unknown singularity type {t!r}") from None


@dataclass(frozen=True)
class Unclassified:
    reason: str


def classify_singularity(f: Polynomial, weights: Sequence[int]):
    """Match a quasi-homogeneous f(x, y, z) against the three simple elliptic types.

    Returns a SingularityType, or Unclassified with the reason.
    """
    if f.context.nvars != 3:
        raise WrongDimension(f"expected a polynomial in 3 variables, got {f.context.nvars}")
    if f.has_parameters():
        raise ParameterNotSpecialized("specialize all parameters before classifying")
    ctx = f.context.with_weights(tuple(weights))
    g = f.to_context(ctx)
    k = quasi_degree(g)
    mu = milnor_number(g)
    if mu == INFINITE:
        raise NonIsolated(f"{f} does not have an isolated singularity")
    if k != sum(ctx.weights):
        return Unclassified(f"weighted degree {k} differs from weight sum {sum(ctx.weights)}")
    sw = tuple(sorted(ctx.weights))
    for t in SINGULARITY_TYPES.values():
        if t.weights == sw and t.milnor == mu:
            return t
    return Unclassified(f"no simple elliptic type with weights {sw} and Milnor number {mu}")


def table_polynomial(t, ctx: VariableContext, tau, names=("x", "y", "z")) -> Polynomial:
    """x^p + y^q + z^r + tau*x*y*z in ``ctx``; ``tau`` is a rational or a parameter name."""
    t = _lookup_type(t)
    x, y, z = (ctx.gen(n) for n in names)
    p, q, r = t.exponents
    tau_p = ctx.gen(tau) if isinstance(tau, str) else ctx.const(Fraction(tau))
    return x ** p + y ** q + z ** r + tau_p * x * y * z


def normal_form_structure(t, lam=1, tau=0, *, lam_name="lam", tau_name="tau") -> PoissonStructure:
    """Elliptic local model on (w, x, y, z).

    ``{w,x} = a x, {w,y} = b y, {w,z} = c z, {x,y} = lam f_z, {y,z} = lam f_x,
    {z,x} = lam f_y`` with f the table polynomial of type ``t``.  Pass
    ``lam=None`` or ``tau=None`` to keep that constant as a symbolic parameter.
    """
    t = _lookup_type(t)
    if lam is not None and Fraction(lam) == 0:
        raise ZeroLambda("lambda must be nonzero")
    params = tuple(n for n, v in ((lam_name, lam), (tau_name, tau)) if v is None)
    ctx = VariableContext(("w", "x", "y", "z"), params)
    f = table_polynomial(t, ctx, tau_name if tau is None else tau)
    L = ctx.gen(lam_name) if lam is None else ctx.const(Fraction(lam))
    a, b, c = t.weights
    table = {
        ("w", "x"): ctx.gen("x") * a,
        ("w", "y"): ctx.gen("y") * b,
        ("w", "z"): ctx.gen("z") * c,
        ("x", "y"): L * partial_derivative(f, "z"),
        ("y", "z"): L * partial_derivative(f, "x"),
        ("z", "x"): L * partial_derivative(f, "y"),
    }
    return from_brackets(table, ctx)


# ---------------------------------------------------------------------------
# example generators


def e6tilde_structure(eta=None, nu=None, *, eta_name="eta", nu_name="nu") -> PoissonStructure:
    """{w,x}=x, {w,y}=y, {w,z}=z, {y,z}=eta x^2+nu yz, {z,x}=eta y^2+nu zx, {x,y}=eta z^2+nu xy."""
    params = tuple(n for n, v in ((eta_name, eta), (nu_name, nu)) if v is None)
    ctx = VariableContext(("w", "x", "y", "z"), params)
    E = ctx.gen(eta_name) if eta is None else ctx.const(Fraction(eta))
    N = ctx.gen(nu_name) if nu is None else ctx.const(Fraction(nu))
    w, x, y, z = (ctx.gen(v) for v in ctx.variables)
    return from_brackets(
        {
            ("w", "x"): x,
            ("w", "y"): y,
            ("w", "z"): z,
            ("y", "z"): E * x ** 2 + N * y * z,
            ("z", "x"): E * y ** 2 + N * z * x,
            ("x", "y"): E * z ** 2 + N * x * y,
        },
        ctx,
    )


def log_darboux_structure(n: int = 2) -> PoissonStructure:
    """Inverse of dx1/x1 ^ dy1 + sum_{i>=2} dxi ^ dyi on (x1, y1, ..., xn, yn)."""
    names = tuple(v for i in range(1, n + 1) for v in (f"x{i}", f"y{i}"))
    ctx = VariableContext(names)
    table = {("x1", "y1"): ctx.gen("x1")}
    for i in range(2, n + 1):
        table[(f"x{i}", f"y{i}")] = ctx.one()
    return from_brackets(table, ctx)


def toric_structure(lambdas: Mapping[tuple[int, int], object], n: int = 4, names=None) -> PoissonStructure:
    """sum_{i<j} lambda_ij x_i x_j d/dx_i ^ d/dx_j (0-based index pairs)."""
    names = tuple(names or (f"x{i + 1}" for i in range(n)))
    ctx = VariableContext(names)
    table = {}
    for (i, j), lam in lambdas.items():
        table[(names[i], names[j])] = ctx.gen(names[i]) * ctx.gen(names[j]) * Fraction(lam)
    return from_brackets(table, ctx)


# ---------------------------------------------------------------------------
# JSON structure documents


def structure_from_document(doc: Mapping) -> tuple[PoissonStructure, dict[str, Fraction]]:
    """Parse ``{"variables", "parameters", "weights"?, "brackets", "specialize"?}``.

    Returns the structure and the (possibly empty) parameter specialization.
    """
    if not isinstance(doc, Mapping):
        raise InputError("structure document must be a JSON object")
    unknown = set(doc) - {"variables", "parameters", "weights", "brackets", "specialize", "schema"}
    if unknown:
        raise InputError(f"unknown keys in structure document: {sorted(unknown)}")
    try:
        variables = tuple(doc["variables"])
        brackets = doc["brackets"]
    except KeyError as exc:
        raise InputError(f"structure document is missing {exc.args[0]!r}") from None
    ctx = VariableContext(variables, tuple(doc.get("parameters", ())), doc.get("weights"))
    if not isinstance(brackets, Mapping) or not all(isinstance(v, str) for v in brackets.values()):
        raise InputError("brackets must map 'a,b' keys to polynomial strings")
    P = from_brackets(brackets, ctx)
    spec = {}
    for name, value in (doc.get("specialize") or {}).items():
        if name not in ctx.parameters:
            raise InputError(f"cannot specialize {name!r}: not a declared parameter")
        try:
            spec[name] = Fraction(str(value))
        except ValueError:
            raise InputError(f"specialization of {name!r} must be rational, got {value!r}") from None
    return P, spec


def structure_to_document(P: PoissonStructure) -> dict:
    ctx = P.context
    doc = {"variables": list(ctx.variables), "parameters": list(ctx.parameters)}
    if ctx.weights is not None:
        doc["weights"] = dict(zip(ctx.variables, ctx.weights))
    doc["brackets"] = {f"{a},{b}": str(p) for (a, b), p in P.bracket_table().items()}
    return doc
