"""Buchberger's algorithm over Q and the ideal-theoretic queries built on it.

Pairs are selected by the normal strategy (smallest lcm degree first) and
pruned with the Gebauer-Moeller update, which subsumes Buchberger's product
and chain criteria.  Parameters must be specialized before any computation.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .errors import BudgetExceeded, ContextMismatch, InputError, ParameterNotSpecialized
from .polyring import (
    Polynomial,
    VariableContext,
    partial_derivative,
    quasi_homogeneous_milnor,
)

__all__ = [
    "MonomialOrder",
    "Budget",
    "use_budget",
    "GroebnerBasis",
    "groebner",
    "normal_form",
    "s_polynomial",
    "is_groebner",
    "krull_dimension",
    "quotient_dimension",
    "milnor_number",
    "jacobian_ideal",
    "rank_leq_mod_ideal",
    "minors",
    "hessian",
    "INFINITE",
]

INFINITE = math.inf


@dataclass(frozen=True)
class MonomialOrder:
    """Monomial order on a context; parameters always rank after variables."""

    kind: str = "degrevlex"
    precedence: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex"):
            raise InputError(f"unknown monomial order {self.kind!r}")
        if self.precedence is not None:
            object.__setattr__(self, "precedence", tuple(self.precedence))

    def key(self, ctx: VariableContext):
        """Sort key on full exponent vectors; a larger key is a larger monomial."""
        if self.precedence is None:
            perm = list(range(ctx.nvars))
        else:
            if sorted(self.precedence) != sorted(ctx.variables):
                raise InputError("precedence must be a permutation of the variables")
            perm = [ctx.index(v) for v in self.precedence]
        perm += list(range(ctx.nvars, ctx.ngens))
        if self.kind == "lex":
            return lambda e: tuple(e[i] for i in perm)
        rev = perm[::-1]
        return lambda e: (sum(e), tuple(-e[i] for i in rev))


@dataclass(frozen=True)
class Budget:
    max_basis: int = 400
    max_degree: int = 64


DEFAULT_BUDGET = Budget()
_BUDGET: ContextVar[Budget] = ContextVar("groebner_budget", default=DEFAULT_BUDGET)


@contextmanager
def use_budget(budget: Budget):
    """Apply ``budget`` to every Groebner computation inside the block."""
    token = _BUDGET.set(budget)
    try:
        yield budget
    finally:
        _BUDGET.reset(token)


class _Poly:
    """Working representation: term dict plus cached leading data."""

    __slots__ = ("terms", "lm", "lc")

    def __init__(self, terms, key):
        self.terms = terms
        self.lm = max(terms, key=key)
        self.lc = terms[self.lm]


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _sub_multiple(p: dict, c, shift, g: dict):
    """p -= c * x^shift * g, in place."""
    for e, cg in g.items():
        t = tuple(a + b for a, b in zip(e, shift))
        s = p.get(t, 0) - c * cg
        if s:
            p[t] = s
        else:
            del p[t]


def _reduce(f: dict, G: list, key) -> dict:
    """Full multivariate division remainder of f by G (list of _Poly)."""
    p = dict(f)
    r = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for g in G:
            if _divides(g.lm, m):
                shift = tuple(a - b for a, b in zip(m, g.lm))
                _sub_multiple(p, c / g.lc, shift, g.terms)
                break
        else:
            r[m] = c
            del p[m]
    return r


def _spoly(f: _Poly, g: _Poly) -> dict:
    L = _lcm(f.lm, g.lm)
    sf = tuple(a - b for a, b in zip(L, f.lm))
    sg = tuple(a - b for a, b in zip(L, g.lm))
    out = {}
    for e, c in f.terms.items():
        out[tuple(a + b for a, b in zip(e, sf))] = c / f.lc
    _sub_multiple(out, 1 / g.lc, sg, g.terms)
    return out


def _update(G: list, B: list, h: int, polys: list):
    """Gebauer-Moeller installation of new basis element index h."""
    lm = lambda i: polys[i].lm  # noqa: E731
    C = [(h, g) for g in G]
    D = []
    while C:
        pair = C.pop(0)
        g1 = pair[1]
        L1 = _lcm(lm(h), lm(g1))
        if _coprime(lm(h), lm(g1)) or not any(
            _divides(_lcm(lm(h), lm(g2)), L1) for _, g2 in C + D
        ):
            D.append(pair)
    E = [(a, b) for a, b in D if not _coprime(lm(a), lm(b))]
    B_new = []
    for g1, g2 in B:
        L = _lcm(lm(g1), lm(g2))
        if (
            not _divides(lm(h), L)
            or _lcm(lm(g1), lm(h)) == L
            or _lcm(lm(h), lm(g2)) == L
        ):
            B_new.append((g1, g2))
    B_new += E
    G_new = [g for g in G if not _divides(lm(h), lm(g))] + [h]
    return G_new, B_new


def _check_specialized(gens):
    for g in gens:
        if g.has_parameters():
            raise ParameterNotSpecialized(
                f"polynomial {g} still involves parameters; specialize them first"
            )


def _check_budget(hp: _Poly, size: int, budget: Budget):
    if size > budget.max_basis:
        raise BudgetExceeded(f"basis size exceeded {budget.max_basis}")
    if sum(hp.lm) > budget.max_degree:
        raise BudgetExceeded(f"leading monomial degree exceeded {budget.max_degree}")


def _buchberger(F: list[dict], key, budget: Budget) -> list[dict]:
    polys: list[_Poly] = []
    G: list[int] = []
    B: list[tuple[int, int]] = []
    for f in F:
        f = _reduce(f, [polys[i] for i in G], key) if G else f
        if f:
            hp = _Poly(f, key)
            _check_budget(hp, len(G) + 1, budget)
            polys.append(hp)
            G, B = _update(G, B, len(polys) - 1, polys)
    while B:
        best = min(
            range(len(B)),
            key=lambda k: (sum(_lcm(polys[B[k][0]].lm, polys[B[k][1]].lm)), B[k][1], B[k][0]),
        )
        i, j = B.pop(best)
        h = _reduce(_spoly(polys[i], polys[j]), [polys[g] for g in G], key)
        if h:
            hp = _Poly(h, key)
            _check_budget(hp, len(G) + 1, budget)
            polys.append(hp)
            G, B = _update(G, B, len(polys) - 1, polys)
    # minimal then reduced basis
    basis = [polys[i] for i in G]
    minimal = [
        g for k, g in enumerate(basis)
        if not any(_divides(o.lm, g.lm) and (o.lm != g.lm or m < k) for m, o in enumerate(basis) if m != k)
    ]
    reduced = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        tail = dict(g.terms)
        del tail[g.lm]
        r = _reduce(tail, others, key)
        r[g.lm] = g.lc
        inv = 1 / g.lc
        reduced.append({e: c * inv for e, c in r.items()})
    reduced.sort(key=lambda t: key(max(t, key=key)), reverse=True)
    return reduced


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple[Polynomial, ...]
    order: MonomialOrder
    context: VariableContext
    source: tuple[Polynomial, ...] = field(default=(), compare=False)

    @property
    def key(self):
        return self.order.key(self.context)

    def leading_monomials(self) -> list[tuple[int, ...]]:
        k = self.key
        return [max(g.terms, key=k) for g in self.generators]

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.generators)

    def normal_form(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self)

    def contains(self, p: Polynomial) -> bool:
        return normal_form(p, self).is_zero()

    def krull_dimension(self) -> int:
        return krull_dimension(self)

    def quotient_dimension(self):
        return quotient_dimension(self)

    def standard_monomials(self) -> list[tuple[int, ...]]:
        return _standard_monomials(self)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


def groebner(
    gens: Sequence[Polynomial],
    order: MonomialOrder | None = None,
    *,
    context: VariableContext | None = None,
    budget: Budget | None = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    An empty generator list is the zero ideal; pass ``context`` in that case.
    """
    order = order or MonomialOrder()
    gens = list(gens)
    if gens:
        ctx = gens[0].context
        if any(g.context != ctx for g in gens):
            raise ContextMismatch("generators live in different contexts")
    elif context is None:
        raise InputError("empty generator list needs an explicit context")
    else:
        ctx = context
    _check_specialized(gens)
    key = order.key(ctx)
    F = [dict(g.terms) for g in gens if g]
    reduced = _buchberger(F, key, budget or _BUDGET.get())
    generators = tuple(Polynomial._raw(ctx, t) for t in reduced)
    return GroebnerBasis(generators, order, ctx, tuple(gens))


def normal_form(p: Polynomial, G: GroebnerBasis) -> Polynomial:
    if p.context != G.context:
        raise ContextMismatch("polynomial and basis live in different contexts")
    key = G.key
    polys = [_Poly(dict(g.terms), key) for g in G.generators]
    return Polynomial._raw(p.context, _reduce(dict(p.terms), polys, key))


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    key = (order or MonomialOrder()).key(f.context)
    return Polynomial._raw(f.context, _spoly(_Poly(dict(f.terms), key), _Poly(dict(g.terms), key)))


def is_groebner(G: GroebnerBasis) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero."""
    for f, g in combinations(G.generators, 2):
        if normal_form(s_polynomial(f, g, G.order), G):
            return False
    return True


def krull_dimension(G: GroebnerBasis) -> int:
    """Dimension of the vanishing locus, from the initial monomial ideal.

    The unit ideal has dimension -1 by convention.
    """
    n = G.context.nvars
    if G.is_unit():
        return -1
    supports = [frozenset(i for i in range(n) if m[i]) for m in G.leading_monomials()]
    for size in range(n, -1, -1):
        for S in combinations(range(n), size):
            s = set(S)
            if not any(sup <= s for sup in supports):
                return size
    return -1  # pragma: no cover - unreachable for proper ideals


def _standard_monomials(G: GroebnerBasis) -> list[tuple[int, ...]]:
    if krull_dimension(G) > 0:
        raise InputError("ideal is not zero-dimensional; infinitely many standard monomials")
    if G.is_unit():
        return []
    lms = G.leading_monomials()
    ctx = G.context
    start = ctx.zero_exponent
    seen = {start}
    stack = [start]
    while stack:
        m = stack.pop()
        for i in range(ctx.nvars):
            t = m[:i] + (m[i] + 1,) + m[i + 1:]
            if t not in seen and not any(_divides(lm, t) for lm in lms):
                seen.add(t)
                stack.append(t)
    return sorted(seen, key=G.key)


def quotient_dimension(G: GroebnerBasis):
    """Vector-space dimension of the quotient ring; ``INFINITE`` if positive-dimensional."""
    if krull_dimension(G) > 0:
        return INFINITE
    return len(_standard_monomials(G))


def jacobian_ideal(f: Polynomial) -> list[Polynomial]:
    return [partial_derivative(f, v) for v in f.context.variables]


def milnor_number(f: Polynomial, *, budget: Budget | None = None):
    """Dimension of the Jacobian algebra of f, or ``INFINITE``.

    When the context carries weights and f is quasi-homogeneous with finite
    Milnor number, the result is cross-checked against prod (k - w)/w.
    """
    _check_specialized([f])
    mu = quotient_dimension(groebner(jacobian_ideal(f), context=f.context, budget=budget))
    if mu != INFINITE and f.context.weights is not None and f:
        try:
            formula = quasi_homogeneous_milnor(f)
        except ArithmeticError:
            formula = None
        if formula is not None and formula != mu:
            raise ArithmeticError(f"Milnor number {mu} disagrees with weighted formula {formula}")
    return mu


def _det(M):
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if not M[0][j]:
            continue
        sub = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * _det(sub)
        total = total + term if j % 2 == 0 else total - term
    return total


def minors(M: Sequence[Sequence[Polynomial]], size: int) -> list[Polynomial]:
    rows, cols = len(M), len(M[0]) if M else 0
    out = []
    for R in combinations(range(rows), size):
        for C in combinations(range(cols), size):
            out.append(_det([[M[r][c] for c in C] for r in R]))
    return out


def rank_leq_mod_ideal(M, I: Sequence[Polynomial], r: int, *, context: VariableContext | None = None) -> bool:
    """True iff every (r+1)-minor of M lies in the ideal generated by I."""
    if r < 0:
        raise InputError("rank bound must be >= 0")
    entries = [e for row in M for e in row]
    ctx = context or (entries[0].context if entries else None)
    if ctx is None:
        return True
    if any(e.context != ctx for e in entries) or any(g.context != ctx for g in I):
        raise ContextMismatch("matrix and ideal live in different contexts")
    rows, cols = len(M), len(M[0]) if M else 0
    if r + 1 > min(rows, cols):
        return True
    G = groebner([g for g in I if g], context=ctx)
    for m in minors(M, r + 1):
        if not isinstance(m, Polynomial):
            m = ctx.const(m)
        if normal_form(m, G):
            return False
    return True


def hessian(f: Polynomial) -> list[list[Polynomial]]:
    vs = f.context.variables
    return [[partial_derivative(partial_derivative(f, a), b) for b in vs] for a in vs]
