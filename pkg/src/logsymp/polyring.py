"""Sparse multivariate polynomials over the rationals.

A polynomial lives in a :class:`VariableContext`, which fixes an ordered list of
variables, an ordered list of inert parameters (extra commuting generators on
which every derivation vanishes) and optionally positive integer weights for the
variables.  Terms are stored as ``{exponent_tuple: Fraction}`` where the exponent
tuple runs over ``variables + parameters``.

Example
-------
>>> ctx = VariableContext(("x", "y", "z"), ("t",))
>>> f = parse_poly("x^3+y^3+z^3 + t*x*y*z", ctx)
>>> str(partial_derivative(f, "x"))
'3*x^2 + y*z*t'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import (
    ContextMismatch,
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

__all__ = [
    "VariableContext",
    "Polynomial",
    "parse_poly",
    "partial_derivative",
    "quasi_degree",
    "exact_divide",
    "render",
    "grevlex_key",
]


@dataclass(frozen=True)
class VariableContext:
    variables: tuple[str, ...]
    parameters: tuple[str, ...] = ()
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "parameters", tuple(self.parameters))
        names = self.variables + self.parameters
        if len(set(names)) != len(names):
            raise InputError(f"duplicate names in context: {names}")
        for name in names:
            if not _IDENT_RE.fullmatch(name):
                raise InputError(f"invalid identifier {name!r}")
        w = self.weights
        if w is not None:
            if isinstance(w, Mapping):
                missing = [v for v in self.variables if v not in w]
                extra = [k for k in w if k not in self.variables]
                if missing or extra:
                    raise InputError(f"weights must cover exactly the variables (missing {missing}, extra {extra})")
                w = tuple(w[v] for v in self.variables)
            w = tuple(int(x) for x in w)
            if len(w) != len(self.variables) or any(x < 1 for x in w):
                raise InputError("weights must be positive integers, one per variable")
            object.__setattr__(self, "weights", w)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    @property
    def names(self) -> tuple[str, ...]:
        return self.variables + self.parameters

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def ngens(self) -> int:
        return len(self.variables) + len(self.parameters)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UndeclaredIdentifier(name) from None

    def var_index(self, name: str) -> int:
        i = self.index(name)
        if i >= self.nvars:
            raise DerivativeOfParameter(f"{name!r} is a parameter, not a variable")
        return i

    def with_weights(self, weights) -> VariableContext:
        return VariableContext(self.variables, self.parameters, weights)

    # convenience constructors

    def gen(self, name: str) -> Polynomial:
        e = [0] * self.ngens
        e[self.index(name)] = 1
        return Polynomial._raw(self, {tuple(e): Fraction(1)})

    def const(self, c) -> Polynomial:
        return Polynomial(self, {self.zero_exponent: c})

    def zero(self) -> Polynomial:
        return Polynomial._raw(self, {})

    def one(self) -> Polynomial:
        return self.const(1)

    def poly(self, source: str) -> Polynomial:
        return parse_poly(source, self)

    @property
    def zero_exponent(self) -> tuple[int, ...]:
        return (0,) * self.ngens


def _coerce_scalar(c) -> Fraction:
    if isinstance(c, bool):
        return Fraction(int(c))
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    raise TypeError(f"exact rational coefficient required, got {type(c).__name__}")


def grevlex_key(exp: tuple[int, ...]):
    """Sort key realising graded reverse lexicographic order (larger = bigger)."""
    return (sum(exp), tuple(-e for e in reversed(exp)))


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("context", "_terms", "_hash")

    def __init__(self, context: VariableContext, terms: Mapping[tuple[int, ...], object] | None = None):
        clean = {}
        n = context.ngens
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != n or any(e < 0 for e in exp):
                raise InputError(f"bad exponent vector {exp} for context with {n} generators")
            c = _coerce_scalar(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self.context = context
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, context, terms):
        # trusted constructor: terms already clean
        obj = cls.__new__(cls)
        obj.context = context
        obj._terms = terms
        obj._hash = None
        return obj

    @property
    def terms(self) -> Mapping[tuple[int, ...], Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get(self.context.zero_exponent, Fraction(0))

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def has_parameters(self) -> bool:
        nv = self.context.nvars
        return any(any(e[nv:]) for e in self._terms)

    def used_names(self) -> set[str]:
        names = self.context.names
        return {names[i] for e in self._terms for i, k in enumerate(e) if k}

    # arithmetic

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.context != self.context:
                raise ContextMismatch("polynomials live in different contexts")
            return other
        c = _coerce_scalar(other)
        return Polynomial._raw(self.context, {self.context.zero_exponent: c} if c else {})

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(self.context, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.context, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            try:
                c = _coerce_scalar(other)
            except TypeError:
                return NotImplemented
            if not c:
                return Polynomial._raw(self.context, {})
            return Polynomial._raw(self.context, {e: c * v for e, v in self._terms.items()})
        if other.context != self.context:
            raise ContextMismatch("polynomials live in different contexts")
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial._raw(self.context, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.context.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.context == other.context and self._terms == other._terms
        try:
            c = _coerce_scalar(other)
        except TypeError:
            return NotImplemented
        return self._terms == ({self.context.zero_exponent: c} if c else {})

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.context, frozenset(self._terms.items())))
        return self._hash

    # calculus and substitution

    def derivative(self, name: str) -> Polynomial:
        return partial_derivative(self, name)

    def gradient(self) -> list[Polynomial]:
        return [partial_derivative(self, v) for v in self.context.variables]

    def substitute(self, values: Mapping[str, object]) -> Polynomial:
        """Replace the named generators by rational numbers (same context)."""
        idx = {self.context.index(k): _coerce_scalar(v) for k, v in values.items()}
        out: dict = {}
        for e, c in self._terms.items():
            e2 = list(e)
            for i, val in idx.items():
                if e[i]:
                    c = c * val ** e[i]
                    e2[i] = 0
            if c:
                t = tuple(e2)
                s = out.get(t, 0) + c
                if s:
                    out[t] = s
                else:
                    del out[t]
        return Polynomial._raw(self.context, out)

    def evaluate(self, point: Mapping[str, object] | Iterable) -> Fraction:
        """Evaluate at a rational point; the result must be a constant."""
        if not isinstance(point, Mapping):
            point = dict(zip(self.context.variables, point))
        return self.substitute(point).constant_value()

    def to_context(self, ctx: VariableContext) -> Polynomial:
        """Re-express in another context by matching generator names."""
        names = self.context.names
        out = {}
        for e, c in self._terms.items():
            e2 = [0] * ctx.ngens
            for i, k in enumerate(e):
                if k:
                    e2[ctx.index(names[i])] = k
            out[tuple(e2)] = c
        return Polynomial._raw(ctx, out)

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Polynomial({render(self)!r})"


# ---------------------------------------------------------------------------
# rendering


def _render_key(ctx: VariableContext):
    nv = ctx.nvars

    def key(exp):
        return (grevlex_key(exp[:nv]), grevlex_key(exp[nv:]))

    return key


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render(p: Polynomial) -> str:
    """Canonical text form: grevlex on variables then parameters, explicit ``*``/``^``."""
    if not p._terms:
        return "0"
    names = p.context.names
    parts = []
    for exp in sorted(p._terms, key=_render_key(p.context), reverse=True):
        c = p._terms[exp]
        mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, exp) if k)
        a = abs(c)
        if not mono:
            body = _fmt_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fmt_coeff(a)}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


# ---------------------------------------------------------------------------
# parsing

_IDENT_RE = re.compile(r"[^\W\d]\w*")
_TOKEN_RE = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([^\W\d]\w*)|(\S))")


def _tokenize(source: str):
    pos = 0
    tokens = []
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:  # only trailing whitespace left
            break
        num, ident, op = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            if "/" in num:
                n, d = num.split("/")
                if int(d) == 0:
                    raise PolySyntaxError("zero denominator in rational literal", start)
            tokens.append(("num", Fraction(num), start))
        elif ident is not None:
            tokens.append(("ident", ident, start))
        else:
            if op not in "+-*^()":
                raise PolySyntaxError(f"unexpected character {op!r}", start)
            tokens.append((op, op, start))
        pos = m.end()
    tokens.append(("end", None, len(source)))
    return tokens


class _Parser:
    """Recursive descent over: expr := term (('+'|'-') term)*;
    term := unary ('*' unary)*; unary := ('+'|'-') unary | power;
    power := atom ('^' INT)?; atom := NUMBER | IDENT | '(' expr ')'."""

    def __init__(self, source, ctx):
        self.ctx = ctx
        self.tokens = _tokenize(source)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self):
        if self.peek()[0] == "end":
            raise PolySyntaxError("empty expression", 0)
        result = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise PolySyntaxError(f"unexpected token {val!r}", pos)
        return result

    def expr(self):
        acc = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.unary()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.unary()
        return acc

    def unary(self):
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.unary()
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            kind, val, pos = self.take()
            if kind == "-":
                raise NegativeExponent(pos)
            if kind != "num" or val.denominator != 1:
                raise PolySyntaxError("exponent must be a nonnegative integer literal", pos)
            if self.peek()[0] == "^":
                raise PolySyntaxError("chained exponents need parentheses", self.peek()[2])
            base = base ** int(val)
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            return self.ctx.const(val)
        if kind == "ident":
            try:
                return self.ctx.gen(val)
            except UndeclaredIdentifier:
                raise UndeclaredIdentifier(val, pos) from None
        if kind == "(":
            inner = self.expr()
            k2, v2, p2 = self.take()
            if k2 != ")":
                raise PolySyntaxError("expected ')'", p2)
            return inner
        if kind == "end":
            raise PolySyntaxError("unexpected end of input", pos)
        raise PolySyntaxError(f"unexpected token {val!r}", pos)


def parse_poly(source: str, ctx: VariableContext) -> Polynomial:
    """Parse polynomial text such as ``"x^3 + 1/3*y - t*x*y"``.

    Implicit multiplication is rejected (``2x`` is a syntax error).
    """
    return _Parser(source, ctx).parse()


# ---------------------------------------------------------------------------
# operations


def partial_derivative(p: Polynomial, v: str) -> Polynomial:
    i = p.context.var_index(v)
    out = {}
    for e, c in p._terms.items():
        k = e[i]
        if k:
            e2 = e[:i] + (k - 1,) + e[i + 1:]
            out[e2] = c * k
    return Polynomial._raw(p.context, out)


def _weighted_degree(exp, weights):
    return sum(w * e for w, e in zip(weights, exp))


def quasi_degree(p: Polynomial) -> int:
    """Weighted degree of a quasi-homogeneous polynomial (parameters have weight 0).

    Raises NotQuasiHomogeneous naming two terms of different weighted degree.
    """
    w = p.context.weights
    if w is None:
        raise InputError("context has no weights")
    if not p._terms:
        raise ZeroPolynomialError("zero polynomial has no quasi-degree")
    first = None
    for e in sorted(p._terms, key=_render_key(p.context), reverse=True):
        k = _weighted_degree(e, w)
        if first is None:
            first = (e, k)
        elif k != first[1]:
            one = Polynomial._raw(p.context, {first[0]: p._terms[first[0]]})
            two = Polynomial._raw(p.context, {e: p._terms[e]})
            raise NotQuasiHomogeneous(str(one), str(two))
    return first[1]


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def exact_divide(p: Polynomial, d: Polynomial) -> Polynomial:
    """Return q with p == q*d, or raise NotDivisible."""
    if d.context != p.context:
        raise ContextMismatch("polynomials live in different contexts")
    if not d._terms:
        raise DivisionByZeroPolynomial("division by the zero polynomial")
    key = grevlex_key
    lm_d = max(d._terms, key=key)
    lc_d = d._terms[lm_d]
    rem = dict(p._terms)
    quot = {}
    while rem:
        m = max(rem, key=key)
        if not _divides(lm_d, m):
            raise NotDivisible(f"{render(p)} is not divisible by {render(d)}")
        c = rem[m] / lc_d
        shift = tuple(a - b for a, b in zip(m, lm_d))
        quot[shift] = c
        for e, cd in d._terms.items():
            t = tuple(a + b for a, b in zip(e, shift))
            s = rem.get(t, 0) - c * cd
            if s:
                rem[t] = s
            else:
                del rem[t]
    q = Polynomial._raw(p.context, quot)
    if q * d != p:  # pragma: no cover - guards the division loop
        raise AssertionError("exact division failed verification")
    return q


def quasi_homogeneous_milnor(p: Polynomial) -> Fraction:
    """Product formula prod_v (k - w_v)/w_v for quasi-homogeneous p of degree k."""
    k = quasi_degree(p)
    return prod((Fraction(k - w, w) for w in p.context.weights), start=Fraction(1))
