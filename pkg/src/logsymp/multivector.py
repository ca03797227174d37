"""Polyvector fields on an affine chart.

A k-vector is stored as ``{(i1, ..., ik): Polynomial}`` with strictly increasing
variable indices, standing for ``sum a_I d/dx_i1 ^ ... ^ d/dx_ik``.  Internally
we identify ``d/dx_i`` with an odd generator ``xi_i`` so that wedge is the
supercommutative product and the Schouten bracket is the odd Poisson bracket

    [A, B] = sum_i (A <d/dxi_i) (d B/dx_i) - (-1)^((a-1)(b-1)) (B <d/dxi_i) (d A/dx_i)

where ``<d/dxi_i`` is the right derivative.  With this convention ``[X, f] = X(f)``
and ``[X, Y]`` is the Lie bracket of vector fields.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Mapping

from .errors import ContextMismatch, DegreeZero, InputError, NotBivector, OddDimension
from .polyring import Polynomial, VariableContext, partial_derivative, render

__all__ = [
    "Multivector",
    "wedge",
    "schouten",
    "contract_exact",
    "pfaffian",
    "divergence",
    "volume",
]


def _merge_sign(I, J):
    """Sign of sorting the concatenation I+J, or 0 if the index sets overlap."""
    inversions = 0
    for i in I:
        for j in J:
            if i == j:
                return 0
            if i > j:
                inversions += 1
    return -1 if inversions & 1 else 1


def _add_into(acc: dict, key, p: Polynomial):
    if not p:
        return
    cur = acc.get(key)
    s = p if cur is None else cur + p
    if s:
        acc[key] = s
    else:
        acc.pop(key, None)


class Multivector:
    __slots__ = ("context", "degree", "components")

    def __init__(self, context: VariableContext, degree: int, components: Mapping | None = None):
        if degree < 0:
            raise InputError("multivector degree must be >= 0")
        comps = {}
        for key, p in (components or {}).items():
            key = tuple(context.var_index(k) if isinstance(k, str) else int(k) for k in key)
            if len(key) != degree:
                raise InputError(f"index tuple {key} does not have length {degree}")
            if any(a >= b for a, b in zip(key, key[1:])):
                raise InputError(f"index tuple {key} is not strictly increasing")
            if any(not 0 <= k < context.nvars for k in key):
                raise InputError(f"index out of range in {key}")
            if not isinstance(p, Polynomial):
                p = context.const(p)
            elif p.context != context:
                raise ContextMismatch("component lives in a different context")
            _add_into(comps, key, p)
        self.context = context
        self.degree = degree
        self.components = comps

    @classmethod
    def _raw(cls, context, degree, comps):
        obj = cls.__new__(cls)
        obj.context = context
        obj.degree = degree
        obj.components = comps
        return obj

    @classmethod
    def function(cls, p: Polynomial) -> Multivector:
        return cls._raw(p.context, 0, {(): p} if p else {})

    @classmethod
    def basis(cls, ctx: VariableContext, *names: str, coeff=1) -> Multivector:
        """Signed basis element ``coeff * d/dn1 ^ d/dn2 ^ ...`` (any name order)."""
        idx = [ctx.var_index(n) for n in names]
        key = tuple(sorted(idx))
        if len(set(idx)) != len(idx):
            return cls._raw(ctx, len(idx), {})
        sign = 1
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                if idx[a] > idx[b]:
                    sign = -sign
        c = coeff if isinstance(coeff, Polynomial) else ctx.const(coeff)
        return cls._raw(ctx, len(idx), {key: c * sign} if c else {})

    @classmethod
    def zero(cls, ctx: VariableContext, degree: int) -> Multivector:
        return cls._raw(ctx, degree, {})

    def component(self, *names) -> Polynomial:
        """Coefficient of ``d/dn1 ^ ... ^ d/dnk`` with the sign of the given order."""
        idx = [self.context.var_index(n) if isinstance(n, str) else n for n in names]
        key = tuple(sorted(idx))
        if len(set(idx)) != len(idx) or len(idx) != self.degree:
            return self.context.zero()
        inversions = sum(1 for a in range(len(idx)) for b in range(a + 1, len(idx)) if idx[a] > idx[b])
        p = self.components.get(key, self.context.zero())
        return -p if inversions & 1 else p

    def is_zero(self) -> bool:
        return not self.components

    def __bool__(self):
        return bool(self.components)

    def _check(self, other):
        if not isinstance(other, Multivector):
            raise TypeError("expected a Multivector")
        if other.context != self.context:
            raise ContextMismatch("multivectors live in different contexts")

    def __add__(self, other):
        self._check(other)
        if self.degree != other.degree and self and other:
            raise InputError("cannot add multivectors of different degree")
        degree = self.degree if self else other.degree
        out = dict(self.components)
        for k, p in other.components.items():
            _add_into(out, k, p)
        return Multivector._raw(self.context, degree, out)

    def __neg__(self):
        return Multivector._raw(self.context, self.degree, {k: -p for k, p in self.components.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        """Multiply every component by a function (Polynomial) or rational."""
        if isinstance(scalar, Multivector):
            return NotImplemented
        out = {}
        for k, p in self.components.items():
            q = p * scalar
            if q:
                out[k] = q
        return Multivector._raw(self.context, self.degree, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        if self.context != other.context:
            return False
        if not self.components and not other.components:
            return True
        return self.degree == other.degree and self.components == other.components

    __hash__ = None

    def map_coefficients(self, fn) -> Multivector:
        out = {}
        for k, p in self.components.items():
            q = fn(p)
            if q:
                out[k] = q
        return Multivector._raw(self.context, self.degree, out)

    def substitute(self, values) -> Multivector:
        return self.map_coefficients(lambda p: p.substitute(values))

    def power(self, k: int) -> Multivector:
        result = Multivector.function(self.context.one())
        for _ in range(k):
            result = wedge(result, self)
        return result

    def __str__(self):
        if not self.components:
            return "0"
        names = self.context.variables
        parts = []
        for key in sorted(self.components):
            tag = "^".join(f"d/d{names[i]}" for i in key)
            coeff = render(self.components[key])
            parts.append(f"({coeff})*{tag}" if tag else coeff)
        return " + ".join(parts)

    def __repr__(self):
        return f"Multivector(degree={self.degree}, {self})"

    # odd-variable derivatives

    def _right_xi_derivative(self, i):
        out = {}
        k = self.degree
        for key, p in self.components.items():
            if i in key:
                pos = key.index(i)
                sign = -1 if (k - 1 - pos) & 1 else 1
                out[key[:pos] + key[pos + 1:]] = p * sign if sign < 0 else p
        return out

    def _left_xi_derivative(self, i):
        out = {}
        for key, p in self.components.items():
            if i in key:
                pos = key.index(i)
                out[key[:pos] + key[pos + 1:]] = -p if pos & 1 else p
        return out

    def _x_derivative(self, i):
        name = self.context.variables[i]
        out = {}
        for key, p in self.components.items():
            q = partial_derivative(p, name)
            if q:
                out[key] = q
        return out


def _product(ctx, A: dict, B: dict) -> dict:
    out: dict = {}
    for I, p in A.items():
        for J, q in B.items():
            s = _merge_sign(I, J)
            if s:
                key = tuple(sorted(I + J))
                pq = p * q
                _add_into(out, key, pq if s > 0 else -pq)
    return out


def wedge(A: Multivector, B: Multivector) -> Multivector:
    """Exterior product with Koszul signs.

    If ``deg A + deg B`` exceeds the number of variables the result is the zero
    multivector of that (formal) degree.
    """
    A._check(B)
    return Multivector._raw(A.context, A.degree + B.degree, _product(A.context, A.components, B.components))


def schouten(A: Multivector, B: Multivector) -> Multivector:
    A._check(B)
    a, b = A.degree, B.degree
    ctx = A.context
    degree = max(a + b - 1, 0)
    out: dict = {}
    sign = -1 if ((a - 1) * (b - 1)) & 1 else 1
    for i in range(ctx.nvars):
        dA = A._right_xi_derivative(i)
        if dA:
            for k, p in _product(ctx, dA, B._x_derivative(i)).items():
                _add_into(out, k, p)
        dB = B._right_xi_derivative(i)
        if dB:
            for k, p in _product(ctx, dB, A._x_derivative(i)).items():
                _add_into(out, k, -p if sign > 0 else p)
    return Multivector._raw(ctx, degree, out)


def contract_exact(h: Polynomial, A: Multivector) -> Multivector:
    """Interior product of the exact one-form dh into A."""
    if A.degree == 0:
        raise DegreeZero("cannot contract a one-form into a function")
    if h.context != A.context:
        raise ContextMismatch("h and A live in different contexts")
    out: dict = {}
    for i, v in enumerate(h.context.variables):
        dh = partial_derivative(h, v)
        if not dh:
            continue
        for k, p in A._left_xi_derivative(i).items():
            _add_into(out, k, dh * p)
    return Multivector._raw(A.context, A.degree - 1, out)


def volume(ctx: VariableContext) -> Multivector:
    """Standard coordinate polyvector d/dx_1 ^ ... ^ d/dx_n."""
    return Multivector._raw(ctx, ctx.nvars, {tuple(range(ctx.nvars)): ctx.one()})


def pfaffian(pi: Multivector) -> Polynomial:
    """h with pi^m = m! h d/dx_1^...^d/dx_2m; equals the matrix Pfaffian."""
    if pi.degree != 2:
        raise NotBivector(f"expected a bivector, got degree {pi.degree}")
    n = pi.context.nvars
    if n % 2:
        raise OddDimension(f"Pfaffian needs an even number of variables, got {n}")
    m = n // 2
    top = pi.power(m)
    h = top.components.get(tuple(range(n)), pi.context.zero())
    return h * Fraction(1, factorial(m))


def divergence(Z: Multivector) -> Polynomial:
    """Coordinate divergence sum_i dZ_i/dx_i of a vector field."""
    if Z.degree != 1:
        raise InputError("divergence is defined for vector fields")
    total = Z.context.zero()
    for (i,), p in Z.components.items():
        total = total + partial_derivative(p, Z.context.variables[i])
    return total
