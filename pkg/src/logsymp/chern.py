"""Integer Chern-class arithmetic for two families of Fano fourfolds.

* ``Hypersurface(ambient, d)``: a degree-d hypersurface in P^(ambient-1), with
  cohomology truncated to powers H^k, k <= ambient - 2, and H^(ambient-2) = d.
* ``ProductP1(d)``: P^1 x W with W a degree-d hypersurface in P^4; classes
  A^i B^j with A^2 = 0, B^4 = 0 and A B^3 = d.
"""

from __future__ import annotations

from dataclasses import dataclass
from .errors import DegreeOutOfRange, InputError, NotTotalChernClass, WrongDegree

__all__ = [
    "Hypersurface",
    "ProductP1",
    "CohomologyElement",
    "total_chern",
    "c1c2_minus_c3",
    "pair_with",
]


@dataclass(frozen=True)
class Hypersurface:
    ambient: int = 6
    d: int = 1

    def __post_init__(self):
        if self.d < 1 or self.ambient < 3:
            raise DegreeOutOfRange(f"need d >= 1 and ambient >= 3, got {self}")

    @property
    def dim(self) -> int:
        return self.ambient - 2

    def valid(self, mono) -> bool:
        return mono[0] <= self.dim

    def grade(self, mono) -> int:
        return mono[0]

    unit = (0,)

    def generator(self, name: str):
        if name != "H":
            raise InputError(f"hypersurface rings have only the class H, not {name!r}")
        return (1,)

    def fundamental(self, mono) -> int:
        """Degree of a top-codimension monomial against [X]."""
        return self.d if mono == (self.dim,) else 0

    def fmt(self, mono) -> str:
        k = mono[0]
        return "" if k == 0 else "H" if k == 1 else f"H^{k}"

    def basis(self):
        return [(k,) for k in range(self.dim + 1)]


@dataclass(frozen=True)
class ProductP1:
    d: int = 1

    def __post_init__(self):
        if self.d < 1:
            raise DegreeOutOfRange(f"need d >= 1, got {self.d}")

    dim = 4
    unit = (0, 0)

    def valid(self, mono) -> bool:
        return mono[0] <= 1 and mono[1] <= 3

    def grade(self, mono) -> int:
        return mono[0] + mono[1]

    def generator(self, name: str):
        try:
            return {"A": (1, 0), "B": (0, 1)}[name]
        except KeyError:
            raise InputError(f"product rings have classes A and B, not {name!r}") from None

    def fundamental(self, mono) -> int:
        return self.d if mono == (1, 3) else 0

    def fmt(self, mono) -> str:
        i, j = mono
        a = "" if i == 0 else "A" if i == 1 else f"A^{i}"
        b = "" if j == 0 else "B" if j == 1 else f"B^{j}"
        return a + b

    def basis(self):
        return [(i, j) for j in range(4) for i in range(2)]


class CohomologyElement:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs=None):
        clean = {}
        for mono, c in (coeffs or {}).items():
            mono = tuple(mono)
            if not ring.valid(mono):
                continue
            c = int(c)
            if c:
                clean[mono] = clean.get(mono, 0) + c
        self.ring = ring
        self.coeffs = {m: c for m, c in clean.items() if c}

    @classmethod
    def one(cls, ring):
        return cls(ring, {ring.unit: 1})

    @classmethod
    def gen(cls, ring, name):
        return cls(ring, {ring.generator(name): 1})

    def _coerce(self, other):
        if isinstance(other, CohomologyElement):
            if other.ring != self.ring:
                raise InputError("classes live in different rings")
            return other
        if isinstance(other, int):
            return CohomologyElement.one(self.ring) * other
        raise TypeError(type(other).__name__)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) + c
        return CohomologyElement(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return CohomologyElement(self.ring, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CohomologyElement(self.ring, {m: c * other for m, c in self.coeffs.items()})
        other = self._coerce(other)
        out = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                if self.ring.valid(m):
                    out[m] = out.get(m, 0) + c1 * c2
        return CohomologyElement(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = CohomologyElement.one(self.ring)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = CohomologyElement.one(self.ring) * other
        if not isinstance(other, CohomologyElement):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    __hash__ = None

    def graded(self, k: int) -> CohomologyElement:
        return CohomologyElement(self.ring, {m: c for m, c in self.coeffs.items() if self.ring.grade(m) == k})

    def coefficient(self, mono_name: str) -> int:
        """Coefficient of a monomial written like ``"H^3"``, ``"AB^2"`` or ``"1"``."""
        for m in self.ring.basis():
            if (self.ring.fmt(m) or "1") == mono_name:
                return self.coeffs.get(m, 0)
        raise InputError(f"no basis monomial {mono_name!r}")

    def is_homogeneous(self, k: int) -> bool:
        return all(self.ring.grade(m) == k for m in self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        order = sorted(self.coeffs, key=lambda m: (self.ring.grade(m), tuple(-e for e in m)))
        parts = []
        for m in order:
            c = self.coeffs[m]
            name = self.ring.fmt(m)
            a = abs(c)
            body = str(a) if not name else name if a == 1 else f"{a}{name}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"CohomologyElement({self.ring}, {self})"


def _geometric_inverse(x: CohomologyElement, top: int) -> CohomologyElement:
    # (1 + x)^{-1} = sum_k (-x)^k, nilpotent beyond the top degree
    acc = CohomologyElement.one(x.ring)
    p = CohomologyElement.one(x.ring)
    for _ in range(top):
        p = p * (-x)
        acc = acc + p
    return acc


def total_chern(space) -> CohomologyElement:
    """c(X) from the normal bundle sequence, truncated to the ring."""
    if isinstance(space, Hypersurface):
        H = CohomologyElement.gen(space, "H")
        return (1 + H) ** space.ambient * _geometric_inverse(H * space.d, space.dim)
    if isinstance(space, ProductP1):
        A = CohomologyElement.gen(space, "A")
        B = CohomologyElement.gen(space, "B")
        return (1 + A) ** 2 * (1 + B) ** 5 * _geometric_inverse(B * space.d, space.dim)
    raise InputError(f"unknown space {space!r}")


def c1c2_minus_c3(c: CohomologyElement) -> CohomologyElement:
    if c.graded(0) != 1:
        raise NotTotalChernClass("degree-0 part of a total Chern class must be 1")
    return c.graded(1) * c.graded(2) - c.graded(3)


def pair_with(c: CohomologyElement, nef: str) -> int:
    """Integrate nef * c over X; c must have codimension dim X - 1."""
    ring = c.ring
    if not c.is_homogeneous(ring.dim - 1):
        raise WrongDegree(f"expected a homogeneous class of degree {ring.dim - 1}")
    top = c * CohomologyElement.gen(ring, nef)
    return sum(coef * ring.fundamental(m) for m, coef in top.coeffs.items())
