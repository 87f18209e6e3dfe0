"""Rank-10 model of H^2(S; Z) for a Dolgachev surface S(p, q).

The lattice is Z^{1,9} with Gram matrix diag(+1, -1, ..., -1).  The fibre
direction is the primitive isotropic vector f = 3e0 - e1 - ... - e9, and all
vertical classes (F, F_p, F_q, K_S, k) are rational multiples of it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from . import intlin

RANK = 10
GRAM = tuple(tuple((1 if i == 0 else -1) if i == j else 0 for j in range(RANK)) for i in range(RANK))

SIGNATURE = -8
C2 = 12


def noether_c2(k_squared: int = 0, chi: int = 1) -> int:
    """c2 from Noether's formula K^2 + c2 = 12 chi(O)."""
    return 12 * chi - k_squared


@dataclass(frozen=True)
class SurfaceParams:
    """Coprime multiplicities of the two multiple fibres, normalized so p is odd."""

    p: int
    q: int

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if p < 1 or q < 1:
            raise ValueError(f"multiplicities must be positive, got ({p}, {q})")
        if gcd(p, q) != 1:
            raise ValueError(f"multiplicities must be coprime, got ({p}, {q})")
        if p % 2 == 0:
            p, q = q, p
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def pq(self) -> int:
        return self.p * self.q

    @property
    def canonical_multiple(self) -> int:
        """Coefficient of k in K_S, i.e. pq - p - q."""
        return self.pq - self.p - self.q


class LatticeClass:
    """An immutable vector of 10 exact rationals with the Lorentzian pairing."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable):
        c = tuple(Fraction(x) for x in coords)
        if len(c) != RANK:
            raise ValueError(f"expected {RANK} coordinates, got {len(c)}")
        object.__setattr__(self, "coords", c)

    def __setattr__(self, name, value):
        raise AttributeError("LatticeClass is immutable")

    @classmethod
    def basis(cls, i: int) -> "LatticeClass":
        return cls(1 if j == i else 0 for j in range(RANK))

    @classmethod
    def zero(cls) -> "LatticeClass":
        return cls([0] * RANK)

    def __add__(self, other):
        if not isinstance(other, LatticeClass):
            return NotImplemented
        return LatticeClass(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        if not isinstance(other, LatticeClass):
            return NotImplemented
        return LatticeClass(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self):
        return LatticeClass(-a for a in self.coords)

    def __mul__(self, scalar):
        if isinstance(scalar, LatticeClass):
            return NotImplemented
        s = Fraction(scalar)
        return LatticeClass(s * a for a in self.coords)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        s = Fraction(scalar)
        return LatticeClass(a / s for a in self.coords)

    def __eq__(self, other):
        return isinstance(other, LatticeClass) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __repr__(self):
        return "LatticeClass(" + ", ".join(str(c) for c in self.coords) + ")"

    def square(self) -> Fraction:
        return pair(self, self)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def as_ints(self) -> tuple:
        if not self.is_integral():
            raise ValueError(f"{self!r} is not integral")
        return tuple(int(c) for c in self.coords)


def pair(x: LatticeClass, y: LatticeClass) -> Fraction:
    c, d = x.coords, y.coords
    return c[0] * d[0] - sum(a * b for a, b in zip(c[1:], d[1:]))


FIBRE = LatticeClass([3] + [-1] * 9)


@dataclass(frozen=True)
class DistinguishedClasses:
    params: SurfaceParams
    f: LatticeClass
    k: LatticeClass
    F: LatticeClass
    F_p: LatticeClass
    F_q: LatticeClass
    K_S: LatticeClass
    sign_X: int = SIGNATURE
    c2_S: int = C2

    def c1(self, n: int) -> LatticeClass:
        """First Chern class K_S + 2nk of the invariant q_S(n)."""
        return self.K_S + 2 * n * self.k


def classes(params: SurfaceParams) -> DistinguishedClasses:
    p, q = params.p, params.q
    k = FIBRE
    return DistinguishedClasses(
        params=params,
        f=FIBRE,
        k=k,
        F=params.pq * k,
        F_p=q * k,
        F_q=p * k,
        K_S=params.canonical_multiple * k,
    )


def is_characteristic_on(w: LatticeClass, x: LatticeClass) -> bool:
    """Whether w.x = x.x (mod 2) for the integral class x."""
    return (pair(w, x) - pair(x, x)) % 2 == 0


def transvection(y: LatticeClass, x: LatticeClass, params: SurfaceParams) -> LatticeClass:
    """T_y(x) = x + (x.y) F, an isometry of the orthogonal complement of k."""
    if pair(x, FIBRE) != 0 or pair(y, FIBRE) != 0:
        raise ValueError("transvection is only defined on the orthogonal complement of k")
    F = params.pq * FIBRE
    return x + pair(x, y) * F


def random_k_perp(rng: random.Random, bound: int = 3) -> LatticeClass:
    """Random integral class orthogonal to f: pick e1..e9 freely, then fix e0 via 3x0 = -sum."""
    while True:
        xs = [rng.randint(-bound, bound) for _ in range(9)]
        s = sum(xs)
        if s % 3 == 0:
            return LatticeClass([-s // 3] + xs)


def k_perp_basis() -> list:
    """Integral basis of {x in Z^10 : x.f = 0}, as integer tuples."""
    # x.f = 3 x0 + sum x_i ; the kernel of that row is the orthogonal complement.
    row = [int(FIBRE[0])] + [-int(c) for c in FIBRE.coords[1:]]
    return intlin.kernel_basis([row])


def k_perp_quotient_gram(params: SurfaceParams | None = None) -> list:
    """Gram matrix of (k-perp) / Z f, as an 8x8 list of ints.

    The model lattice is the same for every (p, q); the argument is accepted
    so callers can sweep it.
    """
    basis = k_perp_basis()
    f = [int(c) for c in FIBRE.coords]
    coeffs = intlin.solve_in_basis(basis, f)
    adapted = intlin.complete_to_basis(basis, coeffs)
    # adapted[0] == f; the rest span a complement of the radical
    assert list(adapted[0]) == f
    rest = [LatticeClass(v) for v in adapted[1:]]
    return [[int(pair(a, b)) for b in rest] for a in rest]


def gram_of(vectors: Sequence[LatticeClass]) -> list:
    return [[pair(a, b) for b in vectors] for a in vectors]
