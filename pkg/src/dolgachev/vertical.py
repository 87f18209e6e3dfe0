"""Cohomology of vertical line bundles O_S(lF + mF_p + nF_q) and section counts."""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import SurfaceParams


@dataclass(frozen=True)
class VerticalDivisor:
    l: int
    m: int
    n: int
    params: SurfaceParams

    @property
    def deg_k(self) -> int:
        """Degree in units of k: l pq + m q + n p."""
        p, q = self.params.p, self.params.q
        return self.l * p * q + self.m * q + self.n * p

    def shift(self, dl: int = 0, dm: int = 0, dn: int = 0) -> "VerticalDivisor":
        return VerticalDivisor(self.l + dl, self.m + dm, self.n + dn, self.params)

    def is_normal(self) -> bool:
        return 0 <= self.m < self.params.p and 0 <= self.n < self.params.q


@dataclass(frozen=True)
class CohomologyDims:
    h0: int
    h1: int
    h2: int

    @property
    def euler(self) -> int:
        return self.h0 - self.h1 + self.h2


def normalize(d: VerticalDivisor) -> VerticalDivisor:
    """Fold multiples of pF_p ~ F and qF_q ~ F into the F-coefficient."""
    p, q = d.params.p, d.params.q
    cm, m = divmod(d.m, p)
    cn, n = divmod(d.n, q)
    return VerticalDivisor(d.l + cm + cn, m, n, d.params)


def cohomology(d: VerticalDivisor) -> CohomologyDims:
    if not d.is_normal():
        raise ValueError(f"{d} is not in normal form; call normalize() first")
    l = d.l
    return CohomologyDims(h0=max(l + 1, 0), h1=max(l, -1 - l, 0), h2=max(-l, 0))


def h0(d: VerticalDivisor) -> int:
    return cohomology(normalize(d)).h0


def canonical_divisor(params: SurfaceParams) -> VerticalDivisor:
    """K_S = F - F_p - F_q, normalized."""
    return normalize(VerticalDivisor(1, -1, -1, params))


def serre_dual(d: VerticalDivisor) -> VerticalDivisor:
    K = canonical_divisor(d.params)
    return normalize(VerticalDivisor(K.l - d.l, K.m - d.m, K.n - d.n, d.params))


def ext2_length_type1(C: VerticalDivisor, alpha: int, beta: int) -> int:
    """Sum of h0(O_S(X)) over X in {C, C - aF_p, C - bF_q, C - aF_p - bF_q}."""
    if alpha < 0 or beta < 0:
        raise ValueError("alpha and beta must be nonnegative")
    twists = [(0, 0), (-alpha, 0), (0, -beta), (-alpha, -beta)]
    return sum(h0(C.shift(dm=dm, dn=dn)) for dm, dn in twists)


def ext2_length_type2(C: VerticalDivisor, alpha: int, beta: int) -> int:
    """h0(O_S(C)) + h0(O_S(C - F + aF_p + bF_q))."""
    if alpha < 0 or beta < 0:
        raise ValueError("alpha and beta must be nonnegative")
    return h0(C) + h0(C.shift(dl=-1, dm=alpha, dn=beta))
