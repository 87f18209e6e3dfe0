"""Stratum square, index bijections, per-stratum data and multiplicities."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .hilb2 import phi1_of_d
from .lattice import SurfaceParams


class StratumIndex(NamedTuple):
    sigma: int
    tau: int


class Type2Index(NamedTuple):
    alpha: int
    beta: int
    degenerate: bool


@dataclass(frozen=True)
class StratumData:
    index: StratumIndex
    type1_alpha: int
    type1_beta: int
    type2_alpha: int
    type2_beta: int
    type2_degenerate: bool
    d: int
    s_p: int
    s_q: int
    T_p: int
    T_q: int
    S_p: int
    S_q: int
    R: int
    phi1: Fraction
    phi2: int
    Phi: int


@dataclass(frozen=True)
class NDecomposition:
    n: int
    l: int
    A: int
    B: int


def square(params: SurfaceParams) -> list:
    p, q = params.p, params.q
    return [StratumIndex(s, t) for s in range((p - 1) // 2 + 1) for t in range((q - 1) // 2 + 1)]


def in_square(s: StratumIndex, params: SurfaceParams) -> bool:
    return 0 <= 2 * s.sigma <= params.p - 1 and 0 <= 2 * s.tau <= params.q - 1


def _below_diagonal(alpha: int, beta: int, params: SurfaceParams) -> bool:
    """alpha/p + beta/q < 1 with both coordinates nonnegative."""
    return alpha >= 0 and beta >= 0 and alpha * params.q + beta * params.p < params.pq


def is_type1_pair(alpha: int, beta: int, params: SurfaceParams) -> bool:
    return _below_diagonal(alpha, beta, params) and ((alpha - 1) * params.q + (beta - 1) * params.p) % 2 == 0


def is_type2_pair(alpha: int, beta: int, params: SurfaceParams) -> bool:
    return _below_diagonal(alpha, beta, params) and (alpha * params.q + beta * params.p) % 2 == 1


def _require(s: StratumIndex, params: SurfaceParams):
    if not in_square(s, params):
        raise ValueError(f"{s} is outside the stratum square for {params}")


def type1_index(s: StratumIndex, params: SurfaceParams) -> tuple:
    _require(s, params)
    p, q = params.p, params.q
    candidates = [(2 * s.sigma + 1, 2 * s.tau + 1), (p - 2 * s.sigma - 1, q - 2 * s.tau - 1)]
    valid = [c for c in candidates if is_type1_pair(*c, params)]
    assert len(valid) == 1, f"type-1 bijection ambiguous at {s}, {params}: {valid}"
    return valid[0]


def type2_index(s: StratumIndex, params: SurfaceParams) -> Type2Index:
    """Type-2 pair for a stratum; pairs with alpha beta = 0 carry no component.

    At the centre of the square (p and q both odd) neither candidate lies
    strictly below the diagonal; that cell is reported as (0, 0), degenerate.
    """
    _require(s, params)
    p, q = params.p, params.q
    candidates = [(2 * s.sigma + 1, q - 2 * s.tau - 1), (p - 2 * s.sigma - 1, 2 * s.tau + 1)]
    valid = [c for c in candidates if is_type2_pair(*c, params)]
    if not valid:
        assert all(a * b == 0 for a, b in candidates), f"type-2 bijection empty at {s}, {params}"
        return Type2Index(0, 0, True)
    assert len(valid) == 1, f"type-2 bijection ambiguous at {s}, {params}: {valid}"
    a, b = valid[0]
    return Type2Index(a, b, a * b == 0)


def type1_forward(alpha: int, beta: int, params: SurfaceParams) -> StratumIndex:
    if alpha % 2:
        return StratumIndex((alpha - 1) // 2, (beta - 1) // 2)
    return StratumIndex((params.p - alpha - 1) // 2, (params.q - beta - 1) // 2)


def type2_forward(alpha: int, beta: int, params: SurfaceParams) -> StratumIndex:
    if alpha % 2:
        return StratumIndex((alpha - 1) // 2, (params.q - beta - 1) // 2)
    return StratumIndex((params.p - alpha - 1) // 2, (beta - 1) // 2)


def on_first_branch(s: StratumIndex, params: SurfaceParams) -> bool:
    """The branch condition 2 sigma q + 2 tau p < pq - p - q."""
    p, q = params.p, params.q
    return 2 * s.sigma * q + 2 * s.tau * p < p * q - p - q


def d_from_bijection(s: StratumIndex, params: SurfaceParams) -> int:
    alpha, beta = type1_index(s, params)
    return params.pq - alpha * params.q - beta * params.p


def d_piecewise(s: StratumIndex, params: SurfaceParams, variant: str = "absolute") -> int:
    """Piecewise d; ``variant`` is "printed" (else-branch -pq + (2s+1)q - (2t+1)p)
    or "absolute" (|pq - p - q - 2 sigma q - 2 tau p|)."""
    p, q = params.p, params.q
    u, v = (2 * s.sigma + 1) * q, (2 * s.tau + 1) * p
    if variant == "absolute":
        return abs(p * q - u - v)
    if variant != "printed":
        raise ValueError(f"unknown variant {variant!r}")
    if on_first_branch(s, params):
        return p * q - u - v
    return -p * q + u - v


def T_fn(x: int, m: int) -> int:
    return (2 * x + 1) * (2 * m - 2 * x - 1)


def S_fn(s: int, m: int) -> int:
    return 2 * m * s - s * s


def R_fn(s: StratumIndex, params: SurfaceParams) -> int:
    p, q = params.p, params.q
    return max(p * q - p - q - 2 * s.sigma * q - 2 * s.tau * p, 0)


def phi2_piecewise(s: StratumIndex, params: SurfaceParams) -> int:
    p, q = params.p, params.q
    if on_first_branch(s, params):
        return (2 * s.sigma + 1) * (2 * s.tau + 1) * p * q
    return (p - 2 * s.sigma - 1) * (q - 2 * s.tau - 1) * p * q


def stratum_data(s: StratumIndex, params: SurfaceParams) -> StratumData:
    p, q = params.p, params.q
    a1, b1 = type1_index(s, params)
    t2 = type2_index(s, params)
    d = p * q - a1 * q - b1 * p
    assert d % 2 == 1 and 1 <= d <= p * q
    assert d == d_piecewise(s, params, "absolute")
    s_p, s_q = d % (2 * p), d % (2 * q)
    phi1 = phi1_of_d(d, params)
    phi2 = phi2_piecewise(s, params)
    Phi = 12 * phi1 + 6 * phi2
    assert Phi.denominator == 1
    return StratumData(
        index=s,
        type1_alpha=a1,
        type1_beta=b1,
        type2_alpha=t2.alpha,
        type2_beta=t2.beta,
        type2_degenerate=t2.degenerate,
        d=d,
        s_p=s_p,
        s_q=s_q,
        T_p=T_fn(s.sigma, p),
        T_q=T_fn(s.tau, q),
        S_p=S_fn(s_p, p),
        S_q=S_fn(s_q, q),
        R=R_fn(s, params),
        phi1=phi1,
        phi2=phi2,
        Phi=int(Phi),
    )


@dataclass(frozen=True)
class PhiExpansion:
    printed: int
    corrected: int
    reference: int

    @property
    def printed_agrees(self) -> bool:
        return self.printed == self.reference

    @property
    def corrected_agrees(self) -> bool:
        return self.corrected == self.reference


def phi_expansion(s: StratumIndex, params: SurfaceParams) -> PhiExpansion:
    """Both expansions of Phi in T, S, R against 12 phi_1 + 6 phi_2."""
    p, q = params.p, params.q
    sd = stratum_data(s, params)
    common = 3 * (q * q * sd.T_p - sd.S_p) + 6 * p * q * sd.R - 3 * p * p * q * q
    return PhiExpansion(
        printed=common - 3 * (p * p * sd.T_q + sd.S_q),
        corrected=common + 3 * (p * p * sd.T_q - sd.S_q),
        reference=sd.Phi,
    )


def phi_expanded(s: StratumIndex, params: SurfaceParams) -> int:
    return phi_expansion(s, params).corrected


def decompose(n: int, params: SurfaceParams) -> NDecomposition:
    """Unique n = l pq + A q + B p with 0 <= A < p, 0 <= B < q."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    p, q = params.p, params.q
    A = n * pow(q, -1, p) % p if p > 1 else 0
    B = n * pow(p, -1, q) % q if q > 1 else 0
    l, rem = divmod(n - A * q - B * p, p * q)
    assert rem == 0
    return NDecomposition(n, l, A, B)


def H(x: int, A: int, m: int) -> Fraction:
    """The three-case correction H_m(x, A), first match wins."""
    first, second = x >= m - A, x >= A
    # on the square x <= (m-1)/2 the two conditions never hold together
    assert not (first and second), (x, A, m)
    if first:
        return Fraction(1, 2)
    if second:
        return Fraction(-1, 2)
    return Fraction(0)


def c(x: int, m: int) -> int:
    """1 at the last row x = (m-1)/2 of the square, 2 elsewhere."""
    return 1 if 2 * x == m - 1 else 2


def multiplicity(s: StratumIndex, n: int, params: SurfaceParams) -> int:
    _require(s, params)
    dec = decompose(n, params)
    p, q = params.p, params.q
    m = (dec.l + 1 + H(s.sigma, dec.A, p) + H(s.tau, dec.B, q)) * c(s.sigma, p) * c(s.tau, q)
    assert m.denominator == 1, f"non-integral multiplicity {m} at {s}, n={n}, {params}"
    return int(m)
