"""Quartic intersection numbers on Hilb^2(S) and the mu(A)^3 evaluators.

Pic Hilb^2(S) is modelled as Pic(S) + (1/2) Z T, where T is the exceptional
divisor of the Hilbert-Chow map.  A divisor is a pair (surface class, T
coefficient); the quartic product is the multilinear extension of five
rules on pure classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .lattice import C2, LatticeClass, SurfaceParams, classes, pair


@dataclass(frozen=True)
class Hilb2Divisor:
    surface_part: LatticeClass
    t_coeff: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "t_coeff", Fraction(self.t_coeff))

    def __add__(self, other):
        return Hilb2Divisor(self.surface_part + other.surface_part, self.t_coeff + other.t_coeff)

    def __sub__(self, other):
        return Hilb2Divisor(self.surface_part - other.surface_part, self.t_coeff - other.t_coeff)

    def __mul__(self, scalar):
        s = Fraction(scalar)
        return Hilb2Divisor(s * self.surface_part, s * self.t_coeff)

    __rmul__ = __mul__

    @classmethod
    def T(cls) -> "Hilb2Divisor":
        return cls(LatticeClass.zero(), Fraction(1))


def _pure_product(surface: list, n_t: int, K: LatticeClass, c2: int) -> Fraction:
    """Product of len(surface) induced divisors with n_t copies of T."""
    if n_t == 0:
        A, B, C, D = surface
        return pair(A, B) * pair(C, D) + pair(A, C) * pair(B, D) + pair(A, D) * pair(B, C)
    if n_t == 1:
        return Fraction(0)
    if n_t == 2:
        A, B = surface
        return -8 * pair(A, B)
    if n_t == 3:
        (A,) = surface
        return 8 * pair(A, K)
    return Fraction(-8 * (pair(K, K) + c2))


def quartic(a, b, c, d, K: LatticeClass, c2: int = C2) -> Fraction:
    """Intersection number a.b.c.d of four divisors on Hilb^2(S)."""
    args = (a, b, c, d)
    total = Fraction(0)
    # each factor contributes either its surface part (False) or its T part (True)
    for pick in product((False, True), repeat=4):
        coeff = Fraction(1)
        surface = []
        for arg, is_t in zip(args, pick):
            if is_t:
                coeff *= arg.t_coeff
            else:
                surface.append(arg.surface_part)
        if coeff == 0:
            continue
        total += coeff * _pure_product(surface, sum(pick), K, c2)
    return total


def g_cubed_f_symbolic(A: LatticeClass, x, y, K: LatticeClass, c2: int, F: LatticeClass) -> Fraction:
    """(A + xF + yT)^3 . F, expanded mechanically through `quartic`."""
    if pair(F, F) != 0 or pair(F, K) != 0:
        raise ValueError("F must be isotropic and orthogonal to K")
    G = Hilb2Divisor(A + Fraction(x) * F, Fraction(y))
    return quartic(G, G, G, Hilb2Divisor(F), K, c2)


def g_cubed_f_closed_form(A: LatticeClass, x, y, F: LatticeClass) -> Fraction:
    AF = pair(A, F)
    x, y = Fraction(x), Fraction(y)
    return 3 * pair(A, A) * AF + 6 * x * AF**2 - 24 * y**2 * AF


def _check_odd_d(d: int):
    if d < 1 or d % 2 == 0:
        raise ValueError(f"d must be a positive odd integer, got {d}")


def phi1_of_d(d: int, params: SurfaceParams) -> Fraction:
    """Type-1 coefficient phi_1 from the remainders s_p = d mod 2p, s_q = d mod 2q."""
    _check_odd_d(d)
    p, q = params.p, params.q
    s_p, s_q = d % (2 * p), d % (2 * q)
    return Fraction(2 * d * p * q - d * d - (2 * q * s_q - s_q * s_q) - (2 * p * s_p - s_p * s_p), 4)


def phi1_delta_form(d: int, params: SurfaceParams, delta_shift: int = 0) -> Fraction:
    """phi_1 written with delta_p = floor(d/2q) - shift and delta_q = floor(d/2p) - shift."""
    _check_odd_d(d)
    p, q = params.p, params.q
    dp = d // (2 * q) - delta_shift
    dq = d // (2 * p) - delta_shift
    return (
        dp * q * (dp * q + q - d)
        + dq * p * (dq * p + p - d)
        + Fraction(d * d, 4)
        + Fraction(d, 2) * (p * q - p - q)
    )


@dataclass(frozen=True)
class Phi1Comparison:
    d: int
    reference: Fraction
    floor_convention: Fraction
    printed_convention: Fraction

    @property
    def floor_agrees(self) -> bool:
        return self.floor_convention == self.reference

    @property
    def printed_agrees(self) -> bool:
        return self.printed_convention == self.reference


def phi1_conventions(d: int, params: SurfaceParams) -> Phi1Comparison:
    """Evaluate the delta form under both delta conventions against phi1_of_d."""
    return Phi1Comparison(
        d=d,
        reference=phi1_of_d(d, params),
        floor_convention=phi1_delta_form(d, params, 0),
        printed_convention=phi1_delta_form(d, params, 1),
    )


def _check_type2_domain(alpha: int, beta: int, params: SurfaceParams) -> bool:
    """Validate (alpha, beta); returns False for the degenerate alpha beta = 0 case."""
    p, q = params.p, params.q
    if alpha < 0 or beta < 0:
        raise ValueError("alpha and beta must be nonnegative")
    if alpha * beta == 0:
        return False
    if alpha * q + beta * p >= p * q:
        raise ValueError(f"(alpha, beta) = ({alpha}, {beta}) violates alpha q + beta p < pq")
    return True


def phi2_formula(alpha: int, beta: int, params: SurfaceParams) -> int:
    """alpha (q - beta) pq evaluated as written, with no orientation check."""
    if not _check_type2_domain(alpha, beta, params):
        return 0
    return alpha * (params.q - beta) * params.pq


def phi2(alpha: int, beta: int, params: SurfaceParams) -> int:
    """Type-2 coefficient alpha (q - beta) pq, on the normalized region alpha q < beta p."""
    if not _check_type2_domain(alpha, beta, params):
        return 0
    p, q = params.p, params.q
    if alpha * q > beta * p:
        raise ValueError(
            f"(alpha, beta) = ({alpha}, {beta}) has alpha q > beta p; use phi2_symmetric"
        )
    return alpha * (q - beta) * p * q


def phi2_symmetric(alpha: int, beta: int, params: SurfaceParams) -> int:
    """phi2 extended to alpha q > beta p by exchanging the roles of (alpha, p) and (beta, q)."""
    if not _check_type2_domain(alpha, beta, params):
        return 0
    p, q = params.p, params.q
    if alpha * q < beta * p:
        return alpha * (q - beta) * p * q
    return beta * (p - alpha) * p * q


def mu_cubed_type1(A: LatticeClass, d: int, params: SurfaceParams) -> Fraction:
    cl = classes(params)
    AF = pair(A, cl.F)
    return 3 * AF * pair(A, A) + 6 * phi1_of_d(d, params) * AF * pair(A, cl.k) ** 2


def mu_cubed_type2(A: LatticeClass, alpha: int, beta: int, params: SurfaceParams,
                   symmetric: bool = False) -> Fraction:
    cl = classes(params)
    value = phi2_symmetric(alpha, beta, params) if symmetric else phi2(alpha, beta, params)
    return 3 * value * pair(A, cl.F) * pair(A, cl.k) ** 2
