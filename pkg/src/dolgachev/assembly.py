"""Assemble a(n), b(n) from the strata and evaluate q_S(n) on lattice classes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Optional

from . import kernels
from .hilb2 import mu_cubed_type1, mu_cubed_type2
from .lattice import LatticeClass, SurfaceParams, classes, pair
from .strata import decompose, multiplicity, square, stratum_data


@dataclass(frozen=True)
class InvariantPolynomial:
    params: SurfaceParams
    n: int
    sum_m: int
    a: int
    b: int
    c_known: Optional[int] = None


def closed_form_a(n: int) -> int:
    return 3 * n


def closed_form_b(n: int, params: SurfaceParams) -> int:
    p, q = params.p, params.q
    return (2 * p * p * q * q - 2 * p * p - 2 * q * q - 1) * n


def known_c(n: int, params: SurfaceParams) -> Optional[int]:
    """c(n) is only known for the rational surface p = q = 1."""
    return 21 * n if (params.p, params.q) == (1, 1) else None


@lru_cache(maxsize=None)
def strata_table(params: SurfaceParams) -> tuple:
    return tuple(stratum_data(s, params) for s in square(params))


def coefficients(n: int, params: SurfaceParams) -> InvariantPolynomial:
    """a(n) = 3 sum m and b(n) = sum m Phi, evaluated cell by cell."""
    decompose(n, params)  # validates n
    total_m = 0
    b = 0
    for sd in strata_table(params):
        m = multiplicity(sd.index, n, params)
        total_m += m
        b += m * sd.Phi
    return InvariantPolynomial(params, n, total_m, 3 * total_m, b, known_c(n, params))


def coefficient_series(params: SurfaceParams, n_max: int, backend=None) -> list:
    """coefficients(n) for n = 1 .. n_max through the sweep kernel."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    table = strata_table(params)
    sums, bs = kernels.strata_sums(
        params.p, params.q,
        [sd.index.sigma for sd in table],
        [sd.index.tau for sd in table],
        [sd.Phi for sd in table],
        n_max,
        backend=backend,
    )
    return [
        InvariantPolynomial(params, n, sm, 3 * sm, b, known_c(n, params))
        for n, sm, b in zip(range(1, n_max + 1), sums, bs)
    ]


@dataclass(frozen=True)
class ClosedFormReport:
    params: SurfaceParams
    n: int
    a: int
    b: int
    expected_a: int
    expected_b: int

    @property
    def discrepancy(self) -> tuple:
        return (self.a - self.expected_a, self.b - self.expected_b)

    @property
    def ok(self) -> bool:
        return self.discrepancy == (0, 0)


def closed_form_check(n: int, params: SurfaceParams) -> ClosedFormReport:
    inv = coefficients(n, params)
    return ClosedFormReport(params, n, inv.a, inv.b, closed_form_a(n), closed_form_b(n, params))


def q_squared(x1, x2, x3, x4) -> Fraction:
    """Symmetrized Q^2, normalized so Q^2(A,A,A,A) = (A.A)^2."""
    return Fraction(
        pair(x1, x2) * pair(x3, x4) + pair(x1, x3) * pair(x2, x4) + pair(x1, x4) * pair(x2, x3), 3
    )


def q_k_squared(x1, x2, x3, x4, k: LatticeClass) -> Fraction:
    """Symmetrized Q k^2, normalized so Qk^2(A,A,A,A) = (A.A)(A.k)^2."""
    xs = (x1, x2, x3, x4)
    total = Fraction(0)
    for i, j in combinations(range(4), 2):
        u, v = (t for t in range(4) if t not in (i, j))
        total += pair(xs[i], xs[j]) * pair(k, xs[u]) * pair(k, xs[v])
    return total / 6


def k_fourth(x1, x2, x3, x4, k: LatticeClass) -> Fraction:
    return pair(k, x1) * pair(k, x2) * pair(k, x3) * pair(k, x4)


@dataclass(frozen=True)
class QValue:
    value: Fraction
    q2_part: Fraction
    qk2_part: Fraction
    k4_part: Fraction
    c_unknown: bool


def evaluate_q(n: int, x1, x2, x3, x4, params: SurfaceParams) -> QValue:
    """a Q^2 + b Qk^2 (+ c k^4 when c is known) on four classes.

    ``c_unknown`` is set when the k^4 term is nonzero but c(n) is not known,
    in which case ``value`` omits it.
    """
    k = classes(params).k
    inv = coefficients(n, params)
    q2 = q_squared(x1, x2, x3, x4)
    qk2 = q_k_squared(x1, x2, x3, x4, k)
    k4 = k_fourth(x1, x2, x3, x4, k)
    value = inv.a * q2 + inv.b * qk2
    c_unknown = False
    if k4 != 0:
        if inv.c_known is None:
            c_unknown = True
        else:
            value += inv.c_known * k4
    return QValue(value, q2, qk2, k4, c_unknown)


@dataclass(frozen=True)
class MuRouteReport:
    params: SurfaceParams
    n: int
    stratum_route: Fraction
    coefficient_route: Fraction

    @property
    def ok(self) -> bool:
        return self.stratum_route == self.coefficient_route


def mu_route_check(n: int, A: LatticeClass, params: SurfaceParams) -> MuRouteReport:
    """q(A,A,A,F) from the mu^3 formulas, weighted by multiplicities, vs. from a(n), b(n)."""
    cl = classes(params)
    if pair(A, cl.F) == 0:
        raise ValueError("A.F must be nonzero")
    total = Fraction(0)
    for sd in strata_table(params):
        m = multiplicity(sd.index, n, params)
        total += m * mu_cubed_type1(A, sd.d, params)
        if not sd.type2_degenerate:
            total += m * mu_cubed_type2(A, sd.type2_alpha, sd.type2_beta, params, symmetric=True)
    inv = coefficients(n, params)
    AF, Ak = pair(A, cl.F), pair(A, cl.k)
    expected = inv.a * pair(A, A) * AF + inv.b * Fraction(1, 2) * AF * Ak**2
    return MuRouteReport(params, n, total, expected)
