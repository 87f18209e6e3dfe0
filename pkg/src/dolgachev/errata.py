"""Machine-checked record of printed formulas that disagree with the working forms.

Each detector evaluates both forms on concrete inputs and returns an
`ErrataLedgerEntry` with the smallest witness it finds, or None when the two
forms agree everywhere on the searched range.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Iterator, Optional

from .hilb2 import phi1_conventions, phi2_formula, phi2_symmetric
from .lattice import LatticeClass, SurfaceParams, classes
from .strata import (
    d_from_bijection,
    d_piecewise,
    phi_expansion,
    square,
    type2_index,
)
from .vertical import VerticalDivisor, h0
from .walls import dirac_index


@dataclass(frozen=True)
class ErrataLedgerEntry:
    location: str
    printed_form: str
    working_form: str
    witness: dict
    printed_value: str
    working_value: str
    note: str = ""

    def as_dict(self) -> dict:
        return asdict(self)


def render(x) -> str:
    """Exact text for an integer or rational."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def coprime_pairs(pmax: int, qmax: Optional[int] = None) -> Iterator[SurfaceParams]:
    """Coprime (p, q) with p odd, ordered by p + q, then p, then q."""
    qmax = pmax if qmax is None else qmax
    seen = set()
    out = []
    for p in range(1, pmax + 1):
        for q in range(1, qmax + 1):
            if gcd(p, q) != 1:
                continue
            params = SurfaceParams(p, q)
            key = (params.p, params.q)
            if key not in seen:
                seen.add(key)
                out.append(params)
    out.sort(key=lambda s: (s.p + s.q, s.p, s.q))
    return iter(out)


def _first(cases, printed: Callable, working: Callable):
    for case in cases:
        a, b = printed(*case), working(*case)
        if a != b:
            return case, a, b
    return None


def phi_expansion_sign(pmax: int = 15) -> Optional[ErrataLedgerEntry]:
    cases = ((pr, s) for pr in coprime_pairs(pmax) for s in square(pr))
    hit = _first(cases, lambda pr, s: phi_expansion(s, pr).printed,
                 lambda pr, s: phi_expansion(s, pr).reference)
    if hit is None:
        return None
    (pr, s), a, b = hit
    return ErrataLedgerEntry(
        location="Phi expanded in T, S, R",
        printed_form="3(q^2 T_p - S_p) - 3(p^2 T_q + S_q) + 6pqR - 3p^2q^2",
        working_form="3(q^2 T_p - S_p) + 3(p^2 T_q - S_q) + 6pqR - 3p^2q^2 = 12 phi_1 + 6 phi_2",
        witness={"p": pr.p, "q": pr.q, "sigma": s.sigma, "tau": s.tau},
        printed_value=render(a),
        working_value=render(b),
    )


def d_else_branch_witnesses(pmax: int = 15) -> list:
    """Every (params, stratum, printed, working) where the printed piecewise d is wrong."""
    out = []
    for pr in coprime_pairs(pmax):
        for s in square(pr):
            a, b = d_piecewise(s, pr, "printed"), d_from_bijection(s, pr)
            if a != b:
                out.append((pr, s, a, b))
    return out


def d_else_branch(pmax: int = 15) -> Optional[ErrataLedgerEntry]:
    hits = d_else_branch_witnesses(pmax)
    if not hits:
        return None
    pr, s, a, b = hits[0]
    return ErrataLedgerEntry(
        location="piecewise d(sigma, tau), second branch",
        printed_form="-pq + (2 sigma + 1)q - (2 tau + 1)p",
        working_form="pq - alpha q - beta p = |pq - p - q - 2 sigma q - 2 tau p|",
        witness={"p": pr.p, "q": pr.q, "sigma": s.sigma, "tau": s.tau},
        printed_value=render(a),
        working_value=render(b),
        note=f"{len(hits)} strata affected for p, q <= {pmax}",
    )


def delta_convention(pmax: int = 15) -> Optional[ErrataLedgerEntry]:
    def cases():
        for pr in coprime_pairs(pmax):
            for d in range(1, 4 * pr.pq + 1, 2):
                yield pr, d

    hit = _first(cases(), lambda pr, d: phi1_conventions(d, pr).printed_convention,
                 lambda pr, d: phi1_conventions(d, pr).reference)
    if hit is None:
        return None
    (pr, d), a, b = hit
    return ErrataLedgerEntry(
        location="delta_p, delta_q in the type-1 coefficient",
        printed_form="delta_p = floor(d / 2q) - 1, delta_q = floor(d / 2p) - 1",
        working_form="delta_p = floor(d / 2q), delta_q = floor(d / 2p)",
        witness={"p": pr.p, "q": pr.q, "d": d},
        printed_value=render(a),
        working_value=render(b),
        note="the two conventions differ by exactly q s_q + p s_p",
    )


def a_normalization() -> ErrataLedgerEntry:
    from .assembly import coefficients

    pr = SurfaceParams(1, 1)
    inv = coefficients(1, pr)
    return ErrataLedgerEntry(
        location="a(n) as a raw multiplicity sum",
        printed_form="a(n) = sum m",
        working_form="a(n) = 3 sum m = 3n",
        witness={"p": 1, "q": 1, "n": 1},
        printed_value=render(inv.sum_m),
        working_value=render(inv.a),
    )


def section_count_twist(pmax: int = 7) -> Optional[ErrataLedgerEntry]:
    """Second twist of the type-2 count read with beta on F_p versus on F_q."""
    def cases():
        for pr in coprime_pairs(pmax):
            for l in range(-1, 2):
                for m in range(pr.p):
                    for n in range(pr.q):
                        for alpha in range(1, pr.p):
                            for beta in range(1, pr.q):
                                if alpha * pr.q + beta * pr.p < pr.pq:
                                    yield pr, VerticalDivisor(l, m, n, pr), alpha, beta

    def printed(pr, C, alpha, beta):
        return h0(C) + h0(C.shift(dl=-1, dm=alpha + beta))

    def working(pr, C, alpha, beta):
        return h0(C) + h0(C.shift(dl=-1, dm=alpha, dn=beta))

    hit = _first(cases(), printed, working)
    if hit is None:
        return None
    (pr, C, alpha, beta), a, b = hit
    return ErrataLedgerEntry(
        location="type-2 section count, second summand",
        printed_form="h0(C) + h0(C - F + alpha F_p + beta F_p)",
        working_form="h0(C) + h0(C - F + alpha F_p + beta F_q)",
        witness={"p": pr.p, "q": pr.q, "C": [C.l, C.m, C.n], "alpha": alpha, "beta": beta},
        printed_value=render(a),
        working_value=render(b),
    )


def reduction_index() -> ErrataLedgerEntry:
    """Intermediate numerator for a reduction M orthogonal to K_S."""
    pr = SurfaceParams(3, 2)
    M = LatticeClass.basis(1) - LatticeClass.basis(2)
    M2 = M.square()
    C = -classes(pr).K_S
    return ErrataLedgerEntry(
        location="Dirac index of 2M for M orthogonal to K_S",
        printed_form="(4M^2 - 8) / 8",
        working_form="((C + 2M)^2 - Sign) / 8 = (4M^2 + 8) / 8",
        witness={"p": 3, "q": 2, "M": list(M.as_ints()), "M^2": int(M2)},
        printed_value=render((4 * M2 - 8) / 8),
        working_value=render(dirac_index(2 * M, C)),
        note="the final value 0 stated alongside matches the working form",
    )


def phi2_orientation(pmax: int = 15) -> Optional[ErrataLedgerEntry]:
    """alpha (q - beta) pq used outside alpha q < beta p, where symmetry is required."""
    def cases():
        for pr in coprime_pairs(pmax):
            for s in square(pr):
                t2 = type2_index(s, pr)
                if not t2.degenerate and t2.alpha * pr.q > t2.beta * pr.p:
                    yield pr, t2.alpha, t2.beta

    hit = _first(cases(), lambda pr, alpha, beta: phi2_formula(alpha, beta, pr), lambda pr, alpha, beta: phi2_symmetric(alpha, beta, pr))
    if hit is None:
        return None
    (pr, alpha, beta), a, b = hit
    return ErrataLedgerEntry(
        location="type-2 coefficient phi_2 off its normalized region",
        printed_form="phi_2 = alpha (q - beta) pq",
        working_form="beta (p - alpha) pq when alpha q > beta p",
        witness={"p": pr.p, "q": pr.q, "alpha": alpha, "beta": beta},
        printed_value=render(a),
        working_value=render(b),
        note="only the swapped form reproduces b(n)",
    )


def build_ledger(pmax: int = 15) -> list:
    """All detected discrepancies, in a fixed order."""
    found = [
        phi_expansion_sign(pmax),
        d_else_branch(pmax),
        delta_convention(pmax),
        a_normalization(),
        section_count_twist(min(pmax, 7)),
        reduction_index(),
        phi2_orientation(pmax),
    ]
    return [e for e in found if e is not None]


__all__ = [
    "ErrataLedgerEntry",
    "a_normalization",
    "build_ledger",
    "coprime_pairs",
    "d_else_branch",
    "d_else_branch_witnesses",
    "delta_convention",
    "phi2_orientation",
    "phi_expansion_sign",
    "reduction_index",
    "render",
    "section_count_twist",
]
