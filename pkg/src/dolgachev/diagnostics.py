"""Report-only checks of the intermediate stratum-sum identities for S, T and R.

The identities sum S_q over 0 <= tau < B as if S_q depended on tau alone.
Two readings are evaluated:

``fixed_sigma``
    S_q(tau) is the value at (0, tau).  S_q does not depend on sigma: the
    remainder s_q is +-(2 tau + 1)p mod 2q on the two branches and
    x(2q - x) is symmetric under x -> 2q - x, so any sigma gives the same
    number.
``column_sum``
    S_q(tau) is the sum of S_q(sigma, tau) over the whole column.

Nothing here raises on a mismatch; callers get the numbers and a flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .assembly import strata_table
from .lattice import SurfaceParams
from .strata import decompose, multiplicity

READINGS = ("fixed_sigma", "column_sum")


@dataclass(frozen=True)
class DiagnosticReport:
    identity: str
    p: int
    q: int
    n: int
    reading: str
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def _tables(params: SurfaceParams):
    return {sd.index: sd for sd in strata_table(params)}


def _line_values(params: SurfaceParams, axis: str, reading: str, value) -> dict:
    """value(sd) aggregated along one axis of the square, keyed by the other index."""
    if reading not in READINGS:
        raise ValueError(f"unknown reading {reading!r}")
    cells = _tables(params)
    out = {}
    for idx, sd in cells.items():
        key, other = (idx.tau, idx.sigma) if axis == "tau" else (idx.sigma, idx.tau)
        if reading == "fixed_sigma":
            if other == 0:
                out[key] = value(sd)
        else:
            out[key] = out.get(key, 0) + value(sd)
    return out


def _partial(line: dict, upto: int) -> int:
    missing = [t for t in range(upto) if t not in line]
    if missing:
        raise ValueError(f"partial sum reaches indices {missing} outside the square")
    return sum(line[t] for t in range(upto))


def _weighted(params: SurfaceParams, n: int, value) -> int:
    return sum(multiplicity(idx, n, params) * value(sd) for idx, sd in _tables(params).items())


def _x(params: SurfaceParams, n: int, reading: str, side: str) -> int:
    """X_q (side "q") or its mirror X_p (side "p")."""
    p, q = params.p, params.q
    dec = decompose(n, params)
    if side == "q":
        own, other, shift = q, p, dec.B
        line = _line_values(params, "tau", reading, lambda sd: p * p * sd.T_q - sd.S_q)
    else:
        own, other, shift = p, q, dec.A
        line = _line_values(params, "sigma", reading, lambda sd: q * q * sd.T_p - sd.S_p)
    scale = other * (2 * own * own + 1) * (other * other - 1)
    if 2 * shift <= own:
        return -shift * scale + 3 * other * _partial(line, shift)
    return (own - shift) * scale + 3 * other * _partial(line, own - shift)


def identity_s(params: SurfaceParams, n: int, reading: str) -> DiagnosticReport:
    p, q = params.p, params.q
    B = decompose(n, params).B
    lhs = 3 * _weighted(params, n, lambda sd: sd.S_q)
    line = _line_values(params, "tau", reading, lambda sd: sd.S_q)
    if 2 * B <= q:
        corr = -B * p * (2 * q * q + 1) + 3 * p * _partial(line, B)
    else:
        corr = (q - B) * p * (2 * q * q + 1) + 3 * p * _partial(line, q - B)
    return DiagnosticReport("S", p, q, n, reading, Fraction(lhs),
                            Fraction(n * (2 * q * q + 1) + corr))


def identity_t(params: SurfaceParams, n: int, reading: str) -> DiagnosticReport:
    p, q = params.p, params.q
    lhs = 3 * _weighted(params, n, lambda sd: p * p * sd.T_q - sd.S_q)
    rhs = n * (2 * q * q + 1) * (p * p - 1) + _x(params, n, reading, "q")
    return DiagnosticReport("T", p, q, n, reading, Fraction(lhs), Fraction(rhs))


def identity_r(params: SurfaceParams, n: int, reading: str) -> DiagnosticReport:
    p, q = params.p, params.q
    lhs = 6 * p * q * _weighted(params, n, lambda sd: sd.R)
    rhs = (n * (p * p - 1) * (q * q - 1) - _x(params, n, reading, "p")
           - _x(params, n, reading, "q"))
    return DiagnosticReport("R", p, q, n, reading, Fraction(lhs), Fraction(rhs))


def sigma_independence(params: SurfaceParams) -> bool:
    """S_q constant along each tau column and S_p constant along each sigma row."""
    cells = _tables(params).values()
    by_tau, by_sigma = {}, {}
    for sd in cells:
        by_tau.setdefault(sd.index.tau, set()).add(sd.S_q)
        by_sigma.setdefault(sd.index.sigma, set()).add(sd.S_p)
    return all(len(v) == 1 for v in by_tau.values()) and all(len(v) == 1 for v in by_sigma.values())


def run(pairs, n_max: int) -> list:
    """Every report for the given (p, q) pairs and 1 <= n <= n_max, in a fixed order."""
    out = []
    for p, q in pairs:
        params = SurfaceParams(p, q)
        for n in range(1, n_max + 1):
            for reading in READINGS:
                for fn in (identity_s, identity_t, identity_r):
                    out.append(fn(params, n, reading))
    return out


def summarize(reports) -> list:
    """(identity, p, q, reading, holding count, total) tuples."""
    tally = {}
    for r in reports:
        key = (r.identity, r.p, r.q, r.reading)
        ok, tot = tally.get(key, (0, 0))
        tally[key] = (ok + r.holds, tot + 1)
    return [k + v for k, v in tally.items()]
