"""Independent reference enumerations used by `verify` and the test-suite.

These deliberately share no code with the production paths they check.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import lcm

from .lattice import FIBRE, LatticeClass


def _form(omega: LatticeClass) -> list:
    scale = lcm(*(c.denominator for c in omega.coords))
    return [int(omega[0] * scale)] + [int(-c * scale) for c in omega.coords[1:]]


def _can_reach(partial: int, rest_norm2: int, budget: int, sign: int) -> bool:
    """Whether partial + r can have the given weak sign, where |r| <= sqrt(rest_norm2 * budget)."""
    if sign > 0:
        return partial >= 0 or rest_norm2 * budget >= partial * partial
    return partial <= 0 or rest_norm2 * budget >= partial * partial


def brute_force_walls(w0: LatticeClass, w1: LatticeClass, c1: LatticeClass, box: int = 50,
                      qlo: int = -8, qhi: int = -1) -> set:
    """All integral zeta in [-box, box]^10 with zeta = c1 (mod 2), qlo <= zeta^2 <= qhi and
    zeta.w0, zeta.w1 not of the same strict sign.

    Exhaustive over the box; branches are discarded only when Cauchy-Schwarz
    shows the remaining coordinates cannot satisfy the conditions.  Returns
    integer tuples (both zeta and -zeta appear).
    """
    a, b = _form(w0), _form(w1)
    parity = [int(c) % 2 for c in c1.coords]
    rest_a = [sum(v * v for v in a[i:]) for i in range(1, 11)] + [0]
    rest_b = [sum(v * v for v in b[i:]) for i in range(1, 11)] + [0]
    # rest_a[i - 1] = squared norm of a restricted to coordinates i..9
    values = [[v for v in range(-box, box + 1) if (v - parity[i]) % 2 == 0] for i in range(10)]
    found = set()
    x = [0] * 10

    def feasible(i, la, lb, budget):
        ra, rb = rest_a[i - 1], rest_b[i - 1]
        return (
            (_can_reach(la, ra, budget, 1) and _can_reach(lb, rb, budget, -1))
            or (_can_reach(la, ra, budget, -1) and _can_reach(lb, rb, budget, 1))
        )

    def rec(i, spent, la, lb, x0sq):
        lo, hi = x0sq - qhi - spent, x0sq - qlo - spent
        if hi < 0 or lo > (10 - i) * box * box:
            return
        if i == 10:
            if lo <= 0 and not ((la > 0 and lb > 0) or (la < 0 and lb < 0)):
                found.add(tuple(x))
            return
        if not feasible(i, la, lb, hi):
            return
        for v in values[i]:
            if v * v > hi:
                continue
            x[i] = v
            rec(i + 1, spent + v * v, la + v * a[i], lb + v * b[i], x0sq)

    for v0 in values[0]:
        x[0] = v0
        rec(1, 0, v0 * a[0], v0 * b[0], v0 * v0)
    return found


def random_segment(rng: random.Random) -> tuple:
    """(w0, w1, c1): two rational periods with coordinates in [-3, 3] and square >= 1,
    plus c1 = K_S + 2nk for a random small surface and n."""

    def period():
        while True:
            w = LatticeClass([Fraction(rng.randint(8, 12), 4)]
                             + [Fraction(rng.randint(-4, 4), 4) for _ in range(9)])
            if w.square() >= 1:
                return w

    p, q = rng.choice([(1, 1), (3, 2), (3, 4), (5, 2), (5, 3)])
    n = rng.randint(1, 5)
    c1 = (p * q - p - q + 2 * n) * FIBRE
    return period(), period(), c1


def phi1_closed_form_from_delta(d: int, p: int, q: int) -> Fraction:
    """phi_1 with delta = floor(d / 2q), floor(d / 2p), written out independently."""
    dp, dq = d // (2 * q), d // (2 * p)
    return Fraction(4 * dp * q * (dp * q + q - d) + 4 * dq * p * (dq * p + p - d) + d * d
                    + 2 * d * (p * q - p - q), 4)
