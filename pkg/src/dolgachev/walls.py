"""Walls in the positive cone, Dirac indices and wall effectiveness.

A wall for c1 is zeta^perp with zeta integral, zeta = c1 (mod 2) and
-8 <= zeta^2 <= -1; the associated reduction is M = (c1 - zeta) / 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm
from typing import Optional

from . import kernels
from .lattice import SIGNATURE, LatticeClass, SurfaceParams, classes, pair

WALL_MIN, WALL_MAX = -8, -1


@dataclass(frozen=True)
class Wall:
    zeta: LatticeClass
    square: int
    M: Optional[LatticeClass]

    @classmethod
    def from_zeta(cls, zeta: LatticeClass, c1: LatticeClass) -> "Wall":
        M = (c1 - zeta) / 2
        return cls(zeta, int(zeta.square()), M if M.is_integral() else None)


class EndpointOnWall(ValueError):
    def __init__(self, zeta: LatticeClass):
        super().__init__(f"segment endpoint lies on the wall orthogonal to {zeta.as_ints()}")
        self.zeta = zeta


def dirac_index(L: LatticeClass, C: LatticeClass) -> Fraction:
    """Index of the Dirac operator for Spin^c structure C coupled to L."""
    return ((C + L).square() - SIGNATURE) / 8


def in_wall_range(zeta: LatticeClass) -> bool:
    return WALL_MIN <= zeta.square() <= WALL_MAX


def wall_effective(M: LatticeClass, c1: LatticeClass, params: SurfaceParams) -> bool:
    if not M.is_integral():
        raise ValueError("M must be integral")
    zeta = c1 - 2 * M
    if not in_wall_range(zeta):
        raise ValueError(f"(c1 - 2M)^2 = {zeta.square()} is outside [{WALL_MIN}, {WALL_MAX}]")
    C = -classes(params).K_S
    return dirac_index(2 * M, C) > 0 or dirac_index(2 * (c1 - M), C) > 0


def is_wall(zeta: LatticeClass, c1: LatticeClass) -> bool:
    return (
        zeta.is_integral()
        and in_wall_range(zeta)
        and all((a - b) % 2 == 0 for a, b in zip(zeta.coords, c1.coords))
    )


def _check_period(omega: LatticeClass, name: str):
    if omega.square() <= 0:
        raise ValueError(f"{name} is not in the positive cone (square {omega.square()})")


def _integer_form(omega: LatticeClass) -> list:
    """Integer vector w with x.omega proportional (positively) to sum x_i w_i."""
    scale = lcm(*(c.denominator for c in omega.coords))
    return [int(omega[0] * scale)] + [int(-c * scale) for c in omega.coords[1:]]


def search_box(w0: LatticeClass, w1: LatticeClass, depth: int = -WALL_MIN) -> tuple:
    """Coordinate bounds (|zeta_0|, |zeta_i|) containing every crossing wall.

    For zeta orthogonal to a future timelike omega with -zeta^2 <= depth,
    Cauchy-Schwarz gives |zeta_spatial|^2 <= depth omega_0^2 / omega^2 and
    zeta_0^2 <= depth |omega_spatial|^2 / omega^2.  Along the segment,
    omega_0 is linear, |omega_spatial|^2 is convex and omega^2 is at least
    the smaller endpoint square (reverse triangle inequality), so the
    endpoint values bound the whole segment.
    """
    t_max = max(w0[0], w1[0])
    s_max = max(sum(c * c for c in w.coords[1:]) for w in (w0, w1))
    w_min = min(w0.square(), w1.square())
    bound_s = isqrt(int(depth * t_max**2 / w_min))
    bound0 = isqrt(int(depth * s_max / w_min))
    return bound0, bound_s


def walls_on_segment(w0: LatticeClass, w1: LatticeClass, c1: LatticeClass,
                     backend=None) -> list:
    """All walls crossed by the segment from w0 to w1, normalized to zeta.w0 > 0."""
    _check_period(w0, "w0")
    _check_period(w1, "w1")
    if pair(w0, w1) <= 0:
        raise ValueError("w0 and w1 lie in different components of the positive cone")
    if not c1.is_integral():
        raise ValueError("c1 must be integral")
    if w0[0] < 0:
        w0, w1, flipped = -w0, -w1, True
    else:
        flipped = False
    bound0, bound_s = search_box(w0, w1)
    parity = [int(c) % 2 for c in c1.coords]
    candidates = kernels.shell_points(
        bound0, bound_s, parity, WALL_MIN, WALL_MAX,
        _integer_form(w0), _integer_form(w1), backend=backend,
    )
    found = []
    for pt in candidates:
        zeta = LatticeClass(pt)
        a, b = pair(zeta, w0), pair(zeta, w1)
        if a == 0 or b == 0:
            raise EndpointOnWall(zeta)
        if a > 0 > b:
            found.append(zeta)
    if flipped:
        # normalization refers to the caller's w0
        found = [-z for z in found]
    walls = [Wall.from_zeta(z, c1) for z in sorted(found, key=lambda z: z.coords)]
    for w in walls:
        assert is_wall(w.zeta, c1)
    return walls


def chamber_invariance_predicate(p1: int, w2_nonzero: bool) -> bool:
    """Whether invariants with p1(ad E) = p1 depend only on chambers."""
    return p1 > -7 or (p1 == -8 and w2_nonzero)


@dataclass(frozen=True)
class OrthogonalReduction:
    M: LatticeClass
    n: int
    zeta_square: int
    effective: bool
    index_2M: Fraction


def orthogonal_reductions(params: SurfaceParams, n_values, box: int = 4, backend=None) -> list:
    """Every integral M in [-box, box]^10 with M.K_S = 0 and (c1 - 2M)^2 in the wall range.

    c1 = K_S + 2nk is a multiple of f and M is orthogonal to f, so
    (c1 - 2M)^2 = 4 M^2; the shell -2 <= M^2 <= -1 is therefore complete.
    """
    cl = classes(params)
    C = -cl.K_S
    points = kernels.shell_points(box, box, [-1] * 10, -2, -1, backend=backend)
    kform = _integer_form(cl.K_S)
    out = []
    for pt in points:
        # cheap integer test before building exact classes
        if sum(a * b for a, b in zip(pt, kform)) != 0:
            continue
        M = LatticeClass(pt)
        assert pair(M, cl.K_S) == 0
        for n in n_values:
            c1 = cl.c1(n)
            zeta = c1 - 2 * M
            if not in_wall_range(zeta):
                continue
            out.append(OrthogonalReduction(
                M, n, int(zeta.square()), wall_effective(M, c1, params), dirac_index(2 * M, C)
            ))
    return out
