import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from dolgachev.assembly import (
    closed_form_b,
    closed_form_check,
    coefficient_series,
    coefficients,
    evaluate_q,
    k_fourth,
    mu_route_check,
    q_k_squared,
    q_squared,
)
from dolgachev.lattice import LatticeClass, SurfaceParams, classes, pair, random_k_perp

P32 = SurfaceParams(3, 2)
E0 = LatticeClass.basis(0)
PAIRS = [SurfaceParams(p, q) for p in range(1, 12, 2) for q in range(1, 12) if gcd(p, q) == 1]
cls = st.lists(st.integers(-5, 5), min_size=10, max_size=10).map(LatticeClass)


def test_rational_surface():
    inv = coefficients(5, SurfaceParams(1, 1))
    assert (inv.a, inv.b, inv.c_known) == (15, -15, 105)


def test_b_examples():
    assert coefficients(1, P32).b == 45
    assert coefficients(1, SurfaceParams(3, 4)).b == 237
    assert coefficients(1, SurfaceParams(5, 2)).b == 141
    assert closed_form_check(10, SurfaceParams(2, 3)).discrepancy == (0, 0)


def test_closed_forms_sweep():
    for params in PAIRS:
        for inv in coefficient_series(params, 60):
            assert inv.a == 3 * inv.n and inv.sum_m == inv.n
            assert inv.b == closed_form_b(inv.n, params)


def test_series_matches_pointwise():
    for params in (P32, SurfaceParams(7, 4)):
        series = coefficient_series(params, 40)
        assert series == [coefficients(n, params) for n in range(1, 41)]
    with pytest.raises(ValueError):
        coefficient_series(P32, 0)


def test_second_differences_vanish():
    for params in PAIRS[:10]:
        bs = [inv.b for inv in coefficient_series(params, 30)]
        assert all(bs[i + 2] - 2 * bs[i + 1] + bs[i] == 0 for i in range(len(bs) - 2))


def test_evaluate_q_examples():
    cl = classes(P32)
    v = evaluate_q(1, E0, E0, E0, cl.F, P32)
    assert v.value == 3699 and not v.c_unknown
    A = LatticeClass([1, 2, -1] + [0] * 7)
    v = evaluate_q(1, A, A, A, cl.F, P32)
    AA, AF, Ak = pair(A, A), pair(A, cl.F), pair(A, cl.k)
    assert v.q2_part == AA * AF and v.qk2_part == Fraction(AF * Ak * Ak, 2)  # F.k = 0 kills three of six terms
    assert evaluate_q(1, cl.k, cl.k, cl.k, cl.k, P32).value == 0


def test_evaluate_q_c_flag():
    v = evaluate_q(1, E0, E0, E0, E0, P32)
    assert v.c_unknown and v.k4_part == 81
    v = evaluate_q(2, E0, E0, E0, E0, SurfaceParams(1, 1))
    assert not v.c_unknown and v.value == 6 + (-6) * 9 + 42 * 81


@settings(max_examples=50)
@given(cls, cls, cls, cls)
def test_forms_are_symmetric_and_normalized(a, b, c, d):
    k = classes(P32).k
    for form in (q_squared, lambda *x: q_k_squared(*x, k), lambda *x: k_fourth(*x, k)):
        assert form(a, b, c, d) == form(d, c, b, a) == form(b, a, d, c) == form(a, c, b, d)
    assert q_squared(a, a, a, a) == pair(a, a) ** 2
    assert q_k_squared(a, a, a, a, k) == pair(a, a) * pair(a, k) ** 2


@settings(max_examples=30)
@given(cls, cls, cls, cls, cls, st.integers(-3, 3))
def test_evaluate_q_multilinear(a, a2, b, c, d, s):
    lhs = evaluate_q(3, a + s * a2, b, c, d, P32)
    r1, r2 = evaluate_q(3, a, b, c, d, P32), evaluate_q(3, a2, b, c, d, P32)
    assert lhs.q2_part == r1.q2_part + s * r2.q2_part
    assert lhs.qk2_part == r1.qk2_part + s * r2.qk2_part


def test_mu_route():
    rng = random.Random(5)
    for params in (P32, SurfaceParams(3, 4), SurfaceParams(5, 2), SurfaceParams(1, 1)):
        F = classes(params).F
        for n in range(1, 8):
            for A in (E0, E0 + random_k_perp(rng)):
                rep = mu_route_check(n, A, params)
                assert rep.ok, rep
        with pytest.raises(ValueError):
            mu_route_check(1, F, params)
