import random
from fractions import Fraction
from itertools import permutations
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from dolgachev.hilb2 import (
    Hilb2Divisor,
    g_cubed_f_closed_form,
    g_cubed_f_symbolic,
    mu_cubed_type1,
    mu_cubed_type2,
    phi1_conventions,
    phi1_delta_form,
    phi1_of_d,
    phi2,
    phi2_formula,
    phi2_symmetric,
    quartic,
)
from dolgachev.lattice import FIBRE, LatticeClass, SurfaceParams, classes, pair
from dolgachev.oracles import phi1_closed_form_from_delta

P32 = SurfaceParams(3, 2)
E0 = LatticeClass.basis(0)
T = Hilb2Divisor.T()

coord = st.integers(-4, 4)
surface = st.lists(coord, min_size=10, max_size=10).map(LatticeClass)
tcoef = st.integers(-4, 4).map(lambda v: Fraction(v, 2))
divisor = st.builds(Hilb2Divisor, surface, tcoef)


def K32():
    return classes(P32).K_S


def test_quartic_examples():
    f = Hilb2Divisor(FIBRE)
    assert quartic(f, f, f, f, K32()) == 0
    A = Hilb2Divisor(LatticeClass([2, 1] + [0] * 8))  # A.A = 3
    assert quartic(A, A, T, T, K32()) == -24
    assert quartic(T, T, T, T, K32(), 12) == -96
    B = Hilb2Divisor(E0)
    assert quartic(A, B, B, T, K32()) == 0
    assert quartic(B, T, T, T, K32()) == 8 * pair(E0, K32())


@settings(max_examples=40)
@given(divisor, divisor, divisor, divisor)
def test_quartic_symmetric(a, b, c, d):
    K = K32()
    ref = quartic(a, b, c, d, K)
    for perm in permutations((a, b, c, d)):
        assert quartic(*perm, K) == ref


@settings(max_examples=40)
@given(divisor, divisor, divisor, divisor, divisor, st.integers(-3, 3))
def test_quartic_multilinear(a, a2, b, c, d, s):
    K = K32()
    assert quartic(a + s * a2, b, c, d, K) == quartic(a, b, c, d, K) + s * quartic(a2, b, c, d, K)


def test_g_cubed_examples():
    cl = classes(P32)
    A = LatticeClass([1, 2, -1] + [0] * 7)
    assert g_cubed_f_symbolic(A, 0, 0, cl.K_S, 12, cl.F) == 3 * pair(A, A) * pair(A, cl.F)
    assert g_cubed_f_symbolic(E0, 0, 1, cl.K_S, 12, cl.F) == -378


@settings(max_examples=200)
@given(st.lists(st.integers(-9, 9), min_size=10, max_size=10),
       st.fractions(max_denominator=12).filter(lambda x: abs(x) < 40),
       st.fractions(max_denominator=12).filter(lambda x: abs(x) < 40),
       st.sampled_from([(1, 1), (3, 2), (5, 4), (7, 2)]))
def test_g_cubed_identity(a, x, y, pq):
    cl = classes(SurfaceParams(*pq))
    A = LatticeClass(a)
    AF = pair(A, cl.F)
    expected = 3 * pair(A, A) * AF + 6 * x * AF**2 - 24 * y**2 * AF
    assert g_cubed_f_symbolic(A, x, y, cl.K_S, 12, cl.F) == expected
    assert g_cubed_f_closed_form(A, x, y, cl.F) == expected


def test_phi1_examples():
    assert phi1_of_d(1, SurfaceParams(1, 1)) == Fraction(-1, 4)
    assert phi1_of_d(1, P32) == Fraction(3, 4)
    assert phi1_of_d(3, P32) == Fraction(15, 4)
    for bad in (0, 2, -1):
        with pytest.raises(ValueError):
            phi1_of_d(bad, P32)


def test_phi1_conventions():
    cmp = phi1_conventions(1, SurfaceParams(1, 1))
    assert cmp.floor_convention == Fraction(-1, 4) and cmp.floor_agrees
    assert cmp.printed_convention == Fraction(7, 4) and not cmp.printed_agrees


def test_phi1_sweep_against_independent_form():
    for p in range(1, 16, 2):
        for q in range(1, 16):
            if gcd(p, q) != 1:
                continue
            params = SurfaceParams(p, q)
            for d in range(1, 4 * p * q + 1, 2):
                ref = phi1_of_d(d, params)
                assert (12 * ref).denominator == 1
                assert phi1_closed_form_from_delta(d, p, q) == ref
                gap = phi1_delta_form(d, params, 1) - ref
                assert gap == q * (d % (2 * q)) + p * (d % (2 * p))


def test_phi2_examples():
    for beta in range(0, 3):
        assert phi2(0, beta, SurfaceParams(3, 4)) == 0
    assert phi2(1, 1, P32) == 6
    p34 = SurfaceParams(3, 4)
    assert phi2_formula(1, 1, p34) == 36
    with pytest.raises(ValueError):
        phi2(1, 1, p34)
    assert phi2_symmetric(1, 1, p34) == 24
    with pytest.raises(ValueError):
        phi2(2, 2, P32)


def test_mu_cubed_examples():
    cl = classes(P32)
    assert mu_cubed_type1(E0, 1, P32) == 783
    assert mu_cubed_type1(cl.k, 1, P32) == 0
    B = LatticeClass.basis(1) - LatticeClass.basis(2)
    assert pair(B, cl.F) == 0 and mu_cubed_type1(B, 3, P32) == 0
    assert mu_cubed_type2(E0, 1, 1, P32) == 2916
    assert mu_cubed_type2(E0, 0, 1, P32) == 0
    assert mu_cubed_type2(cl.k, 1, 1, P32) == 0


def test_hilb2_divisor_arithmetic():
    rng = random.Random(0)
    a = Hilb2Divisor(LatticeClass([rng.randint(-3, 3) for _ in range(10)]), Fraction(1, 2))
    assert (a + a) == 2 * a
    assert (a - a).t_coeff == 0
