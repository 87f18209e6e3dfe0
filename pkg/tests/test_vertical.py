import pytest
from hypothesis import given, strategies as st

from dolgachev.lattice import SurfaceParams
from dolgachev.vertical import (
    CohomologyDims,
    VerticalDivisor,
    canonical_divisor,
    cohomology,
    ext2_length_type1,
    ext2_length_type2,
    h0,
    normalize,
    serre_dual,
)

P32 = SurfaceParams(3, 2)
params_st = st.sampled_from([SurfaceParams(*pq) for pq in [(1, 1), (3, 2), (3, 4), (5, 2), (7, 3)]])


def V(l, m, n, params=P32):
    return VerticalDivisor(l, m, n, params)


def test_normalize_examples():
    p5 = SurfaceParams(5, 2)
    got = normalize(VerticalDivisor(0, 5, 0, p5))
    assert (got.l, got.m, got.n) == (1, 0, 0)
    got = normalize(V(0, 0, 0))
    assert (got.l, got.m, got.n) == (0, 0, 0)
    got = normalize(V(0, 4, 3))
    assert (got.l, got.m, got.n) == (2, 1, 1)


@given(st.integers(-50, 50), st.integers(-20, 20), st.integers(-20, 20), params_st)
def test_normalize_invariants(l, m, n, params):
    d = VerticalDivisor(l, m, n, params)
    nd = normalize(d)
    assert nd.is_normal() and nd.deg_k == d.deg_k
    assert normalize(nd) == nd


def test_cohomology_examples():
    assert cohomology(V(0, 0, 0)) == CohomologyDims(1, 0, 0)
    assert cohomology(V(-1, 0, 0)) == CohomologyDims(0, 0, 1)
    assert cohomology(V(2, 1, 0)) == CohomologyDims(3, 2, 0)


def test_cohomology_requires_normal_form():
    with pytest.raises(ValueError):
        cohomology(V(0, 3, 0))


@given(st.integers(-100, 100), params_st, st.data())
def test_euler_and_monotonicity(l, params, data):
    m = data.draw(st.integers(0, params.p - 1))
    n = data.draw(st.integers(0, params.q - 1))
    h = cohomology(VerticalDivisor(l, m, n, params))
    assert h.euler == 1
    assert h0(VerticalDivisor(l + 1, m, n, params)) >= h.h0


@given(st.integers(-30, 30), params_st, st.data())
def test_serre_duality(l, params, data):
    m = data.draw(st.integers(0, params.p - 1))
    n = data.draw(st.integers(0, params.q - 1))
    d = VerticalDivisor(l, m, n, params)
    assert cohomology(d).h2 == h0(serre_dual(d))


def test_canonical_divisor():
    K = canonical_divisor(P32)
    assert (K.l, K.m, K.n) == (-1, 2, 1)
    assert K.deg_k == P32.canonical_multiple


def test_ext2_type1_examples():
    assert ext2_length_type1(V(0, 0, 0), 0, 0) == 4
    assert ext2_length_type1(V(0, 1, 1), 1, 1) == 4
    assert ext2_length_type1(V(-1, 0, 0), 0, 0) == 0
    with pytest.raises(ValueError):
        ext2_length_type1(V(0, 0, 0), -1, 0)


def test_ext2_type2_examples():
    assert ext2_length_type2(V(0, 0, 0), 0, 0) == 1
    assert ext2_length_type2(V(1, 0, 0), 1, 1) == 3
    assert ext2_length_type2(V(-1, 0, 0), 0, 0) == 0
