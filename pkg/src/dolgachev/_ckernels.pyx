# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contracts as _pykernels."""

from libcpp.vector cimport vector


cdef inline long long _h(long long x, long long a, long long m) nogil:
    if x >= m - a:
        return 1
    if x >= a:
        return -1
    return 0


def strata_sums(long long p, long long q, sigmas, taus, phis, long long n_max):
    cdef Py_ssize_t ncell = len(sigmas)
    cdef vector[long long] sg, tg, ph, cc
    cdef Py_ssize_t j
    for j in range(ncell):
        sg.push_back(sigmas[j])
        tg.push_back(taus[j])
        ph.push_back(phis[j])
        cc.push_back((1 if 2 * sigmas[j] == p - 1 else 2) * (1 if 2 * taus[j] == q - 1 else 2))
    cdef long long pq = p * q
    cdef long long inv_q = pow(q, -1, p) if p > 1 else 0
    cdef long long inv_p = pow(p, -1, q) if q > 1 else 0
    cdef vector[long long] out_m, out_b
    out_m.resize(n_max)
    out_b.resize(n_max)
    cdef long long n, A, B, l, base, tm, tb, twice, m
    cdef long long bad_n = 0
    with nogil:
        for n in range(1, n_max + 1):
            A = (n % p) * inv_q % p
            B = (n % q) * inv_p % q
            l = (n - A * q - B * p) // pq
            base = 2 * (l + 1)
            tm = 0
            tb = 0
            for j in range(ncell):
                twice = (base + _h(sg[j], A, p) + _h(tg[j], B, q)) * cc[j]
                if twice & 1:
                    bad_n = n
                m = twice >> 1
                tm += m
                tb += m * ph[j]
            out_m[n - 1] = tm
            out_b[n - 1] = tb
    if bad_n:
        raise ArithmeticError(f"non-integral multiplicity at n={bad_n}")
    return [out_m[j] for j in range(n_max)], [out_b[j] for j in range(n_max)]


def shell_points(long long bound0, long long bound_s, parity, long long qlo, long long qhi,
                 w0=None, w1=None):
    cdef int dim = 10
    cdef long long lo_v[10]
    cdef long long step[10]
    cdef long long wa[10]
    cdef long long wb[10]
    cdef long long tail_min[11]
    cdef long long tail_max[11]
    cdef long long x[10]
    cdef long long spent[11]
    cdef long long v, b, a0, b0, lo, hi, s, mn, mx
    cdef int i, use_forms = w0 is not None
    cdef vector[long long] out

    for i in range(dim):
        b = bound0 if i == 0 else bound_s
        lo_v[i] = -b
        step[i] = 1
        if parity[i] >= 0:
            step[i] = 2
            if (lo_v[i] - parity[i]) % 2 != 0:
                lo_v[i] += 1
        wa[i] = w0[i] if use_forms else 0
        wb[i] = w1[i] if use_forms else 0

    tail_min[dim] = 0
    tail_max[dim] = 0
    for i in range(dim - 1, 0, -1):
        b = bound_s
        # smallest |v| reachable from lo_v with the given step
        if lo_v[i] > b:
            return []
        mn = 0 if step[i] == 1 or (lo_v[i] % 2 == 0) else 1
        mx = -lo_v[i]
        tail_min[i] = tail_min[i + 1] + mn * mn
        tail_max[i] = tail_max[i + 1] + mx * mx

    with nogil:
        x[0] = lo_v[0]
        while x[0] <= bound0:
            hi = x[0] * x[0] - qlo
            lo = x[0] * x[0] - qhi
            if hi >= tail_min[1] and lo <= tail_max[1]:
                # iterative DFS over coordinates 1..9
                i = 1
                spent[1] = 0
                x[1] = lo_v[1] - step[1]
                while i >= 1:
                    x[i] += step[i]
                    if x[i] > -lo_v[i]:
                        i -= 1
                        continue
                    s = spent[i] + x[i] * x[i]
                    if s + tail_min[i + 1] > hi or s + tail_max[i + 1] < lo:
                        continue
                    if i == dim - 1:
                        if s >= lo:
                            a0 = 0
                            b0 = 0
                            if use_forms:
                                for v in range(dim):
                                    a0 += x[v] * wa[v]
                                    b0 += x[v] * wb[v]
                            if not ((a0 > 0 and b0 > 0) or (a0 < 0 and b0 < 0)):
                                for v in range(dim):
                                    out.push_back(x[v])
                        continue
                    spent[i + 1] = s
                    i += 1
                    x[i] = lo_v[i] - step[i]
            x[0] += step[0]
    cdef Py_ssize_t npts = out.size() // dim
    cdef Py_ssize_t j, k
    cdef list pts = []
    for j in range(npts):
        # literal tuple: a generator here dominates the runtime
        k = j * dim
        pts.append((out[k], out[k + 1], out[k + 2], out[k + 3], out[k + 4],
                    out[k + 5], out[k + 6], out[k + 7], out[k + 8], out[k + 9]))
    return pts
