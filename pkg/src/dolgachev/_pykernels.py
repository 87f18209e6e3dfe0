"""Pure-Python kernels; reference implementation mirrored by _ckernels.pyx."""

from __future__ import annotations


def strata_sums(p, q, sigmas, taus, phis, n_max):
    """Per-n totals (sum of m, sum of m * Phi) for n = 1 .. n_max.

    Works in doubled units (2m is an integer) and raises if some 2m is odd.
    """
    cells = list(zip(sigmas, taus, phis))
    pq = p * q
    inv_q = pow(q, -1, p) if p > 1 else 0
    inv_p = pow(p, -1, q) if q > 1 else 0
    sum_m = [0] * n_max
    sum_b = [0] * n_max
    for n in range(1, n_max + 1):
        A = n * inv_q % p
        B = n * inv_p % q
        l = (n - A * q - B * p) // pq
        base = 2 * (l + 1)
        tm = 0
        tb = 0
        for s, t, phi in cells:
            if s >= p - A:
                hp = 1
            elif s >= A:
                hp = -1
            else:
                hp = 0
            if t >= q - B:
                hq = 1
            elif t >= B:
                hq = -1
            else:
                hq = 0
            cc = (1 if 2 * s == p - 1 else 2) * (1 if 2 * t == q - 1 else 2)
            twice = (base + hp + hq) * cc
            if twice & 1:
                raise ArithmeticError(f"non-integral multiplicity at ({s}, {t}), n={n}")
            m = twice >> 1
            tm += m
            tb += m * phi
        sum_m[n - 1] = tm
        sum_b[n - 1] = tb
    return sum_m, sum_b


def shell_points(bound0, bound_s, parity, qlo, qhi, w0=None, w1=None):
    """Integer x in Z^10 with |x0| <= bound0, |xi| <= bound_s, Lorentzian
    square x0^2 - sum xi^2 in [qlo, qhi], and x_i = parity[i] (mod 2) where
    parity[i] >= 0.

    With forms w0, w1 given, only points whose pairings with w0 and w1 do not
    share a strict sign are kept.
    """
    out = []
    dim = 10

    def allowed(i):
        lo = -(bound0 if i == 0 else bound_s)
        vals = range(lo, -lo + 1)
        if parity[i] >= 0:
            vals = [v for v in vals if (v - parity[i]) % 2 == 0]
        return list(vals)

    options = [allowed(i) for i in range(dim)]
    if not all(options):
        # some coordinate has no value of the required parity in the box
        return out
    spatial_sq = [sorted({v * v for v in options[i]}) for i in range(dim)]
    # least square each remaining spatial coordinate can contribute
    tail_min = [0] * (dim + 1)
    tail_max = [0] * (dim + 1)
    for i in range(dim - 1, 0, -1):
        tail_min[i] = tail_min[i + 1] + spatial_sq[i][0]
        tail_max[i] = tail_max[i + 1] + spatial_sq[i][-1]

    x = [0] * dim

    def keep():
        if w0 is None:
            return True
        a = sum(xi * wi for xi, wi in zip(x, w0))
        b = sum(xi * wi for xi, wi in zip(x, w1))
        return not ((a > 0 and b > 0) or (a < 0 and b < 0))

    def rec(i, spent, lo, hi):
        # spent = sum of spatial squares chosen so far; need spent in [lo, hi] at the end
        if i == dim:
            if lo <= spent and keep():
                out.append(tuple(x))
            return
        for v in options[i]:
            s = spent + v * v
            if s + tail_min[i + 1] > hi or s + tail_max[i + 1] < lo:
                continue
            x[i] = v
            rec(i + 1, s, lo, hi)

    for v0 in options[0]:
        # x0^2 - S in [qlo, qhi]  <=>  S in [x0^2 - qhi, x0^2 - qlo]
        lo, hi = v0 * v0 - qhi, v0 * v0 - qlo
        if hi < tail_min[1] or lo > tail_max[1]:
            continue
        x[0] = v0
        rec(1, 0, lo, hi)
    return out
