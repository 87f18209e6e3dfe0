"""Small exact integer linear algebra: kernels, basis completion, determinants."""

from __future__ import annotations

from fractions import Fraction


def kernel_basis(rows):
    """Z-basis of the integer kernel {x : A x = 0} of an integer matrix A.

    Row-reduces [A^T | I] with unimodular integer row operations; rows whose
    A^T part vanishes carry the kernel vectors.
    """
    m = len(rows)
    n = len(rows[0])
    work = [[rows[i][j] for i in range(m)] + [1 if k == j else 0 for k in range(n)] for j in range(n)]
    pivot_row = 0
    for col in range(m):
        # euclid down the column until a single nonzero entry remains at pivot_row
        while True:
            nz = [r for r in range(pivot_row, n) if work[r][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda r: abs(work[r][col]))
            work[pivot_row], work[piv] = work[piv], work[pivot_row]
            done = True
            for r in range(pivot_row + 1, n):
                if work[r][col]:
                    t = work[r][col] // work[pivot_row][col]
                    work[r] = [a - t * b for a, b in zip(work[r], work[pivot_row])]
                    if work[r][col]:
                        done = False
            if done:
                pivot_row += 1
                break
    return [tuple(r[m:]) for r in work[pivot_row:]]


def solve_in_basis(basis, v):
    """Integer coefficients c with sum c_i basis_i = v; raises if none exist."""
    r = len(basis)
    dim = len(v)
    aug = [[Fraction(basis[j][i]) for j in range(r)] + [Fraction(v[i])] for i in range(dim)]
    row = 0
    pivots = []
    for col in range(r):
        piv = next((i for i in range(row, dim) if aug[i][col] != 0), None)
        if piv is None:
            raise ValueError("basis vectors are linearly dependent")
        aug[row], aug[piv] = aug[piv], aug[row]
        lead = aug[row][col]
        aug[row] = [a / lead for a in aug[row]]
        for i in range(dim):
            if i != row and aug[i][col] != 0:
                t = aug[i][col]
                aug[i] = [a - t * b for a, b in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
    if any(aug[i][r] != 0 for i in range(row, dim)):
        raise ValueError("vector is not in the span of the basis")
    coeffs = [aug[i][r] for i in range(r)]
    if any(c.denominator != 1 for c in coeffs):
        raise ValueError("vector is in the rational span but not the integer span")
    return [int(c) for c in coeffs]


def complete_to_basis(basis, coeffs):
    """New basis of the same lattice whose first vector is sum coeffs_i basis_i.

    ``coeffs`` must be primitive.  Builds a unimodular W with first column
    ``coeffs`` by running Euclid on ``coeffs`` and recording the inverse ops.
    """
    r = len(coeffs)
    cur = list(coeffs)
    W = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    while sum(1 for c in cur if c) > 1 or cur[0] == 0:
        nz = [i for i in range(r) if cur[i]]
        piv = min(nz, key=lambda i: abs(cur[i]))
        if piv != 0:
            cur[0], cur[piv] = cur[piv], cur[0]
            for row in W:
                row[0], row[piv] = row[piv], row[0]
        for i in range(1, r):
            if cur[i]:
                t = cur[i] // cur[0]
                cur[i] -= t * cur[0]
                # inverse of (row_i -= t row_0) is column_0 += t column_i
                for row in W:
                    row[0] += t * row[i]
    if abs(cur[0]) != 1:
        raise ValueError(f"coefficient vector {coeffs} is not primitive")
    if cur[0] == -1:
        for row in W:
            row[0] = -row[0]
    dim = len(basis[0])
    return [
        tuple(sum(W[i][j] * basis[i][t] for i in range(r)) for t in range(dim))
        for j in range(r)
    ]


def det(matrix) -> int:
    """Exact determinant of an integer matrix (Bareiss fraction-free elimination)."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def leading_minors(matrix) -> list:
    return [det([row[:k] for row in matrix[:k]]) for k in range(1, len(matrix) + 1)]


def is_positive_definite(matrix) -> bool:
    """Sylvester's criterion on a symmetric integer matrix."""
    return all(m > 0 for m in leading_minors(matrix))
