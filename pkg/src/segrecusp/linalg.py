"""Small exact linear algebra helpers over the package's scalar domains.

Matrices are plain lists of lists of field elements; every routine takes the
field descriptor explicitly so the same code serves Q, Q(sqrt(d)) and Q(x).
"""

from __future__ import annotations

from fractions import Fraction

import sympy


def mat_from_rows(field, rows):
    return [[field.coerce(c) for c in row] for row in rows]


def identity(field, n):
    return [[field.one if i == j else field.zero for j in range(n)]
            for i in range(n)]


def transpose(M):
    return [list(col) for col in zip(*M)]


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    return [[sum((A[i][t] * B[t][j] for t in range(k)),
                 start=A[0][0] * 0) for j in range(m)] for i in range(n)]


def mat_vec(A, v):
    return [sum((A[i][j] * v[j] for j in range(len(v))), start=A[0][0] * 0)
            for i in range(len(A))]


def mat_scale(A, c):
    return [[a * c for a in row] for row in A]


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def _row_reduce(field, M, ncols=None):
    """In-place reduced row echelon; returns pivot column list."""
    rows = len(M)
    cols = ncols if ncols is not None else (len(M[0]) if rows else 0)
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = field.one / M[r][c]
        M[r] = [a * inv for a in M[r]]
        for i in range(rows):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def mat_rank(field, M):
    if not M:
        return 0
    work = [row[:] for row in M]
    return len(_row_reduce(field, work))


def nullspace(field, M):
    """Basis of the right kernel of M as a list of vectors."""
    if not M:
        return []
    n = len(M[0])
    work = [row[:] for row in M]
    pivots = _row_reduce(field, work)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero] * n
        v[fc] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = -work[r][fc]
        basis.append(v)
    return basis


def solve_linear(field, M, b):
    """One solution of M x = b, or None if inconsistent."""
    n = len(M[0])
    aug = [row[:] + [bv] for row, bv in zip(M, b)]
    pivots = _row_reduce(field, aug, ncols=n)
    for row in aug:
        if not any(row[:n]) and row[n]:
            return None
    x = [field.zero] * n
    for r, pc in enumerate(pivots):
        x[pc] = aug[r][n]
    return x


def mat_det(field, M):
    n = len(M)
    work = [row[:] for row in M]
    det = field.one
    for c in range(n):
        piv = next((i for i in range(c, n) if work[i][c]), None)
        if piv is None:
            return field.zero
        if piv != c:
            work[c], work[piv] = work[piv], work[c]
            det = -det
        det = det * work[c][c]
        inv = field.one / work[c][c]
        for i in range(c + 1, n):
            if work[i][c]:
                f = work[i][c] * inv
                work[i] = [a - f * b for a, b in zip(work[i], work[c])]
    return det


def mat_inv(field, M):
    n = len(M)
    aug = [row[:] + ident for row, ident in zip(M, identity(field, n))]
    pivots = _row_reduce(field, aug, ncols=n)
    if len(pivots) != n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in aug]


def complete_basis(field, vectors, n):
    """Extend independent vectors to a basis of the n-dimensional space."""
    basis = [list(v) for v in vectors]
    for j in range(n):
        cand = [field.one if k == j else field.zero for k in range(n)]
        trial = basis + [cand]
        if mat_rank(field, trial) == len(trial):
            basis.append(cand)
        if len(basis) == n:
            break
    assert len(basis) == n, "could not complete basis"
    return basis


# --------------------------------------------------------------------------
# univariate polynomials over Q: root data via sympy factorization


_T = sympy.Symbol("_t")


def poly_to_sympy(coeffs):
    return sympy.Poly.from_list([sympy.Rational(c.numerator, c.denominator)
                                 for c in reversed(coeffs)], _T)


def rational_roots(coeffs):
    """All rational roots with multiplicities, plus leftover factors.

    ``coeffs`` is an ascending Fraction tuple.  Returns
    (roots: list[(Fraction, int)], other_factors: list[str]).
    """
    poly = poly_to_sympy(coeffs)
    _, factors = poly.factor_list()
    roots, leftovers = [], []
    for fac, mult in factors:
        if fac.degree() == 1:
            a1, a0 = fac.all_coeffs()
            root = sympy.Rational(-a0, a1)
            roots.append((Fraction(int(root.p), int(root.q)), int(mult)))
        elif fac.degree() > 0:
            leftovers.append(str(fac.as_expr()))
    return roots, leftovers
