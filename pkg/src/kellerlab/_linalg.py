"""Exact matrix kernels: Fraction inverses, integer and polynomial determinants."""

from __future__ import annotations

from fractions import Fraction

from .errors import SingularMatrixError
from .polyring import Polynomial, exact_div


def fraction_matrix_inverse(rows):
    """Exact inverse of a square rational matrix (Gauss-Jordan)."""
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        scale = a[col][col]
        a[col] = [x / scale for x in a[col]]
        inv[col] = [x / scale for x in inv[col]]
        for r in range(n):
            if r == col or a[r][col] == 0:
                continue
            factor = a[r][col]
            a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
            inv[r] = [x - factor * y for x, y in zip(inv[r], inv[col])]
    return [tuple(row) for row in inv]


def int_matrix_det(rows) -> int:
    """Determinant of an integer matrix by fraction-free Bareiss."""
    n = len(rows)
    a = [list(map(int, row)) for row in rows]
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        pivot = next((r for r in range(k, n) if a[r][k] != 0), None)
        if pivot is None:
            return 0
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def int_matrix_adjugate(rows):
    """Adjugate of an integer matrix (cofactor transpose)."""
    n = len(rows)
    a = [list(map(int, row)) for row in rows]
    if n == 1:
        return [(1,)]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [a[r][c] for c in range(n) if c != j] for r in range(n) if r != i
            ]
            adj[j][i] = (-1) ** (i + j) * int_matrix_det(minor)
    return [tuple(row) for row in adj]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    assert len(a[0]) == k
    return [
        tuple(sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m))
        for i in range(n)
    ]


def mat_vec(a, v):
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in a)


def poly_matrix_det(rows) -> Polynomial:
    """Determinant of a square matrix of polynomials over one shared ring.

    Cofactor expansion for n <= 4, fraction-free Bareiss (with exact
    polynomial division) beyond.
    """
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("matrix is not square")
    variables = rows[0][0].variables
    for row in rows:
        for entry in row:
            if entry.variables != variables:
                raise ValueError("entries live over different variable lists")
    if n <= 4:
        return _det_cofactor([list(row) for row in rows])
    return _det_bareiss([list(row) for row in rows])


def _det_cofactor(a) -> Polynomial:
    n = len(a)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = Polynomial.zero(a[0][0].variables)
    for i in range(n):
        if a[i][0].is_zero():
            continue
        minor = [[a[r][c] for c in range(1, n)] for r in range(n) if r != i]
        term = a[i][0] * _det_cofactor(minor)
        total = total - term if i % 2 else total + term
    return total


def _det_bareiss(a) -> Polynomial:
    n = len(a)
    variables = a[0][0].variables
    one = Polynomial.one(variables)
    sign = 1
    prev = one
    for k in range(n - 1):
        pivot = next((r for r in range(k, n) if not a[r][k].is_zero()), None)
        if pivot is None:
            return Polynomial.zero(variables)
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev)
            a[i][k] = Polynomial.zero(variables)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det
