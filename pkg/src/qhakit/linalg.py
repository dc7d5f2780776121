"""Exact dense linear algebra over a coefficient field.

Plain Gaussian elimination with first-nonzero pivoting; every division is
an exact field inversion, so results are exact and a singular system is
detected, never approximated.
"""

from __future__ import annotations

from .errors import SingularError


def solve(field, matrix, rhs):
    """Solve M x = b exactly.  Raises SingularError if M is singular."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    if len(rhs) != n:
        raise ValueError("right-hand side has wrong length")
    m = [list(row) for row in matrix]
    b = list(rhs)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            raise SingularError(f"singular matrix (no pivot in column {col})")
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            b[col], b[pivot] = b[pivot], b[col]
        inv = field.inv(m[col][col])
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            if not factor:
                continue
            for c in range(col, n):
                m[r][c] = m[r][c] - factor * m[col][c]
            b[r] = b[r] - factor * b[col]
    x = [field.zero] * n
    for row in range(n - 1, -1, -1):
        acc = b[row]
        for c in range(row + 1, n):
            if m[row][c] and x[c]:
                acc = acc - m[row][c] * x[c]
        x[row] = acc * field.inv(m[row][row])
    return x


def invert_matrix(field, matrix):
    """Exact matrix inverse via Gauss-Jordan elimination."""
    n = len(matrix)
    m = [list(row) for row in matrix]
    aug = [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            raise SingularError(f"singular matrix (no pivot in column {col})")
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = field.inv(m[col][col])
        m[col] = [v * inv for v in m[col]]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r == col or not m[r][col]:
                continue
            factor = m[r][col]
            m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
            aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return aug


def nullspace(field, matrix):
    """Basis vectors of the kernel of M (rows may outnumber columns)."""
    rows = len(matrix)
    if rows == 0:
        return []
    cols = len(matrix[0])
    m = [list(row) for row in matrix]
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = field.inv(m[r][c])
        m[r] = [v * inv for v in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        vec = [field.zero] * cols
        vec[f] = field.one
        for i, p in enumerate(pivots):
            vec[p] = -m[i][f]
        basis.append(vec)
    return basis
