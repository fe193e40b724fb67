"""Exact linear algebra over the integers and rationals.

Small matrices only (ranks up to ~22 in this library), so fraction-free
Bareiss elimination and rational congruence diagonalization are plenty.
"""

from __future__ import annotations

from fractions import Fraction


def exact_det(rows) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return 1
    m = [list(map(int, r)) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def exact_rank(rows) -> int:
    """Rank over Q of an integer matrix, by fraction-free elimination."""
    if not rows or not rows[0]:
        return 0
    m = [list(map(int, r)) for r in rows]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(rank + 1, nrows):
            for j in range(col + 1, ncols):
                m[i][j] = (m[i][j] * m[rank][col] - m[i][col] * m[rank][j]) // prev
            m[i][col] = 0
        prev = m[rank][col]
        rank += 1
        if rank == nrows:
            break
    return rank


def symmetric_inertia(rows) -> tuple[int, int, int]:
    """Inertia (n+, n-, n0) of a symmetric integer matrix.

    Congruence diagonalization over Q with symmetric pivoting: a nonzero
    diagonal entry is moved into pivot position when one exists; otherwise a
    nonzero off-diagonal pair (i, j) is made diagonal by the symmetric row
    and column addition i += j, which stays exact in characteristic 0.
    Sylvester's law of inertia makes the sign counts well-defined.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("inertia requires a square matrix")
    a = [[Fraction(x) for x in row] for row in rows]
    if any(a[i][j] != a[j][i] for i in range(n) for j in range(i)):
        raise ValueError("inertia requires a symmetric matrix")

    def swap(i, j):
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]

    pos = neg = zero = 0
    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][i] != 0), None)
        if pivot is None:
            hit = next(
                ((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j] != 0),
                None,
            )
            if hit is None:
                zero += n - k
                break
            i, j = hit
            for col in range(n):
                a[i][col] += a[j][col]
            for row in a:
                row[i] += row[j]
            pivot = i
        if pivot != k:
            swap(pivot, k)
        d = a[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            f = a[i][k] / d
            if f == 0:
                continue
            for col in range(n):
                a[i][col] -= f * a[k][col]
            for row in a:
                row[i] -= f * row[k]
    return pos, neg, zero
