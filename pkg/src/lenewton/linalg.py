"""Exact integer linear algebra kernels.

All routines take plain sequences of integer sequences and never touch floats.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = Sequence[Sequence[int]]


def det(rows: Matrix) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    if any(len(r) != n for r in m):
        raise ValueError("matrix is not square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def rank(rows: Matrix) -> int:
    """Rank of an integer matrix (fraction-free row reduction)."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, len(m)):
            q = m[i][c]
            if q:
                row = [p * a - q * b for a, b in zip(m[i], m[r])]
                g = 0
                for a in row:
                    g = gcd(g, a)
                m[i] = [a // g for a in row] if g > 1 else row
        r += 1
        if r == len(m):
            break
    return r


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    """Dimension of the affine hull of a non-empty point set."""
    if not points:
        raise ValueError("affine rank of an empty set is undefined")
    base = points[0]
    return rank([[a - b for a, b in zip(p, base)] for p in points[1:]])


def primitive(vec: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for a in vec:
        g = gcd(g, a)
    if g <= 1:
        return tuple(vec)
    return tuple(a // g for a in vec)


def inverse(rows: Matrix) -> list[list[Fraction]]:
    """Inverse of a non-singular square integer matrix over the rationals."""
    n = len(rows)
    m = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(rows)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        m[c] = [x / p for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                q = m[i][c]
                m[i] = [a - q * b for a, b in zip(m[i], m[c])]
    return [r[n:] for r in m]


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))
