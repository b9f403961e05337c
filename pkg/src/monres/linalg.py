"""Small exact linear algebra over Z and Q."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Sequence

Matrix = Sequence[Sequence[int]]


def rank(rows: Matrix) -> int:
    """Rank over Q by fraction-exact Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        for i in range(r + 1, len(m)):
            if m[i][c] != 0:
                f = m[i][c] / p
                row_r = m[r]
                m[i] = [x - f * y for x, y in zip(m[i], row_r)]
        r += 1
        if r == len(m):
            break
    return r


def det(rows: Matrix) -> int:
    """Integer determinant via Bareiss fraction-free elimination."""
    m = [list(map(int, row)) for row in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def cofactor_normal(rows: Matrix) -> tuple[int, ...]:
    """Generalised cross product of n-1 vectors in Z^n.

    The result is orthogonal to every row; it vanishes iff the rows are
    linearly dependent.
    """
    n = len(rows) + 1
    out = []
    for j in range(n):
        minor = [[row[c] for c in range(n) if c != j] for row in rows]
        out.append((-1) ** j * det(minor))
    return tuple(out)


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = math.gcd(*v)
    if g == 0:
        raise ValueError("zero vector has no primitive direction")
    return tuple(x // g for x in v)


def maximal_minor_gcd(rows: Matrix) -> int:
    """gcd of the k x k minors of a k x n integer matrix.

    Equals the product of the Smith invariant factors, so it is 1 exactly
    when the rows extend to a lattice basis.
    """
    k = len(rows)
    n = len(rows[0])
    g = 0
    for cols in itertools.combinations(range(n), k):
        g = math.gcd(g, det([[row[c] for c in cols] for row in rows]))
        if g == 1:
            break
    return g


def solve(rows: Matrix, rhs: Sequence[int]) -> list[Fraction] | None:
    """Solve the square system rows @ x = rhs over Q; None if singular."""
    n = len(rows)
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return None
        m[c], m[pivot] = m[pivot], m[c]
        p = m[c][c]
        m[c] = [x / p for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [m[i][n] for i in range(n)]
