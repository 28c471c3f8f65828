"""Exact linear algebra: fraction-free Gaussian elimination.

Rows are cleared to integers, eliminated by the Bareiss one-step scheme
(all intermediate divisions exact), and back-substituted with Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import OverdeterminedMismatch, SingularMatrix


def _integer_rows(matrix: Sequence[Sequence[Fraction]],
                  rhs: Sequence[Fraction]) -> list[list[int]]:
    rows = []
    for row, b in zip(matrix, rhs):
        entries = [Fraction(x) for x in row] + [Fraction(b)]
        lcm = 1
        for x in entries:
            lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        rows.append([int(x * lcm) for x in entries])
    return rows


def solve_exact(matrix: Sequence[Sequence[Fraction]],
                rhs: Sequence[Fraction]) -> list[Fraction]:
    """Solve a square nonsingular system exactly.

    Raises SingularMatrix when no pivot can be found.
    """
    n = len(matrix)
    if n == 0:
        return []
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise ValueError("matrix must be square with matching rhs")
    a = _integer_rows(matrix, rhs)
    prev = 1
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot_row is None:
            raise SingularMatrix(f"no pivot in column {k}")
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(a[i][n])
        for j in range(i + 1, n):
            s -= a[i][j] * x[j]
        x[i] = s / a[i][i]
    return x


def solve_overdetermined(matrix: Sequence[Sequence[Fraction]],
                         rhs: Sequence[Fraction]) -> list[Fraction]:
    """Solve a consistent overdetermined system exactly.

    Requires full column rank (else SingularMatrix); any equation that the
    unique solution of the pivot rows fails raises OverdeterminedMismatch.
    """
    m = len(matrix)
    if m == 0:
        return []
    n = len(matrix[0])
    if m < n:
        raise ValueError("fewer equations than unknowns")
    rows = [[Fraction(x) for x in row] + [Fraction(b)]
            for row, b in zip(matrix, rhs)]
    # forward elimination with column pivoting over all rows
    pivots: list[int] = []
    r = 0
    for col in range(n):
        pivot_row = next((i for i in range(r, m) if rows[i][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrix(f"rank-deficient at column {col}")
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][col]
        for i in range(r + 1, m):
            f = rows[i][col] / pv
            if f:
                for j in range(col, n + 1):
                    rows[i][j] -= f * rows[r][j]
        pivots.append(col)
        r += 1
    # the rows below the pivot block must have vanished entirely
    for i in range(n, m):
        if any(rows[i][j] != 0 for j in range(n + 1)):
            raise OverdeterminedMismatch(f"inconsistent equation {i}")
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = rows[i][n]
        for j in range(i + 1, n):
            s -= rows[i][j] * x[j]
        x[i] = s / rows[i][i]
    return x
