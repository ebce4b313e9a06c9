"""Dense exact-rational matrix helpers (lists of lists of Fraction)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence[Fraction]]) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    n, m = len(a), len(b[0]) if b else 0
    out = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n):
        row = out[i]
        for k, aik in enumerate(a[i]):
            if aik:
                for j, bkj in enumerate(b[k]):
                    if bkj:
                        row[j] += aik * bkj
    return out


def is_lower_triangular(a: Sequence[Sequence[Fraction]]) -> bool:
    return all(not a[i][j] for i in range(len(a)) for j in range(i + 1, len(a)))


def is_upper_triangular(a: Sequence[Sequence[Fraction]]) -> bool:
    return all(not a[i][j] for i in range(len(a)) for j in range(i))


def _invert_lower(a: Sequence[Sequence[Fraction]]) -> Matrix:
    # forward substitution, one column of the inverse at a time
    n = len(a)
    inv = [[Fraction(0)] * n for _ in range(n)]
    for col in range(n):
        for i in range(col, n):
            acc = Fraction(int(i == col))
            for k in range(col, i):
                if a[i][k]:
                    acc -= a[i][k] * inv[k][col]
            inv[i][col] = acc / a[i][i]
    return inv


def invert(a: Sequence[Sequence[Fraction]]) -> Matrix:
    """Exact inverse; triangular inputs take the substitution path.

    Raises ``ZeroDivisionError`` if the matrix is singular.
    """
    n = len(a)
    if is_lower_triangular(a):
        return _invert_lower(a)
    if is_upper_triangular(a):
        return transpose(_invert_lower(transpose(a)))

    work = [list(map(Fraction, row)) + identity(n)[i] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col]), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        p = work[col][col]
        work[col] = [x / p for x in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return [row[n:] for row in work]
