"""Small dense exact linear algebra over QuadExt values."""

from __future__ import annotations

from typing import Sequence

from .exactnum import QuadExt, QUAD_ONE, QUAD_ZERO

Matrix = list  # list of rows of QuadExt


def from_rows(rows) -> Matrix:
    return [[QuadExt.from_scalar(v) for v in row] for row in rows]


def identity(n: int, scale=1) -> Matrix:
    s = QuadExt.from_scalar(scale)
    return [[s if i == j else QUAD_ZERO for j in range(n)] for i in range(n)]


def ones(n: int, scale=1) -> Matrix:
    s = QuadExt.from_scalar(scale)
    return [[s for _ in range(n)] for _ in range(n)]


def add(A: Matrix, B: Matrix) -> Matrix:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def scale(A: Matrix, s) -> Matrix:
    s = QuadExt.from_scalar(s)
    return [[a * s for a in row] for row in A]


def mul(A: Matrix, B: Matrix) -> Matrix:
    n, k, m = len(A), len(B), len(B[0])
    Bt = [[B[i][j] for i in range(k)] for j in range(m)]
    out = []
    for row in A:
        orow = []
        for col in Bt:
            acc = QUAD_ZERO
            for a, b in zip(row, col):
                if a and b:
                    acc = acc + a * b
            orow.append(acc)
        out.append(orow)
    return out


def conj_transpose(A: Matrix) -> Matrix:
    n, m = len(A), len(A[0])
    return [[A[i][j].conj() for i in range(n)] for j in range(m)]


def equal(A: Matrix, B: Matrix) -> bool:
    return all(a == b for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def trace(A: Matrix) -> QuadExt:
    acc = QUAD_ZERO
    for i in range(len(A)):
        acc = acc + A[i][i]
    return acc


class SingularMatrix(ValueError):
    pass


def invert(A: Matrix) -> Matrix:
    """Gauss-Jordan inverse of a small exact matrix."""
    n = len(A)
    work = [list(row) + list(idrow) for row, idrow in zip(A, identity(n))]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col]), None)
        if pivot is None:
            raise SingularMatrix(f"matrix is singular at column {col}")
        work[col], work[pivot] = work[pivot], work[col]
        inv = work[col][col].inverse()
        work[col] = [v * inv for v in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                f = work[r][col]
                work[r] = [rv - f * cv for rv, cv in zip(work[r], work[col])]
    return [row[n:] for row in work]
