"""Exact rank computation over Q by fraction-free (Bareiss) elimination.

Matrices are sequences of rows whose entries are ints or Fractions.  Rows
are first scaled to integers (scaling does not change rank), then reduced
by the Bareiss one-step scheme, in which every division is exact; this
avoids both rounding (there is none anywhere in this package) and the
coefficient blowup of naive rational elimination.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

__all__ = ["exact_rank", "matrix_product", "is_zero_matrix"]

Matrix = Sequence[Sequence[Fraction | int]]


def _integer_rows(rows: Matrix) -> list[list[int]]:
    out: list[list[int]] = []
    for row in rows:
        fracs = [Fraction(x) for x in row]
        scale = 1
        for x in fracs:
            scale = scale * x.denominator // gcd(scale, x.denominator)
        out.append([int(x * scale) for x in fracs])
    return out


def exact_rank(rows: Matrix) -> int:
    """Rank of a matrix over Q, computed exactly."""
    m = _integer_rows(rows)
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    if any(len(row) != n_cols for row in m):
        raise ValueError("ragged matrix")
    rank = 0
    prev = 1
    pivot_row = 0
    for col in range(n_cols):
        pivot = None
        for r in range(pivot_row, n_rows):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        if pivot != pivot_row:
            m[pivot_row], m[pivot] = m[pivot], m[pivot_row]
        p = m[pivot_row][col]
        for r in range(pivot_row + 1, n_rows):
            head = m[r][col]
            row = m[r]
            top = m[pivot_row]
            for c in range(col, n_cols):
                row[c] = (row[c] * p - head * top[c]) // prev
        prev = p
        pivot_row += 1
        rank += 1
        if pivot_row == n_rows:
            break
    return rank


def matrix_product(a: Matrix, b: Matrix) -> list[list[Fraction]]:
    """Exact product of two matrices (a has shape r x k, b has shape k x c)."""
    if not a or not b:
        return []
    k = len(b)
    if any(len(row) != k for row in a):
        raise ValueError("inner dimensions do not match")
    cols = len(b[0])
    out = [[Fraction(0)] * cols for _ in range(len(a))]
    for i, row in enumerate(a):
        for t, x in enumerate(row):
            if not x:
                continue
            brow = b[t]
            target = out[i]
            for j in range(cols):
                if brow[j]:
                    target[j] += x * brow[j]
    return out


def is_zero_matrix(rows: Matrix) -> bool:
    return all(not x for row in rows for x in row)
