"""Tiny exact simplex for the redundancy tests.

Solves max c.x subject to A x <= b, x >= 0 with b >= 0, entirely over
`fractions.Fraction`.  The origin is feasible, so phase one is unnecessary;
Bland's rule guards against cycling.  Problem sizes here are below a hundred
rows, which keeps exact pivoting cheap.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["lp_max"]


def lp_max(
    A: list[list[int]], b: list[int], c: list[int]
) -> tuple[Fraction, list[Fraction]]:
    """Return (optimal value, optimal x).  Raises on unbounded problems."""
    m, n = len(A), len(c)
    # tableau rows: m constraint rows + objective row; columns: n vars,
    # m slacks, rhs
    T = [[Fraction(v) for v in row] + [Fraction(0)] * m + [Fraction(b[i])] for i, row in enumerate(A)]
    for i in range(m):
        T[i][n + i] = Fraction(1)
    obj = [Fraction(-v) for v in c] + [Fraction(0)] * (m + 1)
    basis = list(range(n, n + m))

    while True:
        col = next((j for j in range(n + m) if obj[j] < 0), None)
        if col is None:
            break
        pivot_row, best = None, None
        for i in range(m):
            if T[i][col] > 0:
                ratio = T[i][-1] / T[i][col]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[pivot_row]):
                    pivot_row, best = i, ratio
        if pivot_row is None:
            raise ValueError("unbounded linear program")
        piv = T[pivot_row][col]
        T[pivot_row] = [v / piv for v in T[pivot_row]]
        for i in range(m):
            if i != pivot_row and T[i][col]:
                f = T[i][col]
                T[i] = [v - f * w for v, w in zip(T[i], T[pivot_row])]
        if obj[col]:
            f = obj[col]
            obj = [v - f * w for v, w in zip(obj, T[pivot_row])]
        basis[pivot_row] = col

    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = T[i][-1]
    return obj[-1], x
