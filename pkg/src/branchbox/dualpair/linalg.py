"""Exact linear algebra over the rationals.

Elimination is fraction-free (Bareiss) on integer rows; rational input rows
are cleared of denominators first, which changes neither row space nor
kernel.  Kernels come back as Fraction vectors via back-substitution.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Row = Sequence[int | Fraction]


def _integer_rows(rows: Sequence[Row]) -> list[list[int]]:
    out = []
    for row in rows:
        scale = 1
        for a in row:
            if isinstance(a, Fraction) and a.denominator != 1:
                scale = scale * a.denominator // gcd(scale, a.denominator)
        out.append([int(a * scale) for a in row])
    return out


def echelon(rows: Sequence[Row]) -> tuple[list[list[int]], list[tuple[int, int]]]:
    """Fraction-free row echelon form; returns (matrix, pivot (row, col) list).

    Every row below the pivot is updated with the two-term Bareiss formula,
    including rows with a zero in the pivot column: the exact division by the
    previous pivot is only guaranteed under the uniform update.
    """
    m = _integer_rows(rows)
    if not m:
        return [], []
    nrows, ncols = len(m), len(m[0])
    pivots: list[tuple[int, int]] = []
    pr = 0
    prev = 1
    for c in range(ncols):
        if pr >= nrows:
            break
        found = next((r for r in range(pr, nrows) if m[r][c]), None)
        if found is None:
            continue
        m[pr], m[found] = m[found], m[pr]
        p = m[pr][c]
        top = m[pr]
        for r in range(pr + 1, nrows):
            row = m[r]
            f = row[c]
            for j in range(c + 1, ncols):
                row[j] = (p * row[j] - f * top[j]) // prev
            row[c] = 0
        pivots.append((pr, c))
        prev = p
        pr += 1
    return m, pivots


def rank(rows: Sequence[Row]) -> int:
    return len(echelon(rows)[1])


def nullspace(rows: Sequence[Row], ncols: int) -> list[tuple[Fraction, ...]]:
    """Basis of {v : A v = 0}, one vector per free column."""
    if not rows:
        return [tuple(Fraction(i == j) for j in range(ncols)) for i in range(ncols)]
    m, pivots = echelon(rows)
    pivot_cols = {c for _, c in pivots}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r, c in reversed(pivots):
            row = m[r]
            s = Fraction(0)
            for j in range(c + 1, ncols):
                if v[j]:
                    s += row[j] * v[j]
            v[c] = -s / row[c]
        basis.append(tuple(v))
    return basis


def solve_columns(columns: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve sum_k c_k * columns[k] = rhs exactly; None if inconsistent."""
    ncand = len(columns)
    nrows = len(rhs)
    aug = [[columns[k][i] for k in range(ncand)] + [rhs[i]] for i in range(nrows)]
    pr = 0
    pivots = []
    for c in range(ncand):
        found = next((r for r in range(pr, nrows) if aug[r][c]), None)
        if found is None:
            continue
        aug[pr], aug[found] = aug[found], aug[pr]
        inv = 1 / aug[pr][c]
        aug[pr] = [a * inv for a in aug[pr]]
        for r in range(nrows):
            if r != pr and aug[r][c]:
                f = aug[r][c]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[pr])]
        pivots.append((pr, c))
        pr += 1
        if pr == nrows:
            break
    # rows at positions >= pr carry no candidate entries once every column is swept
    for r in range(pr, nrows):
        if aug[r][ncand]:
            return None
    sol = [Fraction(0)] * ncand
    for r, c in pivots:
        sol[c] = aug[r][ncand]
    return sol
