"""Exact linear algebra over Q.

Rank uses fraction-free (Bareiss) elimination on an integer matrix obtained
by clearing denominators row by row; every intermediate entry is a minor
of the input, so the divisions are exact and no Fraction is ever built.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def _integer_rows(rows):
    out = []
    for row in rows:
        row = [Fraction(v) for v in row]
        den = lcm(*(v.denominator for v in row)) if row else 1
        out.append([int(v * den) for v in row])
    return out


def bareiss_echelon(rows):
    """Fraction-free row echelon form of an integer matrix.

    Returns ``(echelon_rows, pivot_columns)``; the input is not modified.
    """
    a = [list(r) for r in rows]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    prev = 1
    rank = 0
    pivots = []
    for col in range(ncols):
        if rank == nrows:
            break
        p = next((r for r in range(rank, nrows) if a[r][col] != 0), None)
        if p is None:
            continue
        if p != rank:
            a[p], a[rank] = a[rank], a[p]
        piv = a[rank][col]
        prow = a[rank]
        for i in range(rank + 1, nrows):
            ri = a[i]
            lead = ri[col]
            for j in range(col + 1, ncols):
                ri[j] = (piv * ri[j] - lead * prow[j]) // prev
            ri[col] = 0
        prev = piv
        pivots.append(col)
        rank += 1
    return a, pivots


def rank(rows):
    rows = [r for r in rows]
    if not rows or not rows[0]:
        return 0
    _, pivots = bareiss_echelon(_integer_rows(rows))
    return len(pivots)


def nullspace(rows, ncols=None):
    """Basis of {v : M v = 0} as lists of Fractions (reduced row echelon route)."""
    m = [[Fraction(v) for v in r] for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [vi - f * vr for vi, vr in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(v)
    return basis


def mat_vec(rows, v):
    return [sum((Fraction(a) * b for a, b in zip(row, v)), Fraction(0)) for row in rows]
