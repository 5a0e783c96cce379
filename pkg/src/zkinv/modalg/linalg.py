"""Exact rank and nullspace over the rationals.

Rows are eliminated fraction-free on integers (each row scaled to a primitive
integer vector). Sparse rows are dicts ``{column: coefficient}``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence


def _int_row(row: dict) -> dict:
    den = 1
    for c in row.values():
        den = lcm(den, Fraction(c).denominator)
    out = {j: int(Fraction(c) * den) for j, c in row.items() if c}
    return _primitive(out)


def _primitive(row: dict) -> dict:
    g = 0
    for c in row.values():
        g = gcd(g, c)
        if g == 1:
            return row
    if g > 1:
        return {j: c // g for j, c in row.items()}
    return row


def _echelon(rows: Iterable[dict]) -> dict:
    """Map pivot column -> primitive integer row with that pivot as its largest column."""
    pivots: dict = {}
    for row in rows:
        r = _int_row(row)
        while r:
            p = max(r)
            prow = pivots.get(p)
            if prow is None:
                pivots[p] = r
                break
            a, b = prow[p], r[p]
            d = gcd(a, b)
            a, b = a // d, b // d
            new = {j: a * c for j, c in r.items()}
            for j, c in prow.items():
                v = new.get(j, 0) - b * c
                if v:
                    new[j] = v
                else:
                    new.pop(j, None)
            r = _primitive(new)
    return pivots


def _singleton_prepass(rows: list[dict]) -> tuple[int, list[dict]]:
    """Peel off columns that occur in a single row (each adds one to the rank)."""
    rows = [dict(r) for r in rows if any(r.values())]
    alive = [True] * len(rows)
    where: dict = {}
    for i, r in enumerate(rows):
        for j in r:
            where.setdefault(j, set()).add(i)
    rank = 0
    stack = [j for j, s in where.items() if len(s) == 1]
    while stack:
        j = stack.pop()
        s = where.get(j)
        if not s or len(s) != 1:
            continue
        (i,) = s
        alive[i] = False
        rank += 1
        for jj in rows[i]:
            where[jj].discard(i)
            if len(where[jj]) == 1:
                stack.append(jj)
    return rank, [r for i, r in enumerate(rows) if alive[i]]


def sparse_rank(rows: Sequence[dict]) -> int:
    rank, rest = _singleton_prepass(list(rows))
    return rank + len(_echelon(rest))


def _as_sparse(A: Sequence[Sequence]) -> list[dict]:
    return [{j: Fraction(c) for j, c in enumerate(row) if c} for row in A]


def exact_rank(A) -> int:
    """Rank of a dense (list of lists) or sparse (list of dicts) rational matrix."""
    if A and isinstance(A[0], dict):
        return sparse_rank(A)
    return len(_echelon(_as_sparse(A)))


def ncols(A) -> int:
    if not A:
        return 0
    if isinstance(A[0], dict):
        return max((max(r) + 1 for r in A if r), default=0)
    return len(A[0])


def nullity(A, n: int | None = None) -> int:
    n = ncols(A) if n is None else n
    return n - exact_rank(A)


def nullspace(A: Sequence[Sequence], n: int | None = None) -> list[list[Fraction]]:
    """Basis of ``{x : A x = 0}`` for a dense matrix with ``n`` columns."""
    n = ncols(A) if n is None else n
    M = [[Fraction(c) for c in row] for row in A]
    pivcols = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, len(M)) if M[i][c]), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        inv = 1 / M[r][c]
        M[r] = [v * inv for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivcols.append(c)
        r += 1
    basis = []
    for free in range(n):
        if free in pivcols:
            continue
        x = [Fraction(0)] * n
        x[free] = Fraction(1)
        for row, p in zip(M, pivcols):
            x[p] = -row[free]
        basis.append(x)
    return basis
