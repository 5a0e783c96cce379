"""Brute-force ``H^1`` of a bundle on ``Z_k`` from its transition matrix.

Cocycles are written in the ``U`` frame: ``H^1 = G(U cap V) / (G(U) + T^-1 G(V))``.
The quotient by ``G(U)`` leaves monomials ``z^s u^r`` with ``s < 0`` in each
slot. We truncate to ``0 <= r <= R`` (the neighbourhood ``l^(R)``) and
``-Z <= s <= -1``, span the window by the images of ``V``-holomorphic
monomials under ``T^-1``, and grow the window until the dimension settles.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .modalg.linalg import sparse_rank
from .poly import LaurentPoly

Matrix = Sequence[Sequence[LaurentPoly]]


class NoStabilization(ArithmeticError):
    """A growing computation did not settle before its cap."""


def _monomial_inverse(m: LaurentPoly) -> LaurentPoly:
    items = list(m.items())
    if len(items) != 1 or items[0][0][1] != 0:
        raise ValueError(f"diagonal entry {m} is not a unit on U cap V")
    (s, _), c = items[0]
    return LaurentPoly.monomial(-s, 0, 1 / Fraction(c))


def upper_triangular_inverse(T: Matrix) -> list[list[LaurentPoly]]:
    """Inverse of an upper-triangular matrix whose diagonal entries are ``c z^m``."""
    n = len(T)
    for i in range(n):
        for j in range(i):
            if not T[i][j].is_zero():
                raise ValueError("matrix is not upper triangular")
    X = [[LaurentPoly.zero() for _ in range(n)] for _ in range(n)]
    for i in range(n - 1, -1, -1):
        inv = _monomial_inverse(T[i][i])
        X[i][i] = inv
        for j in range(i + 1, n):
            acc = LaurentPoly.zero()
            for l in range(i + 1, j + 1):
                acc = acc + T[i][l] * X[l][j]
            X[i][j] = -(inv * acc)
    return X


def mat_mul(A: Matrix, B: Matrix) -> list[list[LaurentPoly]]:
    n, m, q = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(q):
            acc = LaurentPoly.zero()
            for l in range(m):
                acc = acc + A[i][l] * B[l][j]
            row.append(acc)
        out.append(row)
    return out


def window_dimension(inverse: Matrix, k: int, R: int, Z: int) -> int:
    """``dim`` of the truncated cohomology for the window ``r <= R``, ``-Z <= s < 0``."""
    n = len(inverse)

    def index(slot: int, r: int, s: int) -> int:
        return (slot * (R + 1) + r) * Z + (s + Z)

    rows = []
    for col in range(n):
        entries = [(row, inverse[row][col]) for row in range(n) if not inverse[row][col].is_zero()]
        if not entries:
            continue
        top = max(s for _, e in entries for (s, _) in e.terms)
        for r in range(R + 1):
            for t in range(-Z - top, k * r + 1):
                vec = {}
                for row, e in entries:
                    for (s, dr), c in e.items():
                        s2, r2 = s + t, dr + r
                        if r2 <= R and -Z <= s2 < 0:
                            vec[index(row, r2, s2)] = c
                if vec:
                    rows.append(vec)
    return n * (R + 1) * Z - sparse_rank(rows)


def _initial_window(T: Matrix, inverse: Matrix, k: int) -> tuple[int, int]:
    zmax, umax = 0, 0
    for M in (T, inverse):
        for row in M:
            for e in row:
                for s, r in e.terms:
                    zmax = max(zmax, abs(s))
                    umax = max(umax, r)
    Z = zmax + 1
    return -(-Z // k) + umax, Z


def cech_h1_truncated(
    transition: Matrix,
    k: int,
    window: Optional[tuple[int, int]] = None,
    inverse: Optional[Matrix] = None,
    max_growths: int = 8,
) -> int:
    """``dim H^1(Z_k; E)`` for the bundle with the given transition matrix.

    The window ``(R, Z)`` grows by ``(1, k)`` until two consecutive growths
    leave the dimension unchanged.
    """
    if k < 1:
        raise ValueError("k must be positive")
    inv = inverse if inverse is not None else upper_triangular_inverse(transition)
    R, Z = window if window is not None else _initial_window(transition, inv, k)
    values = [window_dimension(inv, k, R, Z)]
    for _ in range(max_growths):
        R, Z = R + 1, Z + k
        values.append(window_dimension(inv, k, R, Z))
        if len(values) >= 3 and values[-1] == values[-2] == values[-3]:
            return values[-1]
    raise NoStabilization(f"truncated H^1 did not settle: {values}")
