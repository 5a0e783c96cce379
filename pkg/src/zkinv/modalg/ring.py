"""The cone ring ``S = Q[w_0..w_k] / (w_i w_j - w_{i+1} w_{j-1})``.

Polynomials in the ``w_i`` are plain dicts mapping exponent tuples of length
``k + 1`` to :class:`~fractions.Fraction`. A column of a matrix is a list of
such dicts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

WPoly = dict  # exponent tuple -> Fraction
Column = list  # list[WPoly]


def wmono(exps, coeff=1) -> WPoly:
    return {tuple(exps): Fraction(coeff)}


def wvar(i: int, k: int) -> WPoly:
    e = [0] * (k + 1)
    e[i] = 1
    return wmono(e)


def padd(f: WPoly, g: WPoly, c=1) -> WPoly:
    """``f + c*g``."""
    out = dict(f)
    for e, a in g.items():
        v = out.get(e, 0) + c * a
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def pmul(f: WPoly, g: WPoly) -> WPoly:
    out: dict = {}
    for e1, a in f.items():
        for e2, b in g.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + a * b
    return {e: c for e, c in out.items() if c}


def pscale(f: WPoly, c) -> WPoly:
    if not c:
        return {}
    return {e: a * c for e, a in f.items()}


def col_add(u: Column, v: Column, c=1) -> Column:
    return [padd(a, b, c) for a, b in zip(u, v)]


def col_scale(u: Column, f: WPoly) -> Column:
    return [pmul(f, a) for a in u]


def col_is_zero(u: Column) -> bool:
    return all(not a for a in u)


def lincomb(coeffs: list, cols: list, n: int) -> Column:
    """``sum_i coeffs[i] * cols[i]`` with polynomial ``coeffs``."""
    out: Column = [{} for _ in range(n)]
    for f, col in zip(coeffs, cols):
        if not f:
            continue
        for pos in range(n):
            if col[pos]:
                out[pos] = padd(out[pos], pmul(f, col[pos]))
    return out


@dataclass(frozen=True)
class ConeRing:
    k: int

    @property
    def nvars(self) -> int:
        return self.k + 1

    @cached_property
    def ideal_index_pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.k - 1) for j in range(i + 2, self.k + 1)]

    @cached_property
    def ideal(self) -> list[WPoly]:
        """Generators ``w_i w_j - w_{i+1} w_{j-1}``."""
        gens = []
        for i, j in self.ideal_index_pairs:
            a = [0] * self.nvars
            a[i] += 1
            a[j] += 1
            b = [0] * self.nvars
            b[i + 1] += 1
            b[j - 1] += 1
            gens.append({tuple(a): Fraction(1), tuple(b): Fraction(-1)})
        return gens

    def var(self, i: int) -> WPoly:
        return wvar(i, self.k)

    def one(self) -> WPoly:
        return wmono([0] * self.nvars)

    def zero_column(self, n: int) -> Column:
        return [{} for _ in range(n)]

    def unit_column(self, i: int, n: int) -> Column:
        col = self.zero_column(n)
        col[i] = self.one()
        return col


def make_ring(k: int) -> ConeRing:
    if k < 1:
        raise ValueError("k must be positive")
    return ConeRing(k)


def format_wpoly(f: WPoly, names=None) -> str:
    if not f:
        return "0"
    parts = []
    for e in sorted(f, key=lambda e: (-sum(e), tuple(-x for x in reversed(e)))):
        c = f[e]
        factors = []
        for i, x in enumerate(e):
            if x:
                name = names[i] if names else f"w{i}"
                factors.append(name if x == 1 else f"{name}^{x}")
        mono = "*".join(factors)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        parts.append((sign, body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s
