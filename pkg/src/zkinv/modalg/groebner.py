"""Buchberger completion for submodules of free modules over ``Q[w_0..w_k]``.

Vectors are kept as lists of terms ``(key, pos, exps, coeff)`` sorted by
decreasing ``key`` with integer coefficients (fraction-free, content removed).

Monomials are compared by graded reverse lexicographic order with
``w_0 < w_1 < ... < w_k``; vectors term-over-position, lower position index
wins ties. An optional block split puts all positions ``>= n_top`` below the
others, which is what lift tracking and syzygies need.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional

Term = tuple  # (key, pos, exps, coeff)


class ModuleOrder:
    def __init__(self, n_top: Optional[int] = None):
        self.n_top = n_top

    def key(self, pos: int, exps: tuple) -> tuple:
        top = 1 if self.n_top is None or pos < self.n_top else 0
        return (top, sum(exps), tuple(-e for e in exps), -pos)


def _primitive(terms: list) -> tuple[list, int]:
    """Divide out the content and make the lead coefficient positive.

    Returns the new vector and the (signed) divisor used.
    """
    g = 0
    for t in terms:
        g = gcd(g, t[3])
        if g == 1:
            break
    if terms[0][3] < 0:
        g = -g
    if g == 1:
        return terms, 1
    return [(k, p, e, c // g) for k, p, e, c in terms], g


def _shift(terms: list, mono: tuple) -> list:
    if not any(mono):
        return terms
    dm = sum(mono)
    out = []
    for (top, deg, neg, npos), pos, e, c in terms:
        e2 = tuple(a + b for a, b in zip(e, mono))
        out.append(((top, deg + dm, tuple(a - b for a, b in zip(neg, mono)), npos), pos, e2, c))
    return out


def _combine(a: int, f: list, b: int, g: list) -> list:
    """``a*f - b*g`` for sorted term lists."""
    out = []
    i = j = 0
    nf, ng = len(f), len(g)
    while i < nf and j < ng:
        kf = f[i][0]
        kg = g[j][0]
        if kf > kg:
            t = f[i]
            out.append((kf, t[1], t[2], a * t[3]))
            i += 1
        elif kf < kg:
            t = g[j]
            out.append((kg, t[1], t[2], -b * t[3]))
            j += 1
        else:
            c = a * f[i][3] - b * g[j][3]
            if c:
                out.append((kf, f[i][1], f[i][2], c))
            i += 1
            j += 1
    while i < nf:
        t = f[i]
        out.append((t[0], t[1], t[2], a * t[3]))
        i += 1
    while j < ng:
        t = g[j]
        out.append((t[0], t[1], t[2], -b * t[3]))
        j += 1
    return out


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def _mono_sub(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def to_terms(vec: dict, order: ModuleOrder) -> list:
    """Convert ``{(pos, exps): Fraction}`` into a primitive integer term list."""
    items = [(pos, e, Fraction(c)) for (pos, e), c in vec.items() if c]
    if not items:
        return []
    den = 1
    for _, _, c in items:
        den = lcm(den, c.denominator)
    terms = [(order.key(pos, e), pos, e, int(c * den)) for pos, e, c in items]
    terms.sort(key=lambda t: t[0], reverse=True)
    return _primitive(terms)[0]


def from_terms(terms: Iterable[Term]) -> dict:
    return {(pos, e): Fraction(c) for _, pos, e, c in terms}


class GroebnerEngine:
    """Incremental Buchberger with the Gebauer-Moeller pair criteria."""

    def __init__(self, order: ModuleOrder):
        self.order = order
        self.basis: list[list] = []
        self.redundant: list[bool] = []
        self._by_pos: dict[int, list[int]] = {}
        self._heap: list = []
        self._active: set = set()

    # -- reduction --------------------------------------------------------
    def _find_divisor(self, pos: int, exps: tuple) -> Optional[int]:
        for idx in self._by_pos.get(pos, ()):
            if _divides(self.basis[idx][0][2], exps):
                return idx
        return None

    def reduce(self, f: list, stop_at_lower: bool = False) -> tuple[list, Fraction]:
        """Lead-reduce ``f``.

        Returns ``(h, scale)`` with ``h = scale * f - (combination of basis)``.
        With ``stop_at_lower`` the reduction halts as soon as the lead term lies
        in the lower block.
        """
        scale = Fraction(1)
        while f:
            key, pos, e, c = f[0]
            if stop_at_lower and key[0] == 0:
                break
            idx = self._find_divisor(pos, e)
            if idx is None:
                break
            g = self.basis[idx]
            gc = g[0][3]
            m = _mono_sub(e, g[0][2])
            d = gcd(c, gc)
            a, b = gc // d, c // d
            f = _combine(a, f[1:], b, _shift(g[1:], m))
            scale *= a
            if f:
                f, div = _primitive(f)
                scale /= div
        return f, scale

    # -- completion -------------------------------------------------------
    def _add(self, h: list) -> None:
        t = len(self.basis)
        pos, lh = h[0][1], h[0][2]
        same = [i for i in self._by_pos.get(pos, ()) if not self.redundant[i]]

        # old pairs made superfluous by h (chain criterion)
        for entry in list(self._active):
            i, j, L = entry
            if self.basis[i][0][1] != pos or not _divides(lh, L):
                continue
            if _mono_lcm(self.basis[i][0][2], lh) != L and _mono_lcm(self.basis[j][0][2], lh) != L:
                self._active.discard(entry)

        cands = []
        for i in same:
            L = _mono_lcm(self.basis[i][0][2], lh)
            cands.append((self.order.key(pos, L), i, L))
        cands.sort()
        kept: list[tuple] = []
        for key, i, L in cands:
            if any(_divides(L2, L) for _, _, L2 in kept):
                continue
            kept.append((key, i, L))
        for key, i, L in kept:
            entry = (i, t, L)
            self._active.add(entry)
            heapq.heappush(self._heap, (key, i, t, L))

        for i in same:
            if _divides(lh, self.basis[i][0][2]):
                self.redundant[i] = True
        self.basis.append(h)
        self.redundant.append(False)
        self._by_pos.setdefault(pos, []).append(t)

    def _spoly(self, i: int, j: int, L: tuple) -> list:
        f, g = self.basis[i], self.basis[j]
        cf, cg = f[0][3], g[0][3]
        d = gcd(cf, cg)
        return _combine(
            cg // d, _shift(f[1:], _mono_sub(L, f[0][2])),
            cf // d, _shift(g[1:], _mono_sub(L, g[0][2])),
        )

    def complete(self) -> None:
        while self._heap:
            _, i, j, L = heapq.heappop(self._heap)
            entry = (i, j, L)
            if entry not in self._active:
                continue
            self._active.discard(entry)
            s = self._spoly(i, j, L)
            if not s:
                continue
            s, _ = _primitive(s)
            h, _ = self.reduce(s)
            if h:
                self._add(h)

    def insert(self, f: list) -> bool:
        """Add ``f`` and complete; returns False if ``f`` was already a member."""
        if not f:
            return False
        h, _ = self.reduce(f)
        if not h:
            return False
        self._add(h)
        self.complete()
        return True

    def extend(self, vectors: Iterable[list]) -> None:
        for f in vectors:
            if not f:
                continue
            h, _ = self.reduce(f)
            if h:
                self._add(h)
        self.complete()

    def minimal_basis(self) -> list[list]:
        out = []
        seen = set()
        for idx, g in enumerate(self.basis):
            if self.redundant[idx]:
                continue
            lead = (g[0][1], g[0][2])
            if lead in seen:
                continue
            seen.add(lead)
            out.append(g)
        return out

    def lead_terms(self) -> list[tuple[int, tuple]]:
        return [(g[0][1], g[0][2]) for g in self.minimal_basis()]
