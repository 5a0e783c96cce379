"""Finitely presented modules over the cone ring and the evaluation map ``M -> M^vv``.

Everything is computed over the ambient polynomial ring with the cone ideal
added to every submodule, so ``S^n`` elements are columns of ``w``-polynomials
taken modulo ``I * R^n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .groebner import GroebnerEngine, ModuleOrder, from_terms, to_terms
from .ring import Column, ConeRing, col_is_zero


class InfiniteLength(ArithmeticError):
    """The quotient module is not of finite length."""


def _column_to_vec(col: Column, offset: int = 0) -> dict:
    vec = {}
    for pos, f in enumerate(col):
        for e, c in f.items():
            vec[(pos + offset, e)] = c
    return vec


def _vec_to_column(vec: dict, n: int, offset: int = 0) -> Column:
    col: Column = [{} for _ in range(n)]
    for (pos, e), c in vec.items():
        if offset <= pos < offset + n:
            col[pos - offset][e] = c
    return col


def _ideal_vectors(ring: ConeRing, n: int, order: ModuleOrder) -> list:
    return [to_terms({(pos, e): c for e, c in f.items()}, order) for pos in range(n) for f in ring.ideal]


def _col_size(col: Column) -> tuple:
    degs = [sum(e) for f in col for e in f]
    return (max(degs) if degs else -1, sum(len(f) for f in col))


def quotient_engine(ring: ConeRing, columns: list[Column], n: int) -> GroebnerEngine:
    """Gröbner basis of ``span(columns) + I * R^n`` (TOP grevlex)."""
    order = ModuleOrder()
    eng = GroebnerEngine(order)
    eng.extend(_ideal_vectors(ring, n, order))
    eng.extend(to_terms(_column_to_vec(c), order) for c in columns)
    return eng


def module_groebner(ring: ConeRing, columns: list[Column], n: int) -> "LiftingBasis":
    """Gröbner basis of the submodule generated by ``columns`` with lift certificates."""
    return LiftingBasis(ring, columns, n)


def prune_generators(ring: ConeRing, columns: list[Column], n: int) -> list[Column]:
    """Drop generators that already lie in the span of the kept ones (mod ``I``).

    Generators are tried in order of increasing degree, so the result keeps the
    low-degree ones; it generates the same submodule of ``S^n``.
    """
    order = ModuleOrder()
    eng = GroebnerEngine(order)
    eng.extend(_ideal_vectors(ring, n, order))
    kept = []
    for col in sorted(columns, key=_col_size):
        if col_is_zero(col):
            continue
        if eng.insert(to_terms(_column_to_vec(col), order)):
            kept.append(col)
    return kept


class LiftingBasis:
    """Gröbner basis of ``span(g_1..g_m) + I R^n`` with each element written in the ``g_i``.

    Implemented on ``R^(n+m)``: generator ``g_i`` becomes ``(g_i, e_i)`` and the
    tracking positions ``n..n+m-1`` form a lower block of the module order.
    Elements with empty upper part are exactly the syzygies.
    """

    def __init__(self, ring: ConeRing, columns: list[Column], n: int):
        self.ring = ring
        self.n = n
        self.m = len(columns)
        self.columns = columns
        self.order = ModuleOrder(n_top=n)
        self.engine = GroebnerEngine(self.order)
        self.engine.extend(_ideal_vectors(ring, n, self.order))
        unit = tuple([0] * ring.nvars)
        vecs = []
        for i, col in enumerate(columns):
            vec = _column_to_vec(col)
            vec[(n + i, unit)] = Fraction(1)
            vecs.append(to_terms(vec, self.order))
        self.engine.extend(vecs)

    def syzygy_columns(self) -> list[Column]:
        out = []
        for g in self.engine.minimal_basis():
            if g[0][0][0] == 0:
                out.append(_vec_to_column(from_terms(g), self.m, offset=self.n))
        return out

    def lift(self, col: Column) -> Optional[Column]:
        """Coefficients ``c`` with ``col = sum c_i g_i`` mod ``I``, or None."""
        f = to_terms(_column_to_vec(col), self.order)
        if not f:
            return [{} for _ in range(self.m)]
        # to_terms rescales by a constant; recover it to keep the witness exact
        first_pos, first_e = f[0][1], f[0][2]
        orig = Fraction(col[first_pos][first_e])
        prescale = Fraction(f[0][3]) / orig
        h, scale = self.engine.reduce(f, stop_at_lower=True)
        if h and h[0][0][0] == 1:
            return None
        total = scale * prescale
        rem = from_terms(h)
        out = _vec_to_column(rem, self.m, offset=self.n)
        return [{e: -c / total for e, c in f_.items()} for f_ in out]


def syzygies(ring: ConeRing, columns: list[Column], n: int, prune: bool = True) -> list[Column]:
    """Generators of ``{c in S^m : sum c_i g_i = 0 in S^n}``."""
    if not columns:
        return []
    syz = LiftingBasis(ring, columns, n).syzygy_columns()
    if prune:
        syz = prune_generators(ring, syz, len(columns))
    return syz


@dataclass
class ModulePresentation:
    """``coker(relations: S^q -> S^ngens)``, optionally with an embedding into ``S^rank``.

    ``embedding[i]`` is the image of the i-th generator.
    """

    ring: ConeRing
    ngens: int
    relations: list[Column] = field(default_factory=list)
    embedding: Optional[list[Column]] = None
    rank: Optional[int] = None

    @classmethod
    def submodule(cls, ring: ConeRing, columns: list[Column], n: int, prune: bool = True):
        gens = prune_generators(ring, columns, n) if prune else [c for c in columns if not col_is_zero(c)]
        rels = syzygies(ring, gens, n)
        return cls(ring, len(gens), rels, gens, n)

    @classmethod
    def free(cls, ring: ConeRing, n: int):
        return cls(ring, n, [], [ring.unit_column(i, n) for i in range(n)], n)

    @classmethod
    def cokernel(cls, ring: ConeRing, n: int, relations: list[Column]):
        return cls(ring, n, list(relations), None, None)


def hom_dual(M: ModulePresentation) -> ModulePresentation:
    """``Hom_S(M, S)`` as the kernel of the transposed relation matrix.

    A generator ``h`` of the result is the functional sending generator ``i`` of
    ``M`` to ``h[i]``; the result is embedded in ``S^ngens``.
    """
    ring, m = M.ring, M.ngens
    if m == 0:
        return ModulePresentation(ring, 0, [], [], 0)
    q = len(M.relations)
    if q == 0:
        gens = [ring.unit_column(i, m) for i in range(m)]
    else:
        rows = [[M.relations[l][i] for l in range(q)] for i in range(m)]
        gens = syzygies(ring, rows, q)
    rels = syzygies(ring, gens, m)
    return ModulePresentation(ring, len(gens), rels, gens, m)


def standard_monomials(ring: ConeRing, columns: list[Column], n: int) -> int:
    """``dim_Q S^n / span(columns)``; raises :class:`InfiniteLength` if infinite."""
    eng = quotient_engine(ring, columns, n)
    leads: dict[int, list[tuple]] = {pos: [] for pos in range(n)}
    for pos, e in eng.lead_terms():
        leads[pos].append(e)
    nv = ring.nvars
    total = 0
    for pos in range(n):
        L = leads[pos]
        for i in range(nv):
            if not any(sum(e) == e[i] for e in L):
                raise InfiniteLength(f"position {pos}: no pure power of w{i} among lead terms")
        # standard monomials form an order ideal; walk it upward from 1
        start = tuple([0] * nv)
        if any(all(x <= y for x, y in zip(e, start)) for e in L):
            continue
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for mono in frontier:
                for i in range(nv):
                    cand = mono[:i] + (mono[i] + 1,) + mono[i + 1:]
                    if cand in seen:
                        continue
                    if any(all(x <= y for x, y in zip(e, cand)) for e in L):
                        continue
                    seen.add(cand)
                    nxt.append(cand)
            frontier = nxt
        total += len(seen)
    return total


@dataclass
class EvaluationData:
    dual: ModulePresentation
    bidual: ModulePresentation
    ev_images: list[Column]  # ev(g_i) in S^(dual.ngens)
    ev_lifts: list[Column]  # ev(g_i) in the bidual's generators
    length: int


def evaluation(M: ModulePresentation) -> EvaluationData:
    ring = M.ring
    D = hom_dual(M)
    DD = hom_dual(D)
    t = D.ngens
    images = [[D.embedding[l][i] for l in range(t)] for i in range(M.ngens)]
    if DD.ngens == 0:
        return EvaluationData(D, DD, images, [[] for _ in images], 0)
    basis = LiftingBasis(ring, DD.embedding, t)
    lifts = []
    for v in images:
        L = basis.lift(v)
        if L is None:
            raise ArithmeticError("evaluation image is not in the double dual")
        lifts.append(L)
    length = standard_monomials(ring, lifts + DD.relations, DD.ngens)
    return EvaluationData(D, DD, images, lifts, length)


def eval_and_coker_length(M: ModulePresentation) -> int:
    """Length of ``coker(ev: M -> M^vv)``."""
    return evaluation(M).length
