"""The endomorphism bundle ``End E``: ``h^1``, truncated ``h^0`` and ``Delta``.

In the basis ``(a, b, c, d)`` the transition of ``End E`` is

    S = [[1, z^j p, z^-j p, p^2],
         [0, z^2j,  0,      z^j p],
         [0, 0,     z^-2j,  z^-j p],
         [0, 0,     0,      1]]
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Optional, Sequence

from .bundle import BundleSpec, normalize_p, transition_matrix
from .cech import NoStabilization, cech_h1_truncated
from .modalg.linalg import sparse_rank
from .poly import LaurentPoly, degree_extrema, zpow

Matrix = list[list[LaurentPoly]]


def end_transition(spec: BundleSpec) -> Matrix:
    j, p = spec.j, spec.p
    O, I = LaurentPoly.zero(), LaurentPoly.const(1)
    S = [
        [I, zpow(j) * p, zpow(-j) * p, p * p],
        [O, zpow(2 * j), O, zpow(j) * p],
        [O, O, zpow(-2 * j), zpow(-j) * p],
        [O, O, O, I],
    ]
    if determinant(S) != I:
        raise ArithmeticError("End transition does not have unit determinant")
    return S


def end_transition_inverse(spec: BundleSpec) -> Matrix:
    j, p = spec.j, spec.p
    O, I = LaurentPoly.zero(), LaurentPoly.const(1)
    return [
        [I, -(zpow(-j) * p), -(zpow(j) * p), p * p],
        [O, zpow(-2 * j), O, -(zpow(-j) * p)],
        [O, O, zpow(2 * j), -(zpow(j) * p)],
        [O, O, O, I],
    ]


def end_transition_from_tensor(spec: BundleSpec) -> Matrix:
    """``P (T kron T^t) P`` with ``P`` swapping basis vectors 1<->2 and 3<->4."""
    T = transition_matrix(spec)
    Tt = [[T[c][r] for c in range(2)] for r in range(2)]
    K = [[T[i // 2][l // 2] * Tt[i % 2][l % 2] for l in range(4)] for i in range(4)]
    perm = [1, 0, 3, 2]
    return [[K[perm[i]][perm[l]] for l in range(4)] for i in range(4)]


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = list(perm)
    for i in range(len(seen)):
        while seen[i] != i:
            t = seen[i]
            seen[i], seen[t] = seen[t], seen[i]
            sign = -sign
    return sign


def determinant(M: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Leibniz expansion (the matrices here are at most 4x4)."""
    n = len(M)
    total = LaurentPoly.zero()
    for perm in permutations(range(n)):
        term = LaurentPoly.const(_perm_sign(perm))
        for i, pi in enumerate(perm):
            term = term * M[i][pi]
            if term.is_zero():
                break
        total = total + term
    return total


# --- h^1 --------------------------------------------------------------------

def end_candidates(k: int, j: int) -> list[tuple[int, int]]:
    """Canonical cocycles ``(r, s)`` of ``End E``, all in slot ``b``."""
    top = (2 * j - 2) // k if j >= 1 else -1
    return [(r, s) for r in range(top + 1) for s in range(k * r - 2 * j + 1, 0)]


def h1_end_relations(spec: BundleSpec) -> list[dict]:
    """Slot-``b`` residue of the coboundaries ``S^-1 (z^t u^i e_d)``, ``0 <= t <= k i``.

    Slots ``a`` and ``c`` carry no cohomology and slot-``d`` cocycles with
    ``s < 0`` reduce into slot ``b``; what remains is the candidate part of
    ``z^-j p z^t u^i``.
    """
    k, j, p = spec.k, spec.j, spec.p
    if p.is_zero():
        return []
    top = (2 * j - 2) // k - degree_extrema(p).min_u
    rels = []
    for i in range(top + 1):
        for t in range(0, k * i + 1):
            row = {}
            for (s, r), c in p.items():
                s2, r2 = s + t - j, r + i
                if k * r2 - 2 * j < s2 < 0:
                    row[(r2, s2)] = c
            if row:
                rels.append(row)
    return rels


def h1_end(spec: BundleSpec, oracle: bool = False) -> int:
    spec = normalize_p(spec)
    cands = end_candidates(spec.k, spec.j)
    index = {m: i for i, m in enumerate(cands)}
    rows = [{index[m]: c for m, c in row.items()} for row in h1_end_relations(spec)]
    value = len(cands) - sparse_rank(rows)
    if oracle:
        check = h1_end_oracle(spec)
        if check != value:
            raise ArithmeticError(f"h1_end {value} disagrees with the Čech oracle {check}")
    return value


def h1_end_oracle(spec: BundleSpec) -> int:
    spec = normalize_p(spec)
    return cech_h1_truncated(end_transition(spec), spec.k, inverse=end_transition_inverse(spec))


# --- h^0 on infinitesimal neighbourhoods -------------------------------------

def _slot_bounds(k: int, j: int, r: int) -> list[int]:
    """Top z-exponent per slot ``(a, b, c, d)`` in u-degree ``r``."""
    return [k * r + 2 * j - 1, k * r - 1, k * r + 2 * j, k * r]


def h0_end(spec: BundleSpec, n: int) -> int:
    """``dim H^0(l^(n); End E)`` on the ``n``-th neighbourhood of the zero section."""
    if n < 0:
        raise ValueError("truncation level must be non-negative")
    if spec.j < 1:
        raise ValueError("h0_end needs j >= 1")
    k, j = spec.k, spec.j
    S = end_transition(spec)

    variables = {}
    for slot in range(4):
        for r in range(n + 1):
            for s in range(0, _slot_bounds(k, j, r)[slot] + 1):
                variables[(slot, r, s)] = len(variables)

    # coefficient of z^s u^r in entry e_i, as a sparse row over the variables
    entries: list[dict] = [{} for _ in range(4)]
    for (slot, r, s), idx in variables.items():
        for row in range(4):
            for (ds, dr), c in S[row][slot].items():
                r2 = r + dr
                if r2 > n:
                    continue
                s2 = s + ds
                if s2 <= k * r2:
                    continue
                bucket = entries[row].setdefault((r2, s2), {})
                bucket[idx] = bucket.get(idx, 0) + c
    rows = [{v: c for v, c in b.items() if c} for e in entries for b in e.values()]
    return len(variables) - sparse_rank([r for r in rows if r])


def h0_end_split_formula(k: int, j: int, n: int) -> int:
    return sum((k * r + 1) + (k * r + 2 * j + 1) + (k * r + 1) + max(0, k * r - 2 * j + 1) for r in range(n + 1))


def delta_start(spec: BundleSpec) -> int:
    ext = degree_extrema(spec.p)
    return (ext.max_u or 0) + -(-2 * spec.j // spec.k)


def delta_sequence(spec: BundleSpec, n_from: int, n_to: int) -> list[int]:
    split = spec.split()
    return [h0_end(split, n) - h0_end(spec, n) for n in range(n_from, n_to + 1)]


def delta(spec: BundleSpec, cap: int = 32) -> int:
    """Stable value of ``h0(End split on l^(n)) - h0(End E on l^(n))``."""
    spec = normalize_p(spec)
    if spec.p.is_zero():
        return 0
    n0 = delta_start(spec)
    split = spec.split()
    values = []
    for n in range(n0, n0 + cap + 1):
        values.append(h0_end(split, n) - h0_end(spec, n))
        if len(values) >= 3 and values[-1] == values[-2] == values[-3]:
            return values[-1]
    raise NoStabilization(f"Delta_n did not settle for n in [{n0}, {n0 + cap}]: {values}")


# --- cross-checks -------------------------------------------------------------

def relative_identity_holds(spec: BundleSpec) -> bool:
    """``Delta + h1(End E) = h1(End split)``."""
    return delta(spec) + h1_end(spec) == h1_end(spec.split())


def instanton_total(k: int, j: int) -> Optional[int]:
    """``n(2nk + k - 2)`` when ``j = nk``, else None."""
    if j % k:
        return None
    n = j // k
    return n * (2 * n * k + k - 2)


def conjecture_values(k: int, j: int, width: int, height: int, h1: int, delta_value: int) -> tuple[int, Fraction]:
    """Both sides of ``w + h = ((h1 - Delta) - j)/2 + j/k``."""
    return width + height, Fraction((h1 - delta_value) - j, 2) + Fraction(j, k)
