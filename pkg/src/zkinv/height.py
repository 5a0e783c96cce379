"""Height ``h = dim H^1(Z_k; E)``.

Every class in ``H^1(E)`` is represented by a combination of canonical
cocycles ``(z^s u^r, 0)`` with ``0 <= r <= (j-2)//k`` and ``kr-j < s < 0``.
Correction sections ``(0, b)`` with ``b`` holomorphic on both charts after
twisting produce the relations among them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .bundle import BundleSpec, normalize_p, transition_matrix
from .cech import cech_h1_truncated
from .modalg.linalg import _echelon
from .poly import degree_extrema
from .width import CoefficientId, LinearForm

Monomial = tuple  # (r, s)


def canonical_cocycles(k: int, j: int) -> list[Monomial]:
    """Candidate monomials ``(r, s)`` in canonical order (``r``, then ``s``)."""
    if k < 1:
        raise ValueError("k must be positive")
    top = (j - 2) // k if j >= 2 else -1
    return [(r, s) for r in range(top + 1) for s in range(k * r - j + 1, 0)]


@dataclass
class CocycleBasis:
    """Surviving candidates and the relations between them.

    A relation maps candidate monomials to linear forms in the correction
    coefficients ``b_rs``; ``dropped`` holds candidates shown to be coboundaries.
    """

    generators: list[Monomial]
    relations: list[dict] = field(default_factory=list)
    dropped: list[Monomial] = field(default_factory=list)


def correction_variables(spec: BundleSpec) -> list[CoefficientId]:
    k, j = spec.k, spec.j
    top = (j - 2) // k - degree_extrema(spec.p).min_u if j >= 2 else -1
    return [CoefficientId("B", r, s) for r in range(top + 1) for s in range(-j, k * r + 1)]


def height_relations(spec: BundleSpec, twist: bool = True) -> CocycleBasis:
    """Sort each candidate into generator, coboundary, or generator plus relation.

    With ``twist`` (the default) the leftover terms ``q`` of ``p*b'`` are tested
    for ``V``-holomorphy after multiplying by ``z^j``, which is where the
    relation lives; ``twist=False`` tests ``q`` itself and over-counts
    coboundaries.
    """
    spec = normalize_p(spec)
    k, j = spec.k, spec.j
    cands = canonical_cocycles(k, j)
    if spec.p.is_zero():
        return CocycleBasis(list(cands))

    # p*b with b generic: bidegree -> linear form in the b_rs
    pb: dict = {}
    for v in correction_variables(spec):
        for (s, r), c in spec.p.items():
            key = (r + v.r, s + v.s)
            pb.setdefault(key, LinearForm())
            pb[key] = pb[key].add(LinearForm({v: c}))

    shift = j if twist else 0
    basis = CocycleBasis([])
    for cand in cands:
        S = pb.get(cand)
        if not S:
            basis.generators.append(cand)
            continue
        # b' is the part of b meeting the candidate; q the rest of p*b'
        q: dict = {}
        for v in S:
            for (s, r), c in spec.p.items():
                key = (r + v.r, s + v.s)
                if key == cand or s + v.s >= 0:
                    continue
                form = q.get(key, LinearForm()).add(LinearForm({v: c}))
                q[key] = form
        Q = {m: f for m, f in q.items() if f and m[1] + shift > k * m[0]}
        if not Q:
            basis.dropped.append(cand)
            continue
        basis.generators.append(cand)
        rel = {cand: LinearForm(S)}
        rel.update(Q)
        basis.relations.append(rel)
    return basis


def fix_height_relations(basis: CocycleBasis) -> tuple[list[Monomial], list[dict], int]:
    """Specialize, strip monomial relations, and count.

    Returns ``(G', R', height)``; ``R'`` is reduced to independent relations so
    that ``height = |G'| - |R'|``.
    """
    gens = list(basis.generators)
    alive = set(gens)
    specialized = []
    seen = set()
    for rel in basis.relations:
        bvars = sorted({v for form in rel.values() for v in form})
        for v in bvars:
            row = {m: form[v] for m, form in rel.items() if v in form and m in alive}
            key = frozenset(row.items())
            if row and key not in seen:
                seen.add(key)
                specialized.append(row)

    changed = True
    while changed:
        changed = False
        for row in specialized:
            live = [m for m in row if m in alive]
            if len(live) == 1:
                alive.discard(live[0])
                changed = True
    gens = [g for g in gens if g in alive]
    index = {g: i for i, g in enumerate(gens)}
    rows = [{index[m]: c for m, c in row.items() if m in alive} for row in specialized]
    reduced = _echelon(r for r in rows if r)
    relations = [{gens[i]: Fraction(c) for i, c in sorted(r.items())} for _, r in sorted(reduced.items())]
    return gens, relations, len(gens) - len(relations)


def height(spec: BundleSpec, twist: bool = True) -> int:
    return fix_height_relations(height_relations(spec, twist))[2]


def height_oracle(spec: BundleSpec) -> int:
    """Independent value from the truncated Čech complex."""
    spec = normalize_p(spec)
    return cech_h1_truncated(transition_matrix(spec), spec.k)
