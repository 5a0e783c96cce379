"""Shared test utilities."""

from __future__ import annotations

import random

from zkinv import make_spec
from zkinv.bundle import BundleSpec, normal_form_range
from zkinv.modalg.groebner import ModuleOrder, to_terms
from zkinv.modalg.modules import _column_to_vec, quotient_engine
from zkinv.poly import LaurentPoly


def in_span(ring, gens, col, n) -> bool:
    """Membership of ``col`` in ``span(gens)`` inside ``S^n``."""
    eng = quotient_engine(ring, gens, n)
    h, _ = eng.reduce(to_terms(_column_to_vec(col), ModuleOrder()))
    return not h


def is_zero_in_S(ring, col) -> bool:
    return in_span(ring, [], col, len(col))


def random_specs(n: int, seed: int, kmax: int = 3, jmax: int = 7, jmin: int = 1) -> list[BundleSpec]:
    """Valid normalized specs with 1-3 random terms in the canonical range (some split)."""
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        k, j = rng.randint(1, kmax), rng.randint(jmin, jmax)
        cells = normal_form_range(k, j)
        if cells and rng.random() < 0.85:
            chosen = rng.sample(cells, min(len(cells), rng.randint(1, 3)))
            p = LaurentPoly({c: rng.choice([1, -1, 2, -3]) for c in chosen})
        else:
            p = LaurentPoly.zero()
        out.append(make_spec(k, j, p))
    return out
