"""Width ``l(Q) = dim (pi_* E)^vv / pi_* E`` of a bundle on ``Z_k``.

Pipeline: truncated generic section ``(a, b)`` with indeterminate coefficients,
linear relations from holomorphy of ``z^j a + p b`` on ``V``, elimination,
one section per free coefficient, conversion into a submodule ``M`` of ``S^2``,
and finally the length of ``coker(M -> M^vv)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional

from .bundle import BundleSpec, normalize_p
from .modalg import ModulePresentation, eval_and_coker_length, make_ring
from .modalg.ring import Column
from .poly import LaurentPoly, degree_extrema


class NotConvertible(ValueError):
    """A monomial ``z^s u^r`` with ``s > k*r`` has no image in ``S``."""


class CoefficientId(NamedTuple):
    family: str  # "A" or "B"
    r: int
    s: int

    def __str__(self) -> str:
        return f"{self.family.lower()}_{self.r},{self.s}"


class LinearForm(dict):
    """Rational linear combination of :class:`CoefficientId` (zero entries dropped)."""

    def add(self, other: "LinearForm", c=1) -> "LinearForm":
        out = LinearForm(self)
        for v, a in other.items():
            x = out.get(v, 0) + c * a
            if x:
                out[v] = Fraction(x)
            else:
                out.pop(v, None)
        return out

    def scale(self, c) -> "LinearForm":
        if not c:
            return LinearForm()
        return LinearForm({v: Fraction(a * c) for v, a in self.items()})

    def pivot(self) -> Optional[CoefficientId]:
        """The A-variable if present, else the largest B-variable."""
        avars = [v for v in self if v.family == "A"]
        if avars:
            return max(avars)
        bvars = [v for v in self if v.family == "B"]
        return max(bvars) if bvars else None

    def monic(self) -> "LinearForm":
        p = self.pivot()
        return self.scale(1 / self[p]) if p is not None else LinearForm(self)

    def substitute(self, subs: dict) -> "LinearForm":
        out = LinearForm()
        for v, a in self.items():
            out = out.add(subs[v], a) if v in subs else out.add(LinearForm({v: a}))
        return out

    def __str__(self) -> str:
        if not self:
            return "0"
        parts = []
        for v in sorted(self):
            c = self[v]
            parts.append(f"{'+' if c > 0 else '-'} {'' if abs(c) == 1 else str(abs(c)) + '*'}{v}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


SymbolicPoly = dict  # (s, r) -> LinearForm


def _sym_mul(p: LaurentPoly, f: SymbolicPoly) -> SymbolicPoly:
    out: SymbolicPoly = {}
    for (s1, r1), c in p.items():
        for (s2, r2), form in f.items():
            key = (s1 + s2, r1 + r2)
            out[key] = out.get(key, LinearForm()).add(form, c)
    return {key: form for key, form in out.items() if form}


def _sym_add(f: SymbolicPoly, g: SymbolicPoly) -> SymbolicPoly:
    out = dict(f)
    for key, form in g.items():
        out[key] = out.get(key, LinearForm()).add(form)
    return {key: form for key, form in out.items() if form}


def _sym_subs(f: SymbolicPoly, subs: dict) -> SymbolicPoly:
    out = {key: form.substitute(subs) for key, form in f.items()}
    return {key: form for key, form in out.items() if form}


def _sym_specialize(f: SymbolicPoly, var: CoefficientId) -> LaurentPoly:
    return LaurentPoly({key: form.get(var, 0) for key, form in f.items()})


@dataclass
class SymbolicSection:
    a: SymbolicPoly
    b: SymbolicPoly
    variables: list[CoefficientId]
    alpha: int = 0
    gamma: int = 0
    free: Optional[list[CoefficientId]] = None
    substitutions: dict = field(default_factory=dict)

    def specialize(self, var: CoefficientId) -> tuple[LaurentPoly, LaurentPoly]:
        """The concrete section with ``var = 1`` and every other free coefficient 0."""
        return _sym_specialize(self.a, var), _sym_specialize(self.b, var)


def section_bounds(spec: BundleSpec) -> dict:
    """``min_u``, ``alpha`` (top u-degree of ``a``), ``gamma`` (top u-degree of ``b``)."""
    k, j = spec.k, spec.j
    ext = degree_extrema(spec.p)
    if spec.p.is_zero():
        return {"min_u": 0, "max_z": None, "alpha": -(-j // k), "gamma": 0}
    alpha = max(-(-j // k), ext.max_u) + ext.min_u
    return {"min_u": ext.min_u, "max_z": ext.max_z, "alpha": alpha, "gamma": alpha - ext.min_u}


def a_row_bound(spec: BundleSpec, r: int, bounds: dict) -> int:
    """Largest ``s`` of ``a_{rs}`` in u-degree ``r`` (may be negative: empty row)."""
    k, j = spec.k, spec.j
    if r < bounds["min_u"] or spec.p.is_zero():
        return k * r - j
    return max(k * r - j, k * (r - bounds["min_u"]) + j + max(bounds["max_z"], 0))


def build_generic_sections(spec: BundleSpec) -> SymbolicSection:
    k, j = spec.k, spec.j
    bounds = section_bounds(spec)
    a: SymbolicPoly = {}
    b: SymbolicPoly = {}
    variables = []
    for r in range(0, bounds["alpha"] + 1):
        for s in range(0, a_row_bound(spec, r, bounds) + 1):
            v = CoefficientId("A", r, s)
            variables.append(v)
            a[(s, r)] = LinearForm({v: Fraction(1)})
    for r in range(0, bounds["gamma"] + 1):
        for s in range(0, k * r + j + 1):
            v = CoefficientId("B", r, s)
            variables.append(v)
            b[(s, r)] = LinearForm({v: Fraction(1)})
    return SymbolicSection(a, b, variables, bounds["alpha"], bounds["gamma"])


def twisted_first_entry(spec: BundleSpec, section: SymbolicSection) -> SymbolicPoly:
    """``z^j a + p b`` for the symbolic section."""
    za = {(s + spec.j, r): form for (s, r), form in section.a.items()}
    return _sym_add(za, _sym_mul(spec.p, section.b))


def get_relations(spec: BundleSpec, section: SymbolicSection) -> list[LinearForm]:
    """Coefficients of the monomials ``z^s u^r`` (``s > k r``) of ``z^j a + p b``."""
    f = twisted_first_entry(spec, section)
    rels = []
    for (s, r) in sorted(f, key=lambda key: (key[1], key[0])):
        if s > spec.k * r:
            rels.append(f[(s, r)].monic())
    return rels


def solve_relations(section: SymbolicSection, relations: list[LinearForm]) -> SymbolicSection:
    """Eliminate pivot variables; the remaining variables are free."""
    subs: dict = {}
    for rel in relations:
        rel = rel.substitute(subs)
        p = rel.pivot()
        if p is None:
            continue  # became identically zero
        rel = rel.monic()
        expr = LinearForm({v: -c for v, c in rel.items() if v != p})
        for v in list(subs):
            if p in subs[v]:
                subs[v] = subs[v].substitute({p: expr})
        subs[p] = expr
    free = [v for v in section.variables if v not in subs]
    return SymbolicSection(
        _sym_subs(section.a, subs),
        _sym_subs(section.b, subs),
        section.variables,
        section.alpha,
        section.gamma,
        free=free,
        substitutions=subs,
    )


def pi_star(s: int, r: int, k: int) -> tuple:
    """Exponents ``n_0..n_k`` with ``sum n_i = r`` and ``sum i*n_i = s`` (greedy from ``w_k``)."""
    if s > k * r or s < 0 or r < 0:
        raise NotConvertible(f"z^{s} u^{r} is not a monomial in w_0..w_{k}")
    n = [0] * (k + 1)
    deg_u, deg_z = r, s
    for diff in range(k, 0, -1):
        q = deg_z // diff
        n[diff] += q
        deg_u -= q
        deg_z %= diff
    n[0] += deg_u
    return tuple(n)


def laurent_to_w(p: LaurentPoly, k: int) -> dict:
    out: dict = {}
    for (s, r), c in p.items():
        e = pi_star(s, r, k)
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def u_exponent(spec: BundleSpec, solved: SymbolicSection) -> int:
    N = 0
    for poly in (solved.a, solved.b):
        for (s, r) in poly:
            N = max(N, s - spec.k * r)
    return -(-N // spec.k)


def module_generators(spec: BundleSpec, solved: SymbolicSection, extra_u: int = 0) -> tuple[list[Column], int]:
    """One generator of ``M`` in ``S^2`` per free coefficient, and the u-power used."""
    uexp = u_exponent(spec, solved) + extra_u
    cols = []
    for var in solved.free:
        a, b = solved.specialize(var)
        cols.append([laurent_to_w(a.shift(0, uexp), spec.k), laurent_to_w(b.shift(0, uexp), spec.k)])
    return cols, uexp


def make_module(spec: BundleSpec, solved: SymbolicSection, extra_u: int = 0) -> ModulePresentation:
    cols, _ = module_generators(spec, solved, extra_u)
    return ModulePresentation.submodule(make_ring(spec.k), cols, 2)


def solved_sections(spec: BundleSpec) -> SymbolicSection:
    spec = normalize_p(spec)
    section = build_generic_sections(spec)
    return solve_relations(section, get_relations(spec, section))


def width(spec: BundleSpec, extra_u: int = 0) -> int:
    spec = normalize_p(spec)
    M = make_module(spec, solved_sections(spec), extra_u)
    return eval_and_coker_length(M)
