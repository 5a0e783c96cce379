"""Defining data ``(k, j, p)`` of a rank-2 bundle on ``Z_k`` and its transition matrix.

The bundle is glued from the charts ``U = {z, u}`` and ``V = {w, v}`` with
``w = 1/z``, ``v = z^k u`` by

    T = [[z^j, p], [0, z^-j]]

acting on sections written in the ``U`` trivialization.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

from .poly import LaurentPoly, as_laurent, format_laurent, zpow


class BundleError(ValueError):
    """Base class for invalid bundle data."""


class InvalidK(BundleError):
    pass


class InvalidJ(BundleError):
    pass


class IllPosed(BundleError):
    """``p`` is nonzero and not divisible by ``u``."""


class NonzeroPForJZero(BundleError):
    pass


@dataclass(frozen=True)
class BundleSpec:
    k: int
    j: int
    p: LaurentPoly
    p_raw: Optional[LaurentPoly] = field(default=None, compare=False)

    @property
    def is_split(self) -> bool:
        return self.p.is_zero()

    def split(self) -> "BundleSpec":
        return BundleSpec(self.k, self.j, LaurentPoly.zero())

    def __str__(self) -> str:
        return f"(k={self.k}, j={self.j}, p={format_laurent(self.p)})"


@dataclass(frozen=True)
class InvariantReport:
    width: int
    height: int
    h1_end: Optional[int]
    delta: Optional[int]
    conjecture_check: Optional[bool] = None

    @property
    def chi_loc(self) -> int:
        return self.width + self.height


def validate(k: int, j: int, p) -> BundleSpec:
    p = as_laurent(p)
    if not isinstance(k, int) or k < 1:
        raise InvalidK(f"k must be a positive integer, got {k!r}")
    if not isinstance(j, int) or j < 0:
        raise InvalidJ(f"j must be a non-negative integer, got {j!r}")
    if any(r < 1 for (_, r), _ in p.items()):
        raise IllPosed(
            f"p = {format_laurent(p)} is not divisible by u; the splitting type is not well defined"
        )
    if j == 0 and not p.is_zero():
        raise NonzeroPForJZero("j = 0 admits only the split bundle; p must be 0")
    return BundleSpec(k, j, p, p_raw=p)


def normal_form_range(k: int, j: int) -> list[tuple[int, int]]:
    """All ``(s, r)`` allowed in the canonical form of ``p``."""
    out = []
    for r in range(1, (2 * j - 2) // k + 1):
        for s in range(k * r - j + 1, j):
            out.append((s, r))
    return out


def in_normal_range(k: int, j: int, s: int, r: int) -> bool:
    return 1 <= r <= (2 * j - 2) // k and k * r - j + 1 <= s <= j - 1


def normalize_p(spec: BundleSpec) -> BundleSpec:
    """Drop the terms of ``p`` outside the canonical index range.

    Valid only when ``u | p``, which :func:`validate` guarantees.
    """
    k, j = spec.k, spec.j
    kept = {(s, r): c for (s, r), c in spec.p.items() if in_normal_range(k, j, s, r)}
    raw = spec.p_raw if spec.p_raw is not None else spec.p
    return replace(spec, p=LaurentPoly(kept), p_raw=raw)


def make_spec(k: int, j: int, p) -> BundleSpec:
    """Validate then normalize."""
    return normalize_p(validate(k, j, p))


def transition_matrix(spec: BundleSpec) -> list[list[LaurentPoly]]:
    zero = LaurentPoly.zero()
    return [[zpow(spec.j), spec.p], [zero, zpow(-spec.j)]]


def apply_transition(spec: BundleSpec, a, b) -> tuple[LaurentPoly, LaurentPoly]:
    a, b = as_laurent(a), as_laurent(b)
    return zpow(spec.j) * a + spec.p * b, zpow(-spec.j) * b
