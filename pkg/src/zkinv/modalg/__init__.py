"""Commutative algebra over the cone ring: Gröbner bases, syzygies, duals, lengths."""

from .linalg import exact_rank, nullity, nullspace, sparse_rank
from .modules import (
    InfiniteLength,
    LiftingBasis,
    ModulePresentation,
    eval_and_coker_length,
    evaluation,
    hom_dual,
    module_groebner,
    prune_generators,
    standard_monomials,
    syzygies,
)
from .ring import ConeRing, make_ring

__all__ = [
    "ConeRing", "make_ring", "exact_rank", "nullity", "nullspace", "sparse_rank",
    "InfiniteLength", "LiftingBasis", "ModulePresentation", "eval_and_coker_length",
    "evaluation", "hom_dual", "module_groebner", "prune_generators",
    "standard_monomials", "syzygies",
]
