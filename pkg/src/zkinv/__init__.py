"""Local invariants of rank-2 bundles on the surfaces ``Z_k``."""

from .bundle import (
    BundleError,
    BundleSpec,
    IllPosed,
    InvalidJ,
    InvalidK,
    InvariantReport,
    NonzeroPForJZero,
    make_spec,
    normalize_p,
    validate,
)
from .poly import LaurentPoly, PolySyntaxError, parse_laurent

__all__ = [
    "BundleError",
    "BundleSpec",
    "IllPosed",
    "InvalidJ",
    "InvalidK",
    "InvariantReport",
    "LaurentPoly",
    "NonzeroPForJZero",
    "PolySyntaxError",
    "make_spec",
    "normalize_p",
    "parse_laurent",
    "validate",
]

__version__ = "0.1.0"
