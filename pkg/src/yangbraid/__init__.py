"""Exact braid-group actions on Yangian and quantum loop character data."""

from .cartan import CartanData, LieType, cartan_data, kappa, longest_word, longest_words
from .errors import (
    EquivalenceViolation,
    IllegalType,
    InternalInconsistency,
    NonzeroChainSum,
    NonzeroDegree,
    NotLongestElement,
    NotPolynomial,
    NotReduced,
    PolynomialityViolation,
    SingularMatrix,
    TruncationTooSmall,
    YangBraidError,
)
from .exact import GlobalParams, Poly, RootMultiset

__all__ = [
    "CartanData",
    "EquivalenceViolation",
    "GlobalParams",
    "IllegalType",
    "InternalInconsistency",
    "LieType",
    "NonzeroChainSum",
    "NonzeroDegree",
    "NotLongestElement",
    "NotPolynomial",
    "NotReduced",
    "Poly",
    "PolynomialityViolation",
    "RootMultiset",
    "SingularMatrix",
    "TruncationTooSmall",
    "YangBraidError",
    "cartan_data",
    "kappa",
    "longest_word",
    "longest_words",
]
