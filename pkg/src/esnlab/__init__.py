"""Finite inverse semigroups, inductive groupoids, their double versions, and
the presheaf decomposition, everything checked by exhaustive scan at small
orders."""

__version__ = "0.1.0"

from .tables import CayleyTable, parse_table, parse_double
from .inverse import InverseSemigroupAnalysis, analyze_inverse
from .esn import InductiveGroupoid, ig_from_is, is_from_ig
from .double import DoubleSemigroup, DoubleInductiveGroupoid, dig_from_dis, dis_from_dig
from .presheaf import AbelianGroupPresheaf, compose, decompose

__all__ = [
    "CayleyTable",
    "parse_table",
    "parse_double",
    "InverseSemigroupAnalysis",
    "analyze_inverse",
    "InductiveGroupoid",
    "ig_from_is",
    "is_from_ig",
    "DoubleSemigroup",
    "DoubleInductiveGroupoid",
    "dig_from_dis",
    "dis_from_dig",
    "AbelianGroupPresheaf",
    "compose",
    "decompose",
]
