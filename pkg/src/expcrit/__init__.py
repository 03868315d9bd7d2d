"""Exponent-critical finite groups: decision procedures, constructions and audits."""

from .core import FiniteGroup, Permutation, direct_product, semidirect_product
from .dsl import build, parse_spec
from .errors import CapExceeded, ExpCritError
from .structure import Subgroup, all_subgroups, maximal_subgroups
from .witness import analyze, classify_pgroup, find_p_witness, is_exponent_critical, p_part

__all__ = [
    "FiniteGroup",
    "Permutation",
    "Subgroup",
    "CapExceeded",
    "ExpCritError",
    "all_subgroups",
    "analyze",
    "build",
    "classify_pgroup",
    "direct_product",
    "find_p_witness",
    "is_exponent_critical",
    "maximal_subgroups",
    "p_part",
    "parse_spec",
    "semidirect_product",
]

__version__ = "0.1.0"
