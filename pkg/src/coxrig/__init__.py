"""Coxeter systems: finite-type recognition, the rigid class (0)-(3),
GF(2) abelianization images, and a brute-force rigidity oracle."""

from .finite_type import (FiniteTypeLabel, classify_finite_type, coxeter_order, is_spherical,
                          maximal_independent_subsets, maximal_spherical_subsets)
from .gf2 import GF2Subspace, odd_components, pi_image
from .group_engine import CapExceeded, RegularRealization, todd_coxeter
from .matrix import (INF, CoxeterMatrix, CoxeterParseError, diagram_isomorphic, direct_sum,
                     induced_submatrix, parse_coxeter_file, preset, serialize)
from .oracle import Limits, construct_psi, rigidity_verdict
from .rigidity_class import ClassReport, check_class_membership, odd_partner_structure

__all__ = [
    "INF", "CoxeterMatrix", "CoxeterParseError", "parse_coxeter_file", "serialize", "preset",
    "direct_sum", "induced_submatrix", "diagram_isomorphic",
    "FiniteTypeLabel", "classify_finite_type", "coxeter_order", "is_spherical",
    "maximal_spherical_subsets", "maximal_independent_subsets",
    "ClassReport", "check_class_membership", "odd_partner_structure",
    "GF2Subspace", "odd_components", "pi_image",
    "RegularRealization", "todd_coxeter", "CapExceeded",
    "Limits", "rigidity_verdict", "construct_psi",
]
