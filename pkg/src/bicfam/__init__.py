"""Bicyclic-monoid extensions over closed families of eventually periodic sets.

The package models subsets of the naturals with eventually periodic
membership, closes finite families of them under shifted intersections,
and realizes the inverse semigroup of index-pair triples over such a
family: multiplication, inverses, the natural partial order, Green's
relations, the least group congruence, structural classification, and a
brute-force harness that re-verifies every closed-form characterization
on finite windows.
"""

from .classify import (Classification, IsoKind, IsoType, classify,
                       find_bicyclic_copy, identity_element, is_bisimple,
                       is_e_unitary, is_simple, is_zero_bisimple,
                       is_zero_simple, iso_type, map_to_bicyclic,
                       map_to_matrix_units)
from .family import (OmegaFamily, close, family_union, format_family,
                     from_members, is_closed, parse_family)
from .natset import (EMPTY, OMEGA, NatSet, SetParseError, enumerate_sets,
                     format_set, make_finite, make_progression, make_tail,
                     min_shift_superset, parse_set)
from .semigroup import (GREEN_RELATIONS, ZERO, Element, SemigroupCtx, Triple,
                        Zero, format_element, inverse, is_idempotent,
                        parse_element, sigma_image)

__all__ = [
    "Classification", "IsoKind", "IsoType", "classify", "find_bicyclic_copy",
    "identity_element", "is_bisimple", "is_e_unitary", "is_simple",
    "is_zero_bisimple", "is_zero_simple", "iso_type", "map_to_bicyclic",
    "map_to_matrix_units",
    "OmegaFamily", "close", "family_union", "format_family", "from_members",
    "is_closed", "parse_family",
    "EMPTY", "OMEGA", "NatSet", "SetParseError", "enumerate_sets",
    "format_set", "make_finite", "make_progression", "make_tail",
    "min_shift_superset", "parse_set",
    "GREEN_RELATIONS", "ZERO", "Element", "SemigroupCtx", "Triple", "Zero",
    "format_element", "inverse", "is_idempotent", "parse_element",
    "sigma_image",
]
