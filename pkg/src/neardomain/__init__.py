"""Finite right near-domains, phi-systems and sharply 2-transitive groups."""
from .core import GroupTable, Report, StructureError, ValidationFailed, validate_group
from .equivalence import a_map, f_map, iso_check_phi
from .fields import field_make, field_of_order, mul_group_of_field
from .near_domain import NearDomain, classify, lemma_closed_forms, validate_near_domain
from .phi import PhiSystem, check_derived_identities, standard_phi_system, validate_phi
from .two_transitive import PermutationAction, build_group, from_group

__all__ = [
    "GroupTable", "Report", "StructureError", "ValidationFailed", "validate_group",
    "a_map", "f_map", "iso_check_phi",
    "field_make", "field_of_order", "mul_group_of_field",
    "NearDomain", "classify", "lemma_closed_forms", "validate_near_domain",
    "PhiSystem", "check_derived_identities", "standard_phi_system", "validate_phi",
    "PermutationAction", "build_group", "from_group",
]
