"""Exact-arithmetic toolkit for finite n-racks and n-quandles: axiom
validation, constructions, rack/degenerate/quandle (co)homology via Smith
normal form, associated group presentations, Leibniz n-algebra checks, and
enumeration of small structures."""

from .constructions import (
    FiniteGroup,
    FiniteRack,
    GroupModule,
    GroupPresentation,
    abelianization,
    associated_group_presentation,
    build_conjugation_nrack,
    build_gamma_module_nrack,
    build_module_group_nrack,
    build_z4_module_nrack,
    check_relator_preservation,
    cyclic_group,
    dihedral_group,
    lift_rack_to_nrack,
    reduce_nrack_to_rack,
    symmetric_group,
    validate_rack,
)
from .core import (
    Classification,
    FiniteNRack,
    InnerMap,
    ValidationReport,
    check_inner_is_automorphism,
    check_left_distributive,
    check_pointed,
    check_translation_bijective,
    classify,
    find_isomorphism,
    inner_map,
    is_homomorphism,
    orbits,
    validate,
)
from .enumeration import EnumerationReport, enumerate_nracks
from .errors import BudgetExceededError, ConstructionError, SubcomplexError
from .homology import (
    ChainComplex,
    CoefficientGroup,
    HomologyResult,
    cohomology,
    degenerate_subcomplex,
    homology,
    quandle_quotient_complex,
    rack_chain_complex,
)
from .leibniz import (
    LeibnizNAlgebra,
    LinearOperator,
    adjoint,
    bracket,
    check_derivation,
    check_filippov,
    check_fundamental_identity,
    check_self_derivation,
    levi_civita_nalgebra,
)
from .snf import AbelianGroupInvariants, invariant_factors, smith_normal_form

__all__ = [
    "AbelianGroupInvariants",
    "BudgetExceededError",
    "ChainComplex",
    "Classification",
    "CoefficientGroup",
    "ConstructionError",
    "EnumerationReport",
    "FiniteGroup",
    "FiniteNRack",
    "FiniteRack",
    "GroupModule",
    "GroupPresentation",
    "HomologyResult",
    "InnerMap",
    "LeibnizNAlgebra",
    "LinearOperator",
    "SubcomplexError",
    "ValidationReport",
    "abelianization",
    "adjoint",
    "associated_group_presentation",
    "bracket",
    "build_conjugation_nrack",
    "build_gamma_module_nrack",
    "build_module_group_nrack",
    "build_z4_module_nrack",
    "check_derivation",
    "check_filippov",
    "check_fundamental_identity",
    "check_inner_is_automorphism",
    "check_left_distributive",
    "check_pointed",
    "check_relator_preservation",
    "check_self_derivation",
    "check_translation_bijective",
    "classify",
    "cohomology",
    "cyclic_group",
    "degenerate_subcomplex",
    "dihedral_group",
    "enumerate_nracks",
    "find_isomorphism",
    "homology",
    "inner_map",
    "invariant_factors",
    "is_homomorphism",
    "levi_civita_nalgebra",
    "lift_rack_to_nrack",
    "orbits",
    "quandle_quotient_complex",
    "rack_chain_complex",
    "reduce_nrack_to_rack",
    "smith_normal_form",
    "symmetric_group",
    "validate",
    "validate_rack",
]
