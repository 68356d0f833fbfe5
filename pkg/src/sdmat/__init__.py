"""Endomorphisms of semidirect products as 2x2 matrices of maps.

A finite group H acted on by K through automorphisms yields the product
group H x| K.  Its endomorphisms correspond to matrices (alpha, beta;
gamma, delta) of maps between the factors, multiplied by a twisted
analogue of the usual row-by-column rule.  This package builds the
products, enumerates the matrices, computes both one-sided determinants
with their closed-form inverses, factors automorphisms into four
elementary families, and verifies all of it against brute force.
"""

from .catalog import (
    DEFAULT_INSTANCES,
    CatalogEntry,
    build_instance,
    catalog_entries,
    cyclic_group,
    group_from_dict,
    group_to_dict,
    load_action,
    load_group,
    load_matrix,
    matrix_from_dict,
    matrix_to_dict,
    save_group,
    save_matrix,
    trivial_group,
)
from .cli import cli_main
from .determinant import (
    DetResult,
    InvertibilityResult,
    det_h,
    det_k,
    dual_det_inverses,
    invert_combined,
    invert_via_det_h,
    invert_via_det_k,
    is_invertible,
)
from .errors import (
    AlphaNotInvertible,
    BoundExceeded,
    ConditionsViolated,
    ContextMismatch,
    DeltaNotInvertible,
    DetHNotInvertible,
    DetKNotInvertible,
    DiagonalNotInvertible,
    DomainMismatch,
    GroupMismatch,
    GroupValidationError,
    InvalidInstance,
    MissingInverse,
    NoIdentity,
    NotAssociative,
    NotAutomorphism,
    NotAutomorphismMatrix,
    NotBijective,
    NotHomomorphic,
    NotHomomorphism,
    PreconditionFailed,
    SdmatError,
    ShapeMismatch,
    VerificationFailed,
)
from .factorization import (
    ABCDFactors,
    SubsetTag,
    classify,
    factor_abcd,
    unit_diagonal_a_factor,
    unit_diagonal_b_factor,
)
from .groups import (
    FiniteGroup,
    Subset,
    center,
    enumerate_autos,
    enumerate_homs,
    greedy_generators,
    make_group,
)
from .maps import (
    Endo,
    FMap,
    constant_map,
    identity_map,
    is_crossed_hom,
    map_act,
    map_add,
    map_compose,
    map_inverse,
    map_neg,
    map_twist,
    twisted_hom_witness,
    zero_map,
)
from .matrices import (
    CONDITION_NAMES,
    ConditionCheck,
    ConditionReport,
    EndoMatrix,
    check_conditions,
    endo_to_matrix,
    enumerate_matrices,
    identity_matrix,
    is_automorphism_matrix,
    mat_mul,
    matrix_to_endo,
)
from .oracle import EndCensus, compose_endos, enumerate_endos, invert_endo
from .semidirect import (
    GroupAction,
    SdProduct,
    action_kernel,
    conj_action,
    make_action,
    semidirect,
    trivial_action,
)
from .verify import CHECK_NAMES, CheckResult, VerifyReport, run_verification

__version__ = "0.1.0"

__all__ = [
    "ABCDFactors",
    "AlphaNotInvertible",
    "BoundExceeded",
    "CHECK_NAMES",
    "CONDITION_NAMES",
    "CatalogEntry",
    "CheckResult",
    "ConditionCheck",
    "ConditionReport",
    "ConditionsViolated",
    "ContextMismatch",
    "DEFAULT_INSTANCES",
    "DeltaNotInvertible",
    "DetHNotInvertible",
    "DetKNotInvertible",
    "DetResult",
    "DiagonalNotInvertible",
    "DomainMismatch",
    "EndCensus",
    "Endo",
    "EndoMatrix",
    "FMap",
    "FiniteGroup",
    "GroupAction",
    "GroupMismatch",
    "GroupValidationError",
    "InvalidInstance",
    "InvertibilityResult",
    "MissingInverse",
    "NoIdentity",
    "NotAssociative",
    "NotAutomorphism",
    "NotAutomorphismMatrix",
    "NotBijective",
    "NotHomomorphic",
    "NotHomomorphism",
    "PreconditionFailed",
    "SdProduct",
    "SdmatError",
    "ShapeMismatch",
    "Subset",
    "SubsetTag",
    "VerificationFailed",
    "VerifyReport",
    "action_kernel",
    "build_instance",
    "catalog_entries",
    "center",
    "check_conditions",
    "classify",
    "cli_main",
    "compose_endos",
    "conj_action",
    "constant_map",
    "cyclic_group",
    "det_h",
    "det_k",
    "dual_det_inverses",
    "endo_to_matrix",
    "enumerate_autos",
    "enumerate_endos",
    "enumerate_homs",
    "enumerate_matrices",
    "factor_abcd",
    "greedy_generators",
    "group_from_dict",
    "group_to_dict",
    "identity_map",
    "identity_matrix",
    "invert_combined",
    "invert_endo",
    "invert_via_det_h",
    "invert_via_det_k",
    "is_automorphism_matrix",
    "is_crossed_hom",
    "is_invertible",
    "load_action",
    "load_group",
    "load_matrix",
    "make_action",
    "make_group",
    "map_act",
    "map_add",
    "map_compose",
    "map_inverse",
    "map_neg",
    "map_twist",
    "matrix_from_dict",
    "matrix_to_dict",
    "matrix_to_endo",
    "run_verification",
    "save_group",
    "save_matrix",
    "semidirect",
    "trivial_action",
    "trivial_group",
    "twisted_hom_witness",
    "unit_diagonal_a_factor",
    "unit_diagonal_b_factor",
    "zero_map",
]
