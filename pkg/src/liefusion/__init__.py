"""Exact root systems, weight multiplicities, tensor products and affine fusion
rules for the simple Lie algebras, with explicit F4 module computations."""
from .fusion import (
    LAMBDA4,
    admissible_set,
    casimir,
    central_charge,
    conformal,
    coset_defect,
    fusion,
    fusion_closure,
    fusion_general,
    fusion_unit_charge,
    kac_walton,
    lambda4_rule,
    virasoro_c,
)
from .reduction import (
    check_compression,
    classify_difference,
    fundamental_table,
    reduce_to_fundamental,
    verify_compression_cases,
)
from .repbuilder import build_module, chevalley_basis, fusion_via_kspace, kspace
from .rootsystem import LieType, OrthoVec, RootSystem, Weight, build, fundamental_weight
from .tensor import decompose, hom_dim
from .weights import dim, multiplicity, weight_system, weyl_orbit

__all__ = [
    "LAMBDA4", "LieType", "OrthoVec", "RootSystem", "Weight",
    "admissible_set", "build", "build_module", "casimir", "central_charge", "check_compression",
    "chevalley_basis", "classify_difference", "conformal", "coset_defect", "decompose", "dim",
    "fundamental_table", "fundamental_weight", "fusion", "fusion_closure", "fusion_general",
    "fusion_unit_charge", "fusion_via_kspace", "hom_dim", "kac_walton", "kspace", "lambda4_rule",
    "multiplicity", "reduce_to_fundamental", "verify_compression_cases", "virasoro_c",
    "weight_system", "weyl_orbit",
]
