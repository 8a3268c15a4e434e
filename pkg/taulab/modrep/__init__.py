from taulab.modrep.constructions import (
    injective_module,
    k_dual,
    k_dual_map,
    projective_module,
    quotient,
    radical,
    radical_power,
    regular_module,
    simple_module,
    socle,
    submodule,
    top,
)
from taulab.modrep.covers import (
    FreeModule,
    Presentation,
    cosyzygy,
    injective_envelope,
    is_injective,
    is_projective,
    minimal_presentation,
    projective_cover,
    syzygy,
)
from taulab.modrep.decompose import (
    costably_isomorphic,
    decompose,
    hom_fingerprint,
    is_indecomposable,
    iso_classes,
    same_summands,
    stably_isomorphic,
    strip_injectives,
    strip_projectives,
)
from taulab.modrep.expressions import parse_module
from taulab.modrep.hom import find_isomorphism, hom_basis, hom_dim, is_isomorphic
from taulab.modrep.nakayama import describe, nakayama_indecomposables, pj_module, uniserial_modules
from taulab.modrep.rep import ModMap, Rep, direct_sum, zero_module

__all__ = [
    "FreeModule",
    "ModMap",
    "Presentation",
    "Rep",
    "cosyzygy",
    "costably_isomorphic",
    "decompose",
    "describe",
    "direct_sum",
    "find_isomorphism",
    "hom_basis",
    "hom_dim",
    "hom_fingerprint",
    "injective_envelope",
    "injective_module",
    "is_indecomposable",
    "is_injective",
    "is_isomorphic",
    "is_projective",
    "iso_classes",
    "k_dual",
    "k_dual_map",
    "minimal_presentation",
    "nakayama_indecomposables",
    "parse_module",
    "pj_module",
    "projective_cover",
    "projective_module",
    "quotient",
    "radical",
    "radical_power",
    "regular_module",
    "same_summands",
    "simple_module",
    "socle",
    "stably_isomorphic",
    "strip_injectives",
    "strip_projectives",
    "submodule",
    "syzygy",
    "top",
    "uniserial_modules",
    "zero_module",
]
