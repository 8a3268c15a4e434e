from taulab.homfun.classify import classify, classify_module
from taulab.homfun.dominant import (
    DominantDimension,
    dominant_dimension,
    dominant_dimension_algebra,
    f_restrict,
    minimal_faithful_proj_inj,
    projective_injective_vertices,
)
from taulab.homfun.duality import (
    a_dual,
    evaluation_map,
    is_coreflexive,
    is_reflexive,
    is_torsionless,
    nu,
    nu_inv,
)
from taulab.homfun.ext import (
    Resolution,
    ext_dim,
    ext_dims,
    ext_vanishes,
    injective_dimension,
    injective_dimensions,
    is_gorenstein_projective,
    is_selfinjective,
    iwanaga_gorenstein_degree,
    projective_dimension,
)
from taulab.homfun.indecomposables import enumerate_indecomposables
from taulab.homfun.perfect import in_per_tau, is_tau_inv_perfect, is_tau_perfect, omega_nu_commutes
from taulab.homfun.transpose import ar_translate, ar_translate_inv, transpose

__all__ = [
    "DominantDimension",
    "Resolution",
    "a_dual",
    "ar_translate",
    "ar_translate_inv",
    "classify",
    "classify_module",
    "dominant_dimension",
    "dominant_dimension_algebra",
    "enumerate_indecomposables",
    "evaluation_map",
    "ext_dim",
    "ext_dims",
    "ext_vanishes",
    "f_restrict",
    "in_per_tau",
    "injective_dimension",
    "injective_dimensions",
    "is_coreflexive",
    "is_gorenstein_projective",
    "is_reflexive",
    "is_selfinjective",
    "is_tau_inv_perfect",
    "is_tau_perfect",
    "is_torsionless",
    "iwanaga_gorenstein_degree",
    "minimal_faithful_proj_inj",
    "nu",
    "nu_inv",
    "omega_nu_commutes",
    "projective_dimension",
    "projective_injective_vertices",
    "transpose",
]
