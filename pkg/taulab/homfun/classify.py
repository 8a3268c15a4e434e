import logging

from taulab.algebra.algebra import Algebra
from taulab.homfun.dominant import dominant_dimension
from taulab.homfun.duality import is_reflexive, is_torsionless
from taulab.homfun.ext import ext_dims, iwanaga_gorenstein_degree
from taulab.homfun.perfect import is_tau_inv_perfect, is_tau_perfect
from taulab.homfun.transpose import transpose
from taulab.modrep.constructions import regular_module
from taulab.modrep.covers import is_injective, is_projective
from taulab.modrep.rep import Rep, check_same_algebra
from taulab.schemas.report import ClassReport

logger = logging.getLogger(__name__)


def classify_module(m: Rep, ig_degree: int | None, seed: int | None = None) -> ClassReport:
    a = m.algebra
    projective, injective = is_projective(m), is_injective(m)
    exts = ext_dims(m, regular_module(a), max(2, ig_degree or 0))
    gp = None
    if ig_degree is not None:
        gp = all(exts[i] == 0 for i in range(1, ig_degree + 1))
    return ClassReport(
        module=m.label or f"dims{list(m.dims)}",
        dims=list(m.dims),
        projective=projective,
        injective=injective,
        ext1_A=exts[1],
        ext2_A=exts[2],
        tr_reflexive=is_reflexive(transpose(m)),
        tau_perfect=None if projective else is_tau_perfect(m, seed),
        tau_inv_perfect=None if injective else is_tau_inv_perfect(m, seed),
        reflexive=is_reflexive(m),
        torsionless=is_torsionless(m),
        gorenstein_projective=gp,
        dominant_dim=dominant_dimension(m).to_json(),
    )


def classify(a: Algebra, modules: list[Rep], seed: int | None = None) -> list[ClassReport]:
    """One row per indecomposable module."""
    if modules:
        check_same_algebra(a, *(m.algebra for m in modules))
    degree = iwanaga_gorenstein_degree(a)
    rows = [classify_module(m, degree, seed) for m in modules]
    logger.info("classified %d modules over %s", len(rows), a.label)
    return rows
