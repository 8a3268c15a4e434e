"""Summary facts about an algebra: dimensions, Gorenstein degree, dominant dimension and f."""
import logging

from taulab.algebra.algebra import Algebra
from taulab.config import get_settings
from taulab.exceptions import NoFaithfulProjInj
from taulab.homfun.dominant import dominant_dimension_algebra, minimal_faithful_proj_inj, projective_injective_vertices
from taulab.homfun.ext import injective_dimensions, is_selfinjective, iwanaga_gorenstein_degree
from taulab.schemas.report import AlgebraInfo

logger = logging.getLogger(__name__)


def vertex_set(vertices) -> str:
    return "{" + ",".join(str(v) for v in vertices) + "}"


def algebra_info(a: Algebra) -> AlgebraInfo:
    right, left = injective_dimensions(a)
    degree = iwanaga_gorenstein_degree(a)
    selfinjective = is_selfinjective(a)
    domdim = dominant_dimension_algebra(a)
    try:
        f = list(minimal_faithful_proj_inj(a))
    except NoFaithfulProjInj:
        f = None

    parts = [f"dim {a.dim}"]
    if a.is_semisimple:
        parts.append("semisimple")
    if selfinjective:
        parts.append("selfinjective")
    if degree is not None:
        parts.append(f"{degree}-Iwanaga-Gorenstein")
    else:
        parts.append(f"not Iwanaga-Gorenstein up to {get_settings().max_resolution}")
    parts.append(f"dominant dimension {domdim}")
    parts.append(f"f = {vertex_set(f)}" if f is not None else "no projective-injective module")
    logger.info("%s: %s", a.label, ", ".join(parts))

    return AlgebraInfo(
        label=a.label,
        field=a.p,
        dim=a.dim,
        vertices=a.vertex_count,
        kupisch=a.kupisch.label if a.kupisch else None,
        semisimple=a.is_semisimple,
        selfinjective=selfinjective,
        injective_dimensions=[right, left],
        ig_degree=degree,
        dominant_dimension=domdim.to_json(),
        f=f,
        projective_injective=list(projective_injective_vertices(a)),
        summary=", ".join(parts),
    )
