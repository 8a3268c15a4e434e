"""
The transpose and the Auslander-Reiten translates.

For a minimal presentation P1 -> P0 -> M with entries X[r][s] in e_{j_s}Ae_{i_r},
Hom(e_iA, A) is identified with Ae_i, the projective of the opposite algebra at i, and
the dual map sends the generator of the s-th summand of P0* to the element whose
r-th component is X[r][s].
"""
import logging

import numpy as np

from taulab.modrep.constructions import k_dual
from taulab.modrep.covers import free_module, map_from_generators, minimal_presentation
from taulab.modrep.rep import Rep

logger = logging.getLogger(__name__)


def transpose(m: Rep) -> Rep:
    a = m.algebra
    op = a.opposite
    pres = minimal_presentation(m)
    x = pres.element_matrix()
    f0 = free_module(op, pres.p0.tops)
    f1 = free_module(op, pres.p1.tops)
    images = []
    for s, j in enumerate(pres.p0.tops):
        vec = np.zeros(f1.rep.dims[j], dtype=np.int64)
        for r, i in enumerate(pres.p1.tops):
            vec[f1.slot(r, j)] = x[r][s][a.paths_between(j, i)]
        images.append(vec)
    dual_map = map_from_generators(f0, f1.rep, images)
    result = dual_map.cokernel()[0]
    label = "0" if result.is_zero else (f"Tr({m.label})" if m.label else "")
    logger.debug("Tr of dims %s has dims %s", list(m.dims), list(result.dims))
    return result.with_label(label)


def ar_translate(m: Rep) -> Rep:
    """tau = D Tr."""
    result = k_dual(transpose(m))
    return result.with_label("0" if result.is_zero else (f"τ({m.label})" if m.label else ""))


def ar_translate_inv(m: Rep) -> Rep:
    """tau^-1 = Tr D."""
    result = transpose(k_dual(m))
    return result.with_label("0" if result.is_zero else (f"τ⁻¹({m.label})" if m.label else ""))
