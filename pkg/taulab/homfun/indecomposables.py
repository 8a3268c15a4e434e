"""
Indecomposable modules of an algebra, up to isomorphism.

Nakayama-shaped algebras use the uniserial family. Otherwise the projectives, injectives
and simples are closed under tau and tau^-1; this reaches every indecomposable of a
representation-directed algebra.
"""
import logging

from taulab.algebra.algebra import Algebra
from taulab.config import get_settings
from taulab.exceptions import BoundExceeded
from taulab.homfun.transpose import ar_translate, ar_translate_inv
from taulab.modrep.constructions import injective_module, projective_module, simple_module
from taulab.modrep.decompose import decompose
from taulab.modrep.hom import is_isomorphic
from taulab.modrep.nakayama import describe, uniserial_modules
from taulab.modrep.rep import Rep

logger = logging.getLogger(__name__)


def _known(found: list[Rep], m: Rep, seed: int | None) -> bool:
    return any(is_isomorphic(x, m, seed) for x in found)


def enumerate_indecomposables(a: Algebra, seed: int | None = None) -> list[Rep]:
    if a.is_nakayama_shaped:
        return uniserial_modules(a)
    limit = get_settings().enumeration_limit
    found: list[Rep] = []
    queue: list[Rep] = []
    for build in (projective_module, injective_module, simple_module):
        queue.extend(build(a, v) for v in range(a.vertex_count))
    while queue:
        m = queue.pop(0)
        for piece in decompose(m, seed):
            if _known(found, piece, seed):
                continue
            if len(found) >= limit:
                raise BoundExceeded(f"{a.label} has more than {limit} indecomposables")
            if not piece.label:
                piece = piece.with_label(describe(piece, seed))
            found.append(piece)
            queue.append(ar_translate(piece))
            queue.append(ar_translate_inv(piece))
    logger.info("%s: %d indecomposables", a.label, len(found))
    return found
