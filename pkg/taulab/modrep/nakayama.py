"""Uniserial modules e_iA/e_iJ^k and human-readable names for decomposed modules."""
import logging

from taulab.algebra.algebra import Algebra
from taulab.exceptions import InvalidInput, NotNakayama
from taulab.modrep.constructions import injective_module, projective_module, radical_power, simple_module, top
from taulab.modrep.decompose import decompose
from taulab.modrep.hom import is_isomorphic
from taulab.modrep.rep import Rep

logger = logging.getLogger(__name__)


def pj_module(a: Algebra, i: int, k: int) -> Rep:
    """e_iA / e_iJ^k, labelled PJ(i,k)."""
    p = projective_module(a, i)
    if not 1 <= k <= p.total_dim:
        raise InvalidInput(f"PJ({i},{k}) needs 1 <= k <= {p.total_dim}")
    _, inclusion = radical_power(p, k)
    return inclusion.cokernel()[0].with_label(f"PJ({i},{k})")


def uniserial_modules(a: Algebra) -> list[Rep]:
    """All e_iA/e_iJ^k; on a Nakayama-shaped algebra these are the indecomposables."""
    out = []
    for i in range(a.vertex_count):
        length = projective_module(a, i).total_dim
        out.extend(pj_module(a, i, k) for k in range(1, length + 1))
    return out


def nakayama_indecomposables(a: Algebra) -> list[Rep]:
    if a.kupisch is None:
        raise NotNakayama(f"{a.label} was not built from a Kupisch series")
    mods = uniserial_modules(a)
    logger.debug("%s has %d indecomposables", a.label, len(mods))
    return mods


def top_vertex(m: Rep) -> int | None:
    """The vertex of a simple top, or None when the top is not simple."""
    dims = top(m)[0].dims
    if sum(dims) != 1:
        return None
    return dims.index(1)


def _name_piece(piece: Rep, a: Algebra, seed: int | None) -> tuple:
    if a.is_nakayama_shaped:
        v = top_vertex(piece)
        if v is not None:
            return (0, v, piece.total_dim), f"PJ({v},{piece.total_dim})"
    for kind, build in enumerate((projective_module, injective_module, simple_module), start=1):
        for v in range(a.vertex_count):
            candidate = build(a, v)
            if is_isomorphic(piece, candidate, seed):
                return (kind, v, 0), candidate.label
    return (4, piece.dims, 0), f"dims{list(piece.dims)}"


def summand_labels(m: Rep, seed: int | None = None) -> list[str]:
    if m.is_zero:
        return []
    return [label for _, label in sorted(_name_piece(x, m.algebra, seed) for x in decompose(m, seed))]


def describe(m: Rep, seed: int | None = None) -> str:
    """Direct sum of named indecomposables, "0" for the zero module."""
    return " ⊕ ".join(summand_labels(m, seed)) or "0"
