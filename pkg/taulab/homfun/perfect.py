"""
tau-perfect and tau^-1-perfect modules.

X is tau-perfect when tau(X) and nu(Omega^2 X) are isomorphic as modules; the syzygy is
taken literally from minimal covers, without removing projective summands.
"""
import logging

from taulab.exceptions import InvalidInput
from taulab.homfun.duality import nu, nu_inv
from taulab.homfun.transpose import ar_translate, ar_translate_inv
from taulab.modrep.covers import cosyzygy, is_injective, is_projective, syzygy
from taulab.modrep.decompose import decompose, is_indecomposable
from taulab.modrep.hom import is_isomorphic
from taulab.modrep.rep import Rep

logger = logging.getLogger(__name__)


def _require_indecomposable(m: Rep, seed: int | None) -> None:
    if not is_indecomposable(m, seed):
        raise InvalidInput(f"{m.label or 'module'} is not indecomposable")


def tau_perfect_sides(m: Rep) -> tuple[Rep, Rep]:
    return ar_translate(m), nu(syzygy(m, 2))


def is_tau_perfect(m: Rep, seed: int | None = None) -> bool:
    if is_projective(m):
        raise InvalidInput(f"{m.label or 'module'} is projective")
    _require_indecomposable(m, seed)
    left, right = tau_perfect_sides(m)
    return is_isomorphic(left, right, seed)


def is_tau_inv_perfect(m: Rep, seed: int | None = None) -> bool:
    if is_injective(m):
        raise InvalidInput(f"{m.label or 'module'} is injective")
    _require_indecomposable(m, seed)
    return is_isomorphic(ar_translate_inv(m), nu_inv(cosyzygy(m, 2)), seed)


def in_per_tau(m: Rep, seed: int | None = None) -> bool:
    """No projective summand, and every indecomposable summand tau-perfect."""
    pieces = decompose(m, seed)
    if any(is_projective(x) for x in pieces):
        return False
    return all(is_tau_perfect(x, seed) for x in pieces)


def omega_nu_commutes(m: Rep, seed: int | None = None) -> bool:
    """tau(X) = Omega^2 nu(X); true for every X over a selfinjective algebra."""
    return is_isomorphic(ar_translate(m), syzygy(nu(m), 2), seed)
