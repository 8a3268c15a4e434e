"""
Ext groups from minimal projective resolutions, and the homological dimensions built on them.

Hom(P_k, N) is identified with the direct sum of the components N e_{i_r}, one per summand
e_{i_r}A of P_k, so a cochain is a tuple of vectors and the coboundary is assembled from
the right action of the differential's entries on N.
"""
import logging
import numpy as np

from taulab.algebra.algebra import Algebra
from taulab.config import get_settings
from taulab.exceptions import BoundExceeded, NotGorenstein
from taulab.modrep.constructions import regular_module
from taulab.modrep.covers import (
    FreeModule,
    cosyzygy,
    element_matrix,
    free_module,
    is_injective,
    is_projective,
    projective_cover,
    syzygy,
)
from taulab.modrep.rep import ModMap, Rep, check_same_algebra

logger = logging.getLogger(__name__)


class Resolution:
    """Minimal projective resolution P_k -> ... -> P_0 -> M, extended on demand."""

    def __init__(self, m: Rep, bound: int | None = None):
        self.module = m
        self.bound = bound or get_settings().max_resolution
        cover, eps = projective_cover(m)
        self.terms: list[FreeModule] = [cover]
        self.differentials: list[ModMap | None] = [None]
        self._kernel = eps.kernel()

    def extend_to(self, k: int) -> None:
        a = self.module.algebra
        while len(self.terms) <= k:
            stage = len(self.terms)
            if stage > self.bound:
                raise BoundExceeded(f"projective resolution of {self.module.label or 'module'} longer than {self.bound}")
            kernel, inclusion = self._kernel
            if kernel.is_zero:
                free = free_module(a, ())
                self.terms.append(free)
                self.differentials.append(ModMap.zero(free.rep, self.terms[-2].rep))
                continue
            cover, eps = projective_cover(kernel)
            self.terms.append(cover)
            self.differentials.append(inclusion.compose(eps))
            self._kernel = eps.kernel()
            logger.debug("resolution step %d: %d summands", stage, len(cover.tops))

    def term(self, k: int) -> FreeModule:
        self.extend_to(k)
        return self.terms[k]

    def element_matrix(self, k: int) -> list[list[np.ndarray]]:
        """Entries of d_k: P_k -> P_{k-1}."""
        self.extend_to(k)
        return element_matrix(self.differentials[k], self.terms[k], self.terms[k - 1])


def _cochain_dims(free: FreeModule, n: Rep) -> list[int]:
    return [n.dims[i] for i in free.tops]


def _coboundary(res: Resolution, k: int, n: Rep) -> np.ndarray:
    """delta: Hom(P_{k-1}, N) -> Hom(P_k, N), f -> f o d_k."""
    source, target = res.term(k - 1), res.term(k)
    cols, rows = _cochain_dims(source, n), _cochain_dims(target, n)
    out = np.zeros((sum(rows), sum(cols)), dtype=np.int64)
    if out.size == 0:
        return out
    x = res.element_matrix(k)
    row_start = np.cumsum([0] + rows)
    col_start = np.cumsum([0] + cols)
    for r, i in enumerate(target.tops):
        for s, j in enumerate(source.tops):
            if not x[r][s].any() or not n.dims[i] or not n.dims[j]:
                continue
            block = n.act(x[r][s])[n.block(i), n.block(j)]
            out[row_start[r]:row_start[r + 1], col_start[s]:col_start[s + 1]] = block
    return out % n.algebra.p


def ext_dims(m: Rep, n: Rep, up_to: int, resolution: Resolution | None = None) -> list[int]:
    """[dim Ext^0(M, N), ..., dim Ext^up_to(M, N)]."""
    check_same_algebra(m.algebra, n.algebra)
    res = resolution or Resolution(m)
    res.extend_to(up_to + 1)
    field = m.field
    ranks = [0] + [field.rank(_coboundary(res, k, n)) for k in range(1, up_to + 2)]
    return [sum(_cochain_dims(res.term(i), n)) - ranks[i + 1] - ranks[i] for i in range(up_to + 1)]


def ext_dim(m: Rep, n: Rep, i: int) -> int:
    if i < 0:
        raise ValueError("Ext degree must be non-negative")
    return ext_dims(m, n, i)[i]


def ext_vanishes(m: Rep, degrees, n: Rep | None = None) -> bool:
    """Whether Ext^i(M, N) = 0 for every i in degrees; N defaults to the regular module."""
    degrees = list(degrees)
    if not degrees:
        return True
    target = n if n is not None else regular_module(m.algebra)
    dims = ext_dims(m, target, max(degrees))
    return all(dims[i] == 0 for i in degrees)


def projective_dimension(m: Rep) -> int:
    bound = get_settings().max_resolution
    current = m
    for k in range(bound + 1):
        if is_projective(current):
            return k
        current = syzygy(current)
    raise BoundExceeded(f"projective dimension of {m.label or 'module'} exceeds {bound}")


def injective_dimension(m: Rep) -> int:
    bound = get_settings().max_resolution
    current = m
    for k in range(bound + 1):
        if is_injective(current):
            return k
        current = cosyzygy(current)
    raise BoundExceeded(f"injective dimension of {m.label or 'module'} exceeds {bound}")


def injective_dimensions(a: Algebra) -> tuple[int | None, int | None]:
    """Injective dimension of A_A and of the regular module of A^op; None past the bound."""
    key = ("injective_dimensions", get_settings().max_resolution)
    if key not in a.invariants:
        a.invariants[key] = _injective_dimensions(a)
    return a.invariants[key]


def _injective_dimensions(a: Algebra) -> tuple[int | None, int | None]:
    out = []
    for side in (a, a.opposite):
        try:
            out.append(injective_dimension(regular_module(side)))
        except BoundExceeded:
            logger.warning("self-injective dimension of %s exceeds the resolution bound", side.label)
            out.append(None)
    return out[0], out[1]


def iwanaga_gorenstein_degree(a: Algebra) -> int | None:
    right, left = injective_dimensions(a)
    if right is None or left is None:
        return None
    if right != left:
        logger.warning("%s has one-sided self-injective dimensions %d and %d", a.label, right, left)
        return None
    return right


def is_selfinjective(a: Algebra) -> bool:
    key = ("selfinjective",)
    if key not in a.invariants:
        a.invariants[key] = is_injective(regular_module(a))
    return a.invariants[key]


def is_gorenstein_projective(m: Rep) -> bool:
    """Ext^i(M, A) = 0 for 1 <= i <= n over an n-Iwanaga-Gorenstein algebra."""
    n = iwanaga_gorenstein_degree(m.algebra)
    if n is None:
        raise NotGorenstein(f"{m.algebra.label} is not Iwanaga-Gorenstein within the resolution bound")
    return ext_vanishes(m, range(1, n + 1))
