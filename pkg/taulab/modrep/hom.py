"""
Hom spaces and isomorphism search.

Hom(M, N) is the null space of the commutation system N_a X_s = X_t M_a over all
arrows a: s -> t, with the blocks X_v vectorised row-major.
"""
import itertools
import logging

import numpy as np

from taulab.config import get_settings
from taulab.exceptions import InvalidModule
from taulab.modrep.rep import ModMap, Rep, check_same_algebra

logger = logging.getLogger(__name__)


def _commutation_system(m: Rep, n: Rep) -> tuple[np.ndarray, list[int]]:
    a = m.algebra
    p = a.p
    sizes = [n.dims[v] * m.dims[v] for v in range(a.vertex_count)]
    offsets = list(itertools.accumulate([0] + sizes))
    rows = []
    for arrow in a.arrows:
        s, t = arrow.source, arrow.target
        height = n.dims[t] * m.dims[s]
        if height == 0:
            continue
        block = np.zeros((height, offsets[-1]), dtype=np.int64)
        left = np.kron(n.action[arrow.name], np.eye(m.dims[s], dtype=np.int64))
        right = np.kron(np.eye(n.dims[t], dtype=np.int64), m.action[arrow.name].T)
        block[:, offsets[s]:offsets[s + 1]] += left
        block[:, offsets[t]:offsets[t + 1]] -= right
        rows.append(block % p)
    system = np.vstack(rows) if rows else np.zeros((0, offsets[-1]), dtype=np.int64)
    return system, offsets


def hom_basis(m: Rep, n: Rep) -> list[ModMap]:
    check_same_algebra(m.algebra, n.algebra)
    system, offsets = _commutation_system(m, n)
    if offsets[-1] == 0:
        return []
    kernel = m.field.kernel_basis(system)
    maps = []
    for c in range(kernel.shape[1]):
        col = kernel[:, c]
        blocks = tuple(
            col[offsets[v]:offsets[v + 1]].reshape(n.dims[v], m.dims[v]) for v in range(len(m.dims))
        )
        maps.append(ModMap(m, n, blocks))
    return maps


def hom_dim(m: Rep, n: Rep) -> int:
    check_same_algebra(m.algebra, n.algebra)
    system, offsets = _commutation_system(m, n)
    if offsets[-1] == 0:
        return 0
    return offsets[-1] - m.field.rank(system)


def coordinates(basis: list[ModMap], f: ModMap) -> np.ndarray:
    """Coefficients of f in the given Hom basis."""
    field = f.field
    if not basis:
        return np.zeros(0, dtype=np.int64)
    frame = np.column_stack([g.vector() for g in basis])
    coords = field.solve_right(frame, f.vector().reshape(-1, 1))
    if coords is None:
        raise InvalidModule("map is not in the span of the Hom basis")
    return coords[:, 0]


def _invertible(blocks: np.ndarray, field, dims) -> bool:
    return all(field.is_invertible(b) for b, d in zip(blocks, dims) if d)


def find_isomorphism(m: Rep, n: Rep, seed: int | None = None) -> ModMap | None:
    """An invertible map m -> n, or None."""
    check_same_algebra(m.algebra, n.algebra)
    if m.dims != n.dims:
        return None
    if m.is_zero:
        return ModMap.zero(m, n)
    settings = get_settings()
    field = m.field
    p = field.p
    basis = hom_basis(m, n)
    k = len(basis)
    if k == 0:
        return None
    stacked = [np.stack([g.blocks[v] for g in basis]) for v in range(len(m.dims))]

    def combine(coeffs: np.ndarray) -> list[np.ndarray]:
        return [np.tensordot(coeffs, s, axes=1) % p for s in stacked]

    if p ** k <= settings.iso_exhaustive_limit:
        # every line through the origin once: first nonzero coefficient is 1
        for lead in range(k):
            for tail in itertools.product(range(p), repeat=k - lead - 1):
                coeffs = np.array([0] * lead + [1] + list(tail), dtype=np.int64)
                blocks = combine(coeffs)
                if _invertible(blocks, field, m.dims):
                    return _certified(m, n, blocks)
        return None
    rng = np.random.default_rng(settings.seed if seed is None else seed)
    for _ in range(settings.iso_trials):
        blocks = combine(rng.integers(0, p, size=k, dtype=np.int64))
        if _invertible(blocks, field, m.dims):
            return _certified(m, n, blocks)
    logger.debug("no isomorphism found in %d random trials (dim Hom = %d)", settings.iso_trials, k)
    return None


def _certified(m: Rep, n: Rep, blocks) -> ModMap:
    iso = ModMap(m, n, tuple(blocks))
    if not (iso.is_homomorphism() and iso.is_isomorphism()):
        raise InvalidModule("isomorphism certificate failed verification")
    return iso


def is_isomorphic(m: Rep, n: Rep, seed: int | None = None) -> bool:
    return find_isomorphism(m, n, seed) is not None
