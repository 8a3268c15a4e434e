"""
Direct-sum decomposition by Fitting splitting.

For an endomorphism phi and an eigenvalue lam of one of its vertex blocks, M is the direct
sum of ker (phi - lam)^N and im (phi - lam)^N with N = dim M. A piece is declared
indecomposable when its endomorphism ring is one-dimensional or when no split turns up
within the trial budget.
"""
import logging
from typing import Sequence

import numpy as np

from taulab.config import get_settings
from taulab.modrep.covers import is_injective, is_projective
from taulab.modrep.hom import hom_basis, hom_dim, is_isomorphic
from taulab.modrep.rep import Rep, direct_sum, sub_rep, zero_module

logger = logging.getLogger(__name__)


def _fitting_split(m: Rep, rng: np.random.Generator, trials: int) -> tuple[Rep, Rep] | None:
    if m.total_dim <= 1:
        return None
    ends = hom_basis(m, m)
    if len(ends) <= 1:
        return None
    field = m.field
    p, n = field.p, m.total_dim
    vertices = [v for v, d in enumerate(m.dims) if d]
    stacked = {v: np.stack([g.blocks[v] for g in ends]) for v in vertices}
    for _ in range(trials):
        coeffs = rng.integers(0, p, size=len(ends), dtype=np.int64)
        blocks = {v: np.tensordot(coeffs, stacked[v], axes=1) % p for v in vertices}
        eigenvalues = sorted({r for v in vertices for r in field.roots(field.charpoly(blocks[v]))})
        for lam in eigenvalues:
            powered = {}
            for v in range(len(m.dims)):
                if v in blocks:
                    shifted = (blocks[v] - lam * np.eye(m.dims[v], dtype=np.int64)) % p
                    powered[v] = field.power(shifted, n)
                else:
                    powered[v] = np.zeros((0, 0), dtype=np.int64)
            kernels = [field.kernel_basis(powered[v]) for v in range(len(m.dims))]
            generalized = sum(k.shape[1] for k in kernels)
            if 0 < generalized < n:
                images = [field.column_space(powered[v]) for v in range(len(m.dims))]
                left, right = sub_rep(m, kernels)[0], sub_rep(m, images)[0]
                logger.debug("split dims %s into %s + %s", list(m.dims), list(left.dims), list(right.dims))
                return left, right
    return None


def decompose(m: Rep, seed: int | None = None) -> list[Rep]:
    settings = get_settings()
    rng = np.random.default_rng(settings.seed if seed is None else seed)
    pieces: list[Rep] = []

    def walk(x: Rep) -> None:
        if x.is_zero:
            return
        split = _fitting_split(x, rng, settings.decompose_trials)
        if split is None:
            pieces.append(x)
            return
        walk(split[0])
        walk(split[1])

    walk(m)
    if len(pieces) == 1:
        return [m]
    return pieces


def is_indecomposable(m: Rep, seed: int | None = None) -> bool:
    return not m.is_zero and len(decompose(m, seed)) == 1


def strip_projectives(m: Rep, seed: int | None = None) -> Rep:
    """Direct sum of the non-projective summands: the stable form of m."""
    keep = [x for x in decompose(m, seed) if not is_projective(x)]
    return direct_sum(*keep) if keep else zero_module(m.algebra)


def strip_injectives(m: Rep, seed: int | None = None) -> Rep:
    """Direct sum of the non-injective summands: the costable form of m."""
    keep = [x for x in decompose(m, seed) if not is_injective(x)]
    return direct_sum(*keep) if keep else zero_module(m.algebra)


def stably_isomorphic(m: Rep, n: Rep, seed: int | None = None) -> bool:
    return is_isomorphic(strip_projectives(m, seed), strip_projectives(n, seed), seed)


def costably_isomorphic(m: Rep, n: Rep, seed: int | None = None) -> bool:
    return is_isomorphic(strip_injectives(m, seed), strip_injectives(n, seed), seed)


def iso_classes(modules: Sequence[Rep], seed: int | None = None) -> list[list[int]]:
    """Indices of `modules` grouped into isomorphism classes, in order of first appearance."""
    classes: list[list[int]] = []
    for i, m in enumerate(modules):
        for group in classes:
            if is_isomorphic(modules[group[0]], m, seed):
                group.append(i)
                break
        else:
            classes.append([i])
    return classes


def same_summands(left: Sequence[Rep], right: Sequence[Rep], seed: int | None = None) -> bool:
    """Whether two lists of indecomposables agree as multisets of isomorphism classes."""
    if len(left) != len(right):
        return False
    unmatched = list(right)
    for m in left:
        for k, n in enumerate(unmatched):
            if is_isomorphic(m, n, seed):
                del unmatched[k]
                break
        else:
            return False
    return True


def hom_fingerprint(m: Rep, family: Sequence[Rep]) -> tuple[int, ...]:
    return tuple(hom_dim(m, x) for x in family)
