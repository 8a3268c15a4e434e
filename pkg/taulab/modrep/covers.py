"""
Projective covers, minimal presentations, syzygies and their duals.

A free module remembers the vertices of its indecomposable summands, so that maps out
of it are described by the images of its generators e_{i_r}.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from taulab.algebra.algebra import Algebra
from taulab.modrep.constructions import k_dual, projective_module, radical
from taulab.modrep.rep import ModMap, Rep, direct_sum, zero_module

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FreeModule:
    rep: Rep
    tops: tuple[int, ...]

    @property
    def algebra(self) -> Algebra:
        return self.rep.algebra

    @cached_property
    def _starts(self) -> list[list[int]]:
        """_starts[r][w]: first position of summand r inside the vertex-w block."""
        a = self.algebra
        running = [0] * a.vertex_count
        starts = []
        for i in self.tops:
            starts.append(list(running))
            for w in range(a.vertex_count):
                running[w] += len(a.paths_between(i, w))
        return starts

    def slot(self, r: int, w: int) -> slice:
        """Positions of summand r inside the vertex-w block; basis = paths i_r -> w."""
        start = self._starts[r][w]
        return slice(start, start + len(self.algebra.paths_between(self.tops[r], w)))

    def generator(self, r: int) -> np.ndarray:
        """e_{i_r} of summand r as a vector of the vertex-i_r block."""
        i = self.tops[r]
        vec = np.zeros(self.rep.dims[i], dtype=np.int64)
        vec[self.slot(r, i).start + self.algebra.paths_between(i, i).index(i)] = 1
        return vec

    def component(self, s: int, w: int, vec: np.ndarray) -> np.ndarray:
        """Element of e_{i_s}Ae_w read off the summand-s slot of a vertex-w vector."""
        a = self.algebra
        out = np.zeros(a.dim, dtype=np.int64)
        out[a.paths_between(self.tops[s], w)] = vec[self.slot(s, w)]
        return out


def free_module(a: Algebra, tops: Sequence[int]) -> FreeModule:
    tops = tuple(tops)
    if not tops:
        return FreeModule(zero_module(a), ())
    return FreeModule(direct_sum(*(projective_module(a, i) for i in tops)), tops)


def map_from_generators(free: FreeModule, target: Rep, images: Sequence[np.ndarray]) -> ModMap:
    """The unique map sending generator r to images[r] in the vertex-tops[r] block of target."""
    a = free.algebra
    p = a.p
    blocks = [np.zeros((target.dims[w], free.rep.dims[w]), dtype=np.int64) for w in range(a.vertex_count)]
    acts = target.basis_actions
    for r, (i, img) in enumerate(zip(free.tops, images)):
        full = target.embed(i, img)
        for w in range(a.vertex_count):
            paths = a.paths_between(i, w)
            if not paths or not target.dims[w]:
                continue
            moved = (acts[paths] @ full) % p
            blocks[w][:, free.slot(r, w)] = moved[:, target.block(w)].T
    return ModMap(free.rep, target, tuple(blocks))


def projective_cover(m: Rep) -> tuple[FreeModule, ModMap]:
    """Minimal epimorphism P -> m; generators are lifts of a basis of top(m)."""
    field = m.field
    _, inclusion = radical(m)
    tops, images = [], []
    for v in range(len(m.dims)):
        lifts = field.complement(inclusion.blocks[v])
        for c in range(lifts.shape[1]):
            tops.append(v)
            images.append(lifts[:, c])
    free = free_module(m.algebra, tops)
    return free, map_from_generators(free, m, images)


def element_matrix(d: ModMap, source: FreeModule, target: FreeModule) -> list[list[np.ndarray]]:
    """X[r][s]: component in summand s of `target` of the image of generator r of `source`."""
    out = []
    for r, i in enumerate(source.tops):
        image = d.blocks[i] @ source.generator(r) % source.algebra.p
        out.append([target.component(s, i, image) for s in range(len(target.tops))])
    return out


@dataclass(frozen=True, eq=False)
class Presentation:
    p1: FreeModule
    p0: FreeModule
    d1: ModMap
    eps: ModMap

    def element_matrix(self) -> list[list[np.ndarray]]:
        return element_matrix(self.d1, self.p1, self.p0)


def minimal_presentation(m: Rep) -> Presentation:
    p0, eps = projective_cover(m)
    kernel, inclusion = eps.kernel()
    p1, eps1 = projective_cover(kernel)
    return Presentation(p1, p0, inclusion.compose(eps1), eps)


def syzygy(m: Rep, n: int = 1) -> Rep:
    current = m
    for _ in range(n):
        if current.is_zero:
            break
        _, eps = projective_cover(current)
        current = eps.kernel()[0]
    label = "0" if current.is_zero else (f"Ω^{n}({m.label})" if m.label else "")
    return current.with_label(label)


def injective_envelope(m: Rep) -> tuple[Rep, ModMap]:
    """Minimal monomorphism m -> I, dual to the projective cover of D(m) over the opposite algebra."""
    free, eps = projective_cover(k_dual(m))
    envelope = k_dual(free.rep).with_label(" ⊕ ".join(f"I({i})" for i in free.tops) or "0")
    return envelope, ModMap(m, envelope, tuple(b.T.copy() for b in eps.blocks))


def cosyzygy(m: Rep, n: int = 1) -> Rep:
    current = m
    for _ in range(n):
        if current.is_zero:
            break
        _, embedding = injective_envelope(current)
        current = embedding.cokernel()[0]
    label = "0" if current.is_zero else (f"Ω^-{n}({m.label})" if m.label else "")
    return current.with_label(label)


def is_projective(m: Rep) -> bool:
    free, _ = projective_cover(m)
    return free.rep.total_dim == m.total_dim


def is_injective(m: Rep) -> bool:
    envelope, _ = injective_envelope(m)
    return envelope.total_dim == m.total_dim
