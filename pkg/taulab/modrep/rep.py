"""
Right modules over a based algebra, given as quiver representations, and their maps.

An arrow a: i -> j acts by a matrix of shape (dims[j], dims[i]). A word (a1, ..., ak)
acts by A_ak @ ... @ A_a1, matching right multiplication m -> m * a1 * ... * ak.
"""
import logging
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Mapping, Sequence

import numpy as np

from taulab.algebra.algebra import Algebra
from taulab.config import get_settings
from taulab.core.field import PrimeField
from taulab.exceptions import AlgebraMismatch, InvalidModule

logger = logging.getLogger(__name__)


def check_same_algebra(*algebras: Algebra) -> None:
    first = algebras[0]
    for other in algebras[1:]:
        if not first.same_as(other):
            raise AlgebraMismatch(f"{first.label} and {other.label} are different algebras")


@dataclass(frozen=True, eq=False)
class Rep:
    algebra: Algebra
    dims: tuple[int, ...]
    action: Mapping[str, np.ndarray]
    label: str = ""

    def __post_init__(self):
        a = self.algebra
        dims = tuple(int(x) for x in self.dims)
        if len(dims) != a.vertex_count or any(x < 0 for x in dims):
            raise InvalidModule(f"dimension vector {list(dims)} does not fit {a.vertex_count} vertices")
        unknown = set(self.action) - set(a.quiver.by_name)
        if unknown:
            raise InvalidModule(f"action given for unknown arrows {sorted(unknown)}")
        fixed = {}
        for arrow in a.arrows:
            shape = (dims[arrow.target], dims[arrow.source])
            raw = self.action.get(arrow.name)
            if raw is None:
                fixed[arrow.name] = np.zeros(shape, dtype=np.int64)
                continue
            mat = np.asarray(raw, dtype=np.int64)
            if mat.size == 0 and shape[0] * shape[1] == 0:
                mat = np.zeros(shape, dtype=np.int64)
            if mat.shape != shape:
                raise InvalidModule(f"arrow {arrow.name} needs a {shape} matrix, got {mat.shape}")
            fixed[arrow.name] = mat % a.p
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "action", fixed)
        if get_settings().validate_modules:
            self.validate()

    def __repr__(self) -> str:
        name = f"{self.label} " if self.label else ""
        return f"<Rep {name}dims={list(self.dims)} over {self.algebra.label}>"

    @property
    def field(self) -> PrimeField:
        return self.algebra.field

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    @property
    def is_zero(self) -> bool:
        return self.total_dim == 0

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for d in self.dims:
            out.append(acc)
            acc += d
        return tuple(out)

    def block(self, v: int) -> slice:
        return slice(self.offsets[v], self.offsets[v] + self.dims[v])

    def with_label(self, label: str) -> "Rep":
        return replace(self, label=label)

    def embed(self, v: int, vec: np.ndarray) -> np.ndarray:
        """Vector of the vertex-v component placed in the total space."""
        full = np.zeros(self.total_dim, dtype=np.int64)
        full[self.block(v)] = vec
        return full

    def full_arrow(self, name: str) -> np.ndarray:
        arrow = self.algebra.quiver.arrow(name)
        n = self.total_dim
        out = np.zeros((n, n), dtype=np.int64)
        out[self.block(arrow.target), self.block(arrow.source)] = self.action[name]
        return out

    @cached_property
    def basis_actions(self) -> np.ndarray:
        """Stack of total-space matrices, one per basis path of the algebra."""
        a, n = self.algebra, self.total_dim
        field = self.field
        acts = np.zeros((a.dim, n, n), dtype=np.int64)
        arrows = {arrow.name: self.full_arrow(arrow.name) for arrow in a.arrows}
        for k, b in enumerate(a.basis):
            if not b.word:
                sl = self.block(b.source)
                acts[k, sl, sl] = np.eye(self.dims[b.source], dtype=np.int64)
                continue
            mat = arrows[b.word[0]]
            for name in b.word[1:]:
                mat = field.matmul(arrows[name], mat)
            acts[k] = mat
        return acts

    def act(self, element: np.ndarray) -> np.ndarray:
        """Total-space matrix of right multiplication by an algebra element."""
        coeffs = np.asarray(element, dtype=np.int64)
        return np.tensordot(coeffs, self.basis_actions, axes=1) % self.algebra.p

    def validate(self) -> "Rep":
        """Check b_k * a against the multiplication table for every basis path b_k and arrow a."""
        a = self.algebra
        acts = self.basis_actions
        for arrow in a.arrows:
            ai = a.arrow_index[arrow.name]
            full = self.full_arrow(arrow.name)
            for k in range(a.dim):
                lhs = self.field.matmul(full, acts[k])
                rhs = np.tensordot(a.structure[k, ai], acts, axes=1) % a.p
                if not np.array_equal(lhs, rhs):
                    raise InvalidModule(
                        f"action violates the relations at {a.basis[k].name}.{arrow.name} over {a.label}"
                    )
        return self


@dataclass(frozen=True, eq=False)
class ModMap:
    source: Rep
    target: Rep
    blocks: tuple[np.ndarray, ...]

    def __post_init__(self):
        blocks = []
        for v, (s, t) in enumerate(zip(self.source.dims, self.target.dims)):
            raw = np.asarray(self.blocks[v], dtype=np.int64)
            if raw.size == 0 and t * s == 0:
                raw = np.zeros((t, s), dtype=np.int64)
            if raw.shape != (t, s):
                raise InvalidModule(f"block {v} needs shape {(t, s)}, got {raw.shape}")
            blocks.append(raw % self.source.algebra.p)
        object.__setattr__(self, "blocks", tuple(blocks))

    @property
    def field(self) -> PrimeField:
        return self.source.field

    @classmethod
    def zero(cls, source: Rep, target: Rep) -> "ModMap":
        return cls(source, target, tuple(np.zeros((t, s), dtype=np.int64) for s, t in zip(source.dims, target.dims)))

    @classmethod
    def identity(cls, m: Rep) -> "ModMap":
        return cls(m, m, tuple(np.eye(d, dtype=np.int64) for d in m.dims))

    @classmethod
    def from_full(cls, source: Rep, target: Rep, full: np.ndarray) -> "ModMap":
        return cls(source, target, tuple(full[target.block(v), source.block(v)] for v in range(len(source.dims))))

    def full(self) -> np.ndarray:
        out = np.zeros((self.target.total_dim, self.source.total_dim), dtype=np.int64)
        for v, blk in enumerate(self.blocks):
            out[self.target.block(v), self.source.block(v)] = blk
        return out

    def vector(self) -> np.ndarray:
        """All blocks flattened row-major, in vertex order."""
        if not self.blocks:
            return np.zeros(0, dtype=np.int64)
        return np.concatenate([b.ravel() for b in self.blocks])

    def compose(self, other: "ModMap") -> "ModMap":
        """self o other."""
        f = self.field
        return ModMap(other.source, self.target, tuple(f.matmul(x, y) for x, y in zip(self.blocks, other.blocks)))

    def is_homomorphism(self) -> bool:
        f = self.field
        for arrow in self.source.algebra.arrows:
            left = f.matmul(self.target.action[arrow.name], self.blocks[arrow.source])
            right = f.matmul(self.blocks[arrow.target], self.source.action[arrow.name])
            if not np.array_equal(left, right):
                return False
        return True

    def rank(self) -> int:
        return sum(self.field.rank(b) for b in self.blocks)

    def is_zero(self) -> bool:
        return not any(b.any() for b in self.blocks)

    def is_injective(self) -> bool:
        return self.rank() == self.source.total_dim

    def is_surjective(self) -> bool:
        return self.rank() == self.target.total_dim

    def is_isomorphism(self) -> bool:
        return self.source.dims == self.target.dims and self.is_injective()

    def kernel(self) -> tuple[Rep, "ModMap"]:
        return sub_rep(self.source, [self.field.kernel_basis(b) for b in self.blocks])

    def image(self) -> tuple[Rep, "ModMap"]:
        return sub_rep(self.target, [self.field.column_space(b) for b in self.blocks])

    def cokernel(self) -> tuple[Rep, "ModMap"]:
        return quotient_rep(self.target, [self.field.column_space(b) for b in self.blocks])


def linear_combination(maps: Sequence[ModMap], coeffs: Sequence[int]) -> ModMap:
    first = maps[0]
    p = first.source.algebra.p
    blocks = []
    for v in range(len(first.blocks)):
        acc = np.zeros_like(first.blocks[v])
        for c, m in zip(coeffs, maps):
            if c:
                acc = (acc + int(c) * m.blocks[v]) % p
        blocks.append(acc)
    return ModMap(first.source, first.target, tuple(blocks))


def sub_rep(m: Rep, bases: Sequence[np.ndarray]) -> tuple[Rep, ModMap]:
    """Submodule spanned vertexwise by the independent columns of `bases`, with its inclusion."""
    field = m.field
    action = {}
    for arrow in m.algebra.arrows:
        image = field.matmul(m.action[arrow.name], bases[arrow.source])
        coords = field.solve_right(bases[arrow.target], image)
        if coords is None:
            raise InvalidModule(f"subspace is not closed under arrow {arrow.name}")
        action[arrow.name] = coords
    sub = Rep(m.algebra, tuple(b.shape[1] for b in bases), action)
    return sub, ModMap(sub, m, tuple(bases))


def quotient_rep(m: Rep, bases: Sequence[np.ndarray]) -> tuple[Rep, ModMap]:
    """Quotient by the submodule spanned by `bases`, with the projection onto it."""
    field = m.field
    complements, projections = [], []
    for u in bases:
        c = field.complement(u)
        frame = np.hstack([u, c])
        projections.append(field.inverse(frame)[u.shape[1]:, :])
        complements.append(c)
    action = {}
    for arrow in m.algebra.arrows:
        moved = field.matmul(m.action[arrow.name], complements[arrow.source])
        action[arrow.name] = field.matmul(projections[arrow.target], moved)
    quo = Rep(m.algebra, tuple(c.shape[1] for c in complements), action)
    return quo, ModMap(m, quo, tuple(projections))


def generated_submodule(m: Rep, generators: Sequence[np.ndarray]) -> tuple[Rep, ModMap]:
    """Smallest submodule containing the given total-space vectors (columns)."""
    field = m.field
    spans = []
    for v in range(len(m.dims)):
        cols = [g[m.block(v)] for g in generators]
        spans.append(field.column_space(np.column_stack(cols)) if cols else np.zeros((m.dims[v], 0), dtype=np.int64))
    changed = True
    while changed:
        changed = False
        for arrow in m.algebra.arrows:
            moved = field.matmul(m.action[arrow.name], spans[arrow.source])
            merged = field.column_space(np.hstack([spans[arrow.target], moved]))
            if merged.shape[1] > spans[arrow.target].shape[1]:
                spans[arrow.target] = merged
                changed = True
    return sub_rep(m, spans)


def direct_sum(*modules: Rep) -> Rep:
    if not modules:
        raise InvalidModule("direct sum of nothing; use zero_module")
    check_same_algebra(*(m.algebra for m in modules))
    a = modules[0].algebra
    dims = tuple(sum(m.dims[v] for m in modules) for v in range(a.vertex_count))
    action = {}
    for arrow in a.arrows:
        mat = np.zeros((dims[arrow.target], dims[arrow.source]), dtype=np.int64)
        r = c = 0
        for m in modules:
            block = m.action[arrow.name]
            mat[r:r + block.shape[0], c:c + block.shape[1]] = block
            r += block.shape[0]
            c += block.shape[1]
        action[arrow.name] = mat
    labels = [m.label for m in modules if not m.is_zero]
    label = " ⊕ ".join(labels) if labels and all(labels) else ""
    return Rep(a, dims, action, label)


def zero_module(algebra: Algebra) -> Rep:
    return Rep(algebra, (0,) * algebra.vertex_count, {}, "0")
