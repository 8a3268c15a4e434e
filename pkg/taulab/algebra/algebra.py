"""
Based finite-dimensional algebras over F_p.

The basis is a list of paths, sorted by (length, source, target, word) at build time, so
the trivial paths e_0..e_{n-1} are the first n basis elements. Multiplication is stored
as structure constants: structure[i, j, k] is the coefficient of b_k in b_i * b_j.
"""
import hashlib
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING

import numpy as np

from taulab.algebra.quiver import Arrow, Quiver
from taulab.core.field import PrimeField
from taulab.exceptions import InvalidIdempotent, InvalidVertex

if TYPE_CHECKING:
    from taulab.algebra.kupisch import KupischSeries

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BasisPath:
    source: int
    target: int
    word: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def name(self) -> str:
        return ".".join(self.word) if self.word else f"e{self.source}"


class Algebra:
    def __init__(
        self,
        field: PrimeField,
        quiver: Quiver,
        basis: tuple[BasisPath, ...],
        structure: np.ndarray,
        nilpotency: int,
        kupisch: "KupischSeries | None" = None,
        label: str = "",
        parent_vertices: tuple[int, ...] | None = None,
    ):
        self.field = field
        self.quiver = quiver
        self.basis = basis
        self.structure = structure
        self.nilpotency = nilpotency
        self.kupisch = kupisch
        self.label = label or "algebra"
        self.parent_vertices = parent_vertices
        self._opposite: Algebra | None = None
        self._corners: dict[tuple[int, ...], Algebra] = {}
        # homological invariants keyed by (name, resolution bound)
        self.invariants: dict[tuple, object] = {}

    def __repr__(self) -> str:
        return f"Algebra({self.label!r}, p={self.p}, dim={self.dim}, vertices={self.vertex_count})"

    # ---- basic data ----

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def vertex_count(self) -> int:
        return self.quiver.vertex_count

    @property
    def arrows(self) -> tuple[Arrow, ...]:
        return self.quiver.arrows

    @cached_property
    def index(self) -> dict[BasisPath, int]:
        return {b: i for i, b in enumerate(self.basis)}

    @cached_property
    def arrow_index(self) -> dict[str, int]:
        """Basis position of each arrow."""
        return {b.word[0]: i for i, b in enumerate(self.basis) if b.length == 1}

    @cached_property
    def radical_indices(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.basis) if b.length >= 1)

    @cached_property
    def _between(self) -> dict[tuple[int, int], list[int]]:
        table: dict[tuple[int, int], list[int]] = {}
        for i, b in enumerate(self.basis):
            table.setdefault((b.source, b.target), []).append(i)
        return table

    def paths_between(self, source: int, target: int) -> list[int]:
        """Basis indices of paths source -> target, in basis order."""
        return self._between.get((source, target), [])

    def paths_from(self, source: int) -> list[int]:
        return [i for i, b in enumerate(self.basis) if b.source == source]

    def paths_to(self, target: int) -> list[int]:
        return [i for i, b in enumerate(self.basis) if b.target == target]

    def check_vertex(self, v: int) -> int:
        if not 0 <= v < self.vertex_count:
            raise InvalidVertex(f"vertex {v} outside 0..{self.vertex_count - 1}")
        return v

    # ---- arithmetic ----

    def unit(self) -> np.ndarray:
        one = np.zeros(self.dim, dtype=np.int64)
        one[: self.vertex_count] = 1
        return one

    def basis_vector(self, i: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = 1
        return v

    def multiply(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        d, p = self.dim, self.p
        left = (np.asarray(x, dtype=np.int64) @ self.structure.reshape(d, d * d)) % p
        return (np.asarray(y, dtype=np.int64) @ left.reshape(d, d)) % p

    def is_associative(self) -> bool:
        s, p = self.structure, self.p
        lhs = np.einsum("ijm,mkl->ijkl", s, s) % p
        rhs = np.einsum("jkm,iml->ijkl", s, s) % p
        return bool(np.array_equal(lhs, rhs))

    @property
    def is_semisimple(self) -> bool:
        return self.dim == self.vertex_count

    @property
    def is_nakayama_shaped(self) -> bool:
        """At most one arrow leaves and at most one arrow enters every vertex."""
        q = self.quiver
        return all(len(q.outgoing(v)) <= 1 and len(q.incoming(v)) <= 1 for v in range(q.vertex_count))

    @cached_property
    def fingerprint(self) -> str:
        h = hashlib.sha256()
        h.update(f"{self.p}|{self.vertex_count}|".encode())
        h.update(repr([(a.name, a.source, a.target) for a in self.arrows]).encode())
        h.update(repr([(b.source, b.target, b.word) for b in self.basis]).encode())
        h.update(np.ascontiguousarray(self.structure).tobytes())
        return h.hexdigest()[:16]

    def same_as(self, other: "Algebra") -> bool:
        return self is other or self.fingerprint == other.fingerprint

    # ---- derived algebras ----

    @property
    def opposite(self) -> "Algebra":
        """A^op on the same basis order: arrows reversed, words reversed, x *op y = y * x."""
        if self._opposite is None:
            basis = tuple(BasisPath(b.target, b.source, tuple(reversed(b.word))) for b in self.basis)
            op = Algebra(
                field=self.field,
                quiver=self.quiver.opposite(),
                basis=basis,
                structure=np.ascontiguousarray(self.structure.transpose(1, 0, 2)),
                nilpotency=self.nilpotency,
                kupisch=None,
                label=f"{self.label}^op",
                parent_vertices=self.parent_vertices,
            )
            op._opposite = self
            self._opposite = op
        return self._opposite

    def idempotent_subalgebra(self, f) -> "Algebra":
        """The corner algebra fAf for f a set of vertices, with vertices renumbered in increasing order."""
        vertices = tuple(sorted(set(int(v) for v in f)))
        if not vertices:
            raise InvalidIdempotent("the idempotent must contain at least one vertex")
        for v in vertices:
            self.check_vertex(v)
        if len(vertices) == self.vertex_count:
            return self
        if vertices not in self._corners:
            self._corners[vertices] = self._build_corner(vertices)
        return self._corners[vertices]

    def _build_corner(self, vertices: tuple[int, ...]) -> "Algebra":
        renumber = {v: i for i, v in enumerate(vertices)}
        inside = set(vertices)
        keep = [i for i, b in enumerate(self.basis) if b.source in inside and b.target in inside]

        def segments(b: BasisPath) -> list[tuple[str, ...]]:
            pieces, current = [], []
            for name in b.word:
                current.append(name)
                if self.quiver.arrow(name).target in inside:
                    pieces.append(tuple(current))
                    current = []
            return pieces

        generators: dict[str, Arrow] = {}
        basis = []
        for i in keep:
            b = self.basis[i]
            word = []
            for seg in segments(b):
                name = ".".join(seg)
                s = self.quiver.arrow(seg[0]).source
                t = self.quiver.arrow(seg[-1]).target
                generators.setdefault(name, Arrow(name, renumber[s], renumber[t]))
                word.append(name)
            basis.append(BasisPath(renumber[b.source], renumber[b.target], tuple(word)))
        idx = np.array(keep, dtype=np.int64)
        structure = np.ascontiguousarray(self.structure[np.ix_(idx, idx, idx)])
        parents = tuple(self.parent_vertices[v] for v in vertices) if self.parent_vertices else vertices
        corner = Algebra(
            field=self.field,
            quiver=Quiver(len(vertices), tuple(generators.values())),
            basis=tuple(basis),
            structure=structure,
            nilpotency=self.nilpotency,
            label=f"{self.label}|f={{{','.join(str(v) for v in vertices)}}}",
            parent_vertices=parents,
        )
        logger.debug("corner algebra %s has dim %d", corner.label, corner.dim)
        return corner
