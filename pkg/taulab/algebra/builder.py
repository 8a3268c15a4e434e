"""
Construction of bound quiver algebras kQ/I.

Paths are enumerated by increasing length. The nilpotency degree N is the first length
with J^N contained in I + J^(N+1), tested in kQ/J^(N+1) against the truncated
generators u*r*v of the ideal. The algebra is then kQ/(I + J^N), which is kQ/I for an
admissible ideal. Its basis consists of the normal words for the degree-lexicographic
order with longer words larger: the non-pivot columns once the generator span is row
reduced with columns sorted in decreasing order.
"""
import logging
from collections import defaultdict

import numpy as np

from taulab.algebra.algebra import Algebra, BasisPath
from taulab.algebra.quiver import AlgebraPresentation, Quiver
from taulab.config import get_settings
from taulab.core.field import PrimeField, default_field
from taulab.exceptions import BoundExceeded

logger = logging.getLogger(__name__)

Path = tuple[int, int, tuple[str, ...]]


def _sort_key(quiver: Quiver, path: Path):
    return len(path[2]), tuple(quiver.order[a] for a in path[2])


class _PathTable:
    """Paths of Q grouped by length, extended lazily."""

    def __init__(self, quiver: Quiver, max_paths: int):
        self.quiver = quiver
        self.max_paths = max_paths
        self.layers: list[list[Path]] = [[(v, v, ()) for v in range(quiver.vertex_count)]]
        self.total = quiver.vertex_count

    def extend(self) -> list[Path]:
        layer = []
        for s, t, word in self.layers[-1]:
            for arrow in self.quiver.outgoing(t):
                layer.append((s, arrow.target, word + (arrow.name,)))
        self.total += len(layer)
        if self.total > self.max_paths:
            raise BoundExceeded(f"more than {self.max_paths} paths enumerated")
        self.layers.append(layer)
        return layer

    def up_to(self, length: int) -> list[Path]:
        return [path for layer in self.layers[: length + 1] for path in layer]


def _generators(pres: AlgebraPresentation, table: _PathTable, limit: int, p: int):
    """Truncations to length <= limit of u*r*v, grouped by (source, target)."""
    quiver = pres.quiver
    paths = table.up_to(limit)
    ending: dict[int, list[Path]] = defaultdict(list)
    starting: dict[int, list[Path]] = defaultdict(list)
    for path in paths:
        ending[path[1]].append(path)
        starting[path[0]].append(path)
    groups: dict[tuple[int, int], list[dict[tuple[str, ...], int]]] = defaultdict(list)
    for rel in pres.relations:
        rs, rt = rel.check(quiver)
        shortest = min(len(w) for _, w in rel.terms)
        for u in ending[rs]:
            for v in starting[rt]:
                room = limit - len(u[2]) - len(v[2])
                if room < shortest:
                    continue
                gen: dict[tuple[str, ...], int] = {}
                for coef, w in rel.terms:
                    if len(w) <= room:
                        word = u[2] + w + v[2]
                        gen[word] = (gen.get(word, 0) + coef) % p
                gen = {w: c for w, c in gen.items() if c}
                if gen:
                    groups[(u[0], v[1])].append(gen)
    return groups


def _matrix(field: PrimeField, gens: list[dict], columns: list[Path]) -> np.ndarray:
    col = {path[2]: i for i, path in enumerate(columns)}
    m = field.zeros(len(gens), len(columns))
    for r, gen in enumerate(gens):
        for word, coef in gen.items():
            m[r, col[word]] = coef % field.p
    return m


def _nilpotency(pres: AlgebraPresentation, field: PrimeField, table: _PathTable) -> int:
    for length in range(1, pres.max_path_length + 1):
        layer = table.extend()
        if not layer:
            return length
        gens = _generators(pres, table, length, field.p)
        by_pair: dict[tuple[int, int], list[Path]] = defaultdict(list)
        for path in layer:
            by_pair[(path[0], path[1])].append(path)
        contained = True
        for pair, top in by_pair.items():
            columns = [pp for pp in table.up_to(length) if (pp[0], pp[1]) == pair]
            g = _matrix(field, gens.get(pair, []), columns)
            if g.shape[0] == 0:
                contained = False
                break
            col = {pp[2]: i for i, pp in enumerate(columns)}
            units = field.zeros(len(top), len(columns))
            for r, pp in enumerate(top):
                units[r, col[pp[2]]] = 1
            if field.rank(np.vstack([g, units])) != field.rank(g):
                contained = False
                break
        if contained:
            return length
    raise BoundExceeded(
        f"paths of length {pres.max_path_length} survive; the quotient is not finite-dimensional "
        "or the ideal is not admissible"
    )


def build_algebra(pres: AlgebraPresentation, field: PrimeField | None = None) -> Algebra:
    field = field or default_field()
    quiver = pres.quiver
    for rel in pres.relations:
        rel.check(quiver)
    table = _PathTable(quiver, get_settings().max_paths)
    nilpotency = _nilpotency(pres, field, table)

    # normal words and reductions of the leading words, per (source, target)
    gens = _generators(pres, table, nilpotency - 1, field.p)
    by_pair: dict[tuple[int, int], list[Path]] = defaultdict(list)
    for path in table.up_to(nilpotency - 1):
        by_pair[(path[0], path[1])].append(path)
    normal: list[Path] = []
    reductions: dict[tuple[str, ...], dict[tuple[str, ...], int]] = {}
    for pair, paths in by_pair.items():
        columns = sorted(paths, key=lambda pp: _sort_key(quiver, pp), reverse=True)
        g = _matrix(field, gens.get(pair, []), columns)
        if g.shape[0] == 0:
            normal.extend(columns)
            continue
        reduced, pivots, _ = field.rref(g)
        pivot_set = set(pivots)
        free = [c for c in range(len(columns)) if c not in pivot_set]
        normal.extend(columns[c] for c in free)
        for row, pc in enumerate(pivots):
            reductions[columns[pc][2]] = {
                columns[c][2]: (-int(reduced[row, c])) % field.p for c in free if reduced[row, c]
            }

    normal.sort(key=lambda pp: (len(pp[2]), pp[0], pp[1], _sort_key(quiver, pp)[1]))
    basis = tuple(BasisPath(s, t, w) for s, t, w in normal)
    position = {(b.source, b.target, b.word): i for i, b in enumerate(basis)}
    d = len(basis)

    def reduce(s: int, t: int, word: tuple[str, ...]) -> dict[int, int]:
        if len(word) >= nilpotency:
            return {}
        if (s, t, word) in position:
            return {position[(s, t, word)]: 1}
        return {position[(s, t, w)]: c for w, c in reductions[word].items()}

    structure = np.zeros((d, d, d), dtype=np.int64)
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            if x.target != y.source:
                continue
            for k, c in reduce(x.source, y.target, x.word + y.word).items():
                structure[i, j, k] = c

    algebra = Algebra(
        field=field,
        quiver=quiver,
        basis=basis,
        structure=structure,
        nilpotency=nilpotency,
        kupisch=pres.kupisch,
        label=pres.label,
    )
    logger.info("built %s: dim %d, nilpotency degree %d", algebra.label, d, nilpotency)
    return algebra
