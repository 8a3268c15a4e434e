"""
Quivers, relations and algebra presentations.

Paths compose left to right: for p: i -> j and q: j -> k the product pq runs i -> k.
A path is written as a tuple of arrow names; the trivial path at v is the empty tuple
together with its vertex.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING

from taulab.exceptions import InvalidVertex, NotAdmissible

if TYPE_CHECKING:
    from taulab.algebra.kupisch import KupischSeries


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        if self.vertex_count < 1:
            raise InvalidVertex("a quiver needs at least one vertex")
        seen: set[str] = set()
        for arrow in self.arrows:
            if not arrow.name:
                raise NotAdmissible("arrow names must be non-empty")
            if arrow.name in seen:
                raise NotAdmissible(f"duplicate arrow name {arrow.name!r}")
            seen.add(arrow.name)
            for v in (arrow.source, arrow.target):
                if not 0 <= v < self.vertex_count:
                    raise InvalidVertex(f"arrow {arrow.name!r} uses vertex {v} outside 0..{self.vertex_count - 1}")

    @cached_property
    def by_name(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    @cached_property
    def order(self) -> dict[str, int]:
        """Position of every arrow; fixes the lexicographic order on paths."""
        return {a.name: i for i, a in enumerate(self.arrows)}

    def arrow(self, name: str) -> Arrow:
        try:
            return self.by_name[name]
        except KeyError:
            raise NotAdmissible(f"unknown arrow {name!r}") from None

    def outgoing(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def incoming(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def endpoints(self, word: tuple[str, ...]) -> tuple[int, int]:
        """Source and target of a non-trivial composable word."""
        if not word:
            raise NotAdmissible("the empty word has no well-defined endpoints")
        arrows = [self.arrow(n) for n in word]
        for left, right in zip(arrows, arrows[1:]):
            if left.target != right.source:
                raise NotAdmissible(f"path {'.'.join(word)} is not composable at {left.name}.{right.name}")
        return arrows[0].source, arrows[-1].target

    def opposite(self) -> "Quiver":
        return Quiver(self.vertex_count, tuple(Arrow(a.name, a.target, a.source) for a in self.arrows))


@dataclass(frozen=True)
class Relation:
    """A linear combination sum c_t * path_t of parallel paths."""
    terms: tuple[tuple[int, tuple[str, ...]], ...]

    def check(self, quiver: Quiver) -> tuple[int, int]:
        if not self.terms:
            raise NotAdmissible("empty relation")
        ends = set()
        for _, path in self.terms:
            if len(path) < 2:
                raise NotAdmissible(f"relation term {'.'.join(path) or 'e'} has length < 2")
            ends.add(quiver.endpoints(path))
        if len(ends) != 1:
            raise NotAdmissible("relation terms are not parallel")
        return ends.pop()


@dataclass(frozen=True)
class AlgebraPresentation:
    quiver: Quiver
    relations: tuple[Relation, ...] = ()
    max_path_length: int = 64
    kupisch: "KupischSeries | None" = None
    label: str = ""
