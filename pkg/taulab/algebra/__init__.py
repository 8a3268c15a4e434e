from taulab.algebra.algebra import Algebra, BasisPath
from taulab.algebra.builder import build_algebra
from taulab.algebra.kupisch import KupischSeries, nakayama_from_kupisch
from taulab.algebra.quiver import AlgebraPresentation, Arrow, Quiver, Relation


def opposite_algebra(algebra: Algebra) -> Algebra:
    return algebra.opposite


def idempotent_subalgebra(algebra: Algebra, f) -> Algebra:
    return algebra.idempotent_subalgebra(f)


def kupisch_algebra(lengths, cyclic: bool = False, field=None) -> Algebra:
    """Shortcut: the Nakayama algebra of a Kupisch series."""
    return build_algebra(nakayama_from_kupisch(KupischSeries(tuple(lengths), cyclic)), field)


__all__ = [
    "Algebra",
    "AlgebraPresentation",
    "Arrow",
    "BasisPath",
    "KupischSeries",
    "Quiver",
    "Relation",
    "build_algebra",
    "idempotent_subalgebra",
    "kupisch_algebra",
    "nakayama_from_kupisch",
    "opposite_algebra",
]
