"""Dominant dimension, projective-injective vertices and restriction to the corner algebra fAf."""
import logging
from dataclasses import dataclass

from taulab.algebra.algebra import Algebra
from taulab.config import get_settings
from taulab.exceptions import NoFaithfulProjInj
from taulab.homfun.ext import is_selfinjective
from taulab.modrep.constructions import injective_module, projective_module, regular_module
from taulab.modrep.covers import injective_envelope, is_injective, is_projective
from taulab.modrep.rep import Rep

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DominantDimension:
    value: int = 0
    infinite: bool = False
    saturated: bool = False  # value is only a lower bound

    def __str__(self) -> str:
        if self.infinite:
            return "inf"
        if self.saturated:
            return f">={self.value}"
        return str(self.value)

    def at_least(self, k: int) -> bool:
        return self.infinite or self.value >= k

    def to_json(self) -> int | str:
        return self.value if not (self.infinite or self.saturated) else str(self)


def dominant_dimension(m: Rep) -> DominantDimension:
    """Number of leading projective terms in the minimal injective coresolution of m."""
    if is_selfinjective(m.algebra):
        # every injective is projective
        return DominantDimension(infinite=True)
    bound = get_settings().max_resolution
    current = m
    for k in range(bound):
        if current.is_zero:
            return DominantDimension(infinite=True)
        envelope, embedding = injective_envelope(current)
        if not is_projective(envelope):
            return DominantDimension(k)
        current = embedding.cokernel()[0]
    if current.is_zero:
        return DominantDimension(infinite=True)
    logger.warning("dominant dimension of %s saturated the bound %d", m.label or "module", bound)
    return DominantDimension(bound, saturated=True)


def dominant_dimension_algebra(a: Algebra) -> DominantDimension:
    return dominant_dimension(regular_module(a))


def projective_injective_vertices(a: Algebra) -> tuple[int, ...]:
    """Vertices v with e_vA injective."""
    return tuple(v for v in range(a.vertex_count) if is_injective(projective_module(a, v)))


def minimal_faithful_proj_inj(a: Algebra) -> tuple[int, ...]:
    """The idempotent f of the minimal faithful projective-injective left module Af: v with D(Ae_v) projective."""
    f = tuple(v for v in range(a.vertex_count) if is_projective(injective_module(a, v)))
    if not f:
        raise NoFaithfulProjInj(f"{a.label} has no projective-injective module")
    return f


def f_restrict(m: Rep, f) -> Rep:
    """M f as a module over fAf: components at f, each corner generator acting by its path."""
    a = m.algebra
    corner = a.idempotent_subalgebra(f)
    if corner is a:
        return m
    vertices = sorted(set(int(v) for v in f))
    field = m.field
    action = {}
    for arrow in corner.arrows:
        word = arrow.name.split(".")
        source = a.quiver.arrow(word[0]).source
        action[arrow.name] = field.chain([m.action[x] for x in word], m.dims[source])
    label = f"{m.label}f" if m.label else ""
    return Rep(corner, tuple(m.dims[v] for v in vertices), action, label)
