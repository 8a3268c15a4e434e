"""
The duality (-)* = Hom_A(-, A), the Nakayama functors and reflexivity.

M* is a left A-module, stored as a right module over the opposite algebra: its
component at vertex i is Hom(M, e_iA), and an arrow a: i -> j acts from the j
component to the i component by composing with left multiplication by a.
"""
import logging

import numpy as np

from taulab.algebra.algebra import Algebra
from taulab.exceptions import InvalidInput
from taulab.homfun.ext import ext_vanishes
from taulab.homfun.transpose import transpose
from taulab.modrep.constructions import k_dual, projective_module
from taulab.modrep.hom import coordinates, hom_basis, is_isomorphic
from taulab.modrep.rep import ModMap, Rep

logger = logging.getLogger(__name__)

REFLEXIVITY_METHODS = ("evaluation", "double_dual_iso", "ext_of_transpose")


def left_multiplication(a: Algebra, arrow_name: str, source: Rep, target: Rep) -> ModMap:
    """x -> arrow * x as a map e_jA -> e_iA for the arrow i -> j."""
    arrow = a.quiver.arrow(arrow_name)
    ai = a.arrow_index[arrow_name]
    blocks = []
    for w in range(a.vertex_count):
        rows = a.paths_between(arrow.source, w)
        cols = a.paths_between(arrow.target, w)
        block = np.zeros((len(rows), len(cols)), dtype=np.int64)
        for c, x in enumerate(cols):
            block[:, c] = a.structure[ai, x, rows]
        blocks.append(block)
    return ModMap(source, target, tuple(blocks))


def _dual_bases(m: Rep) -> list[list[ModMap]]:
    a = m.algebra
    return [hom_basis(m, projective_module(a, i)) for i in range(a.vertex_count)]


def a_dual(m: Rep) -> Rep:
    a = m.algebra
    projectives = [projective_module(a, i) for i in range(a.vertex_count)]
    bases = [hom_basis(m, projectives[i]) for i in range(a.vertex_count)]
    action = {}
    for arrow in a.arrows:
        i, j = arrow.source, arrow.target
        lam = left_multiplication(a, arrow.name, projectives[j], projectives[i])
        mat = np.zeros((len(bases[i]), len(bases[j])), dtype=np.int64)
        for r, phi in enumerate(bases[j]):
            mat[:, r] = coordinates(bases[i], lam.compose(phi))
        action[arrow.name] = mat
    label = f"{m.label}*" if m.label else ""
    return Rep(a.opposite, tuple(len(b) for b in bases), action, label)


def nu(m: Rep) -> Rep:
    """Nakayama functor D(-)*."""
    label = f"ν({m.label})" if m.label else ""
    return k_dual(a_dual(m)).with_label(label)


def nu_inv(m: Rep) -> Rep:
    """Inverse Nakayama functor (D -)*."""
    label = f"ν⁻¹({m.label})" if m.label else ""
    return a_dual(k_dual(m)).with_label(label)


def evaluation_map(m: Rep) -> ModMap:
    """ev: M -> M**, m -> (phi -> phi(m)), in the bases a_dual chooses for M* and M**."""
    a = m.algebra
    op = a.opposite
    star = a_dual(m)
    bases = _dual_bases(m)
    double = a_dual(star)
    blocks = []
    for w in range(a.vertex_count):
        target_proj = projective_module(op, w)
        second = hom_basis(star, target_proj)
        block = np.zeros((double.dims[w], m.dims[w]), dtype=np.int64)
        for c in range(m.dims[w]):
            unit = np.zeros(m.dims[w], dtype=np.int64)
            unit[c] = 1
            evaluated = tuple(
                np.column_stack([phi.blocks[w] @ unit % a.p for phi in bases[i]])
                if bases[i] else np.zeros((target_proj.dims[i], 0), dtype=np.int64)
                for i in range(a.vertex_count)
            )
            block[:, c] = coordinates(second, ModMap(star, target_proj, evaluated))
        blocks.append(block)
    return ModMap(m, double, tuple(blocks))


def is_torsionless(m: Rep) -> bool:
    return evaluation_map(m).is_injective()


def is_reflexive(m: Rep, method: str = "evaluation", seed: int | None = None) -> bool:
    if method == "evaluation":
        return evaluation_map(m).is_isomorphism()
    if method == "double_dual_iso":
        return is_isomorphic(m, a_dual(a_dual(m)), seed)
    if method == "ext_of_transpose":
        return ext_vanishes(transpose(m), (1, 2))
    raise InvalidInput(f"unknown reflexivity method {method!r}; use one of {', '.join(REFLEXIVITY_METHODS)}")


def is_coreflexive(m: Rep, method: str = "evaluation", seed: int | None = None) -> bool:
    """D(M) is reflexive over the opposite algebra."""
    return is_reflexive(k_dual(m), method, seed)

