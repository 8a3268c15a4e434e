"""Standard modules: simples, projectives, injectives, the regular module, and the layers of a module."""
import numpy as np

from taulab.algebra.algebra import Algebra
from taulab.modrep.rep import ModMap, Rep, direct_sum, generated_submodule, sub_rep, zero_module


def simple_module(a: Algebra, i: int) -> Rep:
    a.check_vertex(i)
    dims = tuple(1 if v == i else 0 for v in range(a.vertex_count))
    return Rep(a, dims, {}, f"S({i})")


def projective_module(a: Algebra, i: int) -> Rep:
    """e_iA; the vertex-w component has basis the paths i -> w in basis order."""
    a.check_vertex(i)
    dims = tuple(len(a.paths_between(i, w)) for w in range(a.vertex_count))
    action = {}
    for arrow in a.arrows:
        ai = a.arrow_index[arrow.name]
        rows = a.paths_between(i, arrow.target)
        cols = a.paths_between(i, arrow.source)
        mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
        for c, b in enumerate(cols):
            mat[:, c] = a.structure[b, ai, rows]
        action[arrow.name] = mat
    return Rep(a, dims, action, f"P({i})")


def k_dual(m: Rep) -> Rep:
    """Vector-space dual Hom_k(M, k), a right module over the opposite algebra."""
    action = {name: mat.T.copy() for name, mat in m.action.items()}
    label = f"D({m.label})" if m.label else ""
    return Rep(m.algebra.opposite, m.dims, action, label)


def k_dual_map(f: ModMap) -> ModMap:
    return ModMap(k_dual(f.target), k_dual(f.source), tuple(b.T.copy() for b in f.blocks))


def injective_module(a: Algebra, i: int) -> Rep:
    """I_i = D(Ae_i), computed as the dual of the opposite algebra's projective at i."""
    return k_dual(projective_module(a.opposite, i)).with_label(f"I({i})")


def regular_module(a: Algebra) -> Rep:
    return direct_sum(*(projective_module(a, i) for i in range(a.vertex_count))).with_label("A")


def radical(m: Rep) -> tuple[Rep, ModMap]:
    """m*J with its inclusion."""
    field = m.field
    bases = []
    for v in range(len(m.dims)):
        images = [m.action[arrow.name] for arrow in m.algebra.quiver.incoming(v)]
        if images:
            bases.append(field.column_space(np.hstack(images)))
        else:
            bases.append(np.zeros((m.dims[v], 0), dtype=np.int64))
    return sub_rep(m, bases)


def radical_power(m: Rep, k: int) -> tuple[Rep, ModMap]:
    """m*J^k with its inclusion."""
    current, inclusion = m, ModMap.identity(m)
    for _ in range(k):
        current, step = radical(current)
        inclusion = inclusion.compose(step)
    return current, inclusion


def top(m: Rep) -> tuple[Rep, ModMap]:
    return radical(m)[1].cokernel()


def socle(m: Rep) -> tuple[Rep, ModMap]:
    """Largest semisimple submodule: vectors killed by every arrow."""
    field = m.field
    bases = []
    for v in range(len(m.dims)):
        outs = [m.action[arrow.name] for arrow in m.algebra.quiver.outgoing(v)]
        if outs:
            bases.append(field.kernel_basis(np.vstack(outs)))
        else:
            bases.append(np.eye(m.dims[v], dtype=np.int64))
    return sub_rep(m, bases)


def submodule(m: Rep, generators) -> tuple[Rep, ModMap]:
    return generated_submodule(m, generators)


def quotient(m: Rep, inclusion: ModMap) -> tuple[Rep, ModMap]:
    """m / image(inclusion), with the projection."""
    return inclusion.cokernel()


__all__ = [
    "injective_module",
    "k_dual",
    "k_dual_map",
    "projective_module",
    "quotient",
    "radical",
    "radical_power",
    "regular_module",
    "simple_module",
    "socle",
    "submodule",
    "top",
    "zero_module",
]
