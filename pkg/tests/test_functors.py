import pytest

from taulab.exceptions import InvalidInput
from taulab.homfun import (
    a_dual,
    ar_translate,
    ar_translate_inv,
    evaluation_map,
    in_per_tau,
    is_coreflexive,
    is_reflexive,
    is_tau_inv_perfect,
    is_tau_perfect,
    is_torsionless,
    nu,
    nu_inv,
    omega_nu_commutes,
    transpose,
)
from taulab.homfun.duality import REFLEXIVITY_METHODS
from taulab.modrep import (
    describe,
    direct_sum,
    injective_module,
    is_isomorphic,
    k_dual,
    nakayama_indecomposables,
    pj_module,
    projective_module,
    simple_module,
    syzygy,
)


def test_transpose_of_projective_is_zero(linear_2221):
    assert transpose(projective_module(linear_2221, 0)).is_zero


def test_transpose_lands_over_opposite(linear_2221):
    tr = transpose(simple_module(linear_2221, 0))
    op = linear_2221.opposite
    assert tr.algebra is op
    assert is_isomorphic(tr, simple_module(op, 1))


def test_tau_of_s0_is_s1(linear_2221):
    tau = ar_translate(simple_module(linear_2221, 0))
    assert tau.algebra is linear_2221
    assert is_isomorphic(tau, simple_module(linear_2221, 1))
    assert describe(tau) == "PJ(1,1)"


def test_nu_omega2_of_s0_is_s1_but_omega2_nu_vanishes(linear_2221):
    s0 = simple_module(linear_2221, 0)
    assert describe(nu(syzygy(s0, 2))) == "PJ(1,1)"
    assert nu(s0).is_zero
    assert syzygy(nu(s0), 2).is_zero
    assert not omega_nu_commutes(s0)


def test_tau_inverse(linear_2221):
    a = linear_2221
    assert is_isomorphic(ar_translate_inv(simple_module(a, 1)), simple_module(a, 0))
    assert ar_translate_inv(injective_module(a, 3)).is_zero


def test_nakayama_functor_on_projectives(linear_2221, cyclic_334, gentle):
    for a in (linear_2221, cyclic_334, gentle):
        for v in range(a.vertex_count):
            assert is_isomorphic(nu(projective_module(a, v)), injective_module(a, v))
            assert is_isomorphic(nu_inv(injective_module(a, v)), projective_module(a, v))


def test_a_dual_of_projective(linear_2221):
    op = linear_2221.opposite
    for v in range(4):
        star = a_dual(projective_module(linear_2221, v))
        assert star.algebra is op
        assert is_isomorphic(star, projective_module(op, v))


def test_evaluation_map_on_projective(linear_2221):
    ev = evaluation_map(projective_module(linear_2221, 1))
    assert ev.is_homomorphism()
    assert ev.is_isomorphism()


def test_torsionless_and_reflexive(linear_2221):
    a = linear_2221
    assert is_torsionless(projective_module(a, 0))
    assert is_reflexive(projective_module(a, 0))
    assert is_torsionless(simple_module(a, 1))
    assert not is_torsionless(simple_module(a, 0))
    assert not is_reflexive(simple_module(a, 0))


@pytest.mark.parametrize("name", ["linear_2221", "cyclic_334", "cyclic_22"])
def test_reflexivity_methods_agree(request, name):
    a = request.getfixturevalue(name)
    for m in nakayama_indecomposables(a):
        answers = {is_reflexive(m, method) for method in REFLEXIVITY_METHODS}
        assert len(answers) == 1, m.label


def test_unknown_reflexivity_method(linear_2221):
    with pytest.raises(InvalidInput):
        is_reflexive(simple_module(linear_2221, 0), method="guess")


def test_coreflexive_injectives(linear_2221):
    assert is_coreflexive(injective_module(linear_2221, 3))


def test_tau_perfect_column_over_linear_2221(linear_2221):
    a = linear_2221
    assert is_tau_perfect(pj_module(a, 0, 1))
    assert not is_tau_perfect(pj_module(a, 1, 1))
    assert not is_tau_perfect(pj_module(a, 2, 1))


def test_tau_perfect_needs_indecomposable_non_projective(linear_2221):
    a = linear_2221
    with pytest.raises(InvalidInput):
        is_tau_perfect(projective_module(a, 0))
    with pytest.raises(InvalidInput):
        is_tau_perfect(direct_sum(simple_module(a, 0), simple_module(a, 1)))
    with pytest.raises(InvalidInput):
        is_tau_inv_perfect(injective_module(a, 1))


def test_selfinjective_simples(cyclic_22):
    for v in range(2):
        s = simple_module(cyclic_22, v)
        assert is_tau_perfect(s)
        assert is_tau_inv_perfect(s)
        assert omega_nu_commutes(s)


def test_per_tau_membership(linear_2221):
    a = linear_2221
    s0 = simple_module(a, 0)
    assert in_per_tau(direct_sum(s0, s0))
    assert not in_per_tau(direct_sum(s0, projective_module(a, 3)))
    assert not in_per_tau(simple_module(a, 1))


def test_double_dual_of_module_over_opposite(linear_2221):
    dual = k_dual(simple_module(linear_2221, 2))
    assert k_dual(dual).algebra is linear_2221
