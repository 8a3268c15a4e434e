import numpy as np
import pytest

from taulab.algebra import KupischSeries, kupisch_algebra, nakayama_from_kupisch, opposite_algebra
from taulab.algebra.builder import build_algebra
from taulab.algebra.quiver import AlgebraPresentation, Arrow, Quiver, Relation
from taulab.exceptions import InvalidIdempotent, InvalidKupisch, InvalidVertex, NotAdmissible


@pytest.mark.parametrize(
    "lengths, cyclic, dim",
    [
        ([2, 2, 2, 1], False, 7),
        ([3, 3, 4], True, 10),
        ([2, 2], True, 4),
        ([1], False, 1),
        ([2], True, 2),
    ],
)
def test_kupisch_dimension_is_sum_of_lengths(field, lengths, cyclic, dim):
    a = kupisch_algebra(lengths, cyclic=cyclic, field=field)
    assert a.dim == dim
    assert a.vertex_count == len(lengths)
    for i, c in enumerate(lengths):
        assert len(a.paths_from(i)) == c


@pytest.mark.parametrize(
    "lengths, cyclic",
    [([2, 2], False), ([1, 1], False), ([1, 2], True), ([4, 2], True), ([], False), ([3, 1, 1], False)],
)
def test_invalid_kupisch_series(lengths, cyclic):
    with pytest.raises(InvalidKupisch):
        KupischSeries(tuple(lengths), cyclic).validate()


def test_kupisch_relations_are_paths_of_length_c():
    pres = nakayama_from_kupisch(KupischSeries((3, 3, 4), True))
    words = [rel.terms[0][1] for rel in pres.relations]
    assert words == [("a0", "a1", "a2"), ("a1", "a2", "a0"), ("a2", "a0", "a1", "a2")]
    linear = nakayama_from_kupisch(KupischSeries((2, 2, 2, 1)))
    assert [rel.terms[0][1] for rel in linear.relations] == [("a0", "a1"), ("a1", "a2")]


def test_canonical_rotation():
    assert KupischSeries((4, 3, 3), True).canonical().lengths == (3, 3, 4)
    assert KupischSeries((2, 1)).canonical().lengths == (2, 1)


def test_trivial_paths_come_first(linear_2221):
    for v in range(4):
        b = linear_2221.basis[v]
        assert (b.source, b.target, b.word) == (v, v, ())
    assert linear_2221.unit().tolist() == [1, 1, 1, 1, 0, 0, 0]


def test_multiplication_composes_left_to_right(linear_2221):
    a = linear_2221
    a0, a1 = a.arrow_index["a0"], a.arrow_index["a1"]
    e0, e1 = 0, 1
    assert a.structure[e0, a0].tolist() == a.basis_vector(a0).tolist()
    assert a.structure[a0, e1].tolist() == a.basis_vector(a0).tolist()
    assert not a.structure[a0, e0].any()
    # a0 a1 is a relation
    assert not a.structure[a0, a1].any()
    assert np.array_equal(a.multiply(a.unit(), a.basis_vector(a1)), a.basis_vector(a1))


def test_associative(linear_2221, cyclic_334, commutative_square, gentle):
    for a in (linear_2221, cyclic_334, commutative_square, gentle):
        assert a.is_associative()


def test_builtin_bound_quivers(a2, commutative_square, gentle):
    assert a2.dim == 3
    assert commutative_square.dim == 9
    assert gentle.dim == 8
    assert a2.is_nakayama_shaped
    assert not commutative_square.is_nakayama_shaped


def test_commutative_relation_identifies_paths(commutative_square):
    a = commutative_square
    long_paths = [b for b in a.basis if b.length == 2]
    assert len(long_paths) == 1
    assert (long_paths[0].source, long_paths[0].target) == (0, 3)


def test_opposite_reverses_paths(linear_2221):
    op = opposite_algebra(linear_2221)
    assert op.opposite is linear_2221
    assert op.dim == linear_2221.dim
    assert op.is_associative()
    for i in range(4):
        for j in range(4):
            assert op.paths_between(i, j) == linear_2221.paths_between(j, i)
    x, y = linear_2221.basis_vector(4), linear_2221.basis_vector(1)
    assert np.array_equal(op.multiply(x, y), linear_2221.multiply(y, x))


def test_corner_algebra(linear_2221):
    corner = linear_2221.idempotent_subalgebra({1, 2, 3})
    assert corner.dim == 5
    assert corner.vertex_count == 3
    assert corner.parent_vertices == (1, 2, 3)
    assert corner.is_associative()
    assert linear_2221.idempotent_subalgebra({3, 2, 1}) is corner
    assert linear_2221.idempotent_subalgebra(range(4)) is linear_2221


def test_corner_joins_paths_through_removed_vertices(linear_2221):
    corner = linear_2221.idempotent_subalgebra({0, 2})
    assert [a.name for a in corner.arrows] == []
    assert corner.dim == 2
    a = kupisch_algebra([3, 2, 1])
    corner = a.idempotent_subalgebra({0, 2})
    assert [arrow.name for arrow in corner.arrows] == ["a0.a1"]
    assert corner.dim == 3


def test_corner_rejects_bad_idempotents(linear_2221):
    with pytest.raises(InvalidIdempotent):
        linear_2221.idempotent_subalgebra(set())
    with pytest.raises(InvalidVertex):
        linear_2221.idempotent_subalgebra({7})


def test_relations_must_be_admissible(field):
    quiver = Quiver(2, (Arrow("a", 0, 1),))
    with pytest.raises(NotAdmissible):
        build_algebra(AlgebraPresentation(quiver, (Relation(((1, ("a",)),)),)), field)
    loop = Quiver(1, (Arrow("x", 0, 0), Arrow("y", 0, 0)))
    with pytest.raises(NotAdmissible):
        build_algebra(AlgebraPresentation(loop, (Relation(((1, ("x", "x")), (1, ("y",)))),)), field)


def test_quiver_validation():
    with pytest.raises(InvalidVertex):
        Quiver(2, (Arrow("a", 0, 2),))
    with pytest.raises(NotAdmissible):
        Quiver(2, (Arrow("a", 0, 1), Arrow("a", 1, 0)))


def test_non_homogeneous_relation(field):
    # x^2 = x^3 collapses to x^2 = 0 since x^3 lies in J^3
    quiver = Quiver(1, (Arrow("x", 0, 0),))
    rel = Relation(((1, ("x", "x")), (-1, ("x", "x", "x"))))
    a = build_algebra(AlgebraPresentation(quiver, (rel,)), field)
    assert a.dim == 2
    assert a.is_associative()
