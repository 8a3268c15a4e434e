import pytest

from taulab.algebra import KupischSeries, kupisch_algebra
from taulab.homfun import ar_translate, ar_translate_inv, classify, enumerate_indecomposables
from taulab.homfun.oracle import is_injective_uniserial, is_projective_uniserial, tau_inv_label, tau_label, uniserial_labels
from taulab.modrep import (
    describe,
    injective_module,
    is_indecomposable,
    is_injective,
    is_isomorphic,
    is_projective,
    iso_classes,
    nakayama_indecomposables,
    pj_module,
    projective_module,
    simple_module,
)


def rows_by_label(a):
    return {row.module: row for row in classify(a, nakayama_indecomposables(a), seed=0)}


def test_classify_linear_2221(linear_2221):
    rows = rows_by_label(linear_2221)
    assert len(rows) == 7
    perfect = {label for label, row in rows.items() if row.tau_perfect}
    assert perfect == {"PJ(0,1)"}
    assert rows["PJ(0,2)"].tau_perfect is None
    assert rows["PJ(0,2)"].projective and rows["PJ(0,2)"].injective
    assert rows["PJ(0,1)"].ext1_A == rows["PJ(0,1)"].ext2_A == 0
    assert rows["PJ(1,1)"].ext2_A == 1
    assert rows["PJ(0,1)"].tr_reflexive
    assert rows["PJ(3,1)"].dominant_dim == 3
    assert rows["PJ(0,1)"].dominant_dim == 0
    assert rows["PJ(0,2)"].dominant_dim == "inf"


def test_classify_334_gorenstein_projectives(cyclic_334):
    rows = rows_by_label(cyclic_334)
    gp = {label for label, row in rows.items() if row.gorenstein_projective}
    assert gp == {"PJ(0,1)", "PJ(1,2)", "PJ(0,3)", "PJ(1,3)", "PJ(2,4)"}
    for row in rows.values():
        if not row.projective:
            assert row.gorenstein_projective == row.tau_perfect


def test_classify_selfinjective(cyclic_22):
    rows = classify(cyclic_22, nakayama_indecomposables(cyclic_22), seed=0)
    assert all(row.tau_perfect for row in rows if not row.projective)
    assert all(row.reflexive for row in rows)


def test_classify_row_shape(linear_2221):
    row = classify(linear_2221, [pj_module(linear_2221, 2, 1)])[0]
    dumped = row.model_dump(mode="json")
    assert dumped["dims"] == [0, 0, 1, 0]
    assert set(dumped) == {
        "module", "dims", "projective", "injective", "ext1_A", "ext2_A", "tr_reflexive", "tau_perfect",
        "tau_inv_perfect", "reflexive", "torsionless", "gorenstein_projective", "dominant_dim",
    }


@pytest.mark.parametrize(
    "lengths, cyclic",
    [((2, 2, 2, 1), False), ((3, 3, 4), True), ((2, 2), True), ((3, 2, 1), False), ((2, 3), True)],
)
def test_nakayama_oracle_matches_computation(field, lengths, cyclic):
    series = KupischSeries(lengths, cyclic)
    a = kupisch_algebra(lengths, cyclic=cyclic, field=field)
    for i, k in uniserial_labels(series):
        m = pj_module(a, i, k)
        assert is_projective(m) == is_projective_uniserial(series, i, k)
        assert is_injective(m) == is_injective_uniserial(series, i, k)
        assert describe(ar_translate(m)) == tau_label(series, i, k)
        assert describe(ar_translate_inv(m)) == tau_inv_label(series, i, k)


def test_oracle_labels():
    series = KupischSeries((2, 2, 2, 1))
    assert tau_label(series, 0, 1) == "PJ(1,1)"
    assert tau_label(series, 0, 2) == "0"
    assert tau_inv_label(series, 1, 1) == "PJ(0,1)"
    assert tau_inv_label(series, 0, 1) == "0"
    assert len(uniserial_labels(series)) == 7


def test_enumerate_non_nakayama(commutative_square, gentle):
    for a in (commutative_square, gentle):
        found = enumerate_indecomposables(a, seed=0)
        assert len(iso_classes(found)) == len(found)
        for v in range(a.vertex_count):
            for build in (projective_module, injective_module, simple_module):
                assert any(is_isomorphic(build(a, v), m) for m in found)
        for m in found:
            assert is_indecomposable(m)


def test_enumerate_nakayama_shaped_uses_uniserials(a2):
    assert [m.label for m in enumerate_indecomposables(a2)] == ["PJ(0,1)", "PJ(0,2)", "PJ(1,1)"]
