import json

import pytest

from taulab.algebra.kupisch import KupischSeries
from taulab.exceptions import InvalidInput, ParseError
from taulab.repositories import algebra_repository
from taulab.schemas.report import AlgebraInfo, ClassReport, Failure, VerifyResult
from taulab.services import (
    algebra_info,
    compute,
    corpus_files,
    kupisch_series,
    parse_corpus_spec,
    parse_pipeline,
    write_corpus,
)
from taulab.services.render import render_classify, render_compute, render_info, render_verify, to_json


class TestCorpus:
    def test_small_series(self):
        series = kupisch_series(2, 2)
        assert series == [
            KupischSeries((1,), False),
            KupischSeries((2,), True),
            KupischSeries((2, 1), False),
            KupischSeries((2, 2), True),
        ]

    def test_orientation_filter(self):
        assert all(s.cyclic for s in kupisch_series(3, 3, "cyclic"))
        assert not any(s.cyclic for s in kupisch_series(3, 3, "linear"))
        with pytest.raises(ParseError):
            kupisch_series(2, 2, "sideways")

    def test_cyclic_series_counted_once_per_rotation(self):
        cyclic = kupisch_series(3, 4, "cyclic")
        assert KupischSeries((3, 3, 4), True) in cyclic
        assert KupischSeries((3, 4, 3), True) not in cyclic
        assert len(cyclic) == len(set(cyclic))

    def test_file_names(self):
        names = [name for name, _ in corpus_files(2, 2)]
        assert names == ["linear_1", "cyclic_2", "linear_2_1", "cyclic_2_2", *algebra_repository.builtin_names()]
        assert [name for name, _ in corpus_files(2, 2, builtins=False)][-1] == "cyclic_2_2"

    def test_generation_is_stable(self):
        assert kupisch_series(3, 3) == kupisch_series(3, 3)

    def test_write_corpus(self, tmp_path):
        paths = write_corpus(tmp_path, corpus_files(2, 2, builtins=False))
        assert [p.name for p in paths] == ["linear_1.json", "cyclic_2.json", "linear_2_1.json", "cyclic_2_2.json"]
        assert algebra_repository.load(paths[-1]).kupisch.cyclic is True

    @pytest.mark.parametrize("text, expected", [("3,4", (3, 4)), (" 2 , 5 ", (2, 5))])
    def test_corpus_spec(self, text, expected):
        assert parse_corpus_spec(text) == expected

    @pytest.mark.parametrize("text", ["3", "3;4", "0,2", "a,b"])
    def test_bad_corpus_spec(self, text):
        with pytest.raises(ParseError):
            parse_corpus_spec(text)


class TestCompute:
    def test_pipeline_separators(self):
        assert [str(s) for s in parse_pipeline("omega 2, nu")] == ["omega 2", "nu"]
        assert [str(s) for s in parse_pipeline("nu then omega 2")] == ["nu", "omega 2"]
        assert [str(s) for s in parse_pipeline("ext 1 PJ(1,2)")] == ["ext 1 PJ(1,2)"]

    @pytest.mark.parametrize("text", ["frobnicate", "ext 1 A, nu", "omega x", "tau 2", "ext A", "nu,"])
    def test_bad_pipelines(self, text):
        with pytest.raises(ParseError):
            parse_pipeline(text)

    @pytest.mark.parametrize(
        "ops, expr, expected",
        [
            ("tau", "S(0)", "PJ(1,1)"),
            ("omega 2, nu", "S(0)", "PJ(1,1)"),
            ("nu then omega 2", "S(0)", "0"),
            ("omega", "PJ(0,2)", "0"),
            ("nu", "P(0)", "PJ(0,1)"),
            ("tau_inv", "S(1)", "PJ(0,1)"),
        ],
    )
    def test_functor_pipelines(self, linear_2221, ops, expr, expected):
        result = compute(linear_2221, ops, expr)
        assert result.result == expected
        assert result.value is None
        assert not result.over_opposite

    def test_predicates(self, linear_2221):
        assert compute(linear_2221, "ext 1 A", "S(0)").value == 0
        assert compute(linear_2221, "ext 3 A", "S(0)").value == 1
        assert compute(linear_2221, "tau_perfect", "S(0)").value is True
        assert compute(linear_2221, "tau_perfect", "S(1)").value is False
        assert compute(linear_2221, "domdim", "A").value == "3"

    def test_opposite_side(self, linear_2221):
        result = compute(linear_2221, "kdual", "S(0)")
        assert result.over_opposite
        assert result.dims == [1, 0, 0, 0]
        assert render_compute(result).endswith("(over the opposite algebra)")

    def test_predicate_domain(self, linear_2221):
        with pytest.raises(InvalidInput):
            compute(linear_2221, "tau_perfect", "P(0)")


class TestInfo:
    def test_linear_2221(self, linear_2221):
        info = algebra_info(linear_2221)
        assert "dim 7, 3-Iwanaga-Gorenstein, dominant dimension 3, f = {1,2,3}" in info.summary
        assert info.injective_dimensions == [3, 3]
        assert info.ig_degree == 3
        assert info.dominant_dimension == 3
        assert info.f == [1, 2, 3]
        assert info.projective_injective == [0, 1, 2]
        assert info.kupisch == "linear[2,2,2,1]"

    def test_semisimple(self, semisimple):
        assert algebra_info(semisimple).summary == (
            "dim 1, semisimple, selfinjective, 0-Iwanaga-Gorenstein, dominant dimension inf, f = {0}"
        )

    def test_no_projective_injective(self, a3_source):
        info = algebra_info(a3_source)
        assert info.summary.endswith("dominant dimension 0, no projective-injective module")
        assert info.f is None
        assert info.projective_injective == []


def _row(module, **overrides):
    values = dict(
        module=module, dims=[1, 0], projective=False, injective=True, ext1_A=0, ext2_A=0,
        tr_reflexive=True, tau_perfect=True, tau_inv_perfect=None, reflexive=False, torsionless=False,
        gorenstein_projective=None, dominant_dim=0,
    )
    values.update(overrides)
    return ClassReport(**values)


class TestRender:
    def test_to_json_is_sorted_and_stable(self):
        info = AlgebraInfo(
            label="x", field=7, dim=1, vertices=1, semisimple=True, selfinjective=True,
            injective_dimensions=[0, 0], ig_degree=0, dominant_dimension="inf", f=[0],
            projective_injective=[0], summary="s",
        )
        text = to_json(info)
        assert text == to_json(info)
        keys = list(json.loads(text))
        assert keys == sorted(keys)
        assert render_info(info) == "x: s"

    def test_to_json_of_a_list(self):
        assert json.loads(to_json([_row("S(0)")]))[0]["tau_inv_perfect"] is None

    def test_classify_table(self):
        text = render_classify("demo", [_row("S(0)"), _row("PJ(10,2)", projective=True, tau_perfect=None)])
        lines = text.splitlines()
        assert lines[0] == "# demo"
        assert lines[1].split() == ["module", "proj", "inj", "Ext1", "Ext2", "TrRefl", "tauPerf", "tauInvPerf",
                                    "refl", "tf", "GP", "domdim"]
        assert lines[2].split()[:3] == ["S(0)", "no", "yes"]
        assert lines[3].split()[6] == "-"
        assert lines[2].index("no") == lines[3].index("yes")

    def test_verify_report(self):
        results = [
            VerifyResult(suite="trtr", algebra="a", status="passed", checked=4),
            VerifyResult(
                suite="trtr", algebra="b", status="failed", checked=2,
                failures=[Failure(module="S(1)", expected="PJ(1,1)", got="0")],
            ),
        ]
        summary = {"passed": 1, "failed": 1, "errors": 0, "checked": 6, "total": 2}
        assert render_verify(results, summary).splitlines() == [
            "PASSED  trtr on a (4 checked)",
            "FAILED  trtr on b (2 checked)",
            "    S(1): expected PJ(1,1), got 0",
            "1 passed, 1 failed, 0 errors (6 modules checked)",
        ]
