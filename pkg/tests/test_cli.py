import json

import pytest

from taulab.main import main
from taulab.repositories import algebra_repository


def _builtin_path(tmp_path, name):
    return str(algebra_repository.save(tmp_path / f"{name}.json", algebra_repository.load_builtin(name)))


def test_info_text(algebra_file, capsys):
    path = algebra_file([2, 2, 2, 1])
    assert main(["info", path]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "linear[2,2,2,1]: dim 7, 3-Iwanaga-Gorenstein, dominant dimension 3, f = {1,2,3}"


@pytest.mark.parametrize("flag_first", [True, False])
def test_info_json_flag_on_either_side(algebra_file, capsys, flag_first):
    path = algebra_file([3, 3, 4], cyclic=True)
    argv = ["--format", "json", "info", path] if flag_first else ["info", path, "--format", "json"]
    assert main(argv) == 0
    info = json.loads(capsys.readouterr().out)
    assert info["ig_degree"] == 2
    assert info["dim"] == 10
    assert info["field"] == 1009


def test_field_flag(algebra_file, capsys):
    assert main(["info", algebra_file([2, 1]), "--field", "5", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["field"] == 5


def test_bad_field_flag(algebra_file, capsys):
    assert main(["--field", "4", "info", algebra_file([2, 1])]) == 2
    assert "[error]" in capsys.readouterr().err


@pytest.mark.parametrize(
    "op, expr, expected",
    [
        ("tau", "S(0)", "PJ(1,1)"),
        ("omega 2, nu", "S(0)", "PJ(1,1)"),
        ("nu then omega 2", "S(0)", "0"),
        ("ext 3 A", "S(0)", "1"),
        ("tau_perfect", "S(0)", "yes"),
    ],
)
def test_compute(algebra_file, capsys, op, expr, expected):
    assert main(["compute", op, expr, algebra_file([2, 2, 2, 1])]) == 0
    assert capsys.readouterr().out.strip() == expected


def test_compute_json(algebra_file, capsys):
    assert main(["compute", "tau", "S(0)", algebra_file([2, 2, 2, 1]), "--format", "json"]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result["operations"] == ["tau"]
    assert result["dims"] == [0, 1, 0, 0]
    assert result["over_opposite"] is False


@pytest.mark.parametrize(
    "op, expr",
    [("frobnicate", "S(0)"), ("tau_perfect", "P(0)"), ("tau", "S(0"), ("tau", "S(9)")],
)
def test_compute_errors_exit_2(algebra_file, capsys, op, expr):
    assert main(["compute", op, expr, algebra_file([2, 2, 2, 1])]) == 2
    assert capsys.readouterr().err.startswith("[error]")


def test_missing_file_exits_2(tmp_path, capsys):
    assert main(["info", str(tmp_path / "absent.json")]) == 2
    assert "absent.json" in capsys.readouterr().err


def test_classify_json(algebra_file, capsys):
    assert main(["classify", algebra_file([2, 2, 2, 1]), "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert len(rows) == 7
    assert [r["module"] for r in rows if r["tau_perfect"]] == ["PJ(0,1)"]


def test_classify_text(algebra_file, capsys):
    assert main(["classify", algebra_file([2, 2], cyclic=True)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "# cyclic[2,2]"
    assert lines[1].startswith("module")
    assert len(lines) == 2 + 4


def test_classify_needs_enumerate_off_nakayama(tmp_path, capsys):
    path = _builtin_path(tmp_path, "a2_path")
    assert main(["classify", path]) == 2
    assert "Kupisch" in capsys.readouterr().err
    assert main(["classify", path, "--enumerate", "--format", "json"]) == 0
    assert len(json.loads(capsys.readouterr().out)) == 3


def test_verify_file(algebra_file, capsys):
    assert main(["verify", "main-theorem", algebra_file([2, 2, 2, 1])]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == [
        "PASSED  main-theorem on linear[2,2,2,1] (3 checked)",
        "1 passed, 0 failed, 0 errors (3 modules checked)",
    ]


def test_verify_corpus_json(capsys):
    assert main(["verify", "nu-projective-injective", "--corpus", "2,2", "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["summary"]["total"] == len(report["results"]) == 4 + 3
    assert {r["status"] for r in report["results"]} == {"passed"}


@pytest.mark.parametrize("extra", [[], ["FILE", "--corpus", "2,2"]])
def test_verify_needs_exactly_one_source(capsys, extra):
    with pytest.raises(SystemExit) as err:
        main(["verify", "trtr", *extra])
    assert err.value.code == 2


def test_verify_unknown_suite(algebra_file, capsys):
    assert main(["verify", "no-such-suite", algebra_file([2, 1])]) == 2


def test_corpus_names(capsys):
    assert main(["corpus", "2", "2", "--no-builtins"]) == 0
    assert capsys.readouterr().out.split() == ["linear_1", "cyclic_2", "linear_2_1", "cyclic_2_2"]


def test_corpus_json(capsys):
    assert main(["corpus", "2", "2", "--orientation", "cyclic", "--no-builtins", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out) == {
        "cyclic_2": {"kupisch": {"series": [2], "cyclic": True}},
        "cyclic_2_2": {"kupisch": {"series": [2, 2], "cyclic": True}},
    }


def test_corpus_out(tmp_path, capsys):
    assert main(["corpus", "2", "2", "--out", str(tmp_path / "corpus")]) == 0
    written = capsys.readouterr().out.split()
    assert len(written) == 4 + 3
    assert (tmp_path / "corpus" / "linear_2_1.json").is_file()


def test_corpus_bounds(capsys):
    assert main(["corpus", "0", "2"]) == 2


def test_version(capsys):
    with pytest.raises(SystemExit) as err:
        main(["--version"])
    assert err.value.code == 0
    assert "taulab" in capsys.readouterr().out
