import pytest

from taulab.exceptions import InvalidModule, InvalidVertex, ParseError
from taulab.modrep import is_isomorphic, parse_module, pj_module, projective_module, simple_module


def test_single_terms(linear_2221):
    a = linear_2221
    assert is_isomorphic(parse_module("S(0)", a), simple_module(a, 0))
    assert is_isomorphic(parse_module("PJ(1,2)", a), projective_module(a, 1))
    assert parse_module(" I( 3 ) ", a).dims == (0, 0, 1, 1)
    assert parse_module("A", a).total_dim == 7
    dual = parse_module("D(A)", a)
    assert dual.algebra is a
    assert dual.total_dim == 7


def test_sums(linear_2221):
    a = linear_2221
    assert parse_module("S(0)+P(1)", a).dims == (1, 1, 1, 0)
    assert parse_module("S(0) ⊕ S(0)", a).dims == (2, 0, 0, 0)
    assert parse_module("0", a).is_zero
    assert is_isomorphic(parse_module("0 + PJ(2,1)", a), pj_module(a, 2, 1))


def test_named_modules(linear_2221):
    s = simple_module(linear_2221, 2).with_label("X")
    assert parse_module("X", linear_2221, {"X": s}) is s
    assert parse_module("0 + X", linear_2221, {"X": s}) is s
    assert parse_module("X + S(0)", linear_2221, {"X": s}).dims == (1, 0, 1, 0)


def test_explicit_json_module(linear_2221):
    m = parse_module('{"dims": [1, 1, 0, 0], "action": {"a0": [[1]]}}', linear_2221)
    assert is_isomorphic(m, projective_module(linear_2221, 0))
    with pytest.raises(InvalidModule):
        parse_module('{"dims": [1, 1, 1, 0], "action": {"a0": [[1]], "a1": [[1]]}}', linear_2221)
    with pytest.raises(ParseError):
        parse_module('{"action": {}}', linear_2221)


@pytest.mark.parametrize(
    "text, where",
    [
        ("Q(1)", "column 1"),
        ("S(0", "column 4"),
        ("S(0) S(1)", "column 6"),
        ("S(0) + ", "column 7"),
        ("PJ(1;2)", "column 5"),
        ("", "column 1"),
        ("3", "column 1"),
    ],
)
def test_parse_errors_carry_a_column(linear_2221, text, where):
    with pytest.raises(ParseError) as err:
        parse_module(text, linear_2221)
    assert err.value.location == where


def test_vertex_out_of_range(linear_2221):
    with pytest.raises(InvalidVertex):
        parse_module("S(9)", linear_2221)
