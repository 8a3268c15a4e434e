"""
Module expressions for the command line.

    S(i)  P(i)  I(i)  PJ(i,k)  A  D(A)  0  <name of a module in the algebra file>

joined with "+" or "⊕". An expression starting with "{" is read as an explicit
{"dims": [...], "action": {...}} module.
"""
import re
from typing import Mapping

from pydantic import ValidationError

from taulab.algebra.algebra import Algebra
from taulab.exceptions import ParseError
from taulab.modrep.constructions import injective_module, k_dual, projective_module, regular_module, simple_module
from taulab.modrep.nakayama import pj_module
from taulab.modrep.rep import Rep, direct_sum, zero_module
from taulab.schemas.algebra_file import ModuleSpec

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>[(),+⊕]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if not match or match.end() == pos:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}", f"column {pos + 1}")
        kind = match.lastgroup
        start = match.start(kind)
        tokens.append((kind, match.group(kind), start + 1))
        pos = match.end()
    return tokens


class _ExpressionParser:
    def __init__(self, text: str, algebra: Algebra, named: Mapping[str, Rep]):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.algebra = algebra
        self.named = named
        self.length = len(text)

    def _peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _take(self, kind: str, value: str | None = None) -> str:
        token = self._peek()
        if token is None:
            raise ParseError(f"expected {value or kind} at end of expression", f"column {self.length + 1}")
        if token[0] != kind or (value is not None and token[1] != value):
            raise ParseError(f"expected {value or kind}, got {token[1]!r}", f"column {token[2]}")
        self.pos += 1
        return token[1]

    def _int(self) -> int:
        return int(self._take("num"))

    def parse(self) -> Rep:
        if not self.tokens:
            raise ParseError("empty module expression", "column 1")
        terms = [self._term()]
        while self._peek() is not None:
            token = self._peek()
            if token[1] not in ("+", "⊕"):
                raise ParseError(f"expected '+' or '⊕', got {token[1]!r}", f"column {token[2]}")
            self.pos += 1
            terms.append(self._term())
        nonzero = [t for t in terms if not t.is_zero]
        if not nonzero:
            return zero_module(self.algebra)
        return nonzero[0] if len(nonzero) == 1 else direct_sum(*nonzero)

    def _term(self) -> Rep:
        token = self._peek()
        if token is None:
            raise ParseError("expected a module", f"column {self.length + 1}")
        kind, value, column = token
        a = self.algebra
        if kind == "num":
            self.pos += 1
            if value != "0":
                raise ParseError(f"only the number 0 names a module, got {value}", f"column {column}")
            return zero_module(a)
        if kind != "name":
            raise ParseError(f"expected a module, got {value!r}", f"column {column}")
        self.pos += 1
        if value in ("S", "P", "I"):
            self._take("sym", "(")
            i = self._int()
            self._take("sym", ")")
            build = {"S": simple_module, "P": projective_module, "I": injective_module}[value]
            return build(a, i)
        if value == "PJ":
            self._take("sym", "(")
            i = self._int()
            self._take("sym", ",")
            k = self._int()
            self._take("sym", ")")
            a.check_vertex(i)
            return pj_module(a, i, k)
        if value == "A":
            return regular_module(a)
        if value == "D":
            self._take("sym", "(")
            self._take("name", "A")
            self._take("sym", ")")
            return k_dual(regular_module(a.opposite)).with_label("D(A)")
        if value in self.named:
            return self.named[value]
        raise ParseError(f"unknown module {value!r}", f"column {column}")


def parse_module(text: str, algebra: Algebra, named: Mapping[str, Rep] | None = None) -> Rep:
    text = text.strip()
    if text.startswith("{"):
        try:
            spec = ModuleSpec.model_validate_json(text)
        except ValidationError as e:
            first = e.errors()[0]
            raise ParseError(first["msg"], ".".join(str(x) for x in first["loc"]) or "column 1") from None
        return Rep(algebra, tuple(spec.dims), spec.action, spec.name or "").validate()
    return _ExpressionParser(text, algebra, named or {}).parse()
