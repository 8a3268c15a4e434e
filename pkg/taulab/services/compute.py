"""
Operation pipelines for `taulab compute`.

A pipeline is a list of steps separated by "," or " then ", e.g. "omega 2, nu". Functor
steps map a module to a module, possibly over the opposite algebra; a predicate step
(ext, domdim, reflexive, tau_perfect, gp) ends the pipeline with a value.
"""
import logging
import re
from dataclasses import dataclass
from typing import Callable, Mapping

from taulab.algebra.algebra import Algebra
from taulab.exceptions import ParseError
from taulab.homfun.dominant import dominant_dimension
from taulab.homfun.duality import a_dual, is_reflexive, nu, nu_inv
from taulab.homfun.ext import ext_dim, is_gorenstein_projective
from taulab.homfun.perfect import is_tau_perfect
from taulab.homfun.transpose import ar_translate, ar_translate_inv, transpose
from taulab.modrep.constructions import k_dual
from taulab.modrep.covers import cosyzygy, syzygy
from taulab.modrep.expressions import parse_module
from taulab.modrep.nakayama import describe
from taulab.modrep.rep import Rep
from taulab.schemas.report import ComputeResult

logger = logging.getLogger(__name__)

FUNCTORS: dict[str, Callable[..., Rep]] = {
    "tau": ar_translate,
    "tau_inv": ar_translate_inv,
    "nu": nu,
    "nu_inv": nu_inv,
    "omega": syzygy,
    "coomega": cosyzygy,
    "tr": transpose,
    "dual": a_dual,
    "kdual": k_dual,
}
PREDICATES = ("ext", "domdim", "reflexive", "tau_perfect", "gp")


@dataclass(frozen=True)
class Step:
    name: str
    args: tuple[str, ...] = ()

    def __str__(self) -> str:
        return " ".join((self.name,) + self.args)


def _split_steps(text: str) -> list[str]:
    """Split on top-level commas (not those inside PJ(i,k)) and on the word 'then'."""
    chunks, depth, current = [], 0, []
    for ch in text:
        depth += {"(": 1, ")": -1}.get(ch, 0)
        if ch == "," and depth == 0:
            chunks.append("".join(current))
            current = []
        else:
            current.append(ch)
    chunks.append("".join(current))
    return [part for chunk in chunks for part in re.split(r"\s+then\s+", chunk.strip())]


def parse_pipeline(text: str) -> list[Step]:
    steps = []
    for chunk in _split_steps(text):
        words = chunk.split()
        if not words:
            raise ParseError(f"empty step in {text!r}", "operation")
        name, args = words[0].lower(), tuple(words[1:])
        if name in ("omega", "coomega"):
            if len(args) > 1 or (args and not args[0].isdigit()):
                raise ParseError(f"{name} takes one count, got {' '.join(args)!r}", "operation")
        elif name == "ext":
            if len(args) < 2 or not args[0].isdigit():
                raise ParseError("ext needs a degree and a module, e.g. 'ext 1 A'", "operation")
            args = (args[0], " ".join(args[1:]))
        elif name not in FUNCTORS and name not in PREDICATES:
            raise ParseError(f"unknown operation {name!r}", "operation")
        elif args:
            raise ParseError(f"{name} takes no arguments", "operation")
        steps.append(Step(name, args))
    for step in steps[:-1]:
        if step.name in PREDICATES:
            raise ParseError(f"{step.name} ends a pipeline", "operation")
    return steps


def _apply(step: Step, m: Rep) -> Rep:
    if step.name in ("omega", "coomega"):
        return FUNCTORS[step.name](m, int(step.args[0]) if step.args else 1)
    return FUNCTORS[step.name](m)


def _evaluate(step: Step, m: Rep, named: Mapping[str, Rep], seed: int | None):
    if step.name == "ext":
        n = parse_module(step.args[1], m.algebra, named)
        return ext_dim(m, n, int(step.args[0]))
    if step.name == "domdim":
        return str(dominant_dimension(m))
    if step.name == "reflexive":
        return is_reflexive(m, seed=seed)
    if step.name == "tau_perfect":
        return is_tau_perfect(m, seed)
    return is_gorenstein_projective(m)


def compute(algebra: Algebra, operations: str, expression: str, named: Mapping[str, Rep] | None = None,
            seed: int | None = None) -> ComputeResult:
    named = dict(named or {})
    steps = parse_pipeline(operations)
    m = parse_module(expression, algebra, named)
    value = None
    for step in steps:
        if step.name in PREDICATES:
            scope = named if m.algebra is algebra else {}
            value = _evaluate(step, m, scope, seed)
            break
        m = _apply(step, m)
        logger.debug("%s -> dims %s", step, list(m.dims))
    return ComputeResult(
        algebra=algebra.label,
        expression=expression,
        operations=[str(s) for s in steps],
        result=describe(m, seed),
        dims=list(m.dims),
        over_opposite=m.algebra is not algebra,
        value=value,
    )
