import argparse

from taulab.commands.common import emit, load_file
from taulab.repositories import algebra_repository
from taulab.schemas.report import RunConfig
from taulab.services.compute import compute
from taulab.services.render import render_compute


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "compute", parents=parents,
        help="apply functors to a module, e.g. compute 'omega 2, nu' 'S(0)' FILE",
    )
    parser.add_argument("op", help="operation pipeline: steps separated by ',' or ' then '")
    parser.add_argument("expr", help="module expression: S(i), P(i), I(i), PJ(i,k), A, D(A), sums, or JSON")
    parser.add_argument("file", help="algebra file (JSON)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, config: RunConfig) -> int:
    algebra, spec = load_file(args)
    named = algebra_repository.named_modules(algebra, spec)
    result = compute(algebra, args.op, args.expr, named, config.seed)
    emit(config, result, render_compute(result))
    return 0
