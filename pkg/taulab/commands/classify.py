import argparse

from taulab.commands.common import emit, load_file
from taulab.homfun.classify import classify
from taulab.homfun.indecomposables import enumerate_indecomposables
from taulab.modrep.nakayama import nakayama_indecomposables
from taulab.repositories import algebra_repository
from taulab.schemas.report import RunConfig
from taulab.services.render import render_classify


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("classify", parents=parents, help="one row of invariants per indecomposable")
    parser.add_argument("file", help="algebra file (JSON)")
    parser.add_argument(
        "--enumerate", action="store_true",
        help="find the indecomposables of a non-Nakayama algebra by closing P, I and S under tau and tau^-1",
    )
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, config: RunConfig) -> int:
    algebra, spec = load_file(args)
    if spec.kupisch is not None:
        modules = nakayama_indecomposables(algebra)
    elif spec.modules:
        modules = [algebra_repository.module_from_spec(algebra, m) for m in spec.modules]
    elif args.enumerate:
        modules = enumerate_indecomposables(algebra, config.seed)
    else:
        # raises NotNakayama: no Kupisch series and no module list
        modules = nakayama_indecomposables(algebra)
    rows = classify(algebra, modules, config.seed)
    emit(config, rows, render_classify(algebra.label, rows))
    return 0
