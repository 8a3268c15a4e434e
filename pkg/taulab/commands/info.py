import argparse

from taulab.commands.common import emit, load_file
from taulab.schemas.report import RunConfig
from taulab.services.info import algebra_info
from taulab.services.render import render_info


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("info", parents=parents, help="dimension, Gorenstein degree, dominant dimension")
    parser.add_argument("file", help="algebra file (JSON)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, config: RunConfig) -> int:
    algebra, _ = load_file(args)
    info = algebra_info(algebra)
    emit(config, info, render_info(info))
    return 0
