"""Helpers shared by the subcommands: loading the FILE argument and printing results."""
import argparse
from pathlib import Path

from taulab.algebra.algebra import Algebra
from taulab.repositories import algebra_repository
from taulab.schemas.algebra_file import AlgebraFile
from taulab.schemas.report import RunConfig
from taulab.services.render import to_json


def add_global_flags(parser: argparse.ArgumentParser) -> None:
    """Flags accepted before or after the subcommand; SUPPRESS keeps an unset flag from masking the other position."""
    parser.add_argument("--field", type=int, default=argparse.SUPPRESS, metavar="P", help="prime p of F_p")
    parser.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized procedures")
    parser.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS, help="output format")
    parser.add_argument("--max-resolution", type=int, default=argparse.SUPPRESS, metavar="K",
                        help="length bound for (co)resolutions")
    parser.add_argument("--max-path-length", type=int, default=argparse.SUPPRESS, metavar="L",
                        help="longest path tried when building an algebra")
    parser.add_argument("--log-level", default=argparse.SUPPRESS, help="logging level (stderr)")
    parser.add_argument("--workers", type=int, default=argparse.SUPPRESS, help="threads for verify")


def load_file(args: argparse.Namespace) -> tuple[Algebra, AlgebraFile]:
    return algebra_repository.load_algebra(Path(args.file), getattr(args, "field", None))


def emit(config: RunConfig, payload, text: str) -> None:
    print(to_json(payload) if config.output_format == "json" else text)
