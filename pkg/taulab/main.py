"""Command-line entry point: `taulab info|compute|classify|verify|corpus`."""
import argparse
import logging
import sys

from pydantic import ValidationError

from taulab import __version__
from taulab.commands import COMMANDS
from taulab.commands.common import add_global_flags
from taulab.config import get_settings
from taulab.exceptions import BoundExceeded, ConfigError, TaulabError
from taulab.schemas.report import RunConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BOUND = 3

OVERRIDES = {
    "field": "field_prime",
    "seed": "seed",
    "format": "output_format",
    "max_resolution": "max_resolution",
    "max_path_length": "max_path_length",
    "log_level": "log_level",
    "workers": "workers",
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    add_global_flags(common)
    parser = argparse.ArgumentParser(
        prog="taulab",
        parents=[common],
        description="Homological functors and tau-perfect modules of finite-dimensional algebras over F_p.",
    )
    parser.add_argument("--version", action="version", version=f"taulab {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers, [common])
    return parser


def apply_overrides(args: argparse.Namespace) -> RunConfig:
    """Push command-line flags into the cached settings; they win over TAULAB_* and .env."""
    settings = get_settings()
    try:
        for flag, field in OVERRIDES.items():
            if hasattr(args, flag):
                setattr(settings, field, getattr(args, flag))
    except ValidationError as e:
        raise ConfigError(e.errors()[0]["msg"]) from None
    return RunConfig(
        field_prime=settings.field_prime,
        seed=settings.seed,
        max_path_length=settings.max_path_length,
        max_resolution=settings.max_resolution,
        output_format=settings.output_format,
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = apply_overrides(args)
    except ConfigError as e:
        print(f"[error] {e}", file=sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(
        level=get_settings().log_level.upper(),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    logger.debug("run config %s", config.model_dump())

    try:
        return args.handler(args, config)
    except BoundExceeded as e:
        print(f"[bound] {e}", file=sys.stderr)
        return EXIT_BOUND
    except TaulabError as e:
        print(f"[error] {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
