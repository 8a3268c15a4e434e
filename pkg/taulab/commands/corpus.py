import argparse

from taulab.commands.common import emit
from taulab.exceptions import ParseError
from taulab.schemas.report import RunConfig
from taulab.services.corpus import ORIENTATIONS, corpus_files, write_corpus


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("corpus", parents=parents, help="generate every valid Kupisch series up to a size")
    parser.add_argument("max_vertices", type=int)
    parser.add_argument("max_length", type=int)
    parser.add_argument("--orientation", choices=ORIENTATIONS, default="both")
    parser.add_argument("--out", metavar="DIR", help="write one algebra file per series into DIR")
    parser.add_argument("--no-builtins", action="store_true", help="leave out the shipped bound-quiver examples")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, config: RunConfig) -> int:
    if args.max_vertices < 1 or args.max_length < 1:
        raise ParseError("bounds must be >= 1", "corpus")
    files = corpus_files(args.max_vertices, args.max_length, args.orientation, builtins=not args.no_builtins)
    if args.out:
        paths = write_corpus(args.out, files)
        emit(config, [str(p) for p in paths], "\n".join(str(p) for p in paths))
        return 0
    payload = {name: spec.model_dump(mode="json", by_alias=True, exclude_none=True, exclude_defaults=True)
               for name, spec in files}
    emit(config, payload, "\n".join(name for name, _ in files))
    return 0
