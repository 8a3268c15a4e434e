import argparse
import logging

from taulab.commands.common import load_file
from taulab.runner.runner import SUITES, VerifyRunner, resolve_suites
from taulab.schemas.report import RunConfig
from taulab.services.corpus import ORIENTATIONS, corpus_algebras, parse_corpus_spec
from taulab.services.render import render_verify, to_json

logger = logging.getLogger(__name__)

EXIT_FAILED = 1
EXIT_BOUND = 3


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("verify", parents=parents, help="run a theorem suite on a file or a corpus")
    parser.add_argument("suite", help=f"all, or one of: {', '.join(SUITES)}")
    parser.add_argument("file", nargs="?", help="algebra file (JSON)")
    parser.add_argument("--corpus", metavar="N,C", help="every Kupisch series with n <= N, c_i <= C, plus built-ins")
    parser.add_argument("--orientation", choices=ORIENTATIONS, default="both")
    parser.add_argument("--samples", type=int, help="random direct sums per algebra for the reflexivity suite")
    parser.set_defaults(handler=run, parser=parser)


def exit_code(results) -> int:
    """0 all passed; 3 when every problem is a bound error; 1 otherwise."""
    failed = [r for r in results if r.status == "failed"]
    errors = [r for r in results if r.status == "error"]
    if failed:
        return EXIT_FAILED
    if errors:
        return EXIT_BOUND if all(r.error == "BoundExceeded" for r in errors) else EXIT_FAILED
    return 0


def run(args: argparse.Namespace, config: RunConfig) -> int:
    if (args.file is None) == (args.corpus is None):
        args.parser.error("give exactly one of FILE or --corpus N,C")
    suites = resolve_suites(args.suite)
    if args.corpus:
        n, c = parse_corpus_spec(args.corpus)
        algebras = corpus_algebras(n, c, args.orientation, field_prime=getattr(args, "field", None))
    else:
        algebras = [load_file(args)[0]]

    runner = VerifyRunner(algebras, suites, seed=config.seed, samples=args.samples)
    results, summary = [], {}
    for event in runner.run():
        if event["event"] == "start":
            logger.info("verifying %d algebras: %s", event["algebras"], ", ".join(event["suites"]))
        elif event["event"] == "result":
            results.append(event["result"])
        else:
            summary = event["summary"]

    if config.output_format == "json":
        print(to_json({"results": [r.model_dump(mode="json") for r in results], "summary": summary}))
    else:
        print(render_verify(results, summary))
    return exit_code(results)
