"""
Command-line interface for braid invariants, verification suites and the corpus.

Logs go to stderr; stdout carries only results, so equal inputs give
byte-identical output.
"""

import argparse
import json
import logging
import random
import sys
from dataclasses import replace
from typing import Any, Dict, List, Optional

from src.config import LOG_LEVELS, EngineConfig, load_config
from src.corpus import check_corpus, regenerate
from src.engine import KINDS, EngineError, InvariantEngine
from src.errors import (
    BadPartition,
    BadToken,
    CapExceeded,
    CheckFailed,
    ConfigError,
    CorpusError,
    GeneratorOutOfRange,
    IndexOutOfRange,
    InvalidFamily,
    RelationFailed,
    RookAlgebraError,
)
from src.verify import SUITES, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

USAGE_ERRORS = (
    BadToken,
    GeneratorOutOfRange,
    IndexOutOfRange,
    BadPartition,
    CapExceeded,
    InvalidFamily,
    ConfigError,
    CorpusError,
    EngineError,
)
CHECK_ERRORS = (RelationFailed, CheckFailed)

JONES_NOTE = (
    "Jones values are polynomials in q with q = -t^(1/2), where t is the classical "
    "Jones variable; the right-handed trefoil closes to q^2 + q^6 - q^8. Alexander "
    "values are reported up to units, centred when the span allows it."
)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=None, help="seed for random words")
    common.add_argument("--corpus", default=None, help="path of the corpus file")
    common.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING ...")
    return common


def _word_options(parser: argparse.ArgumentParser):
    parser.add_argument("--n", type=int, required=True, help="strand count")
    parser.add_argument(
        "--word", default="", help='signed generators, e.g. "1 -2 1 -2"'
    )


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="rook-invariants",
        description="Braid closure invariants through the planar rook algebra",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    invariant = sub.add_parser(
        "invariant",
        parents=[common],
        help="invariant of a braid closure",
        epilog=JONES_NOTE,
    )
    _word_options(invariant)
    invariant.add_argument("--kind", choices=KINDS, default="jones")

    image = sub.add_parser(
        "image", parents=[common], help="image of a word in the rook algebra"
    )
    _word_options(image)
    image.add_argument("--family", type=int, default=5, help="family 1 to 5")
    image.add_argument(
        "--rescaled", action="store_true", help="rescaled variant of family 2"
    )

    rep = sub.add_parser("rep", parents=[common], help="rho_k matrix of a word")
    _word_options(rep)
    rep.add_argument("--k", type=int, required=True, help="subset size")
    rep.add_argument("--family", type=int, default=1)

    verify = sub.add_parser("verify", parents=[common], help="run property suites")
    verify.add_argument("suite", nargs="?", choices=SUITES, default=None)
    verify.add_argument(
        "--suite",
        dest="suite_flag",
        choices=SUITES,
        default=None,
        help="suite to run, same as the positional form (default: all)",
    )
    verify.add_argument(
        "--family",
        type=int,
        action="append",
        default=None,
        help="restrict relation checks to a family (repeatable)",
    )
    verify.add_argument("--n", type=int, default=None, help="largest strand count")
    verify.add_argument(
        "--count", type=int, default=None, help="random words per check"
    )
    verify.add_argument("--max-length", type=int, default=None)
    verify.add_argument("--vip-max", type=int, default=6)

    corpus = sub.add_parser("corpus", parents=[common], help="frozen corpus tools")
    corpus.add_argument("action", choices=("check", "regenerate"))
    corpus.add_argument("--rewrites", type=int, default=10, help="Markov rewrites")
    return parser


def _effective_config(args: argparse.Namespace) -> EngineConfig:
    config = load_config()
    overrides: Dict[str, Any] = {}
    if args.seed is not None:
        overrides["default_seed"] = args.seed
    if args.corpus is not None:
        overrides["corpus_path"] = args.corpus
    if args.log_level is not None:
        overrides["log_level"] = args.log_level.upper()
        if overrides["log_level"] not in LOG_LEVELS:
            raise ConfigError(f"--log-level is not a logging level: {args.log_level}")
    return replace(config, **overrides)


def _emit(payload: Dict[str, Any], as_json: bool, lines: List[str]):
    if as_json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print("\n".join(lines))


def _invariant(args, config: EngineConfig) -> int:
    result = InvariantEngine(config).compute_invariant(args.n, args.word, args.kind)
    if args.kind == "linking":
        lines = [" ".join(str(x) for x in row) for row in result["linking"]]
        components = [" ".join(str(s) for s in c) for c in result["components"]]
        lines.append("components: " + " | ".join(components))
    else:
        lines = [result["polynomial"]]
    _emit(result, args.json, lines)
    return EXIT_OK


def _image(args, config: EngineConfig) -> int:
    result = InvariantEngine(config).compute_image(
        args.n, args.word, args.family, args.rescaled
    )
    lines = [f"({t['coefficient']}) {t['diagram']}" for t in result["terms"]] or ["0"]
    _emit(result, args.json, lines)
    return EXIT_OK


def _rep(args, config: EngineConfig) -> int:
    result = InvariantEngine(config).compute_representation(
        args.n, args.k, args.word, args.family
    )
    basis = ["{" + ",".join(str(s) for s in subset) + "}" for subset in result["basis"]]
    lines = ["basis: " + " ".join(basis)]
    lines += ["[" + ", ".join(row) + "]" for row in result["rows"]]
    _emit(result, args.json, lines)
    return EXIT_OK


def _verify(args, config: EngineConfig) -> int:
    suite = args.suite_flag or args.suite or "all"
    if args.suite_flag and args.suite and args.suite_flag != args.suite:
        logger.warning(
            f"Both '{args.suite}' and --suite '{args.suite_flag}' given; "
            f"running '{args.suite_flag}'"
        )
    report = run_suite(
        suite,
        seed=config.default_seed,
        families=args.family,
        max_n=args.n if args.n is not None else config.max_strands,
        count=args.count if args.count is not None else config.random_words,
        vip_max=args.vip_max,
        max_length=(
            args.max_length if args.max_length is not None else config.max_word_length
        ),
    )
    lines = [
        f"{'PASS' if c.passed else 'FAIL'}  {c.name}"
        + (f"  ({c.detail})" if c.detail else "")
        for c in report.checks
    ]
    lines.append(f"{sum(c.passed for c in report.checks)}/{len(report.checks)} passed")
    payload = report.model_dump(exclude={"seconds"})
    payload["passed"] = report.passed
    _emit(payload, args.json, lines)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _corpus(args, config: EngineConfig) -> int:
    if args.action == "regenerate":
        records = regenerate(config.corpus_path, config.max_crossings)
        _emit(
            {"path": config.corpus_path, "records": [r.model_dump() for r in records]},
            args.json,
            [f"{r.name}: {r.jones_q} | {r.alexander_q}" for r in records],
        )
        return EXIT_OK
    report = check_corpus(
        config.corpus_path,
        random.Random(config.default_seed),
        rewrites=args.rewrites,
        max_crossings=config.max_crossings,
    )
    lines = [
        f"{'PASS' if r.passed else 'FAIL'}  {r.name}"
        + (f"  ({r.detail})" if r.detail else "")
        for r in report.records
    ]
    payload = report.model_dump(exclude={"seconds"})
    payload["passed"] = report.passed
    _emit(payload, args.json, lines)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


_COMMANDS = {
    "invariant": _invariant,
    "image": _image,
    "rep": _rep,
    "verify": _verify,
    "corpus": _corpus,
}


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse argv, run one subcommand and return the process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        config = _effective_config(args)
        logging.basicConfig(
            level=config.log_level,
            format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
            stream=sys.stderr,
        )
        logging.getLogger().setLevel(config.log_level)
        return _COMMANDS[args.command](args, config)
    except USAGE_ERRORS as e:
        logger.error(f"{args.command}: {type(e).__name__}: {e}")
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CHECK_ERRORS as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except RookAlgebraError as e:
        logger.error(f"{args.command} failed: {type(e).__name__}: {e}")
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_CHECK_FAILED


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
