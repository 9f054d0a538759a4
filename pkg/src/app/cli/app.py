from __future__ import annotations

import argparse
from collections.abc import Sequence

from src.app.core.errors import LinkageError
from src.app.settings import load_app_settings
from src.utils.logger import Logger, logger

from .base import ExitCode
from .factory import CommandFactory, CommandType


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--oracle-cap", type=int, default=None, help="vertex cap of the linkage enumeration oracle")
    common.add_argument("--seed", type=int, default=None, help="seed for the random generator")
    common.add_argument("--dot", default=None, help="write a DOT rendering to this path")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--quiet", action="store_true", help="only warnings and errors on stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="vital-linkage",
        description="Decide and certify whether a graph's order-2 linkage is vital.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser(CommandType.CHECK.value, parents=[common], help="vital / XX-free / ladder embedding verdicts")
    check.add_argument("files", nargs="+", help="linked-graph documents, - for stdin")

    generate = sub.add_parser(CommandType.GENERATE.value, parents=[common], help="ladder of order n")
    generate.add_argument("n", type=int)
    generate.add_argument("--out", default=None)

    embed = sub.add_parser(CommandType.EMBED.value, parents=[common], help="ladder embedding certificate")
    embed.add_argument("file")
    embed.add_argument("--out", default=None)

    pathwidth = sub.add_parser(CommandType.PATHWIDTH.value, parents=[common], help="exact pathwidth")
    pathwidth.add_argument("file")

    partition = sub.add_parser(CommandType.PARTITION.value, parents=[common], help="valid rung partition")
    partition.add_argument("file")

    random = sub.add_parser(CommandType.RANDOM.value, parents=[common], help="random linkage minor of a ladder")
    random.add_argument("n", type=int)
    random.add_argument("--density", type=float, default=None)
    random.add_argument("--contract-probability", type=float, default=None)
    random.add_argument("--out", default=None)

    corpus = sub.add_parser(CommandType.CORPUS.value, parents=[common], help="exhaustive small chordless corpus")
    corpus.add_argument("max_vertices", type=int)
    corpus.add_argument("out_dir")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, 0 for --help.
        return int(exc.code or 0)

    try:
        settings = load_app_settings()
        Logger.set_console_level("WARNING" if args.quiet else settings.logging.level)
        command = CommandFactory.create_command(CommandType(args.command), settings)
        return command.run(args)
    except (LinkageError, OSError) as exc:
        logger.error(f"{args.command}: {exc}")
        return int(ExitCode.INPUT_ERROR)
    except Exception:
        logger.exception(f"{args.command}: unexpected failure")
        return int(ExitCode.DISAGREEMENT)
