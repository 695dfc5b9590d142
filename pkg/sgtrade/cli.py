"""
sgtrade command line.

Machine output is one JSON document on stdout (or the ``-o`` file);
diagnostics and logs go to stderr.

Exit codes:
  0  yes / success
  1  no
  2  usage, parse or validation error
  3  budget exceeded

Usage:
    sgtrade decide --beta L --given "[[0,1],[2,3]]" example.json
    sgtrade decide --j 3 game.json
    sgtrade gen-sat --cnf formula.cnf --j 3 -o instance.json
    sgtrade oracle --j 2 game.json
    SG_BUDGET=100000 sgtrade oracle --j 4 big.json
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from enum import IntEnum
from pathlib import Path
from typing import Any

import structlog
from pydantic import BaseModel
from rich.console import Console
from rich.markup import escape

from sgtrade.convert import convert
from sgtrade.deciders import is_j_trade
from sgtrade.dispatch import TradeDispatcher
from sgtrade.documents import (
    AnswerDocument,
    ErrorDocument,
    GameDocument,
    SatInstanceDocument,
    SplitInstanceDocument,
    SplitSolutionDocument,
    TableDocument,
    ValidationDocument,
    check_player_list,
    from_lists,
    parse_document,
    read_game_input,
)
from sgtrade.errors import (
    BudgetExceededError,
    GameFormatError,
    GeneratorSelfCheckError,
    PreconditionError,
    SgTradeError,
)
from sgtrade.game import Classification, Coalition, GameRep, RepKind, validate_game
from sgtrade.oracle import brute_force_trade, random_game
from sgtrade.reductions import game_from_cnf_dual, game_from_cnf_j, parse_dimacs, solve_set_splitting
from sgtrade.settings import Settings
from sgtrade.trade import TradeAnswer, TradeQuery

logger = structlog.get_logger("sgtrade.cli")

console = Console(stderr=True)


class ExitCode(IntEnum):
    YES = 0
    NO = 1
    USAGE = 2
    BUDGET = 3


def configure_logging(verbosity: int) -> None:
    """WARNING by default, INFO with -v, DEBUG with -vv; always to stderr."""
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    structlog.configure(
        processors=[
            structlog.processors.add_log_level,
            structlog.dev.ConsoleRenderer(colors=False),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(level),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )


# ── Argument helpers ─────────────────────────────────────────────────────────


def parse_coalitions(text: str, n: int) -> tuple[Coalition, ...]:
    """
    ``--given`` value: a JSON array of player arrays, e.g. ``[[0,1],[2,3]]``.
    Same grammar as a game file: each array strictly ascending, ids in [0, n).
    """
    try:
        raw: Any = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GameFormatError(f"--given is not valid JSON: {exc}") from exc
    if not isinstance(raw, list) or not all(
        isinstance(c, list) and all(isinstance(p, int) and not isinstance(p, bool) for p in c)
        for c in raw
    ):
        raise GameFormatError("--given must be an array of arrays of player ids")
    try:
        for players in raw:
            check_player_list(players, "--given coalition", n)
    except ValueError as exc:
        raise GameFormatError(str(exc)) from exc
    return from_lists(raw)


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GameFormatError(f"cannot read {path}: {exc.strerror}") from exc


def _query_inputs(
    args: argparse.Namespace, settings: Settings
) -> tuple[GameRep, tuple[Coalition, ...] | None, Classification | None, int | None]:
    """Game, given side, β and j from the flags, falling back to an instance document."""
    rep, inst = read_game_input(_read_text(args.game), settings)
    given = parse_coalitions(args.given, rep.n) if args.given is not None else None
    beta = Classification.from_tag(args.beta) if args.beta is not None else None
    if given is None and inst is not None and args.j in (None, inst.j):
        given = inst.given_coalitions()
        beta = beta or inst.classification
    j = args.j
    if given is not None:
        if j is not None and j != len(given):
            raise PreconditionError(f"--j {j} does not match {len(given)} given coalitions")
        j = len(given)
        if beta is None:
            raise PreconditionError("--beta is required with --given")
    return rep, given, beta, j


# ── Commands ─────────────────────────────────────────────────────────────────


def cmd_convert(args: argparse.Namespace, settings: Settings) -> tuple[BaseModel, ExitCode]:
    rep, _ = read_game_input(_read_text(args.game), settings)
    return GameDocument.from_rep(convert(rep, args.to, settings)), ExitCode.YES


def cmd_decide(args: argparse.Namespace, settings: Settings) -> tuple[BaseModel, ExitCode]:
    rep, given, beta, j = _query_inputs(args, settings)
    if given is None:
        if j is None:
            raise PreconditionError("decide needs --given or --j")
        answer = is_j_trade(rep, j, settings)
    else:
        assert beta is not None and j is not None
        answer = TradeDispatcher(settings).dispatch(TradeQuery(rep, beta, given))
    doc = AnswerDocument.from_answer(rep, j, answer, given, beta)
    return doc, ExitCode.YES if answer.decision else ExitCode.NO


def cmd_oracle(args: argparse.Namespace, settings: Settings) -> tuple[BaseModel, ExitCode]:
    rep, given, beta, j = _query_inputs(args, settings)
    if j is None:
        raise PreconditionError("oracle needs --given or --j")
    application = brute_force_trade(rep, j, given, beta, settings)
    if application is None:
        answer = TradeAnswer.no("oracle")
    elif given is None:
        answer = TradeAnswer.found("oracle", application)
    else:
        side = application.losing_side if beta is Classification.WINNING else application.winning_side
        answer = TradeAnswer(True, "oracle", side, application)
    doc = AnswerDocument.from_answer(rep, j, answer, given, beta)
    return doc, ExitCode.YES if answer.decision else ExitCode.NO


def cmd_gen_sat(args: argparse.Namespace, settings: Settings) -> tuple[BaseModel, ExitCode]:
    formula = parse_dimacs(_read_text(args.cnf))
    if args.dual:
        if args.j != 2:
            raise PreconditionError("--dual builds the 2-trade instance only")
        inst = game_from_cnf_dual(formula)
    else:
        inst = game_from_cnf_j(formula, args.j, settings)
    for note in inst.notes:
        console.print(f"[dim]note:[/] {escape(note)}")
    return SatInstanceDocument.from_instance(inst), ExitCode.YES


def cmd_solve_split(args: argparse.Namespace, settings: Settings) -> tuple[BaseModel, ExitCode]:
    inst = parse_document(SplitInstanceDocument, _read_text(args.instance)).to_instance()
    split = solve_set_splitting(inst, settings)
    if split is None:
        return SplitSolutionDocument(decision=False), ExitCode.NO
    u1, u2 = split
    return SplitSolutionDocument(decision=True, u1=u1.to_list(), u2=u2.to_list()), ExitCode.YES


def cmd_validate(args: argparse.Namespace, settings: Settings) -> tuple[BaseModel, ExitCode]:
    rep, _ = read_game_input(_read_text(args.game), settings)
    report = validate_game(rep, settings)
    for v in report.violations:
        console.print(f"[yellow]{v.code.value}[/]: {escape(v.message)}")
    return ValidationDocument.from_report(report), ExitCode.YES if report.valid else ExitCode.USAGE


def cmd_random_game(args: argparse.Namespace, settings: Settings) -> tuple[BaseModel, ExitCode]:
    return GameDocument.from_rep(random_game(args.n, args.seed, args.density)), ExitCode.YES


def cmd_table(args: argparse.Namespace, settings: Settings) -> tuple[BaseModel, ExitCode]:
    return TableDocument.build(), ExitCode.YES


# ── Parser ───────────────────────────────────────────────────────────────────


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    common.add_argument("--budget", type=int, help="search budget (overrides SG_BUDGET)")
    common.add_argument("-o", "--output", help="write the JSON document here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="sgtrade",
        description="Trade problems for simple games",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", parents=[common], help="convert a game to another representation")
    p.add_argument("--to", required=True, choices=[k.value for k in RepKind])
    p.add_argument("game")
    p.set_defaults(handler=cmd_convert)

    for name, handler, text in (
        ("decide", cmd_decide, "decide a trade question"),
        ("oracle", cmd_oracle, "decide a trade question by exhaustive search"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--beta", choices=["W", "L"], help="type of the given coalitions")
        p.add_argument("--given", help='given coalitions as JSON, e.g. "[[0,1],[2,3]]"')
        p.add_argument("--j", type=int, help="trade size; alone it asks whether the game is j-trade")
        p.add_argument("game", help="game file or gen-sat instance")
        p.set_defaults(handler=handler)

    p = sub.add_parser("gen-sat", parents=[common], help="build a trade instance from a CNF")
    p.add_argument("--cnf", required=True, help="DIMACS CNF file")
    p.add_argument("--j", type=int, default=2)
    p.add_argument("--dual", action="store_true", help="the (Wm, W) instance instead of (LM, L)")
    p.set_defaults(handler=cmd_gen_sat)

    p = sub.add_parser("solve-split", parents=[common], help="solve a Set Splitting instance")
    p.add_argument("--instance", required=True)
    p.set_defaults(handler=cmd_solve_split)

    p = sub.add_parser("validate", parents=[common], help="check a game against the axioms")
    p.add_argument("game")
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("random-game", parents=[common], help="emit a seeded random Wm game")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--density", type=float, default=0.3)
    p.set_defaults(handler=cmd_random_game)

    p = sub.add_parser("table", parents=[common], help="print the 2-trade complexity table")
    p.set_defaults(handler=cmd_table)
    return parser


def _emit(doc: BaseModel, output: str | None) -> None:
    text = doc.model_dump_json(indent=2) + "\n"
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code in (0, None):
            return ExitCode.YES
        # argparse has already printed the reason to stderr
        _emit(ErrorDocument(error="usage", message="invalid command line"), None)
        return ExitCode.USAGE
    configure_logging(args.verbose)
    log = logger.bind(command=args.command)

    try:
        settings = Settings.from_env()
        if args.budget is not None:
            settings = settings.with_budget(args.budget)
        doc, code = args.handler(args, settings)
    except BudgetExceededError as exc:
        log.warning("budget_exceeded", needed=exc.needed, budget=exc.budget)
        console.print(f"[bold red]budget exceeded:[/] {escape(str(exc))}")
        doc, code = ErrorDocument(error="budget_exceeded", message=str(exc)), ExitCode.BUDGET
    except GeneratorSelfCheckError as exc:
        console.print(f"[bold red]generator self-check failed:[/] {escape(str(exc))}")
        doc = ErrorDocument(error="self_check_failed", message=str(exc), details=list(exc.findings))
        code = ExitCode.USAGE
    except SgTradeError as exc:
        console.print(f"[bold red]error:[/] {escape(str(exc))}")
        doc, code = ErrorDocument(error=type(exc).__name__, message=str(exc)), ExitCode.USAGE
    except RuntimeError as exc:
        # a decider returned a witness that failed verification
        log.error("command_failed", error=str(exc))
        console.print(f"[bold red]internal error:[/] {escape(str(exc))}")
        doc, code = ErrorDocument(error="witness_rejected", message=str(exc)), ExitCode.USAGE

    _emit(doc, args.output)
    log.info("command_finished", exit_code=int(code))
    return int(code)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
