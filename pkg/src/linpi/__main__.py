#!/usr/bin/env python3
"""
linpi - type reconstruction for the linear pi-calculus.

Subcommands:
    infer        print the most precise environment of a process
    check        decide a process against an environment file
    constraints  print the generated constraint set
    run          reduce a process and print the trace

Exit codes are 0 on success, 1 when the process is ill typed (or the check
rejects it) and 2 on unreadable or unparsable input.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Optional

from rich.console import Console
from rich.markup import escape
from rich.table import Table

from linpi import __version__
from linpi.config.settings import ConfigError, Settings, load_settings
from linpi.constraints.exprs import render_constraint, render_type_expr
from linpi.errors import LinpiError, ParseError
from linpi.shortcuts import (
    Inference,
    check,
    describe_sessions,
    generate_constraints,
    infer,
    run_program,
)
from linpi.solver.closure import close
from linpi.solver.synthesis import SolverTrace
from linpi.syntax.render import render_process
from linpi.types.env import render_env
from linpi.utils.context import log_context
from linpi.utils.decorators import log_errors

logger = logging.getLogger(__name__)

console = Console(soft_wrap=True)
err_console = Console(stderr=True, soft_wrap=True)

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_BAD_INPUT = 2


def _emit(line: str) -> None:
    console.print(line, markup=False, highlight=False)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _report(kind: str, error: Exception) -> None:
    err_console.print(f"[bold red]{kind}:[/bold red] {escape(str(error))}")


def _dump_closure(trace: SolverTrace) -> None:
    table = Table(title="= classes", show_header=True, header_style="bold magenta")
    table.add_column("representative", style="cyan")
    table.add_column("members")
    for members in trace.closure.eq_partition():
        if len(members) > 1:
            table.add_row(
                escape(render_type_expr(members[0])),
                escape(", ".join(render_type_expr(t) for t in members[1:])),
            )
    err_console.print(table)


def _dump_partitions(trace: SolverTrace) -> None:
    table = Table(title="use equations", show_header=True, header_style="bold magenta")
    table.add_column("group", style="cyan", justify="right")
    table.add_column("equations")
    table.add_column("assignment")
    for k, partition in enumerate(trace.partitions):
        names = sorted({v for c in partition for v in c.variables})
        assigned = ", ".join(f"{v}={trace.assignment[v]}" for v in names if v in trace.assignment)
        equations = "; ".join(render_constraint(c) for c in partition)
        table.add_row(str(k), escape(equations), escape(assigned))
    err_console.print(table)


def _dump(inference: Inference, level: int) -> None:
    if level >= 1:
        _dump_closure(inference.trace)
    if level >= 2:
        _dump_partitions(inference.trace)


def cmd_infer(args: argparse.Namespace, settings: Settings) -> int:
    source = _read(args.file)
    if args.dump:
        with log_context("linpi", logging.DEBUG):
            inference = infer(source, settings=settings)
        _dump(inference, args.dump)
    else:
        inference = infer(source, settings=settings)
    for line in render_env(inference.store, inference.env):
        _emit(line)
    if args.sessions:
        for u, protocol in describe_sessions(inference.env, inference.store).items():
            if protocol is None:
                raw = inference.store.render(inference.env[u])
                _emit(f"-- {u.text} : not a session, shown as {raw}")
            else:
                _emit(f"-- {u.text} : {protocol}")
    return EXIT_OK


def cmd_check(args: argparse.Namespace, settings: Settings) -> int:
    accepted = check(_read(args.file), _read(args.env), settings=settings)
    _emit("accepted" if accepted else "rejected")
    return EXIT_OK if accepted else EXIT_REJECTED


def cmd_constraints(args: argparse.Namespace, settings: Settings) -> int:
    delta, c = generate_constraints(_read(args.file), settings=settings)
    for u in sorted(delta, key=lambda u: u.text):
        _emit(f"-- {u.text} : {render_type_expr(delta[u])}")
    for constraint in c:
        _emit(render_constraint(constraint))
    if args.dump:
        state = close(c)
        table = Table(title="~ classes", show_header=True, header_style="bold magenta")
        table.add_column("representative", style="cyan")
        table.add_column("members")
        for members in state.coh_partition():
            table.add_row(
                escape(render_type_expr(members[0])),
                escape(", ".join(render_type_expr(t) for t in members[1:])),
            )
        err_console.print(table)
        if args.dump >= 2:
            for k, equation in enumerate(state.use_eqs):
                err_console.print(f"[cyan]{k}[/cyan] {escape(render_constraint(equation))}")
    return EXIT_OK


def cmd_run(args: argparse.Namespace, settings: Settings) -> int:
    trace = run_program(_read(args.file), settings=settings)
    for label, residual in trace:
        _emit(f"{label} | {render_process(residual)}")
    logger.info("%d steps", len(trace))
    return EXIT_OK


Command = Callable[[argparse.Namespace, Settings], int]

COMMANDS: dict[str, Command] = {
    "infer": cmd_infer,
    "check": cmd_check,
    "constraints": cmd_constraints,
    "run": cmd_run,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", metavar="FILE", help="process source, - for standard input")
    common.add_argument("--config", type=Path, metavar="PATH", help="TOML or INI settings file")
    common.add_argument("--log-level", metavar="LEVEL", help="DEBUG, INFO, WARNING, ...")

    solver = argparse.ArgumentParser(add_help=False)
    solver.add_argument(
        "--unbalanced-new",
        action="store_true",
        default=None,
        help="independent input and output uses for restricted channels",
    )
    solver.add_argument(
        "--omega-fallback",
        action="store_true",
        default=None,
        help="assign w to use groups too large to search",
    )
    solver.add_argument("--max-search-vars", type=int, metavar="N")

    dump = argparse.ArgumentParser(add_help=False)
    dump.add_argument(
        "--dump", type=int, default=0, choices=(0, 1, 2), metavar="N", help="0, 1 or 2"
    )

    parser = argparse.ArgumentParser(
        prog="linpi",
        description="Type reconstruction for the linear pi-calculus",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  linpi infer server.pi --sessions
  linpi check server.pi --env server.env
  linpi constraints server.pi --dump 2
  linpi run server.pi --max-steps 10 --seed 3
        """,
    )
    parser.add_argument("--version", action="version", version=f"linpi {__version__}")
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    infer_parser = commands.add_parser(
        "infer", parents=[common, solver, dump], help="reconstruct the typing environment"
    )
    infer_parser.add_argument(
        "--sessions", action="store_true", help="also print channel protocols"
    )

    check_parser = commands.add_parser(
        "check", parents=[common, solver], help="check against an environment file"
    )
    check_parser.add_argument("--env", required=True, metavar="ENVFILE")

    commands.add_parser(
        "constraints", parents=[common, solver, dump], help="print the constraint set"
    )

    run_parser = commands.add_parser("run", parents=[common], help="reduce the process")
    run_parser.add_argument("--max-steps", type=int, metavar="N")
    run_parser.add_argument("--seed", type=int, metavar="S")
    run_parser.add_argument("--fuel-repl", type=int, metavar="N")
    return parser


def _override(settings: Settings, args: argparse.Namespace) -> Settings:
    for option, name in (
        ("log_level", "level"),
        ("unbalanced_new", "unbalanced_new"),
        ("omega_fallback", "omega_fallback"),
        ("max_search_vars", "max_search_vars"),
        ("max_steps", "max_steps"),
        ("seed", "seed"),
        ("fuel_repl", "fuel_repl"),
    ):
        value = getattr(args, option, None)
        if value is not None:
            setattr(settings, name, value)
    settings.validate()
    return settings


def main(argv: Optional[list[str]] = None) -> int:
    """Entry point of the ``linpi`` command."""
    args = build_parser().parse_args(argv)
    try:
        settings = _override(load_settings(args.config), args)
    except ConfigError as e:
        _report("configuration error", e)
        return EXIT_BAD_INPUT
    settings.create_logger("linpi")

    command = log_errors(logging.getLogger("linpi"), ignore=(LinpiError, OSError))(
        COMMANDS[args.command]
    )
    try:
        return command(args, settings)
    except ParseError as e:
        _report("parse error", e)
        return EXIT_BAD_INPUT
    except OSError as e:
        _report("cannot read input", e)
        return EXIT_BAD_INPUT
    except LinpiError as e:
        _report("error", e)
        return EXIT_REJECTED
    except Exception:
        return EXIT_REJECTED


if __name__ == "__main__":
    sys.exit(main())
