#!/usr/bin/env python
"""Interactive top level and batch runner for purelog"""

import argparse as ap
import logging
import sys
from collections.abc import Iterator
from enum import IntEnum
from typing import TextIO

from .config import SessionConfig, load_defaults
from .engine import Machine, Solution
from .errors import PrologError
from .syntax import OperatorTable, VariableNamer, write_term
from .terms import Var

logger = logging.getLogger(__name__)

PROMPT = "?- "
CONTINUATION_PROMPT = "|  "
BANNER = "purelog: pure Prolog. Enter a query ending with '.', ';' for more answers, Ctrl-D to leave."


class ExitCode(IntEnum):
    SUCCESS = 0
    FAILURE = 1
    ERROR = 2


def render_answer(
    solution: Solution, variables: dict[str, Var], table: OperatorTable | None = None
) -> list[str]:
    """
    One "Name = term" line per bound query variable. Fresh variables are shown
    as `_A`, `_B`, ... consistently across the lines of one answer.
    """
    namer = VariableNamer({var.ident: name for name, var in variables.items()})
    lines = []
    for name, value in solution.items():
        if name.startswith("_"):
            continue
        if isinstance(value, Var) and value.ident == variables[name].ident:
            continue
        lines.append(f"{name} = {write_term(value, table, quoted=True, namer=namer)}")
    return lines


def format_error(err: Exception) -> str:
    if isinstance(err, RecursionError):
        return "Error: resource_error: term nesting too deep"
    return f"Error: {err}"


def make_machine(config: SessionConfig) -> Machine:
    """A machine with every file of the session consulted"""
    machine = Machine(occur_check=config.occur_check, max_steps=config.steps)
    for path in config.files:
        skipped = machine.consult_file(path)
        if skipped:
            logger.warning("%s: %d clause(s) skipped", path, skipped)
    return machine


def run_goal(
    config: SessionConfig,
    goal: str,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> ExitCode:
    """Solve `goal` once and report the first answer"""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        machine = make_machine(config)
        parsed = machine.read_query(goal)
        solutions = machine.solve(parsed.goals, parsed.variables)
        try:
            solution = next(solutions, None)
            if solution is None:
                print("no", file=stdout)
                return ExitCode.FAILURE
            lines = render_answer(solution, parsed.variables, machine.table)
        finally:
            solutions.close()
    except (PrologError, RecursionError) as err:
        print(format_error(err), file=stderr)
        return ExitCode.ERROR
    except OSError as err:
        print(f"Error: {err}", file=stderr)
        return ExitCode.ERROR

    print("\n".join(lines) if lines else "yes", file=stdout)
    return ExitCode.SUCCESS


class Repl:
    """The read-query/print-answers loop over a pair of text streams"""

    def __init__(self, machine: Machine, stdin: TextIO, stdout: TextIO) -> None:
        self.machine = machine
        self.stdin = stdin
        self.stdout = stdout
        # Typed input is echoed when it does not come from a terminal
        self.echo = not (hasattr(stdin, "isatty") and stdin.isatty())
        self.requests = 0

    def write(self, text: str) -> None:
        self.stdout.write(text)
        self.stdout.flush()

    def read_line(self) -> str | None:
        line = self.stdin.readline()
        if not line:
            return None
        if self.echo:
            self.write(line if line.endswith("\n") else line + "\n")
        return line

    def read_query(self) -> str | None:
        """Lines up to one ending in `.`; None at end of input"""
        buffer = ""
        self.write(PROMPT)
        while True:
            line = self.read_line()
            if line is None:
                return buffer if buffer.strip() else None
            buffer += line
            if not buffer.strip():
                buffer = ""
                self.write(PROMPT)
                continue
            if buffer.rstrip().endswith("."):
                return buffer
            self.write(CONTINUATION_PROMPT)

    def wants_more(self) -> bool:
        """Ask whether to look for another answer; `;;;` asks for three"""
        if self.requests:
            self.requests -= 1
            if self.echo:
                self.write(" ;\n")
            return True
        if not self.echo:
            self.write(" ")
        response = self.stdin.readline()
        self.requests = response.count(";")
        if not self.requests:
            if self.echo:
                self.write("\n")
            return False
        self.requests -= 1
        if self.echo:
            self.write(" ;\n")
        return True

    def answer(self, text: str) -> None:
        """Run one query and print its answers"""
        machine = self.machine
        parsed = machine.read_query(text)
        solutions: Iterator[Solution] = machine.solve(parsed.goals, parsed.variables)
        base = len(machine.cps)
        named = any(not name.startswith("_") for name in parsed.variables)
        try:
            for solution in solutions:
                lines = render_answer(solution, parsed.variables, machine.table)
                if not lines:
                    # Later answers can only differ if a named variable may still get bound
                    if not named or len(machine.cps) <= base:
                        self.write("yes\n")
                        return
                    self.write("yes")
                else:
                    self.write("\n".join(lines))
                if not self.wants_more():
                    return
            self.write("no\n")
        finally:
            self.requests = 0
            solutions.close()

    def run(self) -> ExitCode:
        while (text := self.read_query()) is not None:
            if text.strip() in ("halt.", "halt"):
                break
            try:
                self.answer(text)
            except (PrologError, RecursionError) as err:
                self.write(format_error(err) + "\n")
        self.write("\n")
        return ExitCode.SUCCESS


def run_repl(
    config: SessionConfig,
    stdin: TextIO | None = None,
    stdout: TextIO | None = None,
    machine: Machine | None = None,
) -> ExitCode:
    """Consult the session files, then answer queries until end of input"""
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    try:
        if machine is None:
            machine = make_machine(config)
        if not config.quiet:
            stdout.write(BANNER + "\n")
        return Repl(machine, stdin, stdout).run()
    except OSError as err:
        print(f"Error: {err}", file=sys.stderr)
        return ExitCode.ERROR


def positive_int(text: str) -> int:
    try:
        number = int(text)
    except ValueError:
        raise ap.ArgumentTypeError(f"not an integer: {text!r}") from None
    if number <= 0:
        raise ap.ArgumentTypeError(f"must be positive: {number}")
    return number


def build_parser() -> ap.ArgumentParser:
    parser = ap.ArgumentParser(
        prog="purelog", description="Consult Prolog programs and run queries against them"
    )
    parser.add_argument("files", nargs="*", help="Program files to consult, in order")
    parser.add_argument(
        "-g", "--goal", type=str, default=None, help="Solve GOAL once and exit"
    )
    parser.add_argument(
        "--occur-check",
        action="store_true",
        default=False,
        help="Unify with the occur check",
    )
    parser.add_argument(
        "--steps",
        type=positive_int,
        default=None,
        help="Abort a query after this many resolution steps",
    )
    parser.add_argument(
        "-q", "--quiet", action="store_true", default=False, help="No banner, errors only"
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", default=False, help="Debug logging"
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    """CLI entry point"""
    args = build_parser().parse_args(argv)

    try:
        config = load_defaults()
    except PrologError as err:
        print(format_error(err), file=sys.stderr)
        return ExitCode.ERROR

    config.files = args.files
    config.goal = args.goal
    config.occur_check = args.occur_check or config.occur_check
    config.steps = args.steps if args.steps is not None else config.steps
    config.quiet = args.quiet or config.quiet

    level = logging.WARNING
    if config.quiet:
        level = logging.ERROR
    if args.verbose:
        level = logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s: %(message)s", stream=sys.stderr)

    if config.batch:
        return run_goal(config, config.goal)  # type: ignore[arg-type]
    return run_repl(config)


if __name__ == "__main__":
    sys.exit(main())
