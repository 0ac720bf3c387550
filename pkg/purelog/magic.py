"""
Notebook front end: `%load_ext purelog.magic`, then consult clauses with the
`%%consult` cell magic and ask questions with the `%query` line magic.
"""

import html
import logging
from itertools import islice

from IPython.core.interactiveshell import InteractiveShell
from IPython.core.magic import Magics, cell_magic, line_magic, magics_class
from IPython.display import HTML, display

from .cli import format_error, render_answer
from .config import load_defaults
from .engine import Machine
from .errors import DomainError, PrologError

logger = logging.getLogger(__name__)


def solutions_table(rows: list[dict[str, str]]) -> str:
    """An HTML table with one row per answer and one column per variable"""
    if not rows:
        return "<p><strong>no</strong></p>"
    columns = list(dict.fromkeys(name for row in rows for name in row))
    if not columns:
        return "<p><strong>yes</strong></p>"
    header = "".join(f"<th>{html.escape(name)}</th>" for name in columns)
    body = "".join(
        "<tr>"
        + "".join(f"<td><code>{html.escape(row.get(name, ''))}</code></td>" for name in columns)
        + "</tr>"
        for row in rows
    )
    return f"<table><thead><tr>{header}</tr></thead><tbody>{body}</tbody></table>"


def _split_limit(line: str) -> tuple[int | None, str]:
    """Separate an optional `-n N` prefix from the query text"""
    parts = line.strip().split(maxsplit=2)
    if len(parts) >= 2 and parts[0] == "-n":
        try:
            limit = int(parts[1])
        except ValueError:
            raise DomainError("solution_limit", parts[1]) from None
        if limit < 0:
            raise DomainError("solution_limit", parts[1])
        return limit, parts[2] if len(parts) == 3 else ""
    return None, line


@magics_class
class PrologMagics(Magics):
    """Class to add the Prolog cell and line magics"""

    def __init__(self, shell: InteractiveShell | None = None, machine: Machine | None = None):
        super().__init__(shell)
        if machine is None:
            config = load_defaults()
            machine = Machine(occur_check=config.occur_check, max_steps=config.steps)
        self.machine = machine

    @cell_magic
    def consult(self, line: str, cell: str) -> int:
        """The `%%consult` cell magic: add the cell's clauses to the session"""
        skipped = self.machine.consult_text(cell, source=line.strip() or "<cell>")
        if skipped:
            display(
                HTML(
                    "<div style='background-color: #ffebee; border-radius: 5px; padding: 10px;'>"
                    f"{skipped} clause(s) skipped, see the log for details</div>"
                )
            )
        return skipped

    @line_magic
    def query(self, line: str) -> list[dict[str, str]]:
        """The `%query [-n N] goal` line magic: tabulate the answers"""
        rows: list[dict[str, str]] = []
        try:
            limit, text = _split_limit(line)
            parsed = self.machine.read_query(text)
            solutions = self.machine.solve(parsed.goals, parsed.variables)
            try:
                for solution in islice(solutions, limit):
                    answer = render_answer(solution, parsed.variables, self.machine.table)
                    rows.append(dict(entry.split(" = ", 1) for entry in answer))
            finally:
                solutions.close()
        except (PrologError, RecursionError) as err:
            logger.debug("Query %r raised %s", line, err)
            display(HTML(f"<pre>{html.escape(format_error(err))}</pre>"))
            return rows
        display(HTML(solutions_table(rows)))
        return rows


def load_ipython_extension(ipython):
    """
    Any module file that define a function named `load_ipython_extension`
    can be loaded via `%load_ext module.path` or be configured to be
    autoloaded by IPython at startup time.
    """
    ipython.register_magics(PrologMagics(ipython))
