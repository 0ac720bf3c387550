import pathlib as pl
from itertools import islice

from purelog.engine import Machine
from purelog.syntax import VariableNamer, write_term
from purelog.terms import Compound, Term, Var

REPO_ROOT = pl.Path(__file__).resolve().parents[3]


def get_corpus(name: str) -> pl.Path:
    return REPO_ROOT / "corpus" / name


def get_data(name: str, data_dir: str = "data") -> pl.Path:
    return (pl.Path(__file__).resolve().parents[1] / data_dir / name).resolve()


def load_corpus(*names: str, **options) -> Machine:
    """A fresh machine with the given corpus programs consulted"""
    machine = Machine(**options)
    for name in names:
        skipped = machine.consult_file(get_corpus(name))
        assert skipped == 0, f"{name}: {skipped} clause(s) could not be consulted"
    return machine


def answers(machine: Machine, query: str, limit: int | None = None) -> list[dict[str, str]]:
    """
    Every answer to `query` (at most `limit`), each variable rendered as text.
    Unbound query variables render as their own name.
    """
    parsed = machine.read_query(query)
    solutions = machine.solve(parsed.goals, parsed.variables)
    rows = []
    try:
        for solution in islice(solutions, limit):
            namer = VariableNamer({var.ident: name for name, var in parsed.variables.items()})
            rows.append(
                {
                    name: write_term(value, machine.table, quoted=True, namer=namer)
                    for name, value in solution.items()
                }
            )
    finally:
        solutions.close()
    return rows


def column(rows: list[dict[str, str]], name: str) -> list[str]:
    return [row[name] for row in rows]


def is_variant(left: Term, right: Term) -> bool:
    """Equal up to a one-to-one renaming of variables"""
    forward: dict[int, int] = {}
    backward: dict[int, int] = {}
    pending = [(left, right)]
    while pending:
        a, b = pending.pop()
        match a, b:
            case Var(), Var():
                if forward.setdefault(a.ident, b.ident) != b.ident:
                    return False
                if backward.setdefault(b.ident, a.ident) != a.ident:
                    return False
            case Compound(), Compound():
                if a.functor != b.functor or a.arity != b.arity:
                    return False
                pending.extend(zip(a.args, b.args))
            case _:
                if isinstance(a, Var) or isinstance(b, Var) or a != b:
                    return False
    return True
