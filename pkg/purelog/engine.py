"""
The resolution engine.

A computation is a goal stack plus a stack of choice points. Goals are
persistent cons cells, so a choice point saves the goals to resume with in
constant time. Bindings made since a choice point was pushed are undone from
the trail when the machine backtracks into it.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import TYPE_CHECKING

from .errors import (
    ExistenceError,
    InstantiationError,
    PrologError,
    PrologPermissionError,
    PrologSyntaxError,
    PrologTypeError,
    ResourceError,
)
from .syntax import Clause, Directive, OperatorTable, ParsedClause, QueryInput, parse_query
from .syntax import read_program, write_term
from .terms import Bindings, Compound, Const, Float, Int, Term, Var, VarFactory, resolve
from .unify import unify

if TYPE_CHECKING:
    from .builtins import BuiltinEntry

logger = logging.getLogger(__name__)

HeadUnifyHook = Callable[[Term, Term, bool], None]
Solution = dict[str, Term]

#
# Goals and choice points
#


@dataclass(frozen=True, slots=True)
class Call:
    """Run `term`; a cut inside it cuts back to `barrier` choice points"""

    term: Term
    barrier: int


@dataclass(frozen=True, slots=True)
class CutBarrier:
    """Discard every choice point above `height`"""

    height: int


Goal = Call | CutBarrier


@dataclass(frozen=True, slots=True)
class Frame:
    goal: Goal
    next: Frame | None = None


class _Failed:
    __slots__ = ()

    def __repr__(self) -> str:
        return "FAILED"


# Returned instead of a goal stack when the current branch has failed
FAILED = _Failed()

Goals = Frame | None | _Failed


def push_goals(terms: Iterable[Term], barrier: int, rest: Frame | None) -> Frame | None:
    for term in reversed(list(terms)):
        rest = Frame(Call(term, barrier), rest)
    return rest


@dataclass(slots=True)
class ChoicePoint:
    """Resume with `goals` after undoing the trail to `trail_mark`"""

    goals: Frame | None
    trail_mark: int

    def retry(self, machine: Machine) -> Goals:
        return self.goals


@dataclass(slots=True)
class ClauseChoice(ChoicePoint):
    """The untried clauses of a definition"""

    term: Term
    clauses: Sequence[Clause]
    index: int

    def retry(self, machine: Machine) -> Goals:
        return machine.resolve_with(self.term, self.clauses, self.index, self.goals)


#
# Clause database
#


class Database:
    """Definitions keyed by name/arity, clauses kept in consultation order"""

    def __init__(self, protected: Iterable[tuple[str, int]] = ()) -> None:
        self._definitions: dict[tuple[str, int], list[Clause]] = {}
        self._protected = frozenset(protected)

    def add(self, clause: Clause) -> None:
        if isinstance(clause.head, Var):
            raise InstantiationError("clause head is a variable")
        key = clause.key
        if key in self._protected:
            raise PrologPermissionError("modify", "static procedure", *key)
        self._definitions.setdefault(key, []).append(clause)

    def get(self, key: tuple[str, int]) -> list[Clause] | None:
        return self._definitions.get(key)

    def __contains__(self, key: object) -> bool:
        return key in self._definitions

    def keys(self) -> list[tuple[str, int]]:
        return list(self._definitions)

    def __len__(self) -> int:
        return sum(len(clauses) for clauses in self._definitions.values())


def _rename(term: Term, mapping: dict[int, Var], factory: VarFactory) -> Term:
    match term:
        case Var(ident=ident, name=name):
            if ident not in mapping:
                mapping[ident] = factory.fresh(name)
            return mapping[ident]
        case Compound(functor, args):
            return Compound(functor, tuple(_rename(arg, mapping, factory) for arg in args))
    return term


def rename_clause(clause: Clause, machine: Machine) -> Clause:
    """A copy of `clause` with every variable replaced by a fresh one"""
    mapping: dict[int, Var] = {}
    factory = machine.factory
    return Clause(
        _rename(clause.head, mapping, factory),
        tuple(_rename(goal, mapping, factory) for goal in clause.body),
        clause.line,
    )


#
# Machine
#


class Machine:
    """One Prolog session: a program, its operator table and the running computation"""

    def __init__(
        self,
        occur_check: bool = False,
        max_steps: int | None = None,
        table: OperatorTable | None = None,
        on_head_unify: HeadUnifyHook | None = None,
    ) -> None:
        # Imported here: the built-ins build on the goal and choice point types above
        from .builtins import BUILTINS

        self.builtins: Mapping[tuple[str, int], BuiltinEntry] = BUILTINS
        self.database = Database(BUILTINS)
        self.bindings = Bindings()
        self.cps: list[ChoicePoint] = []
        self.occur_check = occur_check
        self.factory = VarFactory()
        self.table = table if table is not None else OperatorTable.default()
        self.steps = 0
        self.max_steps = max_steps
        self.on_head_unify = on_head_unify

    #
    # Consulting
    #

    def consult(self, clauses: Iterable[ParsedClause]) -> Machine:
        """Add clauses to the database and run directives as they come"""
        for item in clauses:
            match item:
                case Directive(goal, line):
                    self.run_directive(goal, line)
                case Clause():
                    self.database.add(item)
                    logger.debug("Added clause for %s/%d", *item.key)
        return self

    def run_directive(self, goal: Term, line: int = 0) -> bool:
        shown = write_term(goal, self.table, quoted=True)
        logger.debug("Running directive %s", shown)
        try:
            for _ in self.solve([goal]):
                return True
        except PrologError as err:
            logger.warning("Goal (directive) raised %s: %s (line %d)", err.kind, shown, line)
            return False
        logger.warning("Goal (directive) failed: %s (line %d)", shown, line)
        return False

    def consult_text(self, text: str, source: str = "<text>") -> int:
        """
        Read and consult program text. A clause that cannot be read or added is
        logged and skipped; returns how many were skipped.
        """
        skipped = 0
        for item in read_program(text, self.table, self.factory):
            if isinstance(item, PrologSyntaxError):
                logger.warning(
                    "%s:%d:%d: skipped clause: %s", source, item.line, item.column, item.message
                )
                skipped += 1
                continue
            if isinstance(item, PrologError):
                logger.warning("%s: skipped clause: %s", source, item)
                skipped += 1
                continue
            try:
                self.consult([item])
            except PrologError as err:
                line = getattr(item, "line", 0)
                logger.warning("%s:%d: skipped clause: %s", source, line, err)
                skipped += 1
        return skipped

    def consult_file(self, path: str | Path) -> int:
        path = Path(path)
        logger.debug("Consulting %s", path)
        return self.consult_text(path.read_text(encoding="utf-8"), str(path))

    #
    # Solving
    #

    def read_query(self, text: str) -> QueryInput:
        return parse_query(text, self.table, self.factory)

    def query(self, text: str) -> Iterator[Solution]:
        parsed = self.read_query(text)
        return self.solve(parsed.goals, parsed.variables)

    def solve(
        self,
        goals: Sequence[Term],
        variables: dict[str, Var] | None = None,
        max_steps: int | None = None,
    ) -> Iterator[Solution]:
        """
        Lazily enumerate the solutions of a conjunction of goals.
        Each solution maps the named query variables to their resolved values.
        Closing the generator (or exhausting it) restores the state before the query.
        Operators declared on the way to a solution stay declared; those declared
        on a path that failed or raised are withdrawn.
        """
        budget = max_steps if max_steps is not None else self.max_steps
        base = len(self.cps)
        mark = self.bindings.mark()
        committed = self.table.snapshot()
        self.steps = 0
        pending: Goals = push_goals(goals, base, None)
        try:
            while self._run(pending, base, budget):
                solution = {
                    name: resolve(var, self.bindings) for name, var in (variables or {}).items()
                }
                committed = self.table.snapshot()
                yield solution
                pending = FAILED
        finally:
            del self.cps[base:]
            self.bindings.undo(mark)
            self.table.restore(committed)

    def _run(self, goals: Goals, base: int, budget: int | None) -> bool:
        """Run until the goal stack is empty (a solution) or no choice point is left"""
        while True:
            if goals is FAILED:
                if len(self.cps) <= base:
                    return False
                choice = self.cps.pop()
                self.bindings.undo(choice.trail_mark)
                goals = choice.retry(self)
                continue
            if goals is None:
                return True
            assert isinstance(goals, Frame)
            match goals.goal:
                case CutBarrier(height):
                    self.execute_cut(height)
                    goals = goals.next
                case Call(term, barrier):
                    self.steps += 1
                    if budget is not None and self.steps > budget:
                        raise ResourceError(f"step budget of {budget} exhausted")
                    goals = self.call(term, barrier, goals.next)

    def call(self, term: Term, barrier: int, rest: Frame | None) -> Goals:
        if isinstance(term, Var):
            # A meta-variable call: cuts inside it stay inside it
            barrier = len(self.cps)
            term = self.bindings.deref(term)
        match term:
            case Var():
                raise InstantiationError("goal is an unbound variable")
            case Int() | Float():
                raise PrologTypeError("callable", term)
            case Const(name):
                key, args = (name, 0), ()
            case Compound(functor, args):
                key = (functor, len(args))

        entry = self.builtins.get(key)
        if entry is not None:
            if entry.deterministic:
                values = [self.bindings.deref(arg) for arg in args]
                return rest if entry.handler(self, *values) else FAILED
            return entry.handler(self, args, rest, barrier)

        clauses = self.database.get(key)
        if clauses is None:
            raise ExistenceError(*key)
        return self.resolve_with(term, clauses, 0, rest)

    def resolve_with(
        self, term: Term, clauses: Sequence[Clause], index: int, rest: Frame | None
    ) -> Goals:
        """Try the clauses of a definition from `index` on against the call `term`"""
        height = len(self.cps)
        mark = self.bindings.mark()
        while index < len(clauses):
            clause = rename_clause(clauses[index], self)
            index += 1
            if self.on_head_unify is not None:
                goal_value = resolve(term, self.bindings)
                succeeded = unify(term, clause.head, self.bindings, self.occur_check)
                self.on_head_unify(goal_value, clause.head, succeeded)
            else:
                succeeded = unify(term, clause.head, self.bindings, self.occur_check)
            if succeeded:
                if index < len(clauses):
                    self.cps.append(ClauseChoice(rest, mark, term, clauses, index))
                return push_goals(clause.body, height, rest)
        return FAILED

    def push_choice(self, goals: Frame | None) -> None:
        """Push an alternative that resumes with `goals` in the current state"""
        self.cps.append(ChoicePoint(goals, self.bindings.mark()))

    def execute_cut(self, barrier: int) -> None:
        del self.cps[barrier:]
