"""
Terms, substitutions and the mutable binding store used by the engine.

Terms are immutable values. A `Substitution` is the textbook finite mapping
from variables to terms; `Bindings` is its operational counterpart, a store
updated in place whose changes are recorded on a trail so they can be undone
on backtracking.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field

from .errors import CyclicTermError, EvaluationError

INT_MIN = -(2**63)
INT_MAX = 2**63 - 1


@dataclass(frozen=True, slots=True)
class Var:
    """A logical variable: identity is the numeric id, the name is for display"""

    ident: int
    name: str = field(default="_", compare=False)

    def __repr__(self) -> str:
        return f"Var({self.name}#{self.ident})"


@dataclass(frozen=True, slots=True)
class Int:
    value: int


@dataclass(frozen=True, slots=True)
class Float:
    value: float


@dataclass(frozen=True, slots=True)
class Const:
    """A 0-ary function symbol, e.g. `a`, `[]` or `true`"""

    name: str


@dataclass(frozen=True, slots=True)
class Compound:
    functor: str
    args: tuple[Term, ...]

    def __post_init__(self) -> None:
        if not self.args:
            raise ValueError(f"Compound {self.functor!r} needs at least one argument")

    @property
    def arity(self) -> int:
        return len(self.args)


Term = Var | Int | Float | Const | Compound
Number = Int | Float

NIL = Const("[]")
TRUE = Const("true")
FAIL = Const("fail")


def make_int(value: int) -> Int:
    """Build an integer term, reporting values outside the signed 64-bit range"""
    if not INT_MIN <= value <= INT_MAX:
        raise EvaluationError("int_overflow")
    return Int(value)


def make_list(items: Iterable[Term], tail: Term = NIL) -> Term:
    result = tail
    for item in reversed(list(items)):
        result = Compound(".", (item, result))
    return result


def is_list_cell(term: Term) -> bool:
    return isinstance(term, Compound) and term.functor == "." and len(term.args) == 2


def list_items(term: Term, bindings: Bindings | None = None) -> tuple[list[Term], Term]:
    """Walk a list spine, returning its elements and whatever ends it"""
    items: list[Term] = []
    deref = bindings.deref if bindings is not None else (lambda t: t)
    term = deref(term)
    while is_list_cell(term):
        head, tail = term.args  # type: ignore[union-attr]
        items.append(head)
        term = deref(tail)
    return items, term


def conjunction(goals: Iterable[Term]) -> Term:
    """Right-nest goals with `','/2`; the empty sequence is `true`"""
    goals = list(goals)
    if not goals:
        return TRUE
    result = goals[-1]
    for goal in reversed(goals[:-1]):
        result = Compound(",", (goal, result))
    return result


def conjuncts(term: Term) -> list[Term]:
    """Split a right-nested `','/2` term into its goals"""
    goals = []
    while isinstance(term, Compound) and term.functor == "," and term.arity == 2:
        goals.append(term.args[0])
        term = term.args[1]
    goals.append(term)
    return goals


def term_variables(term: Term) -> list[Var]:
    """Distinct variables of a term in depth-first, left-to-right order"""
    seen: dict[int, Var] = {}
    stack = [term]
    while stack:
        match stack.pop():
            case Var(ident=ident) as var:
                seen.setdefault(ident, var)
            case Compound(args=args):
                stack.extend(reversed(args))
    return list(seen.values())


class VarFactory:
    """Source of fresh variables whose ids are unique within one factory"""

    def __init__(self, start: int = 0) -> None:
        self._ids = itertools.count(start)

    def fresh(self, name: str = "_") -> Var:
        return Var(next(self._ids), name)


class Substitution(Mapping[Var, Term]):
    """
    A finite mapping from variables to terms.
    Pairs binding a variable to itself are dropped on construction.
    """

    __slots__ = ("_pairs",)

    def __init__(
        self, pairs: Mapping[Var, Term] | Iterable[tuple[Var, Term]] = ()
    ) -> None:
        items = pairs.items() if isinstance(pairs, Mapping) else pairs
        self._pairs: dict[Var, Term] = {var: t for var, t in items if var != t}

    def __getitem__(self, var: Var) -> Term:
        return self._pairs[var]

    def __iter__(self) -> Iterator[Var]:
        return iter(self._pairs)

    def __len__(self) -> int:
        return len(self._pairs)

    def __repr__(self) -> str:
        from .syntax import write_term

        shown = ", ".join(
            f"{write_term(var)}/{write_term(t)}" for var, t in self._pairs.items()
        )
        return f"{{{shown}}}"


def apply_substitution(term: Term, subst: Mapping[Var, Term]) -> Term:
    """Replace every domain variable in one simultaneous pass"""
    if not subst:
        return term
    match term:
        case Var():
            return subst.get(term, term)
        case Compound(functor, args):
            return Compound(functor, tuple(apply_substitution(a, subst) for a in args))
        case _:
            return term


def compose(gamma: Mapping[Var, Term], delta: Mapping[Var, Term]) -> Substitution:
    """The substitution `gamma` followed by `delta`"""
    pairs = {var: apply_substitution(t, delta) for var, t in gamma.items()}
    for var, t in delta.items():
        if var not in gamma:
            pairs[var] = t
    return Substitution(pairs)


class Bindings:
    """Variable store with a trail: the current state of a computation"""

    def __init__(self) -> None:
        self._store: dict[int, Term] = {}
        self._trail: list[int] = []

    def mark(self) -> int:
        return len(self._trail)

    def bind(self, var: Var, term: Term) -> None:
        if var.ident in self._store:
            raise ValueError(f"{var!r} is already bound")
        self._store[var.ident] = term
        self._trail.append(var.ident)

    def undo(self, mark: int) -> None:
        """Unbind every variable bound since `mark`"""
        trail, store = self._trail, self._store
        while len(trail) > mark:
            del store[trail.pop()]

    def lookup(self, var: Var) -> Term | None:
        return self._store.get(var.ident)

    def deref(self, term: Term) -> Term:
        """Follow variable-to-term links until an unbound variable or a non-variable"""
        while isinstance(term, Var):
            bound = self._store.get(term.ident)
            if bound is None:
                return term
            term = bound
        return term

    def bound_ids(self) -> frozenset[int]:
        return frozenset(self._store)

    def __len__(self) -> int:
        return len(self._store)


def _enter(term: Term, bindings: Bindings, active: set[int], entered: list[int]) -> Term:
    while isinstance(term, Var):
        bound = bindings.lookup(term)
        if bound is None:
            return term
        if term.ident in active:
            raise CyclicTermError
        active.add(term.ident)
        entered.append(term.ident)
        term = bound
    return term


def _resolve(term: Term, bindings: Bindings, active: set[int]) -> Term:
    entered: list[int] = []
    try:
        term = _enter(term, bindings, active, entered)
        if not isinstance(term, Compound):
            return term
        if not is_list_cell(term):
            return Compound(
                term.functor, tuple(_resolve(a, bindings, active) for a in term.args)
            )
        # List spines are walked iteratively so long lists do not exhaust the stack
        heads = []
        while is_list_cell(term):
            head, tail = term.args  # type: ignore[union-attr]
            heads.append(_resolve(head, bindings, active))
            term = _enter(tail, bindings, active, entered)
        return make_list(heads, _resolve(term, bindings, active))
    finally:
        active.difference_update(entered)


def resolve(term: Term, bindings: Bindings) -> Term:
    """The value of a term in the current state: all bound variables replaced"""
    return _resolve(term, bindings, set())


def occurs_in(var: Var, term: Term, bindings: Bindings) -> bool:
    """Does `var` occur in the resolved value of `term`?"""
    stack = [term]
    visited: set[int] = set()
    while stack:
        match stack.pop():
            case Var(ident=ident) as other:
                bound = bindings.lookup(other)
                if bound is None:
                    if ident == var.ident:
                        return True
                elif ident not in visited:
                    visited.add(ident)
                    stack.append(bound)
            case Compound(args=args):
                stack.extend(args)
    return False
