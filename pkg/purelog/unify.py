"""
Two unifiers.

`mm_solve` works on a set of term equations and transforms it action by action
until it is in solved form or a failure is detected; it is the reference
algorithm and never touches engine state. `unify` is what the engine runs: it
binds variables in place in a `Bindings` store and records every binding on
the trail, so a failed attempt can be rolled back.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, replace
from enum import Enum

from .errors import NoApplicableActionError
from .terms import Bindings, Compound, Const, Float, Int, Substitution, Term, Var, occurs_in


class MMAction(Enum):
    DECOMPOSE = 1
    CLASH = 2
    DELETE = 3
    SWAP = 4
    ELIMINATE = 5
    OCCUR_FAILURE = 6


class FailureReason(Enum):
    FUNCTOR_CLASH = "functor-clash"
    OCCUR_CHECK = "occur-check"
    CONSTANT_CLASH = "constant-clash"


class Selection(Enum):
    """Which applicable equation an action is performed on"""

    FIRST = "first"
    LAST = "last"


@dataclass(frozen=True, slots=True)
class Equation:
    lhs: Term
    rhs: Term
    # Set when a variable was eliminated without the occurs test; never selected again
    finalized: bool = False

    def __str__(self) -> str:
        from .syntax import write_term

        return f"{write_term(self.lhs)} = {write_term(self.rhs)}"


@dataclass(frozen=True)
class MMStep:
    """The result of performing one action on a set of equations"""

    action: MMAction
    equations: tuple[Equation, ...] | None
    failure: FailureReason | None = None

    def render(self) -> str:
        if self.equations is None:
            return f"action ({self.action.value}): failure"
        shown = ", ".join(str(eq) for eq in self.equations)
        return f"action ({self.action.value}): {{{shown}}}"


@dataclass(frozen=True)
class UnifyOutcome:
    """Result of solving a set of equations"""

    mgu: Substitution | None = None
    failure: FailureReason | None = None

    @property
    def succeeded(self) -> bool:
        return self.failure is None


EquationInput = Iterable[Equation | tuple[Term, Term]]


def as_equations(eqs: EquationInput) -> tuple[Equation, ...]:
    return tuple(eq if isinstance(eq, Equation) else Equation(*eq) for eq in eqs)


def _signature(term: Term) -> tuple:
    match term:
        case Compound(functor, args):
            return ("compound", functor, len(args))
        case Const(name):
            return ("const", name)
        case Int(value):
            return ("int", value)
        case Float(value):
            return ("float", value)
    raise TypeError(f"no signature for {term!r}")


def _is_atomic(term: Term) -> bool:
    return isinstance(term, Const | Int | Float)


def _occurs(var: Var, term: Term) -> bool:
    stack = [term]
    while stack:
        match stack.pop():
            case Var() as other if other == var:
                return True
            case Compound(args=args):
                stack.extend(args)
    return False


def _substitute(term: Term, var: Var, value: Term) -> Term:
    match term:
        case Var() if term == var:
            return value
        case Compound(functor, args):
            return Compound(functor, tuple(_substitute(a, var, value) for a in args))
    return term


def _cyclic_binding(var: Var, eqs: tuple[Equation, ...]) -> Equation | None:
    return next((eq for eq in eqs if eq.finalized and eq.lhs == var), None)


def _choose(
    eqs: tuple[Equation, ...], occur_check: bool, selection: Selection
) -> tuple[int, MMAction] | None:
    """Find an equation admitting an action, or None when the set is solved"""
    indices = range(len(eqs)) if selection is Selection.FIRST else reversed(range(len(eqs)))
    for i in indices:
        eq = eqs[i]
        if eq.finalized:
            continue
        lhs, rhs = eq.lhs, eq.rhs
        if not isinstance(lhs, Var):
            if isinstance(rhs, Var):
                return i, MMAction.SWAP
            if _signature(lhs) == _signature(rhs):
                return i, MMAction.DECOMPOSE
            return i, MMAction.CLASH
        if lhs == rhs:
            return i, MMAction.DELETE
        if not occur_check and _cyclic_binding(lhs, eqs) is not None:
            return i, MMAction.ELIMINATE
        if _occurs(lhs, rhs):
            return i, (MMAction.OCCUR_FAILURE if occur_check else MMAction.ELIMINATE)
        if any(
            _occurs(lhs, other.lhs) or _occurs(lhs, other.rhs)
            for j, other in enumerate(eqs)
            if j != i
        ):
            return i, MMAction.ELIMINATE
    return None


def _perform(
    eqs: tuple[Equation, ...], i: int, action: MMAction, occur_check: bool
) -> MMStep:
    eq = eqs[i]
    others = eqs[:i] + eqs[i + 1 :]
    match action:
        case MMAction.DECOMPOSE:
            # c = c decomposes into no equations at all
            new: tuple[Equation, ...] = ()
            if isinstance(eq.lhs, Compound) and isinstance(eq.rhs, Compound):
                new = tuple(
                    Equation(s, t) for s, t in zip(eq.lhs.args, eq.rhs.args, strict=True)
                )
            return MMStep(action, eqs[:i] + new + eqs[i + 1 :])
        case MMAction.CLASH:
            reason = (
                FailureReason.CONSTANT_CLASH
                if _is_atomic(eq.lhs) and _is_atomic(eq.rhs)
                else FailureReason.FUNCTOR_CLASH
            )
            return MMStep(action, None, reason)
        case MMAction.DELETE:
            return MMStep(action, others)
        case MMAction.SWAP:
            return MMStep(action, eqs[:i] + (Equation(eq.rhs, eq.lhs),) + eqs[i + 1 :])
        case MMAction.OCCUR_FAILURE:
            return MMStep(action, None, FailureReason.OCCUR_CHECK)

    var, value = eq.lhs, eq.rhs
    assert isinstance(var, Var)
    if not occur_check and (bound := _cyclic_binding(var, eqs)) is not None:
        # var already stands for a term containing itself: compare the two values,
        # keeping this equation as an assumption so the same pair is never revisited
        if any(e.finalized and e.lhs == var and e.rhs == value for e in others):
            return MMStep(action, others)
        assumed = replace(eq, finalized=True)
        return MMStep(
            action, eqs[:i] + (assumed,) + eqs[i + 1 :] + (Equation(bound.rhs, value),)
        )
    substituted = tuple(
        replace(e, lhs=_substitute(e.lhs, var, value), rhs=_substitute(e.rhs, var, value))
        for e in others
    )
    kept = replace(eq, finalized=True) if _occurs(var, value) else eq
    return MMStep(action, substituted[:i] + (kept,) + substituted[i:])


def mm_step(
    eqs: EquationInput,
    occur_check: bool = True,
    selection: Selection = Selection.FIRST,
) -> MMStep:
    """Perform a single action on a set of equations"""
    eqs = as_equations(eqs)
    chosen = _choose(eqs, occur_check, selection)
    if chosen is None:
        raise NoApplicableActionError
    return _perform(eqs, *chosen, occur_check)


def _solution(eqs: tuple[Equation, ...]) -> Substitution:
    pairs: dict[Var, Term] = {}
    for eq in eqs:
        assert isinstance(eq.lhs, Var)
        pairs.setdefault(eq.lhs, eq.rhs)
    return Substitution(pairs)


def mm_solve(
    eqs: EquationInput,
    occur_check: bool = True,
    selection: Selection = Selection.FIRST,
) -> UnifyOutcome:
    """Solve a set of equations, producing an mgu or the reason of failure"""
    current = as_equations(eqs)
    while (chosen := _choose(current, occur_check, selection)) is not None:
        step = _perform(current, *chosen, occur_check)
        if step.equations is None:
            return UnifyOutcome(failure=step.failure)
        current = step.equations
    return UnifyOutcome(mgu=_solution(current))


def mm_trace(eqs: EquationInput, occur_check: bool = True) -> list[str]:
    """Rendered steps of solving `eqs`, one line per action"""
    lines = []
    current = as_equations(eqs)
    while (chosen := _choose(current, occur_check, Selection.FIRST)) is not None:
        step = _perform(current, *chosen, occur_check)
        lines.append(step.render())
        if step.equations is None:
            break
        current = step.equations
    return lines


def unify(t1: Term, t2: Term, bindings: Bindings, occur_check: bool = False) -> bool:
    """
    Unify two terms in place.
    On failure every binding made by this call is undone before returning.
    """
    mark = bindings.mark()
    pending = [(t1, t2)]
    # Compound pairs already taken apart; keeps cyclic terms from looping
    visited: set[tuple[int, int]] = set()
    while pending:
        a, b = pending.pop()
        a, b = bindings.deref(a), bindings.deref(b)
        if a is b:
            continue
        if isinstance(a, Var) and isinstance(b, Var):
            if a.ident != b.ident:
                younger, older = (a, b) if a.ident > b.ident else (b, a)
                bindings.bind(younger, older)
            continue
        if isinstance(a, Var) or isinstance(b, Var):
            var, value = (a, b) if isinstance(a, Var) else (b, a)
            if occur_check and occurs_in(var, value, bindings):  # type: ignore[arg-type]
                break
            bindings.bind(var, value)  # type: ignore[arg-type]
            continue
        if isinstance(a, Compound) and isinstance(b, Compound):
            if a.functor != b.functor or len(a.args) != len(b.args):
                break
            key = (id(a), id(b))
            if key not in visited:
                visited.add(key)
                pending.extend(reversed(list(zip(a.args, b.args, strict=True))))
            continue
        if a != b:
            break
    else:
        return True
    bindings.undo(mark)
    return False
