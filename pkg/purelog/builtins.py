"""
Built-in relations, registered by name and arity.

Deterministic built-ins are called with dereferenced arguments and answer
success or failure. Control built-ins receive the raw arguments, the goals that
follow and the cut barrier of the calling clause, and return the goal stack to
continue with.
"""

from __future__ import annotations

import operator
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from types import MappingProxyType

from .engine import FAILED, ChoicePoint, CutBarrier, Frame, Goals, Machine, push_goals, rename_clause
from .errors import (
    DomainError,
    EvaluationError,
    InstantiationError,
    PrologPermissionError,
    PrologTypeError,
)
from .syntax import Clause, declare_op_terms
from .terms import (
    FAIL,
    NIL,
    Compound,
    Const,
    Float,
    Int,
    Number,
    Term,
    Var,
    conjunction,
    list_items,
    make_int,
    make_list,
    resolve,
)
from .unify import unify


@dataclass(frozen=True)
class BuiltinEntry:
    name: str
    arity: int
    deterministic: bool
    handler: Callable[..., bool | Goals]


_registry: dict[tuple[str, int], BuiltinEntry] = {}


def builtin(name: str, arity: int, deterministic: bool = True):
    """Register the decorated function as the built-in `name/arity`"""

    def register(handler: Callable[..., bool | Goals]) -> Callable[..., bool | Goals]:
        _registry[(name, arity)] = BuiltinEntry(name, arity, deterministic, handler)
        return handler

    return register


#
# Unification and control
#


@builtin("=", 2)
def builtin_unify(machine: Machine, left: Term, right: Term) -> bool:
    return unify(left, right, machine.bindings, machine.occur_check)


@builtin("true", 0)
def builtin_true(machine: Machine) -> bool:
    return True


@builtin("fail", 0)
def builtin_fail(machine: Machine) -> bool:
    return False


@builtin("!", 0, deterministic=False)
def builtin_cut(machine: Machine, args: Sequence[Term], rest: Frame | None, barrier: int) -> Goals:
    machine.execute_cut(barrier)
    return rest


@builtin(",", 2, deterministic=False)
def builtin_conjunction(
    machine: Machine, args: Sequence[Term], rest: Frame | None, barrier: int
) -> Goals:
    return push_goals(args, barrier, rest)


def _if_then_else(
    machine: Machine, cond: Term, then: Term, otherwise: Term, rest: Frame | None, barrier: int
) -> Goals:
    height = len(machine.cps)
    machine.push_choice(push_goals([otherwise], barrier, rest))
    # The condition may cut only its own alternatives; its first solution
    # then removes them together with the else branch
    rest = Frame(CutBarrier(height), push_goals([then], barrier, rest))
    return push_goals([cond], height + 1, rest)


@builtin(";", 2, deterministic=False)
def builtin_disjunction(
    machine: Machine, args: Sequence[Term], rest: Frame | None, barrier: int
) -> Goals:
    left, right = args
    match machine.bindings.deref(left):
        case Compound("->", (cond, then)):
            return _if_then_else(machine, cond, then, right, rest, barrier)
    machine.push_choice(push_goals([right], barrier, rest))
    return push_goals([left], barrier, rest)


@builtin("->", 2, deterministic=False)
def builtin_if_then(
    machine: Machine, args: Sequence[Term], rest: Frame | None, barrier: int
) -> Goals:
    cond, then = args
    return _if_then_else(machine, cond, then, FAIL, rest, barrier)


@builtin("not", 1, deterministic=False)
def builtin_not(machine: Machine, args: Sequence[Term], rest: Frame | None, barrier: int) -> Goals:
    (goal,) = args
    _check_callable(machine.bindings.deref(goal))
    height = len(machine.cps)
    # Reached only when the goal has no solution
    machine.push_choice(rest)
    return push_goals([goal], height + 1, Frame(CutBarrier(height), push_goals([FAIL], 0, None)))


@builtin("call", 1, deterministic=False)
def builtin_call(machine: Machine, args: Sequence[Term], rest: Frame | None, barrier: int) -> Goals:
    (goal,) = args
    _check_callable(machine.bindings.deref(goal))
    return push_goals([goal], len(machine.cps), rest)


def _check_callable(goal: Term) -> None:
    match goal:
        case Var():
            raise InstantiationError("goal is an unbound variable")
        case Int() | Float():
            raise PrologTypeError("callable", goal)


#
# Arithmetic
#


def _to_float(value: Number) -> float:
    return float(value.value)


def _integer(value: Number) -> int:
    if not isinstance(value, Int):
        raise PrologTypeError("integer", value)
    return value.value


def _nonzero(value: Number) -> Number:
    if value.value == 0:
        raise EvaluationError("zero_divisor")
    return value


def _add(a: Number, b: Number) -> Number:
    if isinstance(a, Int) and isinstance(b, Int):
        return make_int(a.value + b.value)
    return Float(_to_float(a) + _to_float(b))


def _subtract(a: Number, b: Number) -> Number:
    if isinstance(a, Int) and isinstance(b, Int):
        return make_int(a.value - b.value)
    return Float(_to_float(a) - _to_float(b))


def _multiply(a: Number, b: Number) -> Number:
    if isinstance(a, Int) and isinstance(b, Int):
        return make_int(a.value * b.value)
    return Float(_to_float(a) * _to_float(b))


def _int_divide(a: Number, b: Number) -> Number:
    x, y = _integer(a), _integer(b)
    _nonzero(b)
    quotient = abs(x) // abs(y)
    return make_int(quotient if (x < 0) == (y < 0) else -quotient)


def _divide(a: Number, b: Number) -> Number:
    _nonzero(b)
    if isinstance(a, Int) and isinstance(b, Int) and a.value % b.value == 0:
        return make_int(a.value // b.value)
    return Float(_to_float(a) / _to_float(b))


def _modulo(a: Number, b: Number) -> Number:
    x, y = _integer(a), _integer(b)
    _nonzero(b)
    return make_int(x % y)


def _negate(a: Number) -> Number:
    if isinstance(a, Int):
        return make_int(-a.value)
    return Float(-a.value)


BINARY_OPERATIONS: dict[str, Callable[[Number, Number], Number]] = {
    "+": _add,
    "-": _subtract,
    "*": _multiply,
    "//": _int_divide,
    "/": _divide,
    "mod": _modulo,
}

UNARY_OPERATIONS: dict[str, Callable[[Number], Number]] = {"-": _negate}


def eval_gae(term: Term, machine: Machine) -> Number:
    """The value of a ground arithmetic expression"""
    term = machine.bindings.deref(term)
    match term:
        case Var():
            raise InstantiationError("arithmetic expression is not ground")
        case Int() | Float():
            return term
        case Compound(functor, (arg,)) if functor in UNARY_OPERATIONS:
            return UNARY_OPERATIONS[functor](eval_gae(arg, machine))
        case Compound(functor, (left, right)) if functor in BINARY_OPERATIONS:
            return BINARY_OPERATIONS[functor](eval_gae(left, machine), eval_gae(right, machine))
    raise PrologTypeError("evaluable", resolve(term, machine.bindings))


@builtin("is", 2)
def builtin_is(machine: Machine, result: Term, expr: Term) -> bool:
    return unify(result, eval_gae(expr, machine), machine.bindings, machine.occur_check)


COMPARISONS: dict[str, Callable[[float | int, float | int], bool]] = {
    "<": operator.lt,
    "=<": operator.le,
    "=:=": operator.eq,
    "=\\=": operator.ne,
    ">=": operator.ge,
    ">": operator.gt,
}


def builtin_compare(relation: str, left: Term, right: Term, machine: Machine) -> bool:
    a, b = eval_gae(left, machine), eval_gae(right, machine)
    if isinstance(a, Float) or isinstance(b, Float):
        return COMPARISONS[relation](_to_float(a), _to_float(b))
    return COMPARISONS[relation](a.value, b.value)


def _register_comparison(relation: str) -> None:
    def handler(machine: Machine, left: Term, right: Term) -> bool:
        return builtin_compare(relation, left, right, machine)

    handler.__name__ = f"builtin_compare_{relation}"
    builtin(relation, 2)(handler)


for _relation in COMPARISONS:
    _register_comparison(_relation)


#
# Terms and program access
#


@builtin("=..", 2)
def builtin_univ(machine: Machine, term: Term, spec: Term) -> bool:
    bindings = machine.bindings
    match term:
        case Compound(functor, args):
            return unify(spec, make_list([Const(functor), *args]), bindings, machine.occur_check)
        case Const() | Int() | Float():
            return unify(spec, make_list([term]), bindings, machine.occur_check)

    items, tail = list_items(spec, bindings)
    if isinstance(tail, Var):
        raise InstantiationError("=.. needs a term or a proper list")
    if tail != NIL:
        raise PrologTypeError("list", resolve(spec, bindings))
    if not items:
        raise DomainError("non_empty_list", NIL)
    head = bindings.deref(items[0])
    if isinstance(head, Var):
        raise InstantiationError("=.. needs the functor of the list")
    if len(items) == 1:
        if isinstance(head, Compound):
            raise PrologTypeError("atomic", resolve(head, bindings))
        return unify(term, head, bindings, machine.occur_check)
    if not isinstance(head, Const):
        raise PrologTypeError("atom", resolve(head, bindings))
    return unify(term, Compound(head.name, tuple(items[1:])), bindings, machine.occur_check)


@dataclass(slots=True)
class ClauseAccessChoice(ChoicePoint):
    """The remaining clauses `clause/2` can still return"""

    head: Term
    body: Term
    clauses: Sequence[Clause]
    index: int

    def retry(self, machine: Machine) -> Goals:
        return _next_clause(machine, self.head, self.body, self.clauses, self.index, self.goals)


def _next_clause(
    machine: Machine,
    head: Term,
    body: Term,
    clauses: Sequence[Clause],
    index: int,
    rest: Frame | None,
) -> Goals:
    bindings = machine.bindings
    mark = bindings.mark()
    while index < len(clauses):
        clause = rename_clause(clauses[index], machine)
        index += 1
        if not unify(head, clause.head, bindings, machine.occur_check):
            continue
        if not unify(body, conjunction(clause.body), bindings, machine.occur_check):
            bindings.undo(mark)
            continue
        if index < len(clauses):
            machine.cps.append(ClauseAccessChoice(rest, mark, head, body, clauses, index))
        return rest
    return FAILED


@builtin("clause", 2, deterministic=False)
def builtin_clause(
    machine: Machine, args: Sequence[Term], rest: Frame | None, barrier: int
) -> Goals:
    head, body = args
    match machine.bindings.deref(head):
        case Var():
            raise InstantiationError("clause/2 needs a non-variable head")
        case Int() | Float() as number:
            raise PrologTypeError("callable", number)
        case Const(name):
            key = (name, 0)
        case Compound(functor, head_args):
            key = (functor, len(head_args))
    if key in machine.builtins:
        raise PrologPermissionError("access", "private_procedure", *key)
    clauses = machine.database.get(key)
    if clauses is None:
        return FAILED
    return _next_clause(machine, head, body, clauses, 0, rest)


@builtin("op", 3)
def builtin_op(machine: Machine, priority: Term, op_type: Term, names: Term) -> bool:
    bindings = machine.bindings
    declare_op_terms(
        machine.table,
        priority,
        op_type,
        resolve(names, bindings),
    )
    return True


BUILTINS = MappingProxyType(_registry)
