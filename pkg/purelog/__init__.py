"""A pure Prolog interpreter: terms, unification, resolution and a top level"""

from .engine import Database, Machine, Solution, rename_clause
from .errors import (
    CyclicTermError,
    DomainError,
    EvaluationError,
    ExistenceError,
    InstantiationError,
    NoApplicableActionError,
    PrologError,
    PrologPermissionError,
    PrologSyntaxError,
    PrologTypeError,
    ResourceError,
)
from .syntax import (
    OperatorTable,
    declare_op,
    parse_program,
    parse_query,
    parse_term,
    tokenize,
    write_term,
)
from .terms import (
    Bindings,
    Compound,
    Const,
    Float,
    Int,
    Substitution,
    Term,
    Var,
    apply_substitution,
    compose,
    occurs_in,
    resolve,
)
from .unify import mm_solve, mm_step, mm_trace, unify

__all__ = [
    "Bindings",
    "Compound",
    "Const",
    "CyclicTermError",
    "Database",
    "DomainError",
    "EvaluationError",
    "ExistenceError",
    "Float",
    "InstantiationError",
    "Int",
    "Machine",
    "NoApplicableActionError",
    "OperatorTable",
    "PrologError",
    "PrologPermissionError",
    "PrologSyntaxError",
    "PrologTypeError",
    "ResourceError",
    "Solution",
    "Substitution",
    "Term",
    "Var",
    "apply_substitution",
    "compose",
    "declare_op",
    "mm_solve",
    "mm_step",
    "mm_trace",
    "occurs_in",
    "parse_program",
    "parse_query",
    "parse_term",
    "rename_clause",
    "resolve",
    "tokenize",
    "unify",
    "write_term",
]
