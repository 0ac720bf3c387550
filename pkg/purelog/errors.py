"""Errors raised while reading, consulting and running Prolog programs"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .terms import Term


def _show(culprit: Term) -> str:
    # Imported lazily: the writer depends on terms, which depends on this module
    from .syntax import write_term

    return write_term(culprit, quoted=True)


class PrologError(Exception):
    """Base class of every error a Prolog computation can end in"""

    kind = "system_error"

    def __init__(self, detail: str) -> None:
        super().__init__(f"{self.kind}: {detail}")
        self.detail = detail


class InstantiationError(PrologError):
    """An argument was an unbound variable where a value was required"""

    kind = "instantiation_error"

    def __init__(self, context: str = "argument is not sufficiently instantiated") -> None:
        super().__init__(context)


class PrologTypeError(PrologError):
    """An argument had the wrong type, e.g. `[]` in an arithmetic expression"""

    kind = "type_error"

    def __init__(self, expected: str, culprit: Term) -> None:
        self.expected = expected
        self.culprit = culprit
        super().__init__(f"{_show(culprit)} is not of type {expected}")


class DomainError(PrologError):
    """An argument had the right type but an unacceptable value"""

    kind = "domain_error"

    def __init__(self, domain: str, culprit: Term | str) -> None:
        self.domain = domain
        shown = culprit if isinstance(culprit, str) else _show(culprit)
        super().__init__(f"{shown} is not in domain {domain}")


class ExistenceError(PrologError):
    """A goal called a procedure without any definition"""

    kind = "existence_error"

    def __init__(self, name: str, arity: int) -> None:
        self.indicator = (name, arity)
        super().__init__(f"unknown procedure {name}/{arity}")


class PrologPermissionError(PrologError):
    """An operation was not allowed on a built-in procedure"""

    kind = "permission_error"

    def __init__(self, action: str, target: str, name: str, arity: int) -> None:
        super().__init__(f"cannot {action} {target} {name}/{arity}")


class EvaluationError(PrologError):
    """Arithmetic could not produce a value: division by zero or overflow"""

    kind = "evaluation_error"

    def __init__(self, what: str) -> None:
        self.what = what
        super().__init__(what)


class ResourceError(PrologError):
    """A query ran out of its resolution step budget"""

    kind = "resource_error"

    def __init__(self, what: str) -> None:
        super().__init__(what)


class CyclicTermError(PrologError):
    """A term contains itself through its bindings"""

    kind = "cyclic_term"

    def __init__(self) -> None:
        super().__init__("cannot resolve a term that contains itself")


class PrologSyntaxError(PrologError):
    """Custom exception raised when program or query text cannot be read"""

    kind = "syntax_error"

    def __init__(self, message: str, line: int, column: int) -> None:
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class NoApplicableActionError(Exception):
    """The equation set is in solved form: no unification action applies"""

    def __init__(self) -> None:
        super().__init__("No action applies to a set of equations in solved form")
