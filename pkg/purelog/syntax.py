"""
Reading and writing Prolog text.

The reader is an operator-precedence parser driven by an `OperatorTable`, so
that `:- op(1100, yfx, arrow).` changes how the rest of a program is read.
The writer is its inverse: it prints lists in bracket notation and operators
in infix or prefix form with as few parentheses as the table allows.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum

from .errors import DomainError, EvaluationError, InstantiationError, PrologError
from .errors import PrologSyntaxError, PrologTypeError
from .terms import (
    NIL,
    Compound,
    Const,
    Float,
    Int,
    Term,
    Var,
    VarFactory,
    conjuncts,
    is_list_cell,
    list_items,
    make_int,
    make_list,
)

#
# Operators
#


class OpType(Enum):
    XFX = "xfx"
    XFY = "xfy"
    YFX = "yfx"
    FY = "fy"
    FX = "fx"
    XF = "xf"
    YF = "yf"

    @property
    def fixity(self) -> str:
        if len(self.value) == 2:
            return "prefix" if self.value[0] == "f" else "postfix"
        return "infix"


@dataclass(frozen=True, slots=True)
class OpDef:
    priority: int
    type: OpType

    @property
    def left_max(self) -> int:
        """Highest priority allowed for the left operand"""
        return self.priority if self.type in (OpType.YFX, OpType.YF) else self.priority - 1

    @property
    def right_max(self) -> int:
        """Highest priority allowed for the right (or only prefix) operand"""
        return self.priority if self.type in (OpType.XFY, OpType.FY) else self.priority - 1


TableSnapshot = tuple[dict[str, OpDef], dict[str, OpDef], dict[str, OpDef]]

DEFAULT_OPERATORS: tuple[tuple[int, str, str], ...] = (
    (1200, "xfx", ":-"),
    (1200, "fx", ":-"),
    (1200, "fx", "?-"),
    (1100, "xfy", ";"),
    (1050, "xfy", "->"),
    (1000, "xfy", ","),
    (900, "fy", "not"),
    *((700, "xfx", name) for name in ("=", "\\=", "is", "=..", "=:=", "=\\=", "<", ">", "=<", ">=")),
    (500, "yfx", "+"),
    (500, "yfx", "-"),
    (400, "yfx", "*"),
    (400, "yfx", "//"),
    (400, "yfx", "/"),
    (400, "yfx", "mod"),
    (200, "fy", "-"),
)


class OperatorTable:
    """Priority/type/name triples; at most one prefix and one infix-or-postfix entry per name"""

    def __init__(self, entries: Iterable[tuple[int, str, str]] = ()) -> None:
        self._prefix: dict[str, OpDef] = {}
        self._infix: dict[str, OpDef] = {}
        self._postfix: dict[str, OpDef] = {}
        for priority, op_type, name in entries:
            self.declare(priority, op_type, name)

    @classmethod
    def default(cls) -> OperatorTable:
        return cls(DEFAULT_OPERATORS)

    def snapshot(self) -> TableSnapshot:
        return dict(self._prefix), dict(self._infix), dict(self._postfix)

    def restore(self, snapshot: TableSnapshot) -> None:
        """Put the entries of an earlier snapshot back, in place"""
        prefix, infix, postfix = snapshot
        self._prefix, self._infix, self._postfix = dict(prefix), dict(infix), dict(postfix)

    def declare(self, priority: int, op_type: str | OpType, name: str) -> None:
        if not isinstance(priority, int) or not 1 <= priority <= 1200:
            raise DomainError("operator_priority", str(priority))
        try:
            op_type = OpType(op_type)
        except ValueError:
            raise DomainError("operator_specifier", str(op_type)) from None

        entry = OpDef(priority, op_type)
        match op_type.fixity:
            case "prefix":
                self._prefix[name] = entry
            case "infix":
                self._postfix.pop(name, None)
                self._infix[name] = entry
            case "postfix":
                self._infix.pop(name, None)
                self._postfix[name] = entry

    def prefix(self, name: str) -> OpDef | None:
        return self._prefix.get(name)

    def infix(self, name: str) -> OpDef | None:
        return self._infix.get(name)

    def postfix(self, name: str) -> OpDef | None:
        return self._postfix.get(name)

    def is_operator(self, name: str) -> bool:
        return name in self._prefix or name in self._infix or name in self._postfix

    def entries(self, name: str) -> set[tuple[int, str]]:
        return {
            (entry.priority, entry.type.value)
            for table in (self._prefix, self._infix, self._postfix)
            if (entry := table.get(name)) is not None
        }


def declare_op(table: OperatorTable, priority: int, op_type: str, name: str) -> OperatorTable:
    table.declare(priority, op_type, name)
    return table


def declare_op_terms(table: OperatorTable, priority: Term, op_type: Term, names: Term) -> None:
    """Run an `op/3` declaration given as (dereferenced) terms"""
    if isinstance(priority, Var) or isinstance(op_type, Var) or isinstance(names, Var):
        raise InstantiationError("op/3 needs a priority, a type and a name")
    if not isinstance(priority, Int):
        raise PrologTypeError("integer", priority)
    if not isinstance(op_type, Const):
        raise PrologTypeError("atom", op_type)
    items, tail = list_items(names)
    if tail != NIL or not items:
        items = [names]
    for item in items:
        if not isinstance(item, Const):
            raise PrologTypeError("atom", item)
    for item in items:
        table.declare(priority.value, op_type.name, item.name)  # type: ignore[union-attr]


#
# Tokens
#


class TokenKind(Enum):
    NAME = "name"
    VAR = "variable"
    INT = "integer"
    FLOAT = "float"
    PUNCT = "punct"
    END = "end"
    EOF = "eof"


@dataclass(frozen=True, slots=True)
class Token:
    kind: TokenKind
    text: str
    line: int
    column: int
    # Whether whitespace or a comment comes right before the token
    layout_before: bool = False
    quoted: bool = False

    def is_punct(self, text: str) -> bool:
        return self.kind is TokenKind.PUNCT and self.text == text


SYMBOL_CHARS = "+-*/\\^<>=~:.?@#&$"

_TOKEN_RE = re.compile(
    r"""
    (?P<layout>\s+|%[^\n]*|/\*.*?\*/)
    |(?P<float>\d+\.\d+(?:[eE][+-]?\d+)?)
    |(?P<int>\d+)
    |(?P<var>[A-Z_][A-Za-z0-9_]*)
    |(?P<name>[a-z][A-Za-z0-9_]*)
    |(?P<quoted>'(?:[^'\\\n]|''|\\.)*')
    |(?P<symbol>[+\-*/\\^<>=~:.?@\#&$]+)
    |(?P<solo>[!;])
    |(?P<punct>[()\[\]{},|])
    """,
    re.VERBOSE | re.DOTALL,
)

_ESCAPES = {"n": "\n", "t": "\t", "\\": "\\", "'": "'", '"': '"', "`": "`"}


def _unquote(text: str, line: int, column: int) -> str:
    body = text[1:-1].replace("''", "'")
    chars = []
    escaped = False
    for char in body:
        if escaped:
            if char not in _ESCAPES:
                raise PrologSyntaxError(f"unknown escape sequence \\{char}", line, column)
            chars.append(_ESCAPES[char])
            escaped = False
        elif char == "\\":
            escaped = True
        else:
            chars.append(char)
    return "".join(chars)


def _scan(text: str, pos: int = 0) -> Iterator[Token]:
    """Tokens of `text` from offset `pos` on; lines and columns count from the start of `text`"""
    line = text.count("\n", 0, pos) + 1
    line_start = text.rfind("\n", 0, pos) + 1
    layout = True
    while pos < len(text):
        column = pos - line_start + 1
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            if text.startswith("'", pos):
                raise PrologSyntaxError("unterminated quoted atom", line, column)
            raise PrologSyntaxError(f"illegal character {text[pos]!r}", line, column)
        kind, value = match.lastgroup, match.group()
        if kind == "symbol" and value.startswith("/*"):
            raise PrologSyntaxError("unterminated block comment", line, column)

        match kind:
            case "layout":
                layout = True
            case "float":
                yield Token(TokenKind.FLOAT, value, line, column, layout)
            case "int":
                yield Token(TokenKind.INT, value, line, column, layout)
            case "var":
                yield Token(TokenKind.VAR, value, line, column, layout)
            case "name" | "solo":
                yield Token(TokenKind.NAME, value, line, column, layout)
            case "quoted":
                name = _unquote(value, line, column)
                yield Token(TokenKind.NAME, name, line, column, layout, quoted=True)
            case "symbol":
                following = text[match.end() : match.end() + 1]
                if value == "." and (not following or following.isspace() or following == "%"):
                    yield Token(TokenKind.END, value, line, column, layout)
                else:
                    yield Token(TokenKind.NAME, value, line, column, layout)
            case "punct":
                yield Token(TokenKind.PUNCT, value, line, column, layout)
        if kind != "layout":
            layout = False

        newlines = value.count("\n")
        if newlines:
            line += newlines
            line_start = match.start() + value.rindex("\n") + 1
        pos = match.end()

    yield Token(TokenKind.EOF, "", line, pos - line_start + 1, layout)


def tokenize(text: str) -> list[Token]:
    """Split source text into tokens, ending with an EOF token"""
    return list(_scan(text))


#
# Parsed clauses
#


@dataclass(frozen=True)
class Directive:
    goal: Term
    line: int = 0


@dataclass(frozen=True)
class Clause:
    head: Term
    body: tuple[Term, ...] = ()
    line: int = 0

    @property
    def key(self) -> tuple[str, int]:
        match self.head:
            case Compound(functor, args):
                return functor, len(args)
            case Const(name):
                return name, 0
        raise PrologTypeError("callable", self.head)

    @property
    def is_fact(self) -> bool:
        return not self.body


@dataclass(frozen=True)
class QueryInput:
    goals: tuple[Term, ...]
    # Named (non-anonymous) variables in order of first appearance
    variables: dict[str, Var] = field(default_factory=dict)


ParsedClause = Directive | Clause | QueryInput


#
# Parser
#


class Parser:
    """Operator-precedence parser over a token list"""

    def __init__(
        self,
        tokens: Sequence[Token],
        table: OperatorTable,
        factory: VarFactory | None = None,
    ) -> None:
        self.tokens = tokens
        self.pos = 0
        self.table = table
        self.factory = factory or VarFactory()
        self.variables: dict[str, Var] = {}
        # Inside an argument or list element a bare `,` ends the term
        self.in_argument = False

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        if token.kind is not TokenKind.EOF:
            self.pos += 1
        return token

    def error(self, message: str, token: Token | None = None) -> PrologSyntaxError:
        token = token or self.peek()
        return PrologSyntaxError(message, token.line, token.column)

    def expect_punct(self, text: str) -> None:
        token = self.advance()
        if not token.is_punct(text):
            raise self.error(f"expected {text!r}, found {_describe(token)}", token)

    def expect_end(self) -> None:
        token = self.peek()
        if token.kind not in (TokenKind.END, TokenKind.EOF):
            raise self.error(f"operator expected, found {_describe(token)}", token)
        self.advance()

    def parse(self, max_priority: int = 1200) -> Term:
        term, _ = self._parse(max_priority)
        return term

    def _parse(self, max_priority: int) -> tuple[Term, int]:
        left, priority = self._primary(max_priority)
        return self._operators(left, priority, max_priority)

    def _variable(self, name: str) -> Var:
        if name == "_":
            return self.factory.fresh("_")
        if name not in self.variables:
            self.variables[name] = self.factory.fresh(name)
        return self.variables[name]

    def _ends_term(self, token: Token) -> bool:
        """Can `token` follow a complete term? Then a preceding operator is an atom"""
        if token.kind in (TokenKind.END, TokenKind.EOF):
            return True
        if token.kind is TokenKind.PUNCT:
            return token.text in ",)|]}"
        if token.kind is TokenKind.NAME and not token.quoted:
            following = self.tokens[min(self.pos + 1, len(self.tokens) - 1)]
            if following.is_punct("(") and not following.layout_before:
                return False
            return self.table.infix(token.text) is not None and self.table.prefix(token.text) is None
        return False

    def _nested(self, in_argument: bool) -> Term:
        saved, self.in_argument = self.in_argument, in_argument
        try:
            return self.parse(1200)
        finally:
            self.in_argument = saved

    def argument(self) -> Term:
        """An argument or list element; operators up to 1200 are accepted unbracketed"""
        return self._nested(in_argument=True)

    def _arguments(self, closing: str) -> list[Term]:
        args = [self.argument()]
        while self.peek().is_punct(","):
            self.advance()
            args.append(self.argument())
        self.expect_punct(closing)
        return args

    def _list(self) -> Term:
        items = [self.argument()]
        while self.peek().is_punct(","):
            self.advance()
            items.append(self.argument())
        tail: Term = NIL
        if self.peek().is_punct("|"):
            self.advance()
            tail = self.argument()
        self.expect_punct("]")
        return make_list(items, tail)

    def _number(self, token: Token, negative: bool = False) -> Term:
        if token.kind is TokenKind.FLOAT:
            value = float(token.text)
            return Float(-value if negative else value)
        value = int(token.text)
        try:
            return make_int(-value if negative else value)
        except EvaluationError:
            raise self.error("integer out of range", token) from None

    def _primary(self, max_priority: int) -> tuple[Term, int]:
        token = self.advance()
        match token.kind:
            case TokenKind.INT | TokenKind.FLOAT:
                return self._number(token), 0
            case TokenKind.VAR:
                return self._variable(token.text), 0
            case TokenKind.PUNCT if token.text == "(":
                term = self._nested(in_argument=False)
                self.expect_punct(")")
                return term, 0
            case TokenKind.PUNCT if token.text == "[":
                if self.peek().is_punct("]"):
                    self.advance()
                    return NIL, 0
                return self._list(), 0
            case TokenKind.NAME:
                return self._name(token, max_priority)
        raise self.error(f"unexpected {_describe(token)}", token)

    def _name(self, token: Token, max_priority: int) -> tuple[Term, int]:
        name = token.text
        following = self.peek()
        if following.is_punct("(") and not following.layout_before:
            self.advance()
            return Compound(name, tuple(self._arguments(")"))), 0
        if token.quoted or self._ends_term(following):
            return Const(name), 0
        if name == "-" and following.kind in (TokenKind.INT, TokenKind.FLOAT):
            return self._number(self.advance(), negative=True), 0

        prefix = self.table.prefix(name)
        if prefix is None:
            return Const(name), 0
        if prefix.priority > max_priority:
            raise self.error(f"priority clash: prefix operator {name!r}", token)
        argument, _ = self._parse(prefix.right_max)
        return Compound(name, (argument,)), prefix.priority

    def _operators(self, left: Term, left_priority: int, max_priority: int) -> tuple[Term, int]:
        while True:
            token = self.peek()
            if token.is_punct(","):
                if self.in_argument:
                    break
                name = ","
            elif token.kind is TokenKind.NAME and not token.quoted:
                name = token.text
            else:
                break

            if (infix := self.table.infix(name)) is not None:
                if infix.priority > max_priority:
                    break
                if left_priority > infix.left_max:
                    raise self.error(f"priority clash: operator {name!r}", token)
                self.advance()
                right, _ = self._parse(infix.right_max)
                left, left_priority = Compound(name, (left, right)), infix.priority
            elif (postfix := self.table.postfix(name)) is not None:
                if postfix.priority > max_priority:
                    break
                if left_priority > postfix.left_max:
                    raise self.error(f"priority clash: operator {name!r}", token)
                self.advance()
                left, left_priority = Compound(name, (left,)), postfix.priority
            else:
                break
        return left, left_priority


def _describe(token: Token) -> str:
    match token.kind:
        case TokenKind.END:
            return "end of clause"
        case TokenKind.EOF:
            return "end of input"
    return f"{token.kind.value} {token.text!r}"


def _as_tokens(source: str | Sequence[Token]) -> Sequence[Token]:
    return tokenize(source) if isinstance(source, str) else source


def parse_term(
    source: str | Sequence[Token],
    table: OperatorTable | None = None,
    max_priority: int = 1200,
    factory: VarFactory | None = None,
) -> Term:
    """Read exactly one term, optionally followed by an end-of-clause `.`"""
    parser = Parser(_as_tokens(source), table or OperatorTable.default(), factory)
    term = parser.parse(max_priority)
    parser.expect_end()
    if parser.peek().kind is not TokenKind.EOF:
        raise parser.error(f"unexpected {_describe(parser.peek())} after term")
    return term


def parse_query(
    source: str | Sequence[Token],
    table: OperatorTable | None = None,
    factory: VarFactory | None = None,
) -> QueryInput:
    """Read a query; the closing `.` may be omitted"""
    parser = Parser(_as_tokens(source), table or OperatorTable.default(), factory)
    if parser.peek().kind in (TokenKind.END, TokenKind.EOF):
        raise parser.error("empty query")
    goal = parser.parse(1200)
    parser.expect_end()
    if parser.peek().kind is not TokenKind.EOF:
        raise parser.error(f"unexpected {_describe(parser.peek())} after query")
    match goal:
        case Compound("?-", (inner,)):
            goal = inner
    return QueryInput(tuple(conjuncts(goal)), dict(parser.variables))


def _check_head(head: Term, token: Token) -> None:
    if isinstance(head, Var | Int | Float):
        kind = "variable" if isinstance(head, Var) else "number"
        raise PrologSyntaxError(f"clause head cannot be a {kind}", token.line, token.column)


_CLAUSE_END = re.compile(r"\.(?=\s|%|\Z)")


def _offset(text: str, line: int, column: int) -> int:
    lines = text.split("\n")
    return sum(len(part) + 1 for part in lines[: line - 1]) + column - 1


def _split_clauses(text: str) -> Iterator[list[Token] | PrologSyntaxError]:
    """
    Token lists of one clause each. Text that cannot be tokenized yields the
    error instead, and scanning resumes after the next end-of-clause `.`.
    """
    pos = 0
    while True:
        chunk: list[Token] = []
        try:
            for token in _scan(text, pos):
                if token.kind is TokenKind.EOF:
                    break
                chunk.append(token)
                if token.kind is TokenKind.END:
                    yield chunk
                    chunk = []
        except PrologSyntaxError as err:
            yield err
            resume = _CLAUSE_END.search(text, _offset(text, err.line, err.column))
            if resume is None:
                return
            pos = resume.end()
            continue
        if chunk:
            last = chunk[-1]
            yield PrologSyntaxError("missing '.' at end of clause", last.line, last.column)
        return


def read_program(
    text: str,
    table: OperatorTable | None = None,
    factory: VarFactory | None = None,
) -> Iterator[ParsedClause | PrologError]:
    """
    Read clauses one at a time. A clause that cannot be read is reported by
    yielding the error in its place; reading resumes after its `.`.
    `op/3` directives take effect on `table` for the clauses that follow.
    """
    table = table if table is not None else OperatorTable.default()
    factory = factory or VarFactory()
    for chunk in _split_clauses(text):
        if isinstance(chunk, PrologSyntaxError):
            yield chunk
            continue
        first = chunk[0]
        parser = Parser(chunk + [Token(TokenKind.EOF, "", first.line, first.column)], table, factory)
        try:
            term = parser.parse(1200)
            parser.expect_end()
            match term:
                case Compound(":-" | "?-", (goal,)):
                    if isinstance(goal, Compound) and goal.functor == "op" and goal.arity == 3:
                        declare_op_terms(table, *goal.args)
                    yield Directive(goal, first.line)
                case Compound(":-", (head, body)):
                    _check_head(head, first)
                    yield Clause(head, tuple(conjuncts(body)), first.line)
                case _:
                    _check_head(term, first)
                    yield Clause(term, (), first.line)
        except PrologError as err:
            yield err


def parse_program(
    text: str,
    table: OperatorTable | None = None,
    factory: VarFactory | None = None,
) -> list[ParsedClause]:
    """Read a whole program, raising the first error"""
    clauses: list[ParsedClause] = []
    for item in read_program(text, table, factory):
        if isinstance(item, PrologError):
            raise item
        clauses.append(item)
    return clauses


#
# Writer
#


def _letters(index: int) -> str:
    name = ""
    index += 1
    while index:
        index, rest = divmod(index - 1, 26)
        name = chr(ord("A") + rest) + name
    return name


class VariableNamer:
    """
    Display names for variables within one answer: preset names first,
    then `_A`, `_B`, ... in order of appearance.
    """

    def __init__(self, preset: Mapping[int, str] | None = None) -> None:
        self.names: dict[int, str] = dict(preset or {})
        self._count = 0

    def __call__(self, var: Var) -> str:
        if var.ident not in self.names:
            taken = set(self.names.values())
            while (name := f"_{_letters(self._count)}") in taken:
                self._count += 1
            self._count += 1
            self.names[var.ident] = name
        return self.names[var.ident]


def _source_name(var: Var) -> str:
    return var.name if var.name != "_" else f"_G{var.ident}"


_PLAIN_ATOM = re.compile(r"[a-z][A-Za-z0-9_]*\Z")
_SYMBOL_ATOM = re.compile(r"[+\-*/\\^<>=~:.?@#&$]+\Z")


def format_atom(name: str, quoted: bool) -> str:
    if not quoted or name in ("[]", "!", ";", "{}"):
        return name
    if _PLAIN_ATOM.match(name) or _SYMBOL_ATOM.match(name):
        return name
    escaped = name.replace("\\", "\\\\").replace("'", "\\'").replace("\n", "\\n")
    return f"'{escaped}'"


def format_float(value: float) -> str:
    text = repr(value)
    if "e" in text and "." not in text:
        mantissa, exponent = text.split("e")
        text = f"{mantissa}.0e{exponent}"
    return text


class _Writer:
    def __init__(self, table: OperatorTable, quoted: bool, namer) -> None:
        self.table = table
        self.quoted = quoted
        self.namer = namer

    def atom(self, name: str) -> str:
        return format_atom(name, self.quoted)

    def write(self, term: Term, max_priority: int = 1200) -> str:
        match term:
            case Var():
                return self.namer(term)
            case Int(value):
                return str(value)
            case Float(value):
                return format_float(value)
            case Const(name):
                return self.atom(name)
            case Compound() if is_list_cell(term):
                return self.write_list(term)
            case Compound(functor, (left, right)) if (op := self.table.infix(functor)) is not None:
                return self.write_infix(functor, op, left, right, max_priority)
            case Compound(functor, (arg,)) if (
                (op := self.table.prefix(functor)) is not None
                and not isinstance(arg, Int | Float)
            ):
                return self.write_prefix(functor, op, arg, max_priority)
            case Compound(functor, (arg,)) if (op := self.table.postfix(functor)) is not None:
                text = f"{self.write(arg, op.left_max)}{self.atom(functor)}"
                return f"({text})" if op.priority > max_priority else text
            case Compound(functor, args):
                inner = ",".join(self.write(arg, 999) for arg in args)
                return f"{self.atom(functor)}({inner})"
        raise TypeError(f"not a term: {term!r}")

    def write_list(self, term: Term) -> str:
        items, tail = list_items(term)
        inner = ",".join(self.write(item, 999) for item in items)
        if tail != NIL:
            inner += f"|{self.write(tail, 999)}"
        return f"[{inner}]"

    def write_infix(
        self, functor: str, op: OpDef, left: Term, right: Term, max_priority: int
    ) -> str:
        left_text = self.write(left, op.left_max)
        right_text = self.write(right, op.right_max)
        name = self.atom(functor)
        if functor == ",":
            text = f"{left_text},{right_text}"
        elif name[0].isalpha():
            text = f"{left_text} {name} {right_text}"
        else:
            before = " " if left_text[-1] in SYMBOL_CHARS else ""
            after = " " if right_text[0] in SYMBOL_CHARS else ""
            text = f"{left_text}{before}{name}{after}{right_text}"
        return f"({text})" if op.priority > max_priority else text

    def write_prefix(self, functor: str, op: OpDef, arg: Term, max_priority: int) -> str:
        name = self.atom(functor)
        if isinstance(arg, Const) and self.table.is_operator(arg.name):
            # `- =` would read `-` as an atom
            return f"{name}({self.atom(arg.name)})"
        arg_text = self.write(arg, op.right_max)
        if name[0].isalpha() or arg_text[0] in SYMBOL_CHARS or arg_text[0] == "(":
            text = f"{name} {arg_text}"
        else:
            text = f"{name}{arg_text}"
        return f"({text})" if op.priority > max_priority else text


def write_term(
    term: Term,
    table: OperatorTable | None = None,
    quoted: bool = False,
    namer: VariableNamer | None = None,
) -> str:
    """
    Render a term as text that reads back to the same term.
    Without a `namer`, variables print under their source names.
    """
    writer = _Writer(table or _DEFAULT_TABLE, quoted, namer or _source_name)
    return writer.write(term)


_DEFAULT_TABLE = OperatorTable.default()
