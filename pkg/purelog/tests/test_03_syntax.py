import pytest

from purelog.errors import DomainError, PrologError, PrologSyntaxError
from purelog.syntax import (
    Clause,
    Directive,
    OperatorTable,
    OpType,
    TokenKind,
    VariableNamer,
    declare_op,
    parse_program,
    parse_query,
    parse_term,
    read_program,
    tokenize,
    write_term,
)
from purelog.terms import NIL, Compound, Const, Float, Int, Var, list_items, make_list

from .testsuite.helpers import get_corpus, is_variant


def kinds(text: str) -> list[TokenKind]:
    return [token.kind for token in tokenize(text)][:-1]


def texts(text: str) -> list[str]:
    return [token.text for token in tokenize(text)][:-1]


#
# Tokens
#


def test_tokenize_call():
    N, V, P = TokenKind.NAME, TokenKind.VAR, TokenKind.PUNCT
    assert kinds("append(Xs, Ys, Zs)") == [N, P, V, P, V, P, V, P]


def test_tokenize_symbol_names():
    assert kinds("X =:= 3+4") == [
        TokenKind.VAR,
        TokenKind.NAME,
        TokenKind.INT,
        TokenKind.NAME,
        TokenKind.INT,
    ]
    assert texts("X =:= 3+4") == ["X", "=:=", "3", "+", "4"]


def test_tokenize_list():
    assert texts("[a,b|s]") == ["[", "a", ",", "b", "|", "s", "]"]


@pytest.mark.parametrize("text", ["a.", "a. ", "a.\n", "a.% done"])
def test_end_token(text):
    assert kinds(text) == [TokenKind.NAME, TokenKind.END]


def test_dot_inside_symbol_run_is_a_name():
    assert texts("X =.. Y") == ["X", "=..", "Y"]


def test_comments_and_positions():
    tokens = tokenize("% header\n  foo(X) /* note */ .")
    assert [t.text for t in tokens[:2]] == ["foo", "("]
    assert (tokens[0].line, tokens[0].column) == (2, 3)
    assert tokens[-2].kind is TokenKind.END


def test_quoted_atoms():
    tokens = tokenize("'hello world' 'it''s' 'a\\nb'")
    assert [t.text for t in tokens[:-1]] == ["hello world", "it's", "a\nb"]
    assert all(t.quoted for t in tokens[:-1])


def test_floats():
    assert texts("1.5 2.0e3") == ["1.5", "2.0e3"]
    assert kinds("1.5") == [TokenKind.FLOAT]


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("foo('abc", 1, 5),
        ("a.\nb :- \"x\".", 2, 6),
        ("/* never closed", 1, 1),
    ],
)
def test_tokenize_errors(text, line, column):
    with pytest.raises(PrologSyntaxError) as info:
        tokenize(text)
    assert (info.value.line, info.value.column) == (line, column)


#
# Terms
#


def op(name, *args):
    return Compound(name, args)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("1+2+3", op("+", op("+", Int(1), Int(2)), Int(3))),
        ("a - b - c", op("-", op("-", Const("a"), Const("b")), Const("c"))),
        ("a, b, c", op(",", Const("a"), op(",", Const("b"), Const("c")))),
        ("2*3+4", op("+", op("*", Int(2), Int(3)), Int(4))),
        ("2+3*4", op("+", Int(2), op("*", Int(3), Int(4)))),
        ("(2+3)*4", op("*", op("+", Int(2), Int(3)), Int(4))),
        ("- a", op("-", Const("a"))),
        ("-1", Int(-1)),
        ("- 2.5", Float(-2.5)),
        ("3 - -1", op("-", Int(3), Int(-1))),
        ("-(1)", op("-", Int(1))),
        ("not not a", op("not", op("not", Const("a")))),
        ("f((a, b))", op("f", op(",", Const("a"), Const("b")))),
        ("f(a, b)", op("f", Const("a"), Const("b"))),
        ("[]", NIL),
        ("[a|b]", make_list([Const("a")], Const("b"))),
        ("a :- b, c", op(":-", Const("a"), op(",", Const("b"), Const("c")))),
        ("f(-)", op("f", Const("-"))),
        ("- - a", op("-", op("-", Const("a")))),
        ("(a ; b -> c)", op(";", Const("a"), op("->", Const("b"), Const("c")))),
    ],
)
def test_parse_term(text, expected):
    assert parse_term(text) == expected


def test_parse_is():
    term = parse_term("X is 3+4")
    assert isinstance(term, Compound) and term.functor == "is"
    assert isinstance(term.args[0], Var) and term.args[0].name == "X"
    assert term.args[1] == op("+", Int(3), Int(4))


def test_named_variables_are_shared():
    term = parse_term("f(X, Y, X)")
    first, second, third = term.args
    assert first is third
    assert first != second


def test_anonymous_variables_are_distinct():
    term = parse_term("p(_, _)")
    first, second = term.args
    assert first != second


def test_list_sugar():
    term = parse_term("[a, b | T]")
    items, tail = list_items(term)
    assert items == [Const("a"), Const("b")]
    assert isinstance(tail, Var)


def test_user_operator():
    table = declare_op(OperatorTable.default(), 1100, "yfx", "arrow")
    term = parse_term("S arrow T arrow U", table)
    assert term.functor == "arrow"
    assert term.args[0].functor == "arrow"


def test_unbracketed_operator_argument():
    table = declare_op(OperatorTable.default(), 1100, "yfx", "arrow")
    term = parse_term("type(E, M, S arrow T)", table)
    assert term.arity == 3
    assert term.args[2].functor == "arrow"


@pytest.mark.parametrize(
    "text",
    ["a = b = c", "f(a", "foo bar", "[a, b", "(a :- b) :- c :- d", "X is", ")"],
)
def test_parse_errors(text):
    with pytest.raises(PrologSyntaxError):
        parse_term(text)


def test_priority_clash_position():
    with pytest.raises(PrologSyntaxError) as info:
        parse_term("a = b = c")
    assert info.value.column == 7


#
# Operator table
#


def test_declare_op_fixity_classes():
    table = OperatorTable.default()
    assert table.prefix("-").type is OpType.FY
    assert table.infix("-").type is OpType.YFX
    declare_op(table, 900, "fy", "not")
    assert table.prefix("not").priority == 900
    declare_op(table, 1100, "yfx", "arrow")
    assert table.entries("arrow") == {(1100, "yfx")}


@pytest.mark.parametrize(
    "priority, op_type", [(1300, "xfx"), (0, "xfx"), (700, "xxf"), (700, "fxy")]
)
def test_declare_op_errors(priority, op_type):
    with pytest.raises(DomainError):
        declare_op(OperatorTable.default(), priority, op_type, "bad")


def test_postfix_replaces_infix():
    table = OperatorTable.default()
    declare_op(table, 200, "xf", "!!")
    declare_op(table, 200, "xfx", "!!")
    assert table.postfix("!!") is None
    assert table.infix("!!") is not None


#
# Programs
#


def test_parse_fact():
    (clause,) = parse_program("append([], Ys, Ys).")
    assert isinstance(clause, Clause)
    assert clause.is_fact
    assert clause.head.args[0] == NIL
    assert clause.head.args[1] is clause.head.args[2]


def test_parse_rule_body():
    (clause,) = parse_program("p(X) :- q(X), r(X).")
    assert clause.key == ("p", 1)
    assert [goal.functor for goal in clause.body] == ["q", "r"]


def test_op_directive_applies_to_later_clauses():
    table = OperatorTable.default()
    items = parse_program(":- op(1100, yfx, arrow).\nt(S arrow T).", table)
    assert isinstance(items[0], Directive)
    assert items[1].head.args[0].functor == "arrow"
    assert table.infix("arrow").priority == 1100


@pytest.mark.parametrize("text", ["X :- a.", "7.", "3 :- true."])
def test_bad_heads(text):
    with pytest.raises(PrologSyntaxError):
        parse_program(text)


def test_read_program_recovers():
    items = list(read_program("a. b :- . c.\nd(."))
    assert isinstance(items[0], Clause)
    assert isinstance(items[1], PrologError)
    assert isinstance(items[2], Clause) and items[2].head == Const("c")
    assert isinstance(items[3], PrologError)


def test_read_program_tokenizer_error_keeps_earlier_clauses():
    items = list(read_program("a.\nb.\nc('oops"))
    assert [item.head for item in items[:2]] == [Const("a"), Const("b")]
    assert isinstance(items[2], PrologSyntaxError)
    assert items[2].line == 3
    assert len(items) == 3


def test_read_program_tokenizer_error_keeps_later_clauses():
    items = list(read_program('p(1).\nq("x").\nr(1).\ns(`y`).\nt(2).\n'))
    errors = [item for item in items if isinstance(item, PrologSyntaxError)]
    assert [(err.line, err.column) for err in errors] == [(2, 3), (4, 3)]
    heads = [item.head for item in items if isinstance(item, Clause)]
    assert heads == [
        Compound("p", (Int(1),)),
        Compound("r", (Int(1),)),
        Compound("t", (Int(2),)),
    ]
    # positions after a resumed scan still count from the start of the text
    assert [item.line for item in items if isinstance(item, Clause)] == [1, 3, 5]


def test_missing_final_dot():
    items = list(read_program("a.\nb"))
    assert isinstance(items[-1], PrologSyntaxError)


def test_parse_query():
    query = parse_query("append(X, _, [a]), member(Y, X)")
    assert len(query.goals) == 2
    assert list(query.variables) == ["X", "Y"]


def test_parse_query_with_prompt():
    query = parse_query("?- true.")
    assert query.goals == (Const("true"),)


#
# Writing
#


@pytest.mark.parametrize(
    "text, expected",
    [
        ("[a,b]", "[a,b]"),
        ("[a,b|f(c)]", "[a,b|f(c)]"),
        ("0+1+1", "0+1+1"),
        ("1+(2+3)", "1+(2+3)"),
        ("(1+2)*3", "(1+2)*3"),
        ("1-(-1)", "1- -1"),
        ("-(1)", "-(1)"),
        ("-(a)", "-a"),
        ("-(-(a))", "- -a"),
        ("not a", "not a"),
        ("f((a,b))", "f((a,b))"),
        ("f((a:-b))", "f((a:-b))"),
        ("X is 3*4", "X is 3*4"),
        ("'hello world'", "'hello world'"),
        ("[]", "[]"),
        ("f(-)", "f(-)"),
        ("-(=)", "-(=)"),
        ("f(-(=))", "f(-(=))"),
        ("not(not)", "not(not)"),
        ("- (is)", "-(is)"),
        ("2.0", "2.0"),
        ("'it''s'", "'it\\'s'"),
    ],
)
def test_write_term(text, expected):
    assert write_term(parse_term(text), quoted=True) == expected


def test_write_unquoted():
    assert write_term(Const("hello world")) == "hello world"


def test_write_with_namer():
    term = parse_term("f(X, Y, Z, Y)")
    x = term.args[0]
    namer = VariableNamer({x.ident: "X"})
    assert write_term(term, namer=namer) == "f(X,_A,_B,_A)"


def test_write_user_operator():
    table = declare_op(OperatorTable.default(), 1100, "yfx", "arrow")
    term = parse_term("(a arrow b) arrow c", table)
    assert write_term(term, table) == "a arrow b arrow c"
    term = parse_term("a arrow (b arrow c)", table)
    assert write_term(term, table) == "a arrow (b arrow c)"


@pytest.mark.parametrize(
    "name",
    [
        "append.pl",
        "member.pl",
        "sequence.pl",
        "types.pl",
        "quicksort.pl",
        "quicksort_dl.pl",
        "factorial.pl",
        "length_buggy.pl",
        "map.pl",
        "solve.pl",
        "win.pl",
        "part_ite.pl",
        "part_functional.pl",
        "control.pl",
    ],
)
def test_corpus_round_trip(name):
    table = OperatorTable.default()
    for item in parse_program(get_corpus(name).read_text(), table):
        terms = [item.goal] if isinstance(item, Directive) else [item.head, *item.body]
        for term in terms:
            text = write_term(term, table, quoted=True)
            assert is_variant(term, parse_term(text, table)), text
