"""Randomized agreement checks, each over a pinned seed"""

import random

import pytest

from purelog.syntax import parse_term, write_term
from purelog.terms import Bindings, Compound, Var, apply_substitution, compose, resolve
from purelog.unify import Selection, mm_solve, unify

from .testsuite.generators import (
    random_list,
    random_operator_term,
    random_substitution,
    random_term,
)
from .testsuite.helpers import answers, is_variant, load_corpus

CASES = 1000


def make_variables(count: int = 4) -> list[Var]:
    return [Var(i, f"X{i}") for i in range(count)]


def test_composition_law():
    rng = random.Random(1)
    variables = make_variables()
    for _ in range(CASES):
        term = random_term(rng, variables)
        gamma = random_substitution(rng, variables)
        delta = random_substitution(rng, variables)
        stepwise = apply_substitution(apply_substitution(term, gamma), delta)
        assert stepwise == apply_substitution(term, compose(gamma, delta))


def test_unifiers_agree():
    rng = random.Random(2)
    variables = make_variables()
    successes = 0
    for _ in range(CASES):
        left, right = random_term(rng, variables), random_term(rng, variables)
        outcome = mm_solve([(left, right)], occur_check=True)
        bindings = Bindings()
        assert unify(left, right, bindings, occur_check=True) is outcome.succeeded
        if outcome.succeeded:
            successes += 1
            unified = resolve(left, bindings)
            assert unified == resolve(right, bindings)
            expected = apply_substitution(left, outcome.mgu)
            assert expected == apply_substitution(right, outcome.mgu)
            assert is_variant(unified, expected)
    # both outcomes are exercised
    assert 0 < successes < CASES


def test_selection_order_does_not_matter():
    rng = random.Random(8)
    variables = make_variables(3)
    successes = 0
    for _ in range(CASES):
        left = [random_term(rng, variables) for _ in range(2)]
        right = [random_term(rng, variables) for _ in range(2)]
        equations = list(zip(left, right, strict=True))
        first = mm_solve(equations, occur_check=True, selection=Selection.FIRST)
        last = mm_solve(equations, occur_check=True, selection=Selection.LAST)
        assert first.succeeded is last.succeeded
        if first.succeeded:
            successes += 1
            both = Compound("t", tuple(left))
            assert is_variant(
                apply_substitution(both, first.mgu), apply_substitution(both, last.mgu)
            )
    assert 0 < successes < CASES


def test_failed_unify_leaves_no_trace():
    rng = random.Random(3)
    variables = make_variables(6)
    failures = 0
    for _ in range(CASES):
        bindings = Bindings()
        # some state to start from
        unify(random_term(rng, variables, 2), random_term(rng, variables, 2), bindings, True)
        mark, bound = bindings.mark(), bindings.bound_ids()
        left, right = random_term(rng, variables), random_term(rng, variables)
        if not unify(left, right, bindings, occur_check=rng.random() < 0.5):
            failures += 1
            assert bindings.mark() == mark
            assert bindings.bound_ids() == bound
    assert failures > 0


def test_head_unification_agrees_with_equations():
    calls = []

    def record(goal, head, succeeded):
        calls.append((goal, head, succeeded))

    machine = load_corpus(
        "quicksort.pl", "member.pl", occur_check=True, on_head_unify=record
    )
    rng = random.Random(4)
    while len(calls) < CASES:
        items = ",".join(map(str, random_list(rng, max_length=8)))
        answers(machine, f"qs([{items}], Ys)")
        answers(machine, f"append(Xs, Ys, [{items}])")
        answers(machine, f"member(X, [{items}])")
    for goal, head, succeeded in calls:
        assert mm_solve([(goal, head)], occur_check=True).succeeded is succeeded


def test_write_then_read():
    rng = random.Random(5)
    variables = make_variables()
    for _ in range(CASES):
        term = random_operator_term(rng, variables)
        text = write_term(term, quoted=True)
        assert is_variant(term, parse_term(text)), text


@pytest.mark.parametrize(
    "relation",
    ["append(Xs, Ys, {items})", "member(X, {items})", "append({items}, Ys, Zs)"],
)
def test_meta_interpreter_agrees(relation):
    machine = load_corpus("append.pl", "member.pl", "solve.pl")
    rng = random.Random(6)
    for _ in range(CASES // 3 + 1):
        items = "[" + ",".join(rng.choice("abc") for _ in range(rng.randint(0, 5))) + "]"
        goal = relation.format(items=items)
        assert answers(machine, f"solve({goal})") == answers(machine, goal)


@pytest.mark.parametrize("name", ["part_cut.pl", "part_ite.pl", "part_functional.pl"])
def test_partition_variants_agree(name):
    reference = load_corpus("quicksort.pl")
    machine = load_corpus(name)
    rng = random.Random(7)
    for _ in range(100):
        pivot = rng.randint(0, 100)
        items = ",".join(map(str, random_list(rng)))
        goal = f"part({pivot}, [{items}], Ls, Bs)"
        rows = answers(machine, goal)
        assert len(rows) == 1
        assert rows == answers(reference, goal, limit=1)
