import random
from collections import Counter

import pytest

from purelog.terms import Int, list_items

from .testsuite.helpers import answers, get_data, load_corpus
from .testsuite.transcripts import Transcript, TranscriptOutcome, replay

TRANSCRIPTS = sorted(path.name for path in get_data("").glob("*.txt"))


@pytest.mark.parametrize("name", TRANSCRIPTS)
def test_transcript(name):
    result = replay(Transcript.read(name))
    assert result.outcome is TranscriptOutcome.MATCH, (
        f"expected {result.expected}, got {result.actual}"
    )


def test_transcript_input():
    transcript = Transcript.read("member.txt")
    assert transcript.consult == ["member.pl"]
    assert transcript.user_input() == (
        "member(wed, [mon, wed, fri]).\nmember(X, [mon, wed, fri]).\n;\n;\n;\n"
    )


def test_transcript_flags():
    assert Transcript.read("types.txt").occur_check
    assert Transcript.read("loop.txt").steps == 10000


#
# Sequence puzzle
#


def reference_sequence_solution(ss: list[int]) -> bool:
    """Three of each digit 1-9; successive occurrences of i have i numbers between them"""
    if len(ss) != 27 or Counter(ss) != {i: 3 for i in range(1, 10)}:
        return False
    for i in range(1, 10):
        first, second, third = (k for k, s in enumerate(ss) if s == i)
        if second - first != i + 1 or third - second != i + 1:
            return False
    return True


@pytest.mark.timeout(120)
def test_sequence_puzzle():
    machine = load_corpus("sequence.pl")
    query = machine.read_query("question(Ss)")
    solutions = []
    for solution in machine.solve(query.goals, query.variables):
        items, _ = list_items(solution["Ss"])
        assert all(isinstance(item, Int) for item in items)
        solutions.append([item.value for item in items])

    assert len(solutions) == 6
    assert len({tuple(ss) for ss in solutions}) == 6
    for ss in solutions:
        assert reference_sequence_solution(ss), ss


def test_sublist():
    machine = load_corpus("sublist.pl")
    assert answers(machine, "sublist([b, c], [a, b, c, d])", limit=1) == [{}]
    assert answers(machine, "sublist([b, d], [a, b, c, d])", limit=1) == []


#
# Sorting
#


def reference_qs(xs: list[int]) -> str:
    return "[" + ",".join(str(x) for x in sorted(xs)) + "]"


def test_quicksort():
    machine = load_corpus("quicksort.pl")
    assert answers(machine, "qs([7,9,8,1,5], Ys)") == [{"Ys": "[1,5,7,8,9]"}]
    assert answers(machine, "qs([7,9,8,1,5], [1,5,7,9,8])") == []


@pytest.mark.parametrize("name", ["quicksort.pl", "quicksort_dl.pl"])
def test_quicksort_random_lists(name):
    machine = load_corpus(name)
    rng = random.Random(20)
    for _ in range(100):
        xs = [rng.randint(0, 100) for _ in range(rng.randint(0, 20))]
        text = "[" + ",".join(map(str, xs)) + "]"
        assert answers(machine, f"qs({text}, Ys)", limit=1) == [{"Ys": reference_qs(xs)}]


#
# Games
#


@pytest.mark.parametrize(
    "position, winning",
    [("a", True), ("b", False), ("c", True), ("d", False), ("e", False)],
)
def test_win(position, winning):
    machine = load_corpus("win.pl")
    assert bool(answers(machine, f"win({position})", limit=1)) is winning
