import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gautomata.errors import UsageError
from gautomata.fixtures import a1, a2, a3, a4, a5
from gautomata.generators import all_words, random_automaton
from gautomata.paths import (
    Bounded,
    accepts,
    closed_value_sets,
    find_accepting_path,
    is_empty,
    is_promising,
)


def test_accepts_examples():
    v = accepts(a1(), "aA")
    assert v.is_yes and v.witness == ("e_a", "e_A")
    assert accepts(a1(), "aaA").is_no
    assert accepts(a2(), "stst").is_yes
    assert accepts(a2(), "stst", Bounded(6, 6)).is_yes


def test_canonical_witness_is_least_shortest():
    v = accepts(a2(), "stst")
    assert v.witness == ("e_s01", "e_t1", "e_s10", "e_t0")
    assert accepts(a2(), "stst", Bounded(12, 24)).witness == v.witness


def test_unknown_letter():
    with pytest.raises(UsageError):
        accepts(a1(), "z")


def test_bounded_unknown():
    assert accepts(a1(), "a" * 10 + "A" * 10, Bounded(4, 24)).is_unknown


def test_is_empty_examples():
    assert is_empty(a3()).witness == ()
    assert is_empty(a5()).witness == ()
    assert is_empty(a4()).witness == ("f1",)


def test_is_promising_examples():
    v = is_promising(a1(), ("e_a",))
    assert v.is_yes and v.segments == ((), ("e_a",), ("e_A",))
    assert is_promising(a5(), ("e_a",)).is_no
    v = is_promising(a2(), ("e_s01",))
    assert v.is_yes and a2().is_accepting(v.witness)


def test_closed_value_sets_examples():
    assert list(closed_value_sets(a1(), "q")) == [((0,), ((-1,), (1,)))]
    fam = closed_value_sets(a5(), "q")
    assert fam.contains(a5().spec, (3,)) and not fam.contains(a5().spec, (-1,))
    assert list(closed_value_sets(a3(), "q")) == [((0,), ())]


def test_find_accepting_path_examples():
    assert find_accepting_path(a1(), word="aA").witness == ("e_a", "e_A")
    v = find_accepting_path(a2(), dominate=((), ("e_s01", "e_t1", "e_s10"), 0))
    assert v.is_yes and v.witness[:3] == ("e_s01", "e_t1", "e_s10")
    assert a2().is_accepting(v.witness)
    assert find_accepting_path(a5(), word="a").is_no


def test_empty_word_needs_zero_epsilon_path():
    a = a4()
    assert accepts(a, "").is_yes
    from gautomata.automaton import make_automaton

    b = make_automaton(1, "a", ["p", "r"], [("f", "p", "r", 1, "")], "p", "r")
    assert accepts(b, "").is_no


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 100_000))
def test_exact_matches_bounded_and_revalidates(seed):
    rng = random.Random(seed)
    a = random_automaton(rng)
    for w in all_words("ab", 4):
        e = accepts(a, w)
        b = accepts(a, w, Bounded(12, 24))
        if e.is_yes:
            assert a.is_accepting(e.witness) and a.label(e.witness) == w
        if not b.is_unknown:
            assert e.status == b.status
