import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import is_pumpable_brute, loops_at

from gautomata.automaton import make_automaton
from gautomata.errors import UsageError
from gautomata.fixtures import a1, a2, a4, a5
from gautomata.paths import EXACT, is_promising
from gautomata.pumpable import (
    PumpWitness,
    _search,
    concat_witness,
    downward_witness,
    enumerate_M,
    in_M,
    is_pumpable,
    shrink,
)


def test_is_pumpable_examples():
    w = is_pumpable(a1(), ("e_a", "e_A"), ()).info["pump"]
    assert w.alpha == ("e_a", "e_A")
    assert is_pumpable(a1(), ("e_a",), ()).info["pump"].alpha == ("e_a", "e_A")
    assert is_pumpable(a5(), ("e_a",), ()).is_no


def test_in_M_examples():
    assert in_M(a1(), (), (), "q").is_yes
    v = in_M(a2(), ("e_s01", "e_t1", "e_s10"), (), "q0")
    assert v.is_yes and v.witness == ("e_s01", "e_t1", "e_s10", "e_t0")
    assert in_M(a5(), ("e_a",), (), "q").is_no
    assert in_M(a2(), ("e_t1",), (), "q0").is_no  # based at q1


def test_enumerate_M_examples():
    assert enumerate_M(a5(), (), "q", 4).loops == ((),)
    assert set(enumerate_M(a1(), (), "q", 2).loops) == {
        (), ("e_a",), ("e_A",), ("e_a", "e_A"), ("e_A", "e_a"), ("e_a", "e_a"), ("e_A", "e_A")
    }
    loops = enumerate_M(a2(), (), "q0", 2).loops
    assert {("e_t0",), ("e_T0",), ("e_s01", "e_s10")} <= set(loops)


def test_enumerate_M_matches_brute_force():
    for a, mu, p in [(a2(), (), "q0"), (a2(), (), "q1"), (a4(), ("f1",), "r")]:
        got = set(enumerate_M(a, mu, p, 3).loops) - {()}
        want = {s for s in loops_at(a, p, 3) if is_pumpable_brute(a, s, mu, 9)}
        assert got == want


def test_members_are_promising_and_blocks_sum_to_zero():
    a = a2()
    for s, w in enumerate_M(a, (), "q0", 3).members:
        assert is_promising(a, s).is_yes or not s
        assert a.spec.total(a.value(b) for b in w.blocks) == a.spec.zero()


def test_concat_examples():
    a = a1()
    w1 = is_pumpable(a, ("e_a",), ()).info["pump"]
    w2 = is_pumpable(a, ("e_A",), ()).info["pump"]
    w = concat_witness(a, w1, w2)
    assert w.sigma == ("e_a", "e_A") and not w.problems(a)
    eps = in_M(a, (), (), "q").info["pump"]
    assert concat_witness(a, w1, eps).sigma == ("e_a",)
    assert concat_witness(a, eps, eps).sigma == ()


def _two_block_automaton():
    # mu = f1 f2; loops at c fit into block 1 (at p1) and block 2 (at p2)
    edges = [
        ("f1", "p0", "p1", 0, ""),
        ("f2", "p1", "p2", 0, ""),
        ("x1", "p1", "c", 1, "a"),
        ("y1", "c", "p1", 0, "b"),
        ("x2", "p2", "c", -1, "A"),
        ("y2", "c", "p2", 0, "b"),
    ]
    return make_automaton(1, "aAb", ["p0", "p1", "p2", "c"], edges, "p0", "p2")


@pytest.mark.parametrize("j1,j2", [(1, 2), (2, 1), (1, 1), (2, 2)])
def test_concat_across_blocks(j1, j2):
    a = _two_block_automaton()
    mu = ("f1", "f2")

    def witness(sigma, j):
        v = _search(a, mu, sigma, EXACT, j)
        return PumpWitness(mu, "c", sigma, v.info["info_blocks"], j, v.info["offset"]).validate(a)

    w1 = witness(("y1", "x1"), j1)
    w2 = witness(("y2", "x2"), j2)
    w = concat_witness(a, w1, w2)
    assert w.sigma == ("y1", "x1", "y2", "x2") and w.j == min(j1, j2)
    assert in_M(a, w.sigma, mu, "c").is_yes


def test_concat_mismatch():
    a = a4()
    w = in_M(a, ("e_a", "e_A"), ("f1",), "r").info["pump"]
    other = in_M(a1(), ("e_a", "e_A"), (), "q").info["pump"]
    with pytest.raises(UsageError):
        concat_witness(a, w, other)


def test_downward_examples():
    a = a1()
    w = in_M(a, ("e_a", "e_A"), (), "q").info["pump"]
    assert downward_witness(a, w, ("e_a", "e_A")).sigma == ("e_a", "e_A")
    assert downward_witness(a, w, ()).sigma == ()
    w = in_M(a, ("e_a", "e_A", "e_A", "e_a"), (), "q").info["pump"]
    d = downward_witness(a, w, ("e_a", "e_a"))
    assert a.value(d.alpha) == (0,) and not d.problems(a)


def test_downward_rejects_non_loop():
    a = a2()
    w = in_M(a, ("e_s01", "e_s10"), (), "q0").info["pump"]
    with pytest.raises(UsageError):
        downward_witness(a, w, ("e_s01",))


def test_shrink_examples():
    a = a2()
    left, right, w, _ = shrink(a, (), "q0", ("e_s01", "e_t1", "e_s10", "e_t0"), ("e_t1", "e_s10"))
    assert len(left) < 2 and len(right) < 2 and in_M(a, left + ("e_t1", "e_s10") + right, (), "q0").is_yes
    left, right, _, _ = shrink(a1(), (), "q", ("e_a", "e_A", "e_a", "e_A"), ("e_A", "e_a"), offset=1)
    assert (left, right) == ((), ())
    s = ("e_a", "e_A")
    assert shrink(a1(), (), "q", s, s)[:2] == ((), ())


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_shrink_property(seed):
    rng = random.Random(seed)
    a = a2()
    view = enumerate_M(a, (), "q0", 4)
    (s1, w1), (s2, w2) = rng.choice(view.members), rng.choice(view.members)
    w = concat_witness(a, w1, w2)
    if not w.sigma:
        return
    i = rng.randrange(len(w.sigma))
    j = rng.randrange(i, len(w.sigma) + 1)
    left, right, lw, _ = shrink(a, (), "q0", w.sigma, w.sigma[i:j], w, offset=i)
    assert len(left) < 2 and len(right) < 2
    assert not lw.problems(a)
