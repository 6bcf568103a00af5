"""Small named automata used by the tests, the CLI examples and the README."""
from __future__ import annotations

from .automaton import make_automaton
from .groups import AbelianGroup, ChoiceOfGenerators, FiniteGroup, VirtuallyAbelianGroup
from .lattice import AbelianSpec

Z1 = AbelianSpec(1)


def infinite_dihedral() -> VirtuallyAbelianGroup:
    """``Z x| Z/2`` with the nontrivial point acting by ``-1``."""
    return VirtuallyAbelianGroup(1, [[0, 1], [1, 0]], 0, [[[1]], [[-1]]])


def rho_dihedral() -> ChoiceOfGenerators:
    d = infinite_dihedral()
    return ChoiceOfGenerators.from_mapping(d, {"t": ((1,), 0), "T": ((-1,), 0), "s": ((0,), 1)})


def rho_integers() -> ChoiceOfGenerators:
    return ChoiceOfGenerators.from_mapping(AbelianGroup(Z1), {"a": (1,), "A": (-1,)})


def rho_trivial() -> ChoiceOfGenerators:
    return ChoiceOfGenerators(FiniteGroup([[0]], 0), ())


def a1():
    """WP(Z) on one vertex."""
    return make_automaton(Z1, "aA", ["q"], [("e_a", "q", "q", 1, "a"), ("e_A", "q", "q", -1, "A")], "q", "q")


def a2():
    """WP of the infinite dihedral group."""
    edges = [
        ("e_t0", "q0", "q0", 1, "t"),
        ("e_T0", "q0", "q0", -1, "T"),
        ("e_t1", "q1", "q1", -1, "t"),
        ("e_T1", "q1", "q1", 1, "T"),
        ("e_s01", "q0", "q1", 0, "s"),
        ("e_s10", "q1", "q0", 0, "s"),
    ]
    return make_automaton(Z1, "tTs", ["q0", "q1"], edges, "q0", "q0")


def a3():
    """No edges: accepts only the empty word."""
    return make_automaton(Z1, "", ["q"], [], "q", "q")


def a4():
    """WP(Z) behind an ε-edge from a separate initial vertex."""
    edges = [("f1", "p", "r", 0, ""), ("e_a", "r", "r", 1, "a"), ("e_A", "r", "r", -1, "A")]
    return make_automaton(Z1, "aA", ["p", "r"], edges, "p", "r")


def a5():
    """Only increments: accepts only the empty word."""
    return make_automaton(Z1, "a", ["q"], [("e_a", "q", "q", 1, "a")], "q", "q")


def planted_non_wp():
    """A1 plus letters ``b``/``B`` read at no register cost although ``rho(b)`` is nontrivial.

    Its language is not the word problem, so well-definedness must fail.
    """
    a = make_automaton(
        Z1,
        "aAbB",
        ["q"],
        [("e_a", "q", "q", 1, "a"), ("e_A", "q", "q", -1, "A"), ("e_b", "q", "q", 0, "b"), ("e_B", "q", "q", 0, "B")],
        "q",
        "q",
    )
    rho = ChoiceOfGenerators.from_mapping(AbelianGroup(AbelianSpec(2)), {"a": (1, 0), "A": (-1, 0), "b": (0, 1), "B": (0, -1)})
    return a, rho


FIXTURES = {
    "A1": (a1, rho_integers),
    "A2": (a2, rho_dihedral),
    "A3": (a3, rho_trivial),
    "A4": (a4, rho_integers),
    "A5": (a5, None),
}
