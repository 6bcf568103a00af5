import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gautomata.automaton import (
    build_wp_abelian,
    build_wp_virtually_abelian,
    concat,
    export_dot,
    inverse_hom_pullback,
    make_automaton,
    register_extend,
    register_restrict,
    subdivide_normalize,
    validate,
)
from gautomata.errors import UsageError
from gautomata.fixtures import a1, a2, a3, rho_dihedral, rho_integers, rho_trivial
from gautomata.generators import all_words, random_automaton
from gautomata.groups import in_word_problem
from gautomata.lattice import AbelianSpec
from gautomata.paths import accepts


def _same_language(x, y, max_len, alphabet=None):
    for w in all_words(alphabet or x.alphabet, max_len):
        assert accepts(x, w, canonical=False).status == accepts(y, w, canonical=False).status, w


def test_validate():
    assert validate(a1()) == []
    assert validate(a2()) == []
    bad = make_automaton(1, "a", ["q"], [("e", "q", "r", 1, "a")], "q", "q", check=False)
    assert any("unknown vertex" in p for p in validate(bad))
    with pytest.raises(UsageError):
        make_automaton(1, "a", ["q"], [("e", "q", "r", 1, "a")], "q", "q")


def test_subdivide():
    a = make_automaton(1, "uv", ["p", "q"], [("e", "p", "q", 3, "uv")], "p", "q", check=False)
    b = subdivide_normalize(a)
    assert [(e.src, e.dst, e.g, e.sigma) for e in b.edges] == [("p", "e~1", (3,), "u"), ("e~1", "q", (0,), "v")]
    assert subdivide_normalize(a1()) == a1()
    c = subdivide_normalize(make_automaton(1, "xyz", ["p"], [("e", "p", "p", 0, "xyz")], "p", "p", check=False))
    assert len(c.edges) == 3
    assert accepts(c, "xyz").is_yes and accepts(c, "xy").is_no


def test_build_wp():
    a, rho = build_wp_abelian(1)
    assert a == a1()
    b, _ = build_wp_abelian(2)
    assert len(b.edges) == 4 and accepts(b, "").is_yes
    d = build_wp_virtually_abelian(rho_dihedral())
    for w in all_words("sTt", 6):
        assert accepts(d, w, canonical=False).is_yes == in_word_problem(rho_dihedral(), w)
    assert len(build_wp_virtually_abelian(rho_trivial()).edges) == 0
    z = build_wp_virtually_abelian(rho_integers())
    assert z.vertices == ("q",) and len(z.edges) == 2


def test_pullback_examples():
    a = a1()
    pb = inverse_hom_pullback(a, {"b": "aA"})
    assert accepts(pb, "b").is_yes and accepts(pb, "bb").is_yes
    eps = inverse_hom_pullback(a, {"b": ""})
    assert accepts(eps, "bbb").is_yes
    ident = inverse_hom_pullback(a, {"a": "a", "A": "A"})
    _same_language(a, ident, 5)


def test_extend_restrict_examples():
    a = a1()
    _same_language(a, register_extend(a, [[1], [0]], AbelianSpec(2)), 6)
    assert register_extend(a, [[1]], AbelianSpec(1)).edges == a.edges
    _same_language(a, register_extend(a, [[2]], AbelianSpec(1)), 6)
    r2 = register_restrict(a, [(2,)])
    assert len(r2.vertices) == 2
    _same_language(a, r2, 6)
    r3 = register_restrict(a, [(3,)])
    assert len(r3.vertices) == 3
    _same_language(a, r3, 6)
    assert len(register_restrict(a, [(1,)]).vertices) == 1
    with pytest.raises(UsageError):
        register_extend(a, [[0], [0]], AbelianSpec(2))


def test_export_dot():
    assert export_dot(a3()).count("->") == 0
    text = export_dot(a1())
    assert text.count("->") == 2 and "doublecircle" in text and 'xlabel="init"' in text
    assert export_dot(a2()) == export_dot(a2())


@given(st.lists(st.sampled_from(["e_a", "e_A"]), max_size=4), st.lists(st.sampled_from(["e_a", "e_A"]), max_size=4))
def test_concat_laws(p, q):
    a = a1()
    p, q = tuple(p), tuple(q)
    assert concat(p, ()) == p and concat((), p) == p
    assert a.value(concat(p, q)) == a.spec.add(a.value(p), a.value(q))
    assert a.label(concat(p, q)) == a.label(p) + a.label(q)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10_000))
def test_constructions_preserve_language(seed):
    import random

    rng = random.Random(seed)
    a = random_automaton(rng, max_vertices=3, max_edges=5, max_rank=1)
    _same_language(a, subdivide_normalize(a), 4)
    _same_language(a, register_restrict(a, [(2,)]), 4)
    _same_language(a, register_extend(a, [[1], [1]], AbelianSpec(2)), 4)
    phi = {"x": "ab", "y": ""}
    pb = inverse_hom_pullback(a, phi)
    for u in all_words("xy", 3):
        image = "".join(phi[c] for c in u)
        assert accepts(pb, u, canonical=False).status == accepts(a, image, canonical=False).status
