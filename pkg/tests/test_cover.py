from gautomata.cover import cover_ball, locate_coset, neumann_select
from gautomata.fixtures import a1, a2, a3, infinite_dihedral, rho_dihedral, rho_integers, rho_trivial
from gautomata.groups import Subgroup

D = infinite_dihedral()


def test_locate_examples():
    loc = locate_coset(a2(), rho_dihedral(), "t")
    assert loc.ok and (loc.h1, loc.h2) == (D.identity(), D.identity()) and loc.p == "q0"
    loc = locate_coset(a2(), rho_dihedral(), "s")
    assert loc.ok and len(loc.omega1) < 2 and len(loc.omega2) < 2
    inner = D.mul(D.mul(loc.h1, loc.h), loc.h2)
    assert Subgroup(D, [((1,), 0)]).contains(inner)
    loc = locate_coset(a1(), rho_integers(), "a")
    assert loc.ok and (loc.h1, loc.h2) == ((0,), (0,))


def test_locator_invariants():
    cover = cover_ball(a2(), rho_dihedral(), 3)
    for loc in cover.locators:
        assert loc.ok, loc.checks
        assert loc.N > len(loc.mu)
        assert len(loc.omega1) < 2 and len(loc.omega2) < 2


def test_cover_examples():
    c2 = cover_ball(a2(), rho_dihedral(), 4)
    assert c2.covered and all(mu == () and p == "q0" for mu, p, _, _ in c2.cosets)
    c1 = cover_ball(a1(), rho_integers(), 5)
    assert c1.covered and len(c1.cosets) == 1 and len(c1.locators) == 11
    c3 = cover_ball(a3(), rho_trivial(), 0)
    assert c3.covered and len(c3.locators) == 1


def test_neumann_examples():
    s = neumann_select(cover_ball(a2(), rho_dihedral(), 4))
    assert (s.mu, s.p, s.index) == ((), "q0", 2)
    assert neumann_select(cover_ball(a1(), rho_integers(), 2)).index == 1
    assert neumann_select(cover_ball(a3(), rho_trivial(), 0)).index == 1


def test_cover_cosets_persist_with_radius():
    small = cover_ball(a2(), rho_dihedral(), 2)
    big = cover_ball(a2(), rho_dihedral(), 3)
    assert set(small.cosets) <= set(big.cosets)
