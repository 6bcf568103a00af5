"""Locating every target element in a coset of some H(mu, p).

For ``h = rho(v)`` the word ``(v v')^N`` with ``v' = v^-1`` is accepted, and
``N`` exceeds the length of every minimal accepting path.  An accepting path
``alpha`` for it dominates some minimal ``mu`` and splits as
``omega_1 omega'_1 ... omega_N omega'_N`` with each ``omega_i`` spelling ``v``.
Some ``omega_i`` avoids the edges of ``mu``, so it sits inside a block
``alpha_j``; shrinking the flanks around it gives ``h1 h h2`` in ``H(mu, p)``
with ``h1, h2`` images of words shorter than ``|V|``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .automaton import GAutomaton
from .errors import CertificationError, UsageError
from .groups import ChoiceOfGenerators, Subgroup, ball, evaluate_word, inverse_word
from .hom import extract, image_index, with_pair
from .lattice import INFINITE
from .paths import EXACT, accepts
from .pumpable import PumpWitness, downward_witness, shrink
from .wqo import MinimalPathSet, antichain_insert, dominates, embed, minimal_accepting_paths, pump_constant


@dataclass(frozen=True)
class CosetLocator:
    h: object
    v: str
    vbar: str
    N: int
    alpha: tuple
    mu: tuple
    p: str
    j: int
    i: int
    omega: tuple
    omega1: tuple
    omega2: tuple
    h1: object
    h2: object
    provisional: bool
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def _omega_spans(a, alpha, v, n):
    """``[start, end)`` of each ``omega_i`` inside ``alpha`` (ε-edges before a ``v`` copy go to it)."""
    letters = [k for k, e in enumerate(alpha) if a.edge(e).sigma]
    m = len(v)
    spans = []
    prev_end = 0
    for i in range(n):
        first = 2 * m * i
        if m == 0:
            spans.append((prev_end, prev_end))
            continue
        start = prev_end if i > 0 else 0
        end = letters[first + m - 1] + 1
        # omega'_i takes everything up to the last letter of its copy of v'
        prev_end = letters[first + 2 * m - 1] + 1
        spans.append((start, end))
    return spans


def _reduce_to_accepting(a, alpha):
    """Drop closed segments while the path stays accepting; ends at an accepting scattered subword."""
    path = tuple(alpha)
    changed = True
    while changed:
        changed = False
        for i in range(len(path)):
            for k in range(len(path), i, -1):
                cand = path[:i] + path[k:]
                if a.is_path(cand) or not cand:
                    if a.is_accepting(cand):
                        path = cand
                        changed = True
                        break
            if changed:
                break
    return path


def _tighten(a, p, omega, w1, w2, w):
    """Drop flanks when what remains is still a loop at ``p`` (certified by ``downward_witness``)."""
    for c1, c2 in (((), ()), ((), w2), (w1, ())):
        if (c1, c2) == (w1, w2):
            break
        loop = c1 + omega + c2
        if loop and a.is_path(loop) and a.source(loop) == p and a.is_closed(loop):
            return c1, c2, downward_witness(a, w, loop)
    return w1, w2, w


def locate_coset(
    a: GAutomaton,
    rho: ChoiceOfGenerators,
    word: str,
    mps: MinimalPathSet | None = None,
    mode=EXACT,
    subgroups=None,
) -> CosetLocator:
    """Build the coset locator for ``h = rho(word)``.

    ``subgroups`` maps ``(mu, p)`` to a callable ``(h) -> bool`` testing
    membership in the explored ``H(mu, p)``; without it that check is skipped.
    """
    if mps is None:
        mps = minimal_accepting_paths(a, mode)
    N, exact = pump_constant(mps)
    h = evaluate_word(rho, word)
    vbar = inverse_word(rho, word)
    big = (word + vbar) * N
    r = accepts(a, big, mode)
    if not r.is_yes:
        raise CertificationError(f"(v v')^N = {big!r} is not accepted", [word, r.reason])
    alpha = r.witness
    provisional = not exact
    mu, blocks = None, None
    for m in mps.paths:
        blocks = dominates(alpha, m)
        if blocks is not None:
            mu = m
            break
    if mu is None:
        mu = _reduce_to_accepting(a, alpha)
        blocks = dominates(alpha, mu)
        provisional = True
    emb = embed(mu, alpha)
    mu_pos = {q - 1 for q in emb.positions}
    # block j covers positions [bounds[j], bounds[j] + len(blocks[j]))
    bounds, pos = [], 0
    for k, b in enumerate(blocks):
        bounds.append(pos)
        pos += len(b) + 1
    spans = _omega_spans(a, alpha, word, N)
    choice = None
    for i, (s, t) in enumerate(spans):
        if any(s <= q < t for q in mu_pos):
            continue
        for j, b in enumerate(blocks):
            if bounds[j] <= s and t <= bounds[j] + len(b):
                choice = (i, j, s, t)
                break
        if choice:
            break
    if choice is None:
        raise CertificationError("no omega_i avoids the edges of mu", [alpha, mu])
    i, j, s, t = choice
    anchors = [a.init] + [a.edge(e).dst for e in mu]
    p = anchors[j]
    sigma = blocks[j]
    omega = alpha[s:t]
    witness = PumpWitness(mu, p, sigma, blocks, j, 0).validate(a)
    w1, w2, loop_w, _ = shrink(a, mu, p, sigma, omega, witness, mode, offset=s - bounds[j])
    w1, w2, loop_w = _tighten(a, p, omega, w1, w2, loop_w)
    h1 = evaluate_word(rho, a.label(w1))
    h2 = evaluate_word(rho, a.label(w2))
    group = rho.group
    inner = group.mul(group.mul(h1, h), h2)
    loop = w1 + omega + w2
    checks = {
        "alpha_accepting": a.is_accepting(alpha) and a.label(alpha) == big,
        "dominates_mu": dominates(alpha, mu) == blocks,
        "counting": N > len(mu),
        "omega_avoids_mu": not any(s <= q < t for q in mu_pos),
        "omega_spells_v": a.label(omega) == word,
        "flanks_short": len(a.label(w1)) < len(a.vertices) and len(a.label(w2)) < len(a.vertices),
        "loop_in_M": not loop_w.problems(a) and loop_w.sigma == loop,
        "image_matches": evaluate_word(rho, a.label(loop)) == inner,
    }
    if subgroups is not None:
        checks["h_in_coset"] = subgroups(mu, p, inner, loop)
    return CosetLocator(h, word, vbar, N, alpha, mu, p, j, i, omega, w1, w2, h1, h2, provisional, checks)


@dataclass
class CoverReport:
    radius: int
    locators: list
    cosets: list  # distinct (mu, p, h1, h2)
    homs: dict  # (mu, p) -> ExtractedHom
    N: int
    certified: bool
    augmented: list = field(default_factory=list)  # (mu, p, loop) added after extraction

    @property
    def covered(self) -> bool:
        return all(loc.ok for loc in self.locators)


def cover_ball(
    a: GAutomaton,
    rho: ChoiceOfGenerators,
    radius: int,
    mps: MinimalPathSet | None = None,
    mode=EXACT,
    explore_len: int = 8,
    stall: int = 2,
) -> CoverReport:
    """Locate every element of the radius-``radius`` ball and check each coset."""
    if mps is None:
        mps = minimal_accepting_paths(a, mode)
    N, exact = pump_constant(mps)
    homs = {}
    augmented = []

    def member(mu, p, inner, loop):
        key = (mu, p)
        if key not in homs:
            homs[key] = extract(a, rho, mu, p, max_len=explore_len, stall=stall, mode=mode)
        if Subgroup(rho.group, homs[key].h_gens).contains(inner):
            return True
        # the loop is a certified member of M(mu, p): its image belongs to H(mu, p)
        homs[key] = with_pair(homs[key], a, loop)
        augmented.append((mu, p, loop))
        return Subgroup(rho.group, homs[key].h_gens).contains(inner)

    locators, cosets = [], []
    for h, word in ball(rho, radius).items():
        loc = locate_coset(a, rho, word, mps, mode, subgroups=member)
        locators.append(loc)
        key = (loc.mu, loc.p, loc.h1, loc.h2)
        if key not in cosets:
            cosets.append(key)
    return CoverReport(radius, locators, cosets, homs, N, exact, augmented)


@dataclass(frozen=True)
class Selection:
    mu: tuple | None
    p: str | None
    index: object
    conclusive: bool
    note: str = ""


def neumann_select(report: CoverReport) -> Selection:
    """Finite-index ``H(mu, p)`` among those used by the cover (smallest index first)."""
    best = None
    for (mu, p), hom in sorted(report.homs.items(), key=lambda kv: (len(kv[0][0]), kv[0])):
        idx = image_index(hom)
        if idx is INFINITE:
            continue
        if best is None or idx < best[2]:
            best = (mu, p, idx)
    if best is None:
        return Selection(None, None, INFINITE, False, "no explored H(mu, p) has finite index; raise --explore-len or --radius")
    return Selection(best[0], best[1], best[2], True)
