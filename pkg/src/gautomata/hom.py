"""The homomorphism from G(mu, p) onto H(mu, p) read off pumpable loops.

Every loop ``sigma`` of ``M(mu, p)`` gives a pair ``(l_G(sigma), rho(l_Sigma(sigma)))``.
``G(mu, p)`` is the lattice spanned by the first coordinates and ``H(mu, p)``
the subgroup of the target generated by the second ones.  When the automaton
recognizes the word problem, equal register values force equal images, so
the pairs define a surjective homomorphism.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .automaton import GAutomaton
from .errors import UsageError, WellDefinednessViolation
from .groups import ChoiceOfGenerators, Subgroup, evaluate_word, power
from .lattice import LatticeSubgroup, canonical_basis, integer_combination
from .paths import EXACT
from .pumpable import MonoidView, iter_M


@dataclass(frozen=True)
class Round:
    length: int
    members: int
    g_basis: tuple
    h_signature: tuple


@dataclass(frozen=True)
class ExtractedHom:
    mu: tuple
    p: str
    rho: ChoiceOfGenerators
    gen_pairs: tuple  # (g, h, sigma)
    g_sub: LatticeSubgroup
    bound: int
    history: tuple
    stabilized_at: int | None
    exhausted: bool
    view: MonoidView = field(repr=False)

    @property
    def h_gens(self) -> tuple:
        return tuple(h for _, h, _ in self.gen_pairs)

    @property
    def h_sub(self) -> Subgroup:
        return Subgroup(self.rho.group, self.h_gens)

    @property
    def stabilized(self) -> bool:
        return self.stabilized_at is not None


def _pair(a, rho, sigma):
    return a.value(sigma), evaluate_word(rho, a.label(sigma)), sigma


def extract(
    a: GAutomaton,
    rho: ChoiceOfGenerators,
    mu=(),
    p: str | None = None,
    max_len: int = 8,
    stall: int = 2,
    mode=EXACT,
) -> ExtractedHom:
    """Explore ``M(mu, p)`` by length until the generated subgroups stop changing.

    Extraction stops once the lattice basis and the target subgroup have been
    unchanged for ``stall`` further lengths, or at ``max_len``.  This is a
    heuristic: ``stabilized_at`` records the last length that changed them.
    """
    mu = tuple(mu)
    p = a.init if p is None else p
    group = rho.group
    pairs, members, history = [], [], []
    g_basis = canonical_basis([], a.spec).basis
    h_sig = Subgroup(group, []).signature()
    changed_at, quiet, last = 0, 0, 0
    stabilized_at = None
    exhausted = False
    for length, found in iter_M(a, mu, p, max_len, mode):
        last = length
        members.extend(found)
        for sigma, _ in found:
            g, h, _ = _pair(a, rho, sigma)
            nb = canonical_basis([x for x, _, _ in pairs] + [g], a.spec).basis
            ns = Subgroup(group, [y for _, y, _ in pairs] + [h]).signature()
            if nb != g_basis or ns != h_sig:
                pairs.append((g, h, sigma))
                g_basis, h_sig = nb, ns
                changed_at, quiet = length, -1
        quiet += 1
        history.append(Round(length, len(members), g_basis, h_sig))
        if length > changed_at and quiet >= stall:
            stabilized_at = changed_at
            break
    else:
        # the search ran dry before max_len: every member has been seen
        exhausted = last < max_len
        if exhausted:
            stabilized_at = changed_at
    view = MonoidView(mu, p, last, tuple(members))
    return ExtractedHom(mu, p, rho, tuple(pairs), canonical_basis([g for g, _, _ in pairs], a.spec), last, tuple(history), stabilized_at, exhausted, view)


def with_pair(hom: ExtractedHom, a: GAutomaton, sigma) -> ExtractedHom:
    """Add the pair of a certified member ``sigma`` of ``M(mu, p)`` to the generators."""
    pairs = hom.gen_pairs + (_pair(a, hom.rho, tuple(sigma)),)
    g_sub = canonical_basis([g for g, _, _ in pairs], a.spec)
    return ExtractedHom(hom.mu, hom.p, hom.rho, pairs, g_sub, hom.bound, hom.history, hom.stabilized_at, hom.exhausted, hom.view)


def hom_apply(hom: ExtractedHom, g):
    """Image of ``g`` in ``H(mu, p)``; ``g`` must lie in ``G(mu, p)``."""
    group = hom.rho.group
    spec = hom.g_sub.spec
    coeffs = integer_combination([x for x, _, _ in hom.gen_pairs], tuple(g), spec)
    if coeffs is None:
        raise UsageError(f"{tuple(g)} is not in G(mu, p)")
    out = group.identity()
    for c, (_, h, _) in zip(coeffs, hom.gen_pairs):
        out = group.mul(out, power(group, h, c))
    return out


def image_index(hom: ExtractedHom):
    """Index of ``H(mu, p)`` in the target group (an int or ``INFINITE``)."""
    return hom.h_sub.index()


@dataclass(frozen=True)
class AuditReport:
    pairs_checked: int
    distinct_values: int
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


def audit_well_defined(
    a: GAutomaton,
    rho: ChoiceOfGenerators,
    hom: ExtractedHom,
    samples: int = 500,
    seed: int = 0,
    strict: bool = True,
) -> AuditReport:
    """Sample loops of ``M(mu, p)`` with equal register value and compare their images.

    Loops are drawn from the explored members and from products of two of
    them (which stay in ``M(mu, p)``).  With ``strict`` the first violation
    raises ``WellDefinednessViolation``.
    """
    rng = random.Random(seed)
    loops = [s for s, _ in hom.view.members]
    pool = list(loops)
    if loops:
        for _ in range(samples):
            x, y = rng.choice(loops), rng.choice(loops)
            pool.append(x + y)
    by_value = {}
    for s in dict.fromkeys(pool):
        by_value.setdefault(a.spec.reduce(a.value(s)), []).append(s)
    groups = [v for v in by_value.values() if len(v) > 1]
    violations = []
    checked = 0
    if groups:
        for _ in range(samples):
            bucket = rng.choice(groups)
            s1, s2 = rng.sample(bucket, 2)
            checked += 1
            h1 = evaluate_word(rho, a.label(s1))
            h2 = evaluate_word(rho, a.label(s2))
            if h1 != h2:
                if strict:
                    raise WellDefinednessViolation(
                        f"loops {s1} and {s2} share a register value but map to {h1} and {h2}", s1, s2
                    )
                violations.append((s1, s2, h1, h2))
    return AuditReport(checked, len(by_value), tuple(violations))
