"""Subword orders on paths, antichains and minimal accepting paths.

Paths are tuples of edge ids; the orders below work on any sequences.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .automaton import GAutomaton
from .errors import ResourceGuardError, UsageError
from .lattice import min_nonneg_solutions
from .paths import EXACT, Bounded, _exact, _graph, can_complete


@dataclass(frozen=True)
class Embedding:
    """1-based strictly increasing positions of ``u``'s letters inside ``v``."""

    positions: tuple


def subword_offset(u: Sequence, v: Sequence):
    """0-based offset of the first contiguous occurrence of ``u`` in ``v``, or None."""
    u, v = tuple(u), tuple(v)
    n = len(u)
    for i in range(len(v) - n + 1):
        if v[i : i + n] == u:
            return i
    return None


def is_subword(u: Sequence, v: Sequence) -> bool:
    return subword_offset(u, v) is not None


def embed(u: Sequence, v: Sequence):
    """Greedy leftmost ``Embedding`` of ``u`` into ``v`` as a scattered subword, or None."""
    pos = []
    i = 0
    v = tuple(v)
    for x in u:
        while i < len(v) and v[i] != x:
            i += 1
        if i == len(v):
            return None
        pos.append(i + 1)
        i += 1
    return Embedding(tuple(pos))


def is_scattered_subword(u: Sequence, v: Sequence) -> bool:
    return embed(u, v) is not None


def antichain_insert(antichain, x):
    """Insert ``x`` into a scattered-subword antichain (functional update)."""
    x = tuple(x)
    for s in antichain:
        if is_scattered_subword(s, x):
            return tuple(antichain)
    kept = [s for s in antichain if not is_scattered_subword(x, s)]
    return tuple(sorted(kept + [x], key=lambda p: (len(p), p)))


@dataclass(frozen=True)
class Certified:
    bound: int


@dataclass(frozen=True)
class UpTo:
    length: int


@dataclass(frozen=True)
class MinimalPathSet:
    automaton: GAutomaton
    paths: tuple
    completeness: object

    @property
    def certified(self) -> bool:
        return isinstance(self.completeness, Certified)

    def __iter__(self):
        return iter(self.paths)

    def __len__(self):
        return len(self.paths)


def certification_bound(a: GAutomaton, mode=EXACT, max_cycles: int = 12):
    """Length bound for minimal accepting paths, or None when too costly.

    An accepting path splits into a simple base path and a multiset of simple
    cycles whose values cancel the base value; for a minimal path that
    multiset is taken to be a minimal natural solution.  The bound adds the
    longest such cycle load to the base length.
    """
    g = _graph(a, "full", _exact(mode))
    cycles = g.cycles
    if len(cycles) > max_cycles:
        return None
    spec = a.spec
    moduli = [None] * spec.free_rank + list(spec.torsion_moduli)
    best = None
    allowed = set(a.vertices)
    for base in g.simple_paths(a.init, a.ter, allowed):
        target = spec.neg(a.value(base))
        if not any(spec.reduce(target)):
            load = 0
        elif not cycles:
            continue
        else:
            cols = [[c[2][r] for c in cycles] for r in range(spec.dim)]
            sols = min_nonneg_solutions(cols, list(target), moduli)
            if not sols:
                continue
            load = max(sum(x * len(c[0]) for x, c in zip(sol, cycles)) for sol in sols)
        total = len(base) + load
        best = total if best is None else max(best, total)
    return 0 if best is None else best


def minimal_accepting_paths(a: GAutomaton, mode=EXACT, max_len: int | None = None, cap: int = 12, state_cap: int = 200_000):
    """Scattered-subword minimal accepting paths.

    With ``max_len`` set the search stops there (``UpTo``).  Otherwise the
    certification bound is used when it is at most ``cap`` and the result is
    ``Certified``; if not, the result is ``UpTo(cap)``.
    """
    if max_len is None:
        bound = None if isinstance(mode, Bounded) else certification_bound(a, mode)
        if bound is not None and bound <= cap:
            limit, completeness = bound, Certified(bound)
        else:
            limit, completeness = cap, UpTo(cap)
    else:
        if max_len < 0:
            raise UsageError("max_len must be non-negative")
        limit, completeness = max_len, UpTo(max_len)
    spec = a.spec
    promising = {}

    def viable(v, c):
        key = (v, c)
        if key not in promising:
            promising[key] = not can_complete(a, v, c, mode).is_no
        return promising[key]

    found = ()
    level = [((), a.init, spec.zero())]
    seen_states = 0
    for length in range(limit + 1):
        nxt = []
        new = []
        for path, v, c in level:
            if any(is_scattered_subword(m, path) for m in found):
                continue
            if v == a.ter and not any(c):
                new.append(path)
                continue
            if length == limit:
                continue
            for e in a.out_edges.get(v, []):
                c2 = spec.add(c, e.g)
                if viable(e.dst, c2):
                    nxt.append((path + (e.id,), e.dst, c2))
        for p in new:
            found = antichain_insert(found, p)
        seen_states += len(nxt)
        if seen_states > state_cap:
            raise ResourceGuardError(f"more than {state_cap} prefixes explored")
        level = nxt
        if not level:
            break
    return MinimalPathSet(a, found, completeness)


def dominates(alpha: Sequence[str], mu: Sequence[str], a: GAutomaton | None = None):
    """Greedy-leftmost block decomposition ``alpha_0 e_1 alpha_1 ... e_n alpha_n``.

    Returns the tuple of blocks when ``mu`` embeds in ``alpha``, else None.
    """
    alpha = tuple(alpha)
    emb = embed(mu, alpha)
    if emb is None:
        return None
    blocks = []
    prev = 0
    for p in emb.positions:
        blocks.append(alpha[prev : p - 1])
        prev = p
    blocks.append(alpha[prev:])
    return tuple(blocks)


def pump_constant(mps: MinimalPathSet):
    """``(N, exact)`` with ``N = 1 + max length``; ``exact`` is False for an ``UpTo`` set."""
    n = 1 + max((len(p) for p in mps.paths), default=0)
    return n, mps.certified
