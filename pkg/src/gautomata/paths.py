"""Decision procedures over paths of a G-automaton.

Two search modes are offered.  ``Exact`` decomposes walks into a simple path
plus a connected family of simple cycles, describes the reachable register
values as a finite union of linear sets and decides membership with the
Diophantine engine; it never answers "unknown" but may raise
``ResourceGuardError`` on graphs with too many cycles.  ``Bounded`` is a
breadth-first search over (position, vertex, register) states with a path
length cap and a register norm cap; it returns "unknown" when a cap cut the
search short.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .automaton import GAutomaton
from .errors import CertificationError, ResourceGuardError, UsageError
from .lattice import solve_in_span

# --------------------------------------------------------------------------
# modes and verdicts


@dataclass(frozen=True)
class Exact:
    cycle_cap: int = 5000
    subset_cap: int = 200_000
    path_cap: int = 50_000


@dataclass(frozen=True)
class Bounded:
    max_path_len: int = 12
    max_counter_norm: int = 24

    def __post_init__(self):
        if self.max_path_len < 0 or self.max_counter_norm < 0:
            raise UsageError("bounds must be non-negative")


EXACT = Exact()

YES, NO, UNKNOWN = "yes", "no", "unknown"


@dataclass(frozen=True)
class Verdict:
    status: str
    witness: tuple | None = None
    reason: str = ""
    segments: tuple = ()
    info: dict = field(default_factory=dict, compare=False)

    def __bool__(self):
        return self.status == YES

    @property
    def is_yes(self):
        return self.status == YES

    @property
    def is_no(self):
        return self.status == NO

    @property
    def is_unknown(self):
        return self.status == UNKNOWN

    @classmethod
    def yes(cls, witness, segments=(), **info):
        return cls(YES, tuple(witness), "", tuple(segments), info)

    @classmethod
    def no(cls, reason=""):
        return cls(NO, None, reason)

    @classmethod
    def unknown(cls, reason):
        return cls(UNKNOWN, None, reason)


# --------------------------------------------------------------------------
# linear sets


@dataclass(frozen=True)
class LinearSet:
    """``base + N*periods`` together with the walks realizing it.

    ``parts`` is a tuple of provenance items, either
    ``("walk", start, path, cycles)`` (each cycle used at least once, already
    counted in ``base``) or ``("fixed", path)``.  ``periods`` lists the cycle
    values of all walk items in order.
    """

    base: tuple
    periods: tuple
    parts: tuple = ()
    size: int = field(default=0, compare=False)

    @property
    def key(self):
        return (self.base, frozenset(self.periods))

    def extend(self, spec, g, path):
        """Append a fixed path of value ``g``."""
        return LinearSet(spec.add(self.base, g), self.periods, self.parts + (("fixed", path),), self.size + len(path))


def _dedupe(sets):
    seen = {}
    for s in sets:
        seen.setdefault(s.key, s)
    return list(seen.values())


def _sum_sets(spec, x: LinearSet, y: LinearSet) -> LinearSet:
    return LinearSet(spec.add(x.base, y.base), x.periods + y.periods, x.parts + y.parts, x.size + y.size)


def _weight(s: LinearSet):
    return (len(s.periods), s.size)


def _ordered(sets):
    sets = sorted(sets, key=_weight)
    return _dedupe(sets)


def sum_families(spec, f1, f2, ordered=True):
    out = (_sum_sets(spec, x, y) for x in f1 for y in f2)
    return _ordered(out) if ordered else _dedupe(out)


@lru_cache(maxsize=200_000)
def _span_cached(periods, target, spec):
    return solve_in_span(periods, target, spec)


def _span(spec, periods, target):
    """``solve_in_span`` on the distinct periods, mapped back to ``periods``."""
    distinct = tuple(sorted(set(periods)))
    m = _span_cached(distinct, spec.reduce(target), spec)
    if m is None:
        return None
    out = [0] * len(periods)
    for p, k in zip(distinct, m):
        out[periods.index(p)] = k
    return tuple(out)


def _family_hit(spec, family, target):
    target = spec.reduce(target)
    for s in family:
        if spec.reduce(s.base) == target:
            return s, (0,) * len(s.periods)
    for s in family:
        if not s.periods:
            continue
        m = _span(spec, s.periods, spec.sub(target, s.base))
        if m is not None:
            return s, m
    return None


def _subsumed(spec, small: LinearSet, big: LinearSet) -> bool:
    if _span(spec, big.periods, spec.sub(small.base, big.base)) is None:
        return False
    return all(_span(spec, big.periods, p) is not None for p in set(small.periods))


def _simplify(spec, family):
    family = list(family)
    alive = [True] * len(family)
    for i, s in enumerate(family):
        for j, t in enumerate(family):
            if i != j and alive[j] and _subsumed(spec, s, t):
                alive[i] = False
                break
    return [s for s, ok in zip(family, alive) if ok]


@dataclass(frozen=True)
class LinearSetFamily:
    """Finite union of linear sets ``base + N*periods``, canonically ordered."""

    members: tuple

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def contains(self, spec, v) -> bool:
        v = spec.reduce(v)
        return any(
            solve_in_span(periods, spec.sub(v, base), spec) is not None for base, periods in self.members
        )


# --------------------------------------------------------------------------
# graph structure


class _Graph:
    """Cycle and walk-family cache for a subset of an automaton's edges."""

    def __init__(self, a: GAutomaton, edges, mode: Exact):
        self.a = a
        self.spec = a.spec
        self.mode = mode
        self.edges = list(edges)
        self.out = {v: [] for v in a.vertices}
        self.inc = {v: [] for v in a.vertices}
        for e in self.edges:
            self.out[e.src].append(e)
            self.inc[e.dst].append(e)
        self._cycles = None
        self._families = {}

    def _reach(self, start, adj, forward=True):
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for e in adj[v]:
                w = e.dst if forward else e.src
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    def between(self, s, t):
        return self._reach(s, self.out) & self._reach(t, self.inc, forward=False)

    @property
    def cycles(self):
        """All simple cycles as ``(edge ids, vertex set, value)`` triples."""
        if self._cycles is None:
            order = {v: i for i, v in enumerate(self.a.vertices)}
            found = []
            cap = self.mode.cycle_cap

            def dfs(start, v, path, visited):
                for e in self.out[v]:
                    w = e.dst
                    if w == start:
                        found.append(tuple(path + [e.id]))
                        if len(found) > cap:
                            raise ResourceGuardError(f"more than {cap} simple cycles")
                    elif order[w] > order[start] and w not in visited:
                        visited.add(w)
                        dfs(start, w, path + [e.id], visited)
                        visited.discard(w)

            for s in self.a.vertices:
                dfs(s, s, [], {s})
            self._cycles = [
                (c, frozenset(self.a.vertex_sequence(c)), self.a.value(c)) for c in found
            ]
        return self._cycles

    def simple_paths(self, s, t, allowed):
        if s == t:
            return [()]
        out = []
        cap = self.mode.path_cap

        def dfs(v, path, visited):
            for e in self.out[v]:
                w = e.dst
                if w not in allowed or w in visited:
                    continue
                if w == t:
                    out.append(tuple(path + [e.id]))
                    if len(out) > cap:
                        raise ResourceGuardError(f"more than {cap} simple paths")
                    continue
                visited.add(w)
                dfs(w, path + [e.id], visited)
                visited.discard(w)

        dfs(s, [], {s})
        return out

    def _connected_subsets(self, cycles, root):
        cap = self.mode.subset_cap
        vsets = [c[1] for c in cycles]
        n = len(cycles)
        nbrs = [[j for j in range(n) if j != i and vsets[i] & vsets[j]] for i in range(n)]
        out = []

        def extend(chosen, cand, excluded):
            out.append(tuple(sorted(chosen)))
            if len(out) > cap:
                raise ResourceGuardError(f"more than {cap} connected cycle families")
            for idx, c in enumerate(cand):
                excl = excluded | set(cand[: idx + 1])
                rest = cand[idx + 1:]
                new = [x for x in nbrs[c] if x not in chosen and x not in excl and x not in rest]
                extend(chosen + [c], rest + new, excl)

        extend([], [i for i in range(n) if vsets[i] & root], set())
        return out

    def family(self, s, t):
        """Register values of all walks ``s -> t`` as a list of ``LinearSet``."""
        key = (s, t)
        if key in self._families:
            return self._families[key]
        allowed = self.between(s, t)
        fam = []
        if s in allowed:
            cycles = [c for c in self.cycles if c[1] <= allowed]
            for path in self.simple_paths(s, t, allowed):
                root = set(self.a.vertex_sequence(path, s))
                pval = self.a.value(path)
                for subset in self._connected_subsets(cycles, root):
                    chosen = [cycles[i] for i in subset]
                    base = self.spec.total([pval] + [c[2] for c in chosen])
                    fam.append(
                        LinearSet(
                            base,
                            tuple(c[2] for c in chosen),
                            (("walk", s, path, tuple(c[0] for c in chosen)),),
                            len(path) + sum(len(c[0]) for c in chosen),
                        )
                    )
        fam = _ordered(fam)
        self._families[key] = fam
        return fam


def _graph(a: GAutomaton, which: str, mode: Exact) -> _Graph:
    key = ("graph", which, mode)
    g = a._cache.get(key)
    if g is None:
        edges = a.edges if which == "full" else [e for e in a.edges if not e.sigma]
        g = _Graph(a, edges, mode)
        a._cache[key] = g
    return g


def _exact(mode) -> Exact:
    return mode if isinstance(mode, Exact) else EXACT


# --------------------------------------------------------------------------
# witness assembly


def _assemble(a: GAutomaton, start, path, cycles, counts):
    walk = list(path)
    pending = [(c, k) for c, k in zip(cycles, counts) if k > 0]
    while pending:
        vseq = a.vertex_sequence(walk, start)
        for idx, (cyc, k) in enumerate(pending):
            cverts = [a.edge(eid).src for eid in cyc]
            pos = next((i for i, v in enumerate(vseq) if v in cverts), None)
            if pos is None:
                continue
            r = cverts.index(vseq[pos])
            rotated = list(cyc[r:]) + list(cyc[:r])
            walk[pos:pos] = rotated * k
            pending.pop(idx)
            break
        else:
            raise CertificationError("cycle family is not connected to the base path")
    return tuple(walk)


def _realize(a: GAutomaton, s: LinearSet, mult):
    """Concatenate the walks of ``s`` with extra cycle multiplicities ``mult``."""
    segments = []
    i = 0
    for part in s.parts:
        if part[0] == "walk":
            _, start, path, cycles = part
            extra = mult[i: i + len(cycles)]
            i += len(cycles)
            segments.append(_assemble(a, start, path, cycles, [1 + x for x in extra]))
        else:
            segments.append(tuple(part[1]))
    return segments


# --------------------------------------------------------------------------
# chains: walk segments interleaved with fixed paths


def _check_chain(a, parts):
    for p in parts:
        if p[0] == "fixed":
            a.check_path(p[1])


def _chain_exact(a: GAutomaton, parts, mode: Exact, target=None):
    spec = a.spec
    target = spec.zero() if target is None else target
    g = _graph(a, "full", mode)
    fam = [LinearSet(spec.zero(), (), ())]
    for p in parts:
        if p[0] == "walk":
            fam = sum_families(spec, fam, g.family(p[1], p[2]))
        else:
            path = tuple(p[1])
            val = a.value(path)
            fam = [s.extend(spec, val, path) for s in fam]
            fam = _dedupe(fam)
        if not fam:
            return Verdict.no("no walk connects the required segments")
    hit = _family_hit(spec, fam, target)
    if hit is None:
        return Verdict.no("register constraint infeasible")
    segments = _realize(a, *hit)
    return Verdict.yes(sum(segments, ()), segments)


def _chain_bounded(a: GAutomaton, parts, mode: Bounded, word=None, target=None):
    """0-1 BFS over (part, offset, vertex, register, letters read)."""
    spec = a.spec
    target = spec.zero() if target is None else target
    n_parts = len(parts)
    start_v = parts[0][1] if parts[0][0] == "walk" else a.edge(parts[0][1][0]).src if parts[0][1] else None
    if start_v is None:
        raise UsageError("chain must start at a known vertex")
    start = (0, 0, start_v, spec.zero(), 0)
    dist = {start: 0}
    parent = {start: None}
    dq = deque([start])
    truncated = False
    n_letters = len(word) if word is not None else None

    def letter_ok(e, pos):
        if word is None or not e.sigma:
            return True
        return pos < n_letters and word[pos] == e.sigma

    def goal(st):
        k, _, _, c, pos = st
        return k == n_parts and c == target and (word is None or pos == n_letters)

    while dq:
        st = dq.popleft()
        if goal(st):
            taken = []
            while parent[st] is not None:
                st, eid = parent[st]
                if eid is not None:
                    taken.append((st[0], eid))
            taken.reverse()
            segments = [tuple(eid for k, eid in taken if k == idx) for idx in range(n_parts)]
            return Verdict.yes(tuple(eid for _, eid in taken), segments)
        k, j, v, c, pos = st
        d = dist[st]
        moves = []  # (cost, new_state, edge_id)
        if k < n_parts:
            part = parts[k]
            if part[0] == "walk":
                if v == part[2]:
                    moves.append((0, (k + 1, 0, v, c, pos), None))
                for e in a.out_edges.get(v, []):
                    if letter_ok(e, pos):
                        moves.append((1, (k, 0, e.dst, spec.add(c, e.g), pos + bool(e.sigma)), e.id))
            else:
                path = part[1]
                if j == len(path):
                    moves.append((0, (k + 1, 0, v, c, pos), None))
                else:
                    e = a.edge(path[j])
                    if e.src == v and letter_ok(e, pos):
                        moves.append((1, (k, j + 1, e.dst, spec.add(c, e.g), pos + bool(e.sigma)), e.id))
        for cost, nst, eid in moves:
            if nst in dist:
                continue
            if spec.norm(nst[3]) > mode.max_counter_norm or d + cost > mode.max_path_len:
                truncated = True
                continue
            dist[nst] = d + cost
            parent[nst] = (st, eid)
            if cost == 0:
                dq.appendleft(nst)
            else:
                dq.append(nst)
    if truncated:
        return Verdict.unknown("search bounds reached")
    return Verdict.no("search space exhausted")


def solve_chain(a: GAutomaton, parts, mode=EXACT, word=None):
    """Find a path made of the given segments with total register zero.

    ``parts`` items are ``("walk", s, t)`` (any walk from s to t) or
    ``("fixed", path)``.  With ``word`` set, the path must spell it.
    Returns a ``Verdict`` whose ``segments`` align with ``parts``.
    """
    _check_chain(a, parts)
    if isinstance(mode, Bounded):
        return _chain_bounded(a, parts, mode, word)
    if word is None:
        return _chain_exact(a, parts, mode)
    return _chain_exact_spelled(a, parts, mode, word)


# --------------------------------------------------------------------------
# layered graphs for spelled constraints


def layered(a: GAutomaton, word: str) -> GAutomaton:
    """Product of ``a`` with the positions ``0..len(word)`` of ``word``."""
    from .automaton import Edge, make_automaton

    n = len(word)
    vertices = [f"{v}#{i}" for i in range(n + 1) for v in a.vertices]
    edges = []
    for i in range(n + 1):
        for e in a.edges:
            if not e.sigma:
                edges.append(Edge(f"{e.id}#{i}", f"{e.src}#{i}", f"{e.dst}#{i}", e.g, ""))
            elif i < n and e.sigma == word[i]:
                edges.append(Edge(f"{e.id}#{i}", f"{e.src}#{i}", f"{e.dst}#{i + 1}", e.g, e.sigma))
    return make_automaton(a.spec, a.alphabet, vertices, edges, f"{a.init}#0", f"{a.ter}#{n}", check=False)


def _strip(path):
    return tuple(eid.rsplit("#", 1)[0] for eid in path)


def _chain_exact_spelled(a, parts, mode, word):
    lay = a._cache.get(("layered", word))
    if lay is None:
        lay = layered(a, word)
        a._cache[("layered", word)] = lay
    n = len(word)
    letters = [[bool(a.edge(eid).sigma) for eid in p[1]] if p[0] == "fixed" else None for p in parts]

    if any(p[0] == q[0] == "walk" for p, q in zip(parts, parts[1:])):
        raise UsageError("consecutive walk segments are ambiguous for a spelled chain")

    def assign(idx, layer, after_walk):
        """Yield start layers for the fixed parts (None for walks)."""
        if idx == len(parts):
            yield ()
            return
        if parts[idx][0] == "walk":
            yield from ((None,) + rest for rest in assign(idx + 1, layer, True))
            return
        for start in (range(layer, n + 1) if after_walk else (layer,)):
            end = start + sum(letters[idx])
            if end > n:
                break
            yield from ((start,) + rest for rest in assign(idx + 1, end, False))

    for layers in assign(0, 0, False):
        lparts = []
        layer = 0
        ok = True
        for p, start in zip(parts, layers):
            if p[0] == "fixed":
                ids = []
                cur = start
                for eid in p[1]:
                    e = a.edge(eid)
                    if e.sigma and (cur >= n or word[cur] != e.sigma):
                        ok = False
                        break
                    ids.append(f"{eid}#{cur}")
                    cur += bool(e.sigma)
                if not ok:
                    break
                lparts.append(("fixed", tuple(ids), start, cur))
            else:
                lparts.append(("walk", p[1], p[2]))
        if not ok:
            continue
        if lparts[-1][0] == "fixed" and lparts[-1][3] != n:
            continue
        resolved = []
        for idx, p in enumerate(lparts):
            if p[0] == "fixed":
                resolved.append(("fixed", p[1]))
                continue
            s_layer = 0 if idx == 0 else lparts[idx - 1][3]
            t_layer = n if idx == len(lparts) - 1 else lparts[idx + 1][2]
            if t_layer < s_layer:
                ok = False
                break
            resolved.append(("walk", f"{p[1]}#{s_layer}", f"{p[2]}#{t_layer}"))
        if not ok:
            continue
        v = _chain_exact(lay, resolved, mode)
        if v.is_yes:
            segs = [_strip(s) for s in v.segments]
            return Verdict.yes(sum(segs, ()), segs)
    return Verdict.no("no placement of the fixed segments spells the word")


# --------------------------------------------------------------------------
# membership


def _accepts_bounded(a: GAutomaton, word: str, mode: Bounded, counter_cap=None, state_cap=None):
    spec = a.spec
    n = len(word)
    cap = mode.max_counter_norm if counter_cap is None else counter_cap
    start = (0, a.init, spec.zero())
    goal = (n, a.ter, spec.zero())
    parent = {start: None}
    layer = [start]
    truncated = False
    depth = 0
    if start == goal:
        return Verdict.yes(())
    while layer:
        nxt = []
        for st in layer:
            pos, v, c = st
            for e in a.out_edges.get(v, []):
                if e.sigma:
                    if pos >= n or word[pos] != e.sigma:
                        continue
                    nst = (pos + 1, e.dst, spec.add(c, e.g))
                else:
                    nst = (pos, e.dst, spec.add(c, e.g))
                if nst in parent:
                    continue
                if depth + 1 > mode.max_path_len or spec.norm(nst[2]) > cap:
                    truncated = True
                    continue
                parent[nst] = (st, e.id)
                if nst == goal:
                    path = []
                    while parent[nst] is not None:
                        nst, eid = parent[nst]
                        path.append(eid)
                    return Verdict.yes(tuple(reversed(path)))
                nxt.append(nst)
                if state_cap is not None and len(parent) > state_cap:
                    return None
        layer = nxt
        depth += 1
    if truncated:
        return Verdict.unknown("search bounds reached")
    return Verdict.no("search space exhausted")


class _Bucket:
    """Linear sets grouped by period set, dropping ``b + c`` once ``b`` is kept for ``c`` in the periods.

    ``b + c + N*P`` lies inside ``b + N*P`` whenever ``c`` is in ``P``, so only
    the smaller base needs a witness.
    """

    def __init__(self, spec):
        self.spec = spec
        self.groups = {}

    def add(self, t: LinearSet):
        spec = self.spec
        pset = frozenset(t.periods)
        kept, seen = self.groups.setdefault(pset, ({}, set()))
        b = spec.reduce(t.base)
        if b in seen:
            return
        seen.add(b)
        for c in pset:
            if spec.sub(b, c) in seen:
                return
        for c in pset:
            kept.pop(spec.add(b, c), None)
        kept[b] = t

    def members(self):
        return [t for kept, _ in self.groups.values() for t in kept.values()]


def _accepts_exact(a: GAutomaton, word: str, mode: Exact):
    spec = a.spec
    eps = _graph(a, "eps", mode)
    dp = {}
    for v in a.vertices:
        fam = eps.family(a.init, v)
        if fam:
            dp[v] = list(fam)
    for ch in word:
        pre = {}
        for u, fam in dp.items():
            for e in a.out_edges.get(u, []):
                if e.sigma != ch:
                    continue
                bucket = pre.setdefault(e.dst, {})
                for s in fam:
                    t = s.extend(spec, e.g, (e.id,))
                    bucket.setdefault(t.key, t)
        nxt = {}
        for y, bucket in pre.items():
            fam = list(bucket.values())
            for w in a.vertices:
                closure = eps.family(y, w)
                if closure:
                    out = nxt.get(w)
                    if out is None:
                        out = nxt[w] = _Bucket(spec)
                    for x in fam:
                        for z in closure:
                            out.add(_sum_sets(spec, x, z))
        dp = {w: b.members() for w, b in nxt.items()}
        if not dp:
            return Verdict.no("no path spells the word")
    fam = dp.get(a.ter)
    if not fam:
        return Verdict.no("no path spells the word")
    hit = _family_hit(spec, fam, spec.zero())
    if hit is None:
        return Verdict.no("every path spelling the word has nonzero register")
    return Verdict.yes(sum(_realize(a, *hit), ()))


def _canonicalize(a, word, witness, state_cap=50_000):
    """Lexicographically least shortest witness, when the search is small."""
    n = len(witness)
    if n == 0:
        return witness
    gmax = max((a.spec.norm(e.g) for e in a.edges), default=0)
    v = _accepts_bounded(a, word, Bounded(n, n * gmax), state_cap=state_cap)
    if v is not None and v.is_yes:
        return v.witness
    return witness


def accepts(a: GAutomaton, word: str, mode=EXACT, canonical: bool = True) -> Verdict:
    unknown = [c for c in word if c not in a.alphabet]
    if unknown:
        raise UsageError(f"unknown letters {''.join(sorted(set(unknown)))!r}")
    if isinstance(mode, Bounded):
        return _accepts_bounded(a, word, mode)
    v = _accepts_exact(a, word, mode)
    if v.is_yes and canonical:
        w = _canonicalize(a, word, v.witness)
        _revalidate(a, w, word)
        return Verdict.yes(w)
    if v.is_yes:
        _revalidate(a, v.witness, word)
    return v


def _revalidate(a, path, word=None):
    if not a.is_accepting(path):
        raise CertificationError(f"witness {path} is not an accepting path")
    if word is not None and a.label(path) != word:
        raise CertificationError(f"witness {path} does not spell {word!r}")


def is_empty(a: GAutomaton, mode=EXACT) -> Verdict:
    """Yes(witness) when some accepting path exists (the language is non-empty)."""
    if a.init == a.ter:
        return Verdict.yes(())
    return solve_chain(a, [("walk", a.init, a.ter)], mode)


def is_promising(a: GAutomaton, omega: Sequence[str], mode=EXACT) -> Verdict:
    """Yes with segments ``(omega1, omega, omega2)`` when omega extends to an accepting path."""
    omega = tuple(omega)
    if not omega:
        v = is_empty(a, mode)
        return Verdict.yes(v.witness, (v.witness, (), ())) if v.is_yes else v
    a.check_path(omega)
    parts = [("walk", a.init, a.source(omega)), ("fixed", omega), ("walk", a.target(omega), a.ter)]
    return solve_chain(a, parts, mode)


def can_complete(a: GAutomaton, v: str, value, mode=EXACT) -> Verdict:
    """Whether some walk ``v -> ter`` brings the register from ``value`` to zero."""
    target = a.spec.neg(value)
    parts = [("walk", v, a.ter)]
    if isinstance(mode, Bounded):
        return _chain_bounded(a, parts, mode, target=target)
    return _chain_exact(a, parts, mode, target=target)


def walk_values(a: GAutomaton, s: str, t: str, mode=EXACT) -> LinearSetFamily:
    """Register values of all walks ``s -> t``, with redundant linear sets dropped."""
    fam = _simplify(a.spec, _graph(a, "full", _exact(mode)).family(s, t))
    return LinearSetFamily(tuple(sorted({(x.base, tuple(sorted(set(x.periods)))) for x in fam})))


def closed_value_sets(a: GAutomaton, p: str, mode=EXACT) -> LinearSetFamily:
    return walk_values(a, p, p, mode)


def dominating_parts(a: GAutomaton, mu: Sequence[str], sigma: Sequence[str], j: int):
    """Chain for "dominates mu with sigma contiguous in block j".

    ``sigma`` need not be closed; prefixes of loops are checked this way.
    """
    mu = tuple(mu)
    sigma = tuple(sigma)
    if mu:
        anchors = [a.init] + [a.edge(eid).dst for eid in mu]
    else:
        anchors = [a.init]
    if not 0 <= j < len(anchors):
        raise UsageError(f"block index {j} out of range")
    parts = []
    for i, v in enumerate(anchors):
        if i > 0:
            parts.append(("fixed", (mu[i - 1],)))
        if i == j and sigma:
            parts += [("walk", v, a.source(sigma)), ("fixed", sigma), ("walk", a.target(sigma), v)]
        else:
            parts.append(("walk", v, v))
    return parts


def find_accepting_path(a: GAutomaton, word: str | None = None, dominate=None, mode=EXACT) -> Verdict:
    """Accepting path under optional constraints.

    ``dominate`` is ``(mu, sigma, j)``: the path must dominate ``mu`` and
    contain the closed path ``sigma`` contiguously in block ``j`` (``None``
    tries blocks in increasing order).  On success ``info["block"]`` holds the
    block index and ``info["blocks"]`` the decomposition.
    """
    if dominate is None:
        if word is not None:
            return accepts(a, word, mode)
        return is_empty(a, mode)
    mu, sigma, j = dominate
    mu, sigma = tuple(mu), tuple(sigma)
    if mu and not a.is_accepting(mu):
        return Verdict.no("mu is not an accepting path")
    if not mu and a.init != a.ter:
        return Verdict.no("the empty path is not accepting")
    if sigma and not (a.is_path(sigma) and a.is_closed(sigma)):
        return Verdict.no("sigma is not a closed path")
    blocks = [j] if j is not None else range(len(mu) + 1)
    last = Verdict.no("no block admits sigma")
    for jj in blocks:
        parts = dominating_parts(a, mu, sigma, jj)
        v = solve_chain(a, parts, mode, word)
        if v.is_yes:
            return _with_blocks(a, v, mu, sigma, jj)
        if v.is_unknown:
            last = v
    return last


def _with_blocks(a, v, mu, sigma, j):
    segs = list(v.segments)
    blocks = []
    k = 0
    for i in range(len(mu) + 1):
        if i > 0:
            k += 1  # the mu edge
        if i == j and sigma:
            before, _, after = segs[k], segs[k + 1], segs[k + 2]
            blocks.append(before + sigma + after)
            offset = len(before)
            k += 3
        else:
            blocks.append(segs[k])
            if i == j:
                offset = 0
            k += 1
    return Verdict.yes(v.witness, v.segments, block=j, blocks=tuple(blocks), offset=offset)
