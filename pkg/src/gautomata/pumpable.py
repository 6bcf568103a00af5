"""Pumpable loops and the monoids M(mu, p).

A closed path ``sigma`` is pumpable in a minimal accepting path ``mu`` when
some accepting path dominating ``mu`` contains ``sigma`` contiguously inside
one of its closed blocks.  ``M(mu, p)`` collects those loops based at ``p``
together with the empty path.  The constructions here build explicit
witnesses and re-check every one of them.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .automaton import GAutomaton
from .errors import CertificationError, UsageError
from .paths import EXACT, Verdict, dominating_parts, solve_chain
from .wqo import embed


@dataclass(frozen=True)
class PumpWitness:
    """Accepting ``alpha = alpha_0 e_1 alpha_1 ... e_n alpha_n`` with ``sigma`` at ``blocks[j][offset:]``."""

    mu: tuple
    p: str
    sigma: tuple
    blocks: tuple
    j: int
    offset: int

    @property
    def alpha(self) -> tuple:
        out = self.blocks[0]
        for e, b in zip(self.mu, self.blocks[1:]):
            out = out + (e,) + b
        return out

    def problems(self, a: GAutomaton) -> list:
        errs = []
        if len(self.blocks) != len(self.mu) + 1:
            errs.append("block count does not match mu")
            return errs
        alpha = self.alpha
        if not a.is_accepting(alpha):
            errs.append("alpha is not accepting")
        anchors = [a.init] + [a.edge(e).dst for e in self.mu]
        for i, (b, v) in enumerate(zip(self.blocks, anchors)):
            if b and not (a.is_path(b) and a.source(b) == v and a.target(b) == v):
                errs.append(f"block {i} is not closed at {v}")
        if not 0 <= self.j < len(self.blocks):
            errs.append("block index out of range")
        elif self.blocks[self.j][self.offset : self.offset + len(self.sigma)] != self.sigma:
            errs.append("sigma is not at the recorded offset")
        if self.sigma and not (a.is_path(self.sigma) and a.source(self.sigma) == self.p and a.is_closed(self.sigma)):
            errs.append(f"sigma is not a loop at {self.p}")
        return errs

    def validate(self, a: GAutomaton) -> "PumpWitness":
        errs = self.problems(a)
        if errs:
            raise CertificationError("invalid pump witness: " + "; ".join(errs), [self])
        return self


def _trivial(mu, p) -> PumpWitness:
    return PumpWitness(tuple(mu), p, (), ((),) * (len(mu) + 1), 0, 0)


def _check_mu(a, mu):
    if mu and not a.is_accepting(mu):
        raise UsageError("mu is not an accepting path")
    if not mu and a.init != a.ter:
        raise UsageError("the empty path is not accepting")


def _search(a, mu, sigma, mode, j=None):
    """Lowest block admitting ``sigma`` (closed or not) as a ``Verdict`` with blocks."""
    blocks = [j] if j is not None else range(len(mu) + 1)
    last = Verdict.no("no block admits sigma")
    for jj in blocks:
        v = solve_chain(a, dominating_parts(a, mu, sigma, jj), mode)
        if v.is_yes:
            segs = list(v.segments)
            out, k, offset = [], 0, 0
            for i in range(len(mu) + 1):
                if i > 0:
                    k += 1
                if i == jj and sigma:
                    out.append(segs[k] + tuple(sigma) + segs[k + 2])
                    offset = len(segs[k])
                    k += 3
                else:
                    out.append(segs[k])
                    k += 1
            return Verdict.yes(v.witness, info_blocks=tuple(out), block=jj, offset=offset)
        if v.is_unknown:
            last = v
    return last


def is_pumpable(a: GAutomaton, sigma: Sequence[str], mu: Sequence[str], mode=EXACT) -> Verdict:
    """Yes with ``info["pump"]`` a ``PumpWitness``; the lowest block wins."""
    sigma, mu = tuple(sigma), tuple(mu)
    _check_mu(a, mu)
    if not sigma:
        return Verdict.yes(mu, pump=_trivial(mu, a.init))
    if not (a.is_path(sigma) and a.is_closed(sigma)):
        return Verdict.no("sigma is not a closed path")
    v = _search(a, mu, sigma, mode)
    if not v.is_yes:
        return v
    w = PumpWitness(mu, a.source(sigma), sigma, v.info["info_blocks"], v.info["block"], v.info["offset"])
    return Verdict.yes(w.alpha, pump=w.validate(a))


def in_M(a: GAutomaton, sigma: Sequence[str], mu: Sequence[str], p: str, mode=EXACT) -> Verdict:
    sigma, mu = tuple(sigma), tuple(mu)
    _check_mu(a, mu)
    if p not in a.vertices:
        raise UsageError(f"unknown vertex {p!r}")
    if not sigma:
        return Verdict.yes(mu, pump=_trivial(mu, p))
    if not a.is_path(sigma) or a.source(sigma) != p or not a.is_closed(sigma):
        return Verdict.no(f"sigma is not a loop at {p}")
    return is_pumpable(a, sigma, mu, mode)


@dataclass(frozen=True)
class MonoidView:
    """Members of ``M(mu, p)`` of length at most ``bound`` in (length, lexicographic) order."""

    mu: tuple
    p: str
    bound: int
    members: tuple  # (sigma, PumpWitness) pairs

    @property
    def loops(self) -> tuple:
        return tuple(s for s, _ in self.members)

    def witness(self, sigma):
        for s, w in self.members:
            if s == tuple(sigma):
                return w
        return None


def iter_M(a: GAutomaton, mu: Sequence[str], p: str, bound: int | None = None, mode=EXACT):
    """Yield ``(length, members)`` for each length ``0, 1, ...`` up to ``bound``.

    Prefixes that no accepting path dominating ``mu`` contains contiguously
    are pruned; every loop of ``M`` passes that test on each of its prefixes.
    """
    mu = tuple(mu)
    _check_mu(a, mu)
    if p not in a.vertices:
        raise UsageError(f"unknown vertex {p!r}")
    yield 0, [((), _trivial(mu, p))]
    level = [()]
    length = 0
    while level and (bound is None or length < bound):
        length += 1
        nxt, found = [], []
        for path in level:
            v = a.target(path) if path else p
            for e in a.out_edges.get(v, []):
                cand = path + (e.id,)
                if _search(a, mu, cand, mode).is_no:
                    continue
                nxt.append(cand)
                if e.dst == p:
                    r = is_pumpable(a, cand, mu, mode)
                    if r.is_yes:
                        found.append((cand, r.info["pump"]))
        found.sort()
        level = nxt
        yield length, found


def enumerate_M(a: GAutomaton, mu: Sequence[str], p: str, bound: int, mode=EXACT) -> MonoidView:
    """All of ``M(mu, p)`` up to length ``bound``."""
    members = []
    for _, found in iter_M(a, mu, p, bound, mode):
        members.extend(found)
    return MonoidView(tuple(mu), p, bound, tuple(members))


def concat_witness(a: GAutomaton, w1: PumpWitness, w2: PumpWitness) -> PumpWitness:
    """Witness for ``sigma1 sigma2`` from witnesses for each factor.

    The blocks of both accepting paths are concatenated blockwise; in the
    lower of the two host blocks ``sigma2`` is moved right after ``sigma1``
    and the other host block keeps the two halves around its removed loop.
    """
    if w1.mu != w2.mu:
        raise UsageError("witnesses are for different minimal paths")
    if w1.p != w2.p and w1.sigma and w2.sigma:
        raise UsageError("witnesses are based at different vertices")
    s1, s2 = w1.sigma, w2.sigma
    i, j = w1.j, w2.j
    glued = tuple(x + y for x, y in zip(w1.blocks, w2.blocks))
    # an empty factor marks no position at p, so the other one hosts
    if not s1:
        return PumpWitness(w1.mu, w2.p, s2, glued, j, len(w1.blocks[j]) + w2.offset).validate(a)
    if not s2:
        return PumpWitness(w1.mu, w1.p, s1, glued, i, w1.offset).validate(a)
    a1, o1 = w1.blocks[i], w1.offset
    b2, o2 = w2.blocks[j], w2.offset
    a_pre, a_post = a1[:o1], a1[o1 + len(s1) :]
    b_pre, b_post = b2[:o2], b2[o2 + len(s2) :]
    blocks = list(glued)
    if i <= j:
        host, offset = i, len(a_pre)
        if i == j:
            blocks[i] = a_pre + s1 + s2 + a_post + b_pre + b_post
        else:
            blocks[i] = a_pre + s1 + s2 + a_post + w2.blocks[i]
            blocks[j] = w1.blocks[j] + b_pre + b_post
    else:
        host, offset = j, len(w1.blocks[j]) + len(b_pre)
        blocks[j] = w1.blocks[j] + b_pre + s1 + s2 + b_post
        blocks[i] = a_pre + a_post + w2.blocks[i]
    w = PumpWitness(w1.mu, w1.p, s1 + s2, tuple(blocks), host, offset)
    return w.validate(a)


def downward_witness(a: GAutomaton, w: PumpWitness, tau: Sequence[str]) -> PumpWitness:
    """Witness for a loop ``tau`` at ``p`` that is a scattered subword of ``sigma``.

    With ``sigma = sigma_0 e'_1 sigma_1 ... e'_k sigma_k`` along ``tau``, the
    squared witness has ``sigma sigma`` in its host block; it is replaced by
    ``tau`` followed by ``sigma_0^2 e'_1 sigma_1^2 ... e'_k sigma_k^2``, which
    has the same register value.
    """
    tau = tuple(tau)
    if not tau:
        return _trivial(w.mu, w.p)
    if not a.is_path(tau) or a.source(tau) != w.p or not a.is_closed(tau):
        raise UsageError(f"tau is not a loop at {w.p}")
    emb = embed(tau, w.sigma)
    if emb is None:
        raise UsageError("tau is not a scattered subword of sigma")
    sigma = w.sigma
    pieces, prev = [], 0
    for pos in emb.positions:
        pieces.append(sigma[prev : pos - 1])
        prev = pos
    pieces.append(sigma[prev:])
    tail = pieces[0] * 2
    for e, piece in zip(tau, pieces[1:]):
        tail += (e,) + piece * 2
    sq = concat_witness(a, w, w)
    host = sq.blocks[sq.j]
    before, after = host[: sq.offset], host[sq.offset + 2 * len(sigma) :]
    blocks = list(sq.blocks)
    blocks[sq.j] = before + tau + tail + after
    out = PumpWitness(w.mu, w.p, tau, tuple(blocks), sq.j, len(before))
    return out.validate(a)


def _first_loop(a, path, start):
    """``(i, j)`` with ``path[i:j]`` the first closed subpath found by a left-to-right scan."""
    seq = a.vertex_sequence(path, start)
    seen = {}
    for k, v in enumerate(seq):
        if v in seen:
            return seen[v], k
        seen[v] = k
    return None


def shrink(a: GAutomaton, mu, p, sigma, omega, witness: PumpWitness | None = None, mode=EXACT, offset=None):
    """Flanks ``(omega1, omega2)`` shorter than ``|V|`` with ``omega1 omega omega2`` in ``M(mu, p)``.

    Returns ``(omega1, omega2, witness, transcript)``.
    """
    mu, sigma, omega = tuple(mu), tuple(sigma), tuple(omega)
    if offset is None:
        for k in range(len(sigma) - len(omega) + 1):
            if sigma[k : k + len(omega)] == omega:
                offset = k
                break
        else:
            raise UsageError("omega is not a subword of sigma")
    elif sigma[offset : offset + len(omega)] != omega:
        raise UsageError("omega is not at the given offset")
    if witness is None:
        r = in_M(a, sigma, mu, p, mode)
        if not r.is_yes:
            raise UsageError("sigma is not in M(mu, p)")
        witness = r.info["pump"]
    left, right = sigma[:offset], sigma[offset + len(omega) :]
    n = len(a.vertices)
    transcript = [(left, right)]
    w = witness
    while len(left) >= n or len(right) >= n:
        if len(left) >= n:
            i, j = _first_loop(a, left, p)
            left = left[:i] + left[j:]
        else:
            start = a.target(omega) if omega else a.target(left) if left else p
            i, j = _first_loop(a, right, start)
            right = right[:i] + right[j:]
        transcript.append((left, right))
        try:
            w = downward_witness(a, w, left + omega + right)
        except (CertificationError, UsageError) as exc:
            raise CertificationError(f"shrink step failed: {exc}", transcript) from exc
    if not w.sigma == left + omega + right:
        raise CertificationError("shrink ended without a witness", transcript)
    return left, right, w, transcript
