"""G-automata over a finitely generated abelian register group.

Paths are tuples of edge ids.  Parallel edges with equal labels are distinct
symbols of the path alphabet, so everything downstream (subword orders,
minimality) works on edge ids rather than on endpoints or labels.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import UsageError
from .lattice import (
    INFINITE,
    AbelianSpec,
    LatticeSubgroup,
    canonical_basis,
    coset_representative,
    hermite_form,
    index_in_ambient,
    integer_combination,
    transversal,
)

EPSILON = ""


@dataclass(frozen=True)
class Edge:
    id: str
    src: str
    dst: str
    g: tuple
    sigma: str = EPSILON


@dataclass(frozen=True, eq=True)
class GAutomaton:
    spec: AbelianSpec
    alphabet: tuple
    vertices: tuple
    edges: tuple
    init: str
    ter: str
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))

    @cached_property
    def edge_map(self) -> dict:
        return {e.id: e for e in self.edges}

    @cached_property
    def edge_order(self) -> dict:
        return {e.id: i for i, e in enumerate(self.edges)}

    @cached_property
    def out_edges(self) -> dict:
        out = {v: [] for v in self.vertices}
        for e in self.edges:
            out.setdefault(e.src, []).append(e)
        return out

    def edge(self, eid: str) -> Edge:
        try:
            return self.edge_map[eid]
        except KeyError:
            raise UsageError(f"unknown edge {eid!r}") from None

    # -- paths --------------------------------------------------------------

    def is_path(self, path: Sequence[str]) -> bool:
        es = [self.edge_map.get(eid) for eid in path]
        if any(e is None for e in es):
            return False
        return all(a.dst == b.src for a, b in zip(es, es[1:]))

    def check_path(self, path: Sequence[str]) -> None:
        if not self.is_path(path):
            raise UsageError(f"not a path: {' '.join(path) or 'ε'}")

    def source(self, path: Sequence[str]):
        return self.edge(path[0]).src if path else None

    def target(self, path: Sequence[str]):
        return self.edge(path[-1]).dst if path else None

    def value(self, path: Iterable[str]) -> tuple:
        return self.spec.total(self.edge(eid).g for eid in path)

    def label(self, path: Iterable[str]) -> str:
        return "".join(self.edge(eid).sigma for eid in path)

    def vertex_sequence(self, path: Sequence[str], start=None) -> list:
        if not path:
            return [start] if start is not None else []
        seq = [self.edge(path[0]).src]
        seq.extend(self.edge(eid).dst for eid in path)
        return seq

    def is_closed(self, path: Sequence[str]) -> bool:
        return not path or self.source(path) == self.target(path)

    def is_accepting(self, path: Sequence[str]) -> bool:
        if not path:
            return self.init == self.ter
        return (
            self.is_path(path)
            and self.source(path) == self.init
            and self.target(path) == self.ter
            and not any(self.value(path))
        )


def concat(*paths: Sequence[str]) -> tuple:
    out = []
    for p in paths:
        out.extend(p)
    return tuple(out)


# --------------------------------------------------------------------------
# validation and construction helpers


def validate(a: GAutomaton) -> list:
    """Return a list of diagnostics; empty means the automaton is well formed."""
    problems = []
    vs = set(a.vertices)
    if len(vs) != len(a.vertices):
        problems.append("duplicate vertex ids")
    if a.init not in vs:
        problems.append(f"unknown vertex {a.init!r} (initial)")
    if a.ter not in vs:
        problems.append(f"unknown vertex {a.ter!r} (terminal)")
    seen = set()
    letters = set(a.alphabet)
    for e in a.edges:
        if e.id in seen:
            problems.append(f"duplicate edge id {e.id!r}")
        seen.add(e.id)
        if e.src not in vs:
            problems.append(f"edge {e.id}: unknown vertex {e.src!r}")
        if e.dst not in vs:
            problems.append(f"edge {e.id}: unknown vertex {e.dst!r}")
        if len(e.g) != a.spec.dim:
            problems.append(f"edge {e.id}: register label has wrong dimension")
        elif a.spec.reduce(e.g) != tuple(e.g):
            problems.append(f"edge {e.id}: torsion coordinate not reduced")
        if len(e.sigma) > 1:
            problems.append(f"edge {e.id}: label {e.sigma!r} has more than one letter")
        if any(c not in letters for c in e.sigma):
            problems.append(f"edge {e.id}: letter {e.sigma!r} not in alphabet")
    return problems


def make_automaton(spec, alphabet, vertices, edges, init, ter, check=True) -> GAutomaton:
    """Build an automaton; ``edges`` are ``Edge`` or ``(id, src, dst, g, sigma)``."""
    if not isinstance(spec, AbelianSpec):
        spec = AbelianSpec(int(spec))
    es = []
    for e in edges:
        if not isinstance(e, Edge):
            eid, src, dst, g, sigma = e
            if isinstance(g, int):
                g = (g,)
            e = Edge(str(eid), str(src), str(dst), spec.reduce(tuple(g)), sigma or EPSILON)
        es.append(e)
    a = GAutomaton(spec, tuple(alphabet), tuple(str(v) for v in vertices), tuple(es), str(init), str(ter))
    if check:
        problems = validate(a)
        if problems:
            raise UsageError("; ".join(problems))
    return a


def subdivide_normalize(a: GAutomaton) -> GAutomaton:
    """Split edges whose label has several letters into chains of one-letter edges.

    The first edge of a chain keeps the id and register label; the rest carry
    zero and fresh ids ``<id>~k`` through fresh vertices ``<id>~k``.
    """
    vertices = list(a.vertices)
    edges = []
    zero = a.spec.zero()
    for e in a.edges:
        if len(e.sigma) <= 1:
            edges.append(e)
            continue
        k = len(e.sigma)
        mids = [f"{e.id}~{i}" for i in range(1, k)]
        vertices.extend(mids)
        chain = [e.src] + mids + [e.dst]
        for i, letter in enumerate(e.sigma):
            eid = e.id if i == 0 else f"{e.id}~{i}"
            edges.append(Edge(eid, chain[i], chain[i + 1], e.g if i == 0 else zero, letter))
    return make_automaton(a.spec, a.alphabet, vertices, edges, a.init, a.ter)


# --------------------------------------------------------------------------
# word-problem builders

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def build_wp_abelian(n: int):
    """One-vertex ``Z^n``-automaton accepting the word problem of ``Z^n``.

    Letters ``a, A, b, B, ...`` increment and decrement the coordinates.
    """
    from .groups import AbelianGroup, ChoiceOfGenerators

    if not 1 <= n <= len(_LETTERS):
        raise UsageError("n out of range")
    spec = AbelianSpec(n)
    alphabet = []
    edges = []
    images = []
    for i in range(n):
        unit = tuple(int(j == i) for j in range(n))
        neg = tuple(-x for x in unit)
        lo, hi = _LETTERS[i], _LETTERS[i].upper()
        alphabet += [lo, hi]
        edges += [(f"e_{lo}", "q", "q", unit, lo), (f"e_{hi}", "q", "q", neg, hi)]
        images += [(lo, unit), (hi, neg)]
    a = make_automaton(spec, alphabet, ["q"], edges, "q", "q")
    rho = ChoiceOfGenerators(AbelianGroup(spec), tuple(sorted(images)))
    return a, rho


def build_wp_virtually_abelian(rho) -> GAutomaton:
    """Deterministic automaton over the translation lattice for ``Z^m x| F``.

    States are the point-group elements; reading a letter with image
    ``(v, f)`` in state ``f0`` moves to ``f0 f`` and adds ``f0 . v``.
    Abelian targets (torsion-free) and finite targets are accepted as the
    degenerate cases ``F = 1`` and ``m = 0``.
    """
    from .groups import _matvec

    group = rho.group
    if group.kind == "abelian":
        if group.spec.torsion_moduli:
            raise UsageError("abelian target with torsion is not a split lattice extension")
        m, order = group.spec.free_rank, 1
        mul = lambda f, g: 0  # noqa: E731
        act = lambda f, v: tuple(v)  # noqa: E731
        image = lambda h: (tuple(h), 0)  # noqa: E731
        ident = 0
    elif group.kind == "finite":
        m, order = 0, group.order
        mul, act, ident = group.mul, (lambda f, v: ()), group.identity_id
        image = lambda h: ((), h)  # noqa: E731
    else:
        m, order = group.rank, group.point.order
        mul, ident = group.point.mul, group.point.identity_id
        act = lambda f, v: _matvec(group.action[f], v)  # noqa: E731
        image = lambda h: h  # noqa: E731
    spec = AbelianSpec(m)
    ids = [ident] + [f for f in range(order) if f != ident]
    name = (lambda f: "q") if order == 1 else (lambda f: f"q{f}")
    edges = []
    for letter, h in rho.images:
        v, f = image(h)
        for f0 in ids:
            f1 = mul(f0, f)
            eid = f"e_{letter}{f0}" if f1 == f0 else f"e_{letter}{f0}{f1}"
            if order == 1:
                eid = f"e_{letter}"
            edges.append((eid, name(f0), name(f1), act(f0, v), letter))
    return make_automaton(spec, rho.alphabet, [name(f) for f in ids], edges, name(ident), name(ident))


# --------------------------------------------------------------------------
# closure constructions


def inverse_hom_pullback(a: GAutomaton, phi: Mapping[str, str], alphabet=None) -> GAutomaton:
    """Automaton accepting ``phi^-1(L(a))`` for a letter-to-word map ``phi``.

    For each new letter ``b`` with ``phi(b) = c_1 ... c_k`` (k >= 2) a copy of
    the vertex set is made for every intermediate progress ``1 .. k-1``; the
    ``b`` is read on the edge that leaves progress 0.  ε-edges of ``a`` are
    copied into every progress layer.
    """
    alphabet = tuple(alphabet) if alphabet is not None else tuple(sorted(phi))
    for b in alphabet:
        if len(b) != 1:
            raise UsageError("letters must be single characters")
        if any(c not in a.alphabet for c in phi.get(b, "")):
            raise UsageError(f"phi({b!r}) uses letters outside the source alphabet")
    zero = a.spec.zero()
    eps_edges = [e for e in a.edges if not e.sigma]
    vertices = list(a.vertices)
    edges = list(eps_edges)
    for b in alphabet:
        word = phi.get(b, "")
        k = len(word)
        if k == 0:
            edges.extend(Edge(f"loop_{b}@{v}", v, v, zero, b) for v in a.vertices)
            continue

        def at(v, i, b=b, k=k):
            return v if i in (0, k) else f"{v}@{b}{i}"

        for i in range(1, k):
            vertices.extend(at(v, i) for v in a.vertices)
            edges.extend(Edge(f"{e.id}@{b}{i}", at(e.src, i), at(e.dst, i), e.g, EPSILON) for e in eps_edges)
        for i, c in enumerate(word):
            for e in a.edges:
                if e.sigma == c:
                    edges.append(Edge(f"{e.id}@{b}:{i}", at(e.src, i), at(e.dst, i + 1), e.g, b if i == 0 else EPSILON))
    return make_automaton(a.spec, alphabet, vertices, edges, a.init, a.ter)


def _column_rank(matrix, ncols):
    cols = [tuple(row[j] for row in matrix) for j in range(ncols)]
    h, _ = hermite_form(cols, len(matrix))
    return len(h)


def register_extend(a: GAutomaton, matrix, target: AbelianSpec) -> GAutomaton:
    """Relabel registers through an injective map ``Z^r -> target``.

    ``matrix`` has ``target.free_rank`` rows and ``a.spec.free_rank`` columns;
    images land in the free part of ``target``.
    """
    if a.spec.torsion_moduli:
        raise UsageError("register_extend needs a torsion-free source group")
    r = a.spec.free_rank
    matrix = [list(row) for row in matrix]
    if len(matrix) != target.free_rank or any(len(row) != r for row in matrix):
        raise UsageError("embedding matrix has the wrong shape")
    if _column_rank(matrix, r) != r:
        raise UsageError("embedding is not injective")
    pad = (0,) * len(target.torsion_moduli)

    def image(g):
        return tuple(sum(row[j] * g[j] for j in range(r)) for row in matrix) + pad

    edges = [Edge(e.id, e.src, e.dst, image(e.g), e.sigma) for e in a.edges]
    return make_automaton(target, a.alphabet, a.vertices, edges, a.init, a.ter)


def register_restrict(a: GAutomaton, sub) -> GAutomaton:
    """Automaton over a finite-index subgroup ``sub`` of the register group.

    States are pairs (vertex, coset representative); labels are expressed in
    the coordinates of the subgroup's canonical basis, so the result is a
    ``Z^r``-automaton.
    """
    if a.spec.torsion_moduli:
        raise UsageError("register_restrict needs a torsion-free register group")
    if not isinstance(sub, LatticeSubgroup):
        sub = canonical_basis(sub, a.spec)
    if index_in_ambient(sub) is INFINITE:
        raise UsageError("register_restrict needs a finite-index subgroup")
    reps = transversal(sub)
    pos = {t: i for i, t in enumerate(reps)}
    zero_rep = coset_representative(sub, a.spec.zero())
    basis = list(sub.basis)

    def name(v, t):
        return v if len(reps) == 1 else f"{v}|{pos[t]}"

    vertices = [name(v, t) for v in a.vertices for t in reps]
    edges = []
    for e in a.edges:
        for t in reps:
            moved = tuple(x + y for x, y in zip(t, e.g))
            t2 = coset_representative(sub, moved)
            diff = tuple(x - y for x, y in zip(moved, t2))
            coords = integer_combination(basis, diff, a.spec)
            eid = e.id if len(reps) == 1 else f"{e.id}|{pos[t]}"
            edges.append(Edge(eid, name(e.src, t), name(e.dst, t2), tuple(coords), e.sigma))
    return make_automaton(
        AbelianSpec(len(basis)), a.alphabet, vertices, edges, name(a.init, zero_rep), name(a.ter, zero_rep)
    )


# --------------------------------------------------------------------------
# DOT export


def _fmt_g(g) -> str:
    return "(" + ",".join(str(x) for x in g) + ")"


def export_dot(a: GAutomaton) -> str:
    lines = ["digraph G {", "  rankdir=LR;", "  node [shape=circle];"]
    for v in a.vertices:
        attrs = []
        if v == a.ter:
            attrs.append("shape=doublecircle")
        if v == a.init:
            attrs.append("style=bold")
            attrs.append('xlabel="init"')
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f'  "{v}"{suffix};')
    for e in a.edges:
        sigma = e.sigma or "ε"
        lines.append(f'  "{e.src}" -> "{e.dst}" [label="{sigma} / {_fmt_g(e.g)}", tooltip="{e.id}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
