"""Computable target groups H and choices of generators.

Three kinds of H are supported: finitely generated abelian groups, finite
groups given by a multiplication table, and split virtually abelian groups
``Z^m x| F`` with a finite point group ``F`` acting by integer matrices.
Elements are hashable normal forms:

* abelian: an integer tuple,
* finite: an element id,
* virtually abelian: ``(translation, point)``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import ResourceGuardError, UsageError
from .lattice import (
    INFINITE,
    AbelianSpec,
    canonical_basis,
    coset_representative,
    index_in_ambient,
)

DEFAULT_BALL_CAP = 10**6


def _check_table(table, identity):
    n = len(table)
    ids = range(n)
    if any(len(row) != n for row in table):
        raise UsageError("multiplication table must be square")
    if not 0 <= identity < n:
        raise UsageError("identity id out of range")
    for row in table:
        if sorted(row) != list(ids):
            raise UsageError("multiplication table rows must be permutations")
    for x in ids:
        if table[identity][x] != x or table[x][identity] != x:
            raise UsageError("identity element does not act as identity")
    for x in ids:
        for y in ids:
            xy = table[x][y]
            for z in ids:
                if table[xy][z] != table[x][table[y][z]]:
                    raise UsageError(f"table is not associative at ({x}, {y}, {z})")


class AbelianGroup:
    kind = "abelian"

    def __init__(self, spec: AbelianSpec):
        self.spec = spec

    def identity(self):
        return self.spec.zero()

    def mul(self, a, b):
        return self.spec.add(a, b)

    def inv(self, a):
        return self.spec.neg(a)

    def element(self, data):
        return self.spec.vector(data)

    def to_json(self, h):
        return list(h)

    def describe(self):
        return {"kind": "abelian", "rank": self.spec.free_rank, "torsion": list(self.spec.torsion_moduli)}

    def __eq__(self, other):
        return isinstance(other, AbelianGroup) and other.spec == self.spec

    def __hash__(self):
        return hash(("abelian", self.spec))


class FiniteGroup:
    kind = "finite"

    def __init__(self, table: Sequence[Sequence[int]], identity_id: int = 0):
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.identity_id = int(identity_id)
        _check_table(self.table, self.identity_id)
        self._inv = tuple(row.index(self.identity_id) for row in self.table)

    @property
    def order(self):
        return len(self.table)

    def identity(self):
        return self.identity_id

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self._inv[a]

    def element(self, data):
        x = int(data)
        if not 0 <= x < self.order:
            raise UsageError(f"element id {x} out of range")
        return x

    def to_json(self, h):
        return h

    def describe(self):
        return {"kind": "finite", "table": [list(r) for r in self.table], "identity": self.identity_id}

    def closure(self, gens):
        seen = {self.identity_id}
        queue = deque([self.identity_id])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = self.table[x][g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and (other.table, other.identity_id) == (self.table, self.identity_id)

    def __hash__(self):
        return hash(("finite", self.table, self.identity_id))


def _matvec(m, v):
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def _matmul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def _det(m):
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * _det([row[:j] + row[j + 1:] for row in m[1:]]) for j in range(n))


class VirtuallyAbelianGroup:
    """``Z^m x| F`` with multiplication ``(v, f)(w, g) = (v + f.w, fg)``."""

    kind = "virtually_abelian"

    def __init__(self, rank: int, point_table, point_identity: int, action):
        self.rank = int(rank)
        self.point = FiniteGroup(point_table, point_identity)
        self.action = tuple(tuple(tuple(int(x) for x in row) for row in mat) for mat in action)
        if len(self.action) != self.point.order:
            raise UsageError("need one action matrix per point-group element")
        for mat in self.action:
            if len(mat) != self.rank or any(len(row) != self.rank for row in mat):
                raise UsageError("action matrices must be rank x rank")
            if abs(_det([list(r) for r in mat])) != 1:
                raise UsageError("action matrices must be invertible over the integers")
        for f in range(self.point.order):
            for g in range(self.point.order):
                if _matmul(self.action[f], self.action[g]) != self.action[self.point.mul(f, g)]:
                    raise UsageError("action does not respect the point-group multiplication")
        self.translations = AbelianSpec(self.rank)

    def identity(self):
        return ((0,) * self.rank, self.point.identity_id)

    def mul(self, a, b):
        v, f = a
        w, g = b
        fw = _matvec(self.action[f], w)
        return (tuple(x + y for x, y in zip(v, fw)), self.point.mul(f, g))

    def inv(self, a):
        v, f = a
        fi = self.point.inv(f)
        return (tuple(-x for x in _matvec(self.action[fi], v)), fi)

    def element(self, data):
        if isinstance(data, Mapping):
            v, f = data["v"], data["f"]
        else:
            v, f = data
        v = tuple(int(x) for x in v)
        if len(v) != self.rank:
            raise UsageError("translation part has the wrong length")
        return (v, self.point.element(f))

    def to_json(self, h):
        return {"v": list(h[0]), "f": h[1]}

    def describe(self):
        return {
            "kind": "virtually_abelian",
            "rank": self.rank,
            "point_table": [list(r) for r in self.point.table],
            "point_identity": self.point.identity_id,
            "action": [[list(r) for r in m] for m in self.action],
        }

    def __eq__(self, other):
        return isinstance(other, VirtuallyAbelianGroup) and other.describe() == self.describe()

    def __hash__(self):
        return hash(("va", self.rank, self.point, self.action))


def group_from_json(doc) -> object:
    kind = doc.get("kind")
    if kind == "abelian":
        return AbelianGroup(AbelianSpec(int(doc.get("rank", 0)), tuple(doc.get("torsion", ()))))
    if kind == "finite":
        return FiniteGroup(doc["table"], doc.get("identity", 0))
    if kind == "virtually_abelian":
        return VirtuallyAbelianGroup(doc["rank"], doc["point_table"], doc.get("point_identity", 0), doc["action"])
    raise UsageError(f"unknown target group kind {kind!r}")


def power(group, h, k: int):
    """``h^k`` by repeated squaring; negative ``k`` allowed."""
    if k < 0:
        h, k = group.inv(h), -k
    acc = group.identity()
    while k:
        if k & 1:
            acc = group.mul(acc, h)
        h = group.mul(h, h)
        k >>= 1
    return acc


def is_identity(group, h) -> bool:
    return h == group.identity()


# --------------------------------------------------------------------------
# Choice of generators


@dataclass(frozen=True)
class ChoiceOfGenerators:
    """A monoid homomorphism from words over ``alphabet`` onto ``group``.

    Letters are single characters.  ``inverses`` maps each letter to a letter
    whose image is its inverse; it is inferred when not given.
    """

    group: object
    images: tuple  # ((letter, element), ...) in alphabet order
    inverses: tuple = field(default=())

    def __post_init__(self):
        images = dict(self.images)
        for letter in images:
            if len(letter) != 1:
                raise UsageError(f"letters must be single characters, got {letter!r}")
        if not self.inverses:
            inv = []
            for letter, h in self.images:
                target = self.group.inv(h)
                match = [b for b, k in self.images if k == target]
                if match:
                    inv.append((letter, match[0]))
            object.__setattr__(self, "inverses", tuple(inv))
        for a, b in self.inverses:
            if self.group.mul(images[a], images[b]) != self.group.identity():
                raise UsageError(f"{b!r} is not an inverse letter of {a!r}")

    @classmethod
    def from_mapping(cls, group, mapping, inverses=None):
        images = tuple((letter, group.element(mapping[letter])) for letter in sorted(mapping))
        inv = tuple(sorted(inverses.items())) if inverses else ()
        return cls(group, images, inv)

    @property
    def alphabet(self) -> tuple:
        return tuple(letter for letter, _ in self.images)

    def image(self, letter):
        for a, h in self.images:
            if a == letter:
                return h
        raise UsageError(f"unknown letter {letter!r}")

    def inverse_letter(self, letter):
        for a, b in self.inverses:
            if a == letter:
                return b
        raise UsageError(f"alphabet is not inverse-closed: no inverse for {letter!r}")

    def to_json(self):
        return {letter: self.group.to_json(h) for letter, h in self.images}


def evaluate_word(rho: ChoiceOfGenerators, word: str):
    group = rho.group
    table = dict(rho.images)
    h = group.identity()
    for letter in word:
        if letter not in table:
            raise UsageError(f"unknown letter {letter!r}")
        h = group.mul(h, table[letter])
    return h


def in_word_problem(rho: ChoiceOfGenerators, word: str) -> bool:
    return evaluate_word(rho, word) == rho.group.identity()


def inverse_word(rho: ChoiceOfGenerators, word: str) -> str:
    return "".join(rho.inverse_letter(letter) for letter in reversed(word))


def ball(rho: ChoiceOfGenerators, radius: int, cap: int = DEFAULT_BALL_CAP) -> dict:
    """Elements of word length <= radius mapped to a shortest witness word.

    Ties are broken lexicographically.  Insertion order is breadth-first.
    """
    group = rho.group
    letters = sorted(rho.images)
    out = {group.identity(): ""}
    layer = [("", group.identity())]
    for _ in range(radius):
        nxt = []
        for word, h in layer:
            for letter, g in letters:
                k = group.mul(h, g)
                if k not in out:
                    out[k] = word + letter
                    nxt.append((word + letter, k))
                    if len(out) > cap:
                        raise ResourceGuardError(f"ball exceeds {cap} elements")
        layer = nxt
    return out


# --------------------------------------------------------------------------
# Subgroups of H


class Subgroup:
    """Subgroup of a target group generated by finitely many elements."""

    def __init__(self, group, gens):
        self.group = group
        self.gens = tuple(gens)
        kind = group.kind
        if kind == "abelian":
            self._lattice = canonical_basis(self.gens, group.spec)
        elif kind == "finite":
            self._elements = group.closure(self.gens)
        else:
            self._build_virtually_abelian()

    def _build_virtually_abelian(self):
        group = self.group
        point = group.point
        # Schreier transversal of the point image Q
        rep = {point.identity_id: group.identity()}
        queue = deque([point.identity_id])
        while queue:
            q = queue.popleft()
            for g in self.gens:
                r = point.mul(q, g[1])
                if r not in rep:
                    rep[r] = group.mul(rep[q], g)
                    queue.append(r)
        schreier = []
        for q, t in rep.items():
            for g in self.gens:
                s = group.mul(group.mul(t, g), group.inv(rep[point.mul(q, g[1])]))
                schreier.append(s[0])
        self._translations = canonical_basis(schreier, group.translations)
        self._reps = rep

    def contains(self, h) -> bool:
        kind = self.group.kind
        if kind == "abelian":
            return self._lattice.contains(h)
        if kind == "finite":
            return h in self._elements
        if h[1] not in self._reps:
            return False
        d = self.group.mul(h, self.group.inv(self._reps[h[1]]))
        return self._translations.contains(d[0])

    def index(self):
        kind = self.group.kind
        if kind == "abelian":
            return index_in_ambient(self._lattice)
        if kind == "finite":
            return self.group.order // len(self._elements)
        t = index_in_ambient(self._translations)
        if t is INFINITE:
            return INFINITE
        return t * (self.group.point.order // len(self._reps))

    def signature(self):
        """Canonical data identifying the subgroup (equal iff same subgroup)."""
        kind = self.group.kind
        if kind == "abelian":
            return ("abelian", self._lattice.basis)
        if kind == "finite":
            return ("finite", tuple(sorted(self._elements)))
        lat = self._translations
        reps = tuple(sorted((q, coset_representative(lat, t[0])) for q, t in self._reps.items()))
        return ("virtually_abelian", lat.basis, reps)


def subgroup_index_in_H(group, gens):
    return Subgroup(group, gens).index()
