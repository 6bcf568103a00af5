"""Exact integer linear algebra over finitely generated abelian groups.

Groups are ``Z^r + Z/d_1 + ... + Z/d_k`` and elements are plain integer
tuples.  Subgroups are stored through the Hermite normal form of their
preimage in ``Z^(r+k)``, which makes the representation canonical.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import UsageError

Vector = tuple  # tuple[int, ...]


class Infinite:
    """Marker for an infinite index."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Infinite"

    def __str__(self):
        return "infinite"


INFINITE = Infinite()


@dataclass(frozen=True)
class AbelianSpec:
    """The group ``Z^free_rank`` plus cyclic torsion factors."""

    free_rank: int
    torsion_moduli: tuple = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise UsageError("free rank must be non-negative")
        object.__setattr__(self, "torsion_moduli", tuple(int(d) for d in self.torsion_moduli))
        for d in self.torsion_moduli:
            if d < 2:
                raise UsageError(f"torsion modulus {d} must be >= 2")

    @property
    def dim(self) -> int:
        return self.free_rank + len(self.torsion_moduli)

    def zero(self) -> Vector:
        return (0,) * self.dim

    def vector(self, coords: Iterable[int]) -> Vector:
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.dim:
            raise UsageError(f"expected {self.dim} coordinates, got {len(coords)}")
        return self.reduce(coords)

    def reduce(self, v: Sequence[int]) -> Vector:
        r = self.free_rank
        return tuple(v[:r]) + tuple(x % d for x, d in zip(v[r:], self.torsion_moduli))

    def add(self, a: Vector, b: Vector) -> Vector:
        return self.reduce([x + y for x, y in zip(a, b)])

    def sub(self, a: Vector, b: Vector) -> Vector:
        return self.reduce([x - y for x, y in zip(a, b)])

    def neg(self, a: Vector) -> Vector:
        return self.reduce([-x for x in a])

    def scale(self, a: Vector, k: int) -> Vector:
        return self.reduce([k * x for x in a])

    def total(self, vectors: Iterable[Vector]) -> Vector:
        acc = [0] * self.dim
        for v in vectors:
            for i, x in enumerate(v):
                acc[i] += x
        return self.reduce(acc)

    def norm(self, v: Vector) -> int:
        """Max absolute value over the free coordinates."""
        return max((abs(x) for x in v[: self.free_rank]), default=0)

    def torsion_rows(self) -> list:
        """Relation vectors ``d_i * e_(r+i)`` of the torsion part."""
        rows = []
        for i, d in enumerate(self.torsion_moduli):
            row = [0] * self.dim
            row[self.free_rank + i] = d
            rows.append(tuple(row))
        return rows


# --------------------------------------------------------------------------
# Hermite normal form


def hermite_form(rows: Sequence[Sequence[int]], ncols: int, transform: bool = False):
    """Row-style Hermite normal form.

    Returns ``(H, U)`` where ``H`` lists the nonzero rows (pivots positive,
    entries above a pivot reduced into ``[0, pivot)``) and ``U`` is a
    unimodular matrix with ``U * rows`` equal to ``H`` padded with zero rows.
    ``U`` is ``None`` unless ``transform`` is set.
    """
    a = [list(r) for r in rows]
    m = len(a)
    u = [[int(i == j) for j in range(m)] for i in range(m)] if transform else None

    def sub_row(i, j, q):
        if q:
            ai, aj = a[i], a[j]
            for c in range(ncols):
                ai[c] -= q * aj[c]
            if u is not None:
                ui, uj = u[i], u[j]
                for c in range(m):
                    ui[c] -= q * uj[c]

    def swap(i, j):
        a[i], a[j] = a[j], a[i]
        if u is not None:
            u[i], u[j] = u[j], u[i]

    r = 0
    for col in range(ncols):
        if r >= m:
            break
        while True:
            nz = [i for i in range(r, m) if a[i][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: (abs(a[i][col]), i))
            swap(r, piv)
            clean = True
            for i in range(r + 1, m):
                if a[i][col]:
                    sub_row(i, r, a[i][col] // a[r][col])
                    if a[i][col]:
                        clean = False
            if clean:
                break
        if a[r][col] == 0:
            continue
        if a[r][col] < 0:
            a[r] = [-x for x in a[r]]
            if u is not None:
                u[r] = [-x for x in u[r]]
        for i in range(r):
            sub_row(i, r, a[i][col] // a[r][col])
        r += 1
    h = [tuple(row) for row in a[:r]]
    if u is not None:
        return h, [tuple(row) for row in u]
    return h, None


def _pivot(row) -> int:
    for i, x in enumerate(row):
        if x:
            return i
    return -1


def reduce_by_hermite(h: Sequence[Sequence[int]], v: Sequence[int]):
    """Reduce ``v`` against HNF rows; returns ``(remainder, coefficients)``.

    The remainder is the canonical coset representative of ``v``; it is zero
    iff ``v`` lies in the row lattice.
    """
    v = list(v)
    coeffs = []
    for row in h:
        p = _pivot(row)
        q = v[p] // row[p]
        coeffs.append(q)
        if q:
            for c in range(len(v)):
                v[c] -= q * row[c]
    return tuple(v), coeffs


def integer_combination(gens: Sequence[Vector], v: Vector, spec: AbelianSpec):
    """Integer coefficients ``c`` with ``sum c_i gens_i == v`` in the group, or None."""
    rows = [tuple(g) for g in gens] + spec.torsion_rows()
    if not rows:
        return [] if all(x == 0 for x in v) else None
    h, u = hermite_form(rows, spec.dim, transform=True)
    rem, _ = reduce_by_hermite(h, v)
    if any(rem):
        return None
    # exact quotients along the pivots
    w = list(v)
    hcoef = []
    for row in h:
        p = _pivot(row)
        q, r = divmod(w[p], row[p])
        if r:
            return None
        hcoef.append(q)
        for c in range(len(w)):
            w[c] -= q * row[c]
    coeffs = [0] * len(rows)
    for q, urow in zip(hcoef, u):
        for j, x in enumerate(urow):
            coeffs[j] += q * x
    return coeffs[: len(gens)]


# --------------------------------------------------------------------------
# Subgroups


@dataclass(frozen=True)
class LatticeSubgroup:
    """A subgroup of a f.g. abelian group in canonical form.

    ``basis`` is the Hermite form of the subgroup's preimage in
    ``Z^(r+k)``; it contains the torsion relations when the ambient group has
    torsion.
    """

    spec: AbelianSpec
    basis: tuple = field(default=())

    def contains(self, v: Vector) -> bool:
        return contains(self, v)

    def index(self):
        return index_in_ambient(self)


def canonical_basis(gens: Iterable[Vector], spec: AbelianSpec | None = None) -> LatticeSubgroup:
    gens = [tuple(g) for g in gens]
    if spec is None:
        if not gens:
            raise UsageError("an empty generating set needs an explicit spec")
        spec = AbelianSpec(len(gens[0]))
    for g in gens:
        if len(g) != spec.dim:
            raise UsageError(f"generator {g} does not match spec dimension {spec.dim}")
    h, _ = hermite_form(gens + spec.torsion_rows(), spec.dim)
    return LatticeSubgroup(spec, tuple(h))


def contains(sub: LatticeSubgroup, v: Vector) -> bool:
    if len(v) != sub.spec.dim:
        raise UsageError("vector does not match the subgroup's spec")
    rem, _ = reduce_by_hermite(sub.basis, v)
    return not any(rem)


def index_in_ambient(sub: LatticeSubgroup):
    if len(sub.basis) < sub.spec.dim:
        return INFINITE
    idx = 1
    for row in sub.basis:
        idx *= row[_pivot(row)]
    return idx


def coset_representative(sub: LatticeSubgroup, v: Vector) -> Vector:
    """Canonical representative of ``v + sub`` (reduced into the ambient group)."""
    rem, _ = reduce_by_hermite(sub.basis, v)
    return sub.spec.reduce(rem)


def transversal(sub: LatticeSubgroup) -> list:
    """All canonical coset representatives; requires finite index."""
    if index_in_ambient(sub) is INFINITE:
        raise UsageError("transversal needs a finite-index subgroup")
    ranges = [range(row[_pivot(row)]) for row in sub.basis]
    out = [()]
    for rng in ranges:
        out = [t + (x,) for t in out for x in rng]
    return sorted(out)


# --------------------------------------------------------------------------
# Non-negative solutions of linear Diophantine systems


def _contejean_devie(cols: Sequence[Sequence[int]], cap: int | None) -> Iterator[tuple]:
    """Hilbert basis of ``{y in N^n : sum y_i cols_i = 0}``, yielding elements.

    ``cap`` bounds the last coordinate (used for the homogenizing variable).
    """
    n = len(cols)
    m = len(cols[0]) if cols else 0
    basis: list = []

    def residual(y):
        return [sum(y[i] * cols[i][r] for i in range(n) if y[i]) for r in range(m)]

    frontier = {tuple(int(i == j) for j in range(n)) for i in range(n)}
    while frontier:
        found = [y for y in frontier if not any(residual(y))]
        for y in sorted(found):
            basis.append(y)
            yield y
        nxt = set()
        for y in sorted(frontier):
            res = residual(y)
            if not any(res):
                continue
            for i in range(n):
                if sum(res[r] * cols[i][r] for r in range(m)) >= 0:
                    continue
                z = list(y)
                z[i] += 1
                if cap is not None and z[-1] > cap:
                    continue
                z = tuple(z)
                if any(all(b[k] <= z[k] for k in range(n)) for b in basis):
                    continue
                nxt.add(z)
        frontier = nxt


def _prepare(a, b, moduli):
    a = [list(row) for row in a]
    b = list(b)
    m = len(a)
    k = len(a[0]) if m else 0
    if len(b) != m:
        raise UsageError("row count of A and length of b disagree")
    if any(len(row) != k for row in a):
        raise UsageError("ragged matrix")
    moduli = list(moduli) if moduli is not None else [None] * m
    slack = []  # extra columns turning congruences into equalities
    for r, d in enumerate(moduli):
        if d:
            for sign in (-1, 1):
                col = [0] * m
                col[r] = sign * d
                slack.append(col)
    cols = [[a[r][i] for r in range(m)] for i in range(k)] + slack
    return cols, b, k


def _minimal(points):
    pts = sorted(set(points), key=lambda p: (sum(p), p))
    kept = []
    for p in pts:
        if not any(all(q[i] <= p[i] for i in range(len(p))) for q in kept):
            kept.append(p)
    return sorted(kept)


def min_nonneg_solutions(a, b, moduli=None) -> list:
    """Componentwise-minimal solutions ``x in N^k`` of ``A x = b``.

    ``moduli[r]``, when set, turns row ``r`` into the congruence
    ``A_r x = b_r (mod moduli[r])``.  For a homogeneous system the zero
    vector is excluded and the minimal nonzero solutions are returned.
    Output is lexicographically sorted.
    """
    cols, b, k = _prepare(a, b, moduli)
    if k == 0:
        return []
    homogeneous = not any(b)
    if homogeneous:
        sols = [y[:k] for y in _contejean_devie(cols, None)]
        return _minimal([s for s in sols if any(s)])
    cols = cols + [[-x for x in b]]
    sols = [y[:k] for y in _contejean_devie(cols, 1) if y[-1] == 1]
    return _minimal(sols)


def find_nonneg_solution(a, b, moduli=None):
    """Some ``x in N^k`` with ``A x = b`` (zero allowed), or None.

    Stops at the first minimal solution found.
    """
    if not any(b):
        k = len(a[0]) if a else 0
        return (0,) * k
    cols, b, k = _prepare(a, b, moduli)
    if not cols:
        return None
    cols = cols + [[-x for x in b]]
    for y in _contejean_devie(cols, 1):
        if y[-1] == 1:
            return y[:k]
    return None


def solve_in_span(periods: Sequence[Vector], target: Vector, spec: AbelianSpec):
    """Natural multiplicities ``m`` with ``sum m_i periods_i == target`` in the group."""
    target = spec.reduce(target)
    if not any(target):
        return (0,) * len(periods)
    if not periods:
        return None
    a = [[p[r] for p in periods] for r in range(spec.dim)]
    moduli = [None] * spec.free_rank + list(spec.torsion_moduli)
    return find_nonneg_solution(a, list(target), moduli)
