"""Monoid presentations and their normalization to reduced affine form.

Every monoid handled here is a finitely generated submonoid of N_0^d,
stored as its (unique) minimal generating set, i.e. its atoms.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Sequence, Union

from .errors import DimensionError, PresentationError, TrivialMonoidError

Vector = tuple[int, ...]
ElementLike = Union[int, Sequence[int]]

NUMERICAL = "numerical"
AFFINE = "affine"
KERNEL = "kernel"
BLOCK = "block"
KINDS = (NUMERICAL, AFFINE, KERNEL, BLOCK)


@dataclass(frozen=True)
class MonoidPresentation:
    """User-facing description of a monoid, before normalization.

    ``data`` holds the generators (numerical/affine), the matrix rows
    (kernel) or the invariant factors of the group (block).
    """

    kind: str
    data: tuple

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise PresentationError(f"unknown presentation kind {self.kind!r}")
        if not self.data:
            raise PresentationError(f"{self.kind} presentation is empty")
        check = getattr(self, f"_check_{self.kind}")
        check()

    def _check_numerical(self) -> None:
        for g in self.data:
            if not _is_int(g) or g < 1:
                raise PresentationError(f"numerical generators must be integers >= 1, got {g!r}")

    def _check_affine(self) -> None:
        dims = {len(v) for v in self.data}
        if len(dims) != 1 or 0 in dims:
            raise PresentationError("affine generators must be nonempty vectors of one common length")
        for v in self.data:
            if not all(_is_int(c) and c >= 0 for c in v):
                raise PresentationError(f"affine generator {list(v)} has a negative or non-integer entry")
            if not any(v):
                raise PresentationError("affine generators must be nonzero")

    def _check_kernel(self) -> None:
        widths = {len(r) for r in self.data}
        if len(widths) != 1 or 0 in widths:
            raise PresentationError("kernel matrix rows must be nonempty and of equal length")
        if not all(_is_int(c) for r in self.data for c in r):
            raise PresentationError("kernel matrix entries must be integers")

    def _check_block(self) -> None:
        for n in self.data:
            if not _is_int(n) or n < 2:
                raise PresentationError(f"block invariant factors must be integers >= 2, got {n!r}")

    @classmethod
    def numerical(cls, generators: Sequence[int]) -> MonoidPresentation:
        return cls(NUMERICAL, tuple(generators))

    @classmethod
    def affine(cls, generators: Sequence[Sequence[int]]) -> MonoidPresentation:
        return cls(AFFINE, tuple(tuple(v) for v in generators))

    @classmethod
    def kernel(cls, matrix: Sequence[Sequence[int]]) -> MonoidPresentation:
        if matrix and _is_int(matrix[0]):
            matrix = [matrix]  # a single row given flat
        return cls(KERNEL, tuple(tuple(r) for r in matrix))

    @classmethod
    def block(cls, orders: Sequence[int]) -> MonoidPresentation:
        return cls(BLOCK, tuple(orders))


@dataclass(frozen=True)
class ReducedMonoid:
    """A reduced affine monoid given by its atoms.

    Atoms are distinct nonzero vectors of N_0^dim, sorted by coordinate sum
    and then lexicographically. Factorizations are exponent vectors over
    this fixed order.
    """

    dim: int
    atoms: tuple[Vector, ...]
    presentation: MonoidPresentation | None = field(default=None, compare=False)

    @property
    def rank(self) -> int:
        return len(self.atoms)

    @property
    def is_numerical(self) -> bool:
        return self.dim == 1

    def element(self, x: ElementLike) -> Vector:
        """Coerce ``x`` to a vector of this monoid's dimension."""
        if _is_int(x):
            v: Vector = (int(x),)
        else:
            v = tuple(int(c) for c in x)
        if len(v) != self.dim:
            raise DimensionError(f"element {list(v)} has dimension {len(v)}, monoid has {self.dim}")
        return v

    def __repr__(self) -> str:
        if self.is_numerical:
            return f"ReducedMonoid<{', '.join(str(a[0]) for a in self.atoms)}>"
        return f"ReducedMonoid(dim={self.dim}, atoms={list(self.atoms)})"


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def atom_order(v: Vector) -> tuple:
    return (sum(v), v)


def representable(gens: Sequence[Vector], x: Vector) -> bool:
    """Is ``x`` a N_0-combination of ``gens``?  Gens must be nonzero."""
    gens = [g for g in gens if any(g)]
    failed: set[tuple[int, Vector]] = set()

    def search(i: int, r: Vector) -> bool:
        if not any(r):
            return True
        if i == len(gens) or (i, r) in failed:
            return False
        g = gens[i]
        cur = r
        while True:
            if search(i + 1, cur):
                return True
            cur = tuple(a - b for a, b in zip(cur, g))
            if min(cur) < 0:
                break
        failed.add((i, r))
        return False

    return search(0, tuple(x))


def minimal_generators(vectors: Sequence[Sequence[int]]) -> list[Vector]:
    """Return the minimal generating subset of the monoid spanned by ``vectors``.

    Order of first appearance is preserved; duplicates are dropped.
    """
    seen: list[Vector] = []
    for v in vectors:
        v = tuple(v)
        if not any(v):
            raise PresentationError("zero vector cannot be a generator")
        if v not in seen:
            seen.append(v)
    return [v for i, v in enumerate(seen) if not representable(seen[:i] + seen[i + 1:], v)]


def from_atoms(vectors: Sequence[Sequence[int]], presentation: MonoidPresentation | None = None) -> ReducedMonoid:
    gens = minimal_generators(vectors)
    if not gens:
        raise TrivialMonoidError("the trivial monoid has no atoms")
    dims = {len(g) for g in gens}
    if len(dims) != 1:
        raise DimensionError("generators have mixed dimensions")
    return ReducedMonoid(dims.pop(), tuple(sorted(gens, key=atom_order)), presentation)


def build_monoid(p: MonoidPresentation, **opts) -> ReducedMonoid:
    """Normalize a presentation to a :class:`ReducedMonoid`.

    ``opts`` are forwarded to the kernel solver (``max_coordinate_sum``)
    or to the block-monoid builder (``max_order``).
    """
    if p.kind == NUMERICAL:
        return from_atoms([(g,) for g in p.data], p)
    if p.kind == AFFINE:
        return from_atoms(p.data, p)
    if p.kind == KERNEL:
        from .diophantine import minimal_nonneg_solutions

        sols = minimal_nonneg_solutions(p.data, **opts)
        if not sols:
            raise TrivialMonoidError("the linear system has only the zero solution")
        return from_atoms(sols, p)
    from .block import block_monoid

    return block_monoid(p.data, presentation=p, **opts)


def contains(M: ReducedMonoid, x: ElementLike) -> bool:
    v = M.element(x)
    if min(v) < 0:
        return False
    return representable(M.atoms, v)


def apery_set(M: ReducedMonoid) -> list[int]:
    """Apery set of a numerical monoid w.r.t. its smallest atom.

    Entry ``r`` is the least element of M congruent to ``r`` modulo the
    smallest atom (shortest paths on the residue graph).
    """
    _require_numerical_gcd1(M)
    gens = [a[0] for a in M.atoms]
    m = gens[0]
    dist = [None] * m
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d > dist[r]:
            continue
        for g in gens[1:]:
            s, nd = (r + g) % m, d + g
            if dist[s] is None or nd < dist[s]:
                dist[s] = nd
                heapq.heappush(heap, (nd, s))
    return dist


def frobenius(M: ReducedMonoid) -> int:
    """Largest integer not in M, or -1 when M is all of N_0."""
    ap = apery_set(M)
    return max(ap) - M.atoms[0][0]


def _require_numerical_gcd1(M: ReducedMonoid) -> None:
    if not M.is_numerical:
        raise DimensionError("operation requires a numerical monoid (dimension 1)")
    g = reduce(gcd, (a[0] for a in M.atoms))
    if g != 1:
        raise PresentationError(f"atoms have gcd {g}; the complement in N_0 is infinite")


def atom_gcd(M: ReducedMonoid) -> int:
    return reduce(gcd, (a[0] for a in M.atoms))
