"""Factorization sets Z(x), the factorization homomorphism and length sets.

A factorization is an exponent vector over the monoid's ordered atoms.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, Sequence

from .errors import DimensionError, NotInMonoidError
from .monoid import ElementLike, ReducedMonoid, Vector

Factorization = tuple[int, ...]


def length(z: Sequence[int]) -> int:
    return sum(z)


def support(z: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i, k in enumerate(z) if k)


def disjoint_supports(z: Sequence[int], w: Sequence[int]) -> bool:
    """True when ``z = w`` as elements is a nondegenerate relation (no common atom)."""
    return not any(a and b for a, b in zip(z, w))


@dataclass(frozen=True)
class FactorizationSet:
    element: Vector
    factorizations: tuple[Factorization, ...]

    def __iter__(self) -> Iterator[Factorization]:
        return iter(self.factorizations)

    def __len__(self) -> int:
        return len(self.factorizations)

    @property
    def lengths(self) -> list[int]:
        return sorted({length(z) for z in self.factorizations})


def evaluate(M: ReducedMonoid, z: Sequence[int]) -> Vector:
    if len(z) != M.rank:
        raise DimensionError(f"exponent vector has {len(z)} entries, monoid has {M.rank} atoms")
    out = [0] * M.dim
    for k, a in zip(z, M.atoms):
        if k:
            for c in range(M.dim):
                out[c] += k * a[c]
    return tuple(out)


def iter_factorizations(M: ReducedMonoid, x: Vector) -> Iterator[Factorization]:
    """Depth-first enumeration in increasing lexicographic order."""
    atoms = M.atoms
    t = len(atoms)
    # coordinates that atoms i.. can still reach
    reach = [frozenset()] * (t + 1)
    for i in range(t - 1, -1, -1):
        reach[i] = reach[i + 1] | {c for c, v in enumerate(atoms[i]) if v}
    suffix_gcd = None
    if M.is_numerical:
        suffix_gcd = [0] * (t + 1)
        for i in range(t - 1, -1, -1):
            suffix_gcd[i] = gcd(suffix_gcd[i + 1], atoms[i][0])
    exps = [0] * t

    def feasible(i: int, r: Vector) -> bool:
        if any(v and c not in reach[i] for c, v in enumerate(r)):
            return False
        return suffix_gcd is None or r[0] % suffix_gcd[i] == 0

    def walk(i: int, r: Vector) -> Iterator[Factorization]:
        if not any(r):
            exps[i:] = [0] * (t - i)
            yield tuple(exps)
            return
        if i == t or not feasible(i, r):
            return
        a = atoms[i]
        top = min(v // ac for v, ac in zip(r, a) if ac)
        if i == t - 1:
            if all(v == top * ac for v, ac in zip(r, a)):
                exps[i] = top
                yield tuple(exps)
            return
        cur = r
        for k in range(top + 1):
            exps[i] = k
            yield from walk(i + 1, cur)
            cur = tuple(v - ac for v, ac in zip(cur, a))

    yield from walk(0, x)


def factorizations(M: ReducedMonoid, x: ElementLike) -> FactorizationSet:
    v = M.element(x)
    if not any(v):
        raise NotInMonoidError("the zero element is a unit and has no atomic factorization")
    zs = tuple(iter_factorizations(M, v)) if min(v) >= 0 else ()
    if not zs:
        raise NotInMonoidError(f"{_show(v)} is not in the monoid")
    return FactorizationSet(v, zs)


def length_set(M: ReducedMonoid, x: ElementLike) -> list[int]:
    return factorizations(M, x).lengths


def _show(v: Vector) -> str:
    return str(v[0]) if len(v) == 1 else str(list(v))

