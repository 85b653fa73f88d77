"""Factoriality classification from Betti data.

factorial       <=> no Betti elements
half-factorial  <=> every Betti element has a single length
length-factorial <=> factorial, or exactly one Betti element carrying
                     exactly two factorizations of different lengths
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .betti import BettiOptions, BettiSet, betti_elements, elements_up_to_length
from .errors import MonoidError
from .factorization import Factorization, disjoint_supports, evaluate, iter_factorizations, length
from .monoid import ReducedMonoid, Vector, atom_order

DEFAULT_SCAN_LENGTH = 6
DEFAULT_QUASI_CAP = 200_000


@dataclass(frozen=True)
class MasterFactorization:
    element: Vector
    longer: Factorization
    shorter: Factorization

    @property
    def lengths(self) -> tuple[int, int]:
        return length(self.longer), length(self.shorter)


@dataclass(frozen=True)
class Witness:
    element: Vector
    first: Factorization
    second: Factorization
    nondegenerate: bool


@dataclass(frozen=True)
class ClassificationReport:
    factorial: bool
    half_factorial: bool
    length_factorial: bool
    betti: BettiSet
    master: MasterFactorization | None
    witness: Witness | None

    @property
    def completeness(self) -> str:
        return self.betti.completeness


def _master_from_betti(betti: BettiSet) -> MasterFactorization | None:
    if len(betti) != 1 or len(betti.factorizations[0]) != 2:
        return None
    z, w = betti.factorizations[0]
    if length(z) == length(w):
        return None
    if length(z) < length(w):
        z, w = w, z
    return MasterFactorization(betti.elements[0], z, w)


def classify(M: ReducedMonoid, opts: BettiOptions | None = None, witness_length: int = DEFAULT_SCAN_LENGTH) -> ClassificationReport:
    betti = betti_elements(M, opts)
    factorial = len(betti) == 0
    half = all(len({length(z) for z in zs}) == 1 for zs in betti.factorizations)
    master = _master_from_betti(betti)
    lf = factorial or master is not None
    if factorial != (half and lf):
        raise MonoidError("internal inconsistency: factorial != half-factorial and length-factorial")
    return ClassificationReport(factorial, half, lf, betti, master, equal_length_witness(M, witness_length))


def master_factorization(M: ReducedMonoid, opts: BettiOptions | None = None) -> MasterFactorization | None:
    """The unequal-length relation generating all others, if M is length-factorial but not factorial."""
    return _master_from_betti(betti_elements(M, opts))


def _by_length(M: ReducedMonoid, n: int, cap: int) -> tuple[dict[Vector, list[Factorization]], bool]:
    """Group all exponent vectors of length n by their image, up to ``cap`` vectors."""
    t = M.rank
    groups: dict[Vector, list[Factorization]] = defaultdict(list)
    count = 0

    def compositions(i: int, left: int) -> Iterator[tuple[int, ...]]:
        if i == t - 1:
            yield (left,)
            return
        for k in range(left, -1, -1):
            for rest in compositions(i + 1, left - k):
                yield (k,) + rest

    for z in compositions(0, n):
        if count >= cap:
            return groups, False
        groups[evaluate(M, z)].append(z)
        count += 1
    return groups, True


@dataclass(frozen=True)
class QuasiResult:
    n: int
    violations: tuple[tuple[Vector, Factorization, Factorization], ...]
    exhaustive: bool


def quasi_n_violations(M: ReducedMonoid, n: int, cap: int = DEFAULT_QUASI_CAP) -> QuasiResult:
    """Pairs of distinct length-n factorizations of a common element.

    At most ``cap`` exponent vectors are examined; ``exhaustive`` says
    whether all of them were. An exhaustive empty result certifies that M
    is quasi-n-factorial.
    """
    if n < 2:
        raise MonoidError("quasi-n-factoriality needs n >= 2")
    groups, exhaustive = _by_length(M, n, cap)
    out = []
    for x in sorted(groups, key=atom_order):
        for z, w in combinations(sorted(groups[x]), 2):
            out.append((x, z, w))
    return QuasiResult(n, tuple(out), exhaustive)


def equal_length_witness(M: ReducedMonoid, max_length: int = DEFAULT_SCAN_LENGTH) -> Witness | None:
    """First element (by coordinate sum, then lexicographically) with two
    distinct factorizations of equal length, among sums of at most
    ``max_length`` atoms."""
    for x in elements_up_to_length(M, max_length):
        seen: dict[int, Factorization] = {}
        pairs = []
        for z in iter_factorizations(M, x):
            L = length(z)
            if L in seen:
                pairs.append((seen[L], z))
            else:
                seen[L] = z
        if pairs:
            z, w = min(pairs)
            return Witness(x, z, w, disjoint_supports(z, w))
    return None


def nondegenerate_relations(M: ReducedMonoid, max_length: int) -> Iterator[tuple[Vector, Factorization, Factorization]]:
    """Distinct factorization pairs with disjoint supports, over sums of at most ``max_length`` atoms."""
    for x in elements_up_to_length(M, max_length):
        zs = list(iter_factorizations(M, x))
        for z, w in combinations(zs, 2):
            if disjoint_supports(z, w):
                yield x, z, w


def relations_outside_master(M: ReducedMonoid, master: MasterFactorization, max_length: int) -> list:
    """Nondegenerate relations in the scan that are not a multiple of the master relation.

    Empty means every nondegenerate relation found is ``master**k``.
    """
    p, q = master.longer, master.shorter
    bad = []
    for x, z, w in nondegenerate_relations(M, max_length):
        ok = False
        for a, b in ((z, w), (w, z)):
            k = a[_first_nonzero(p)] // p[_first_nonzero(p)]
            if k and a == tuple(k * c for c in p) and b == tuple(k * c for c in q):
                ok = True
        if not ok:
            bad.append((x, z, w))
    return bad


def _first_nonzero(z: Factorization) -> int:
    return next(i for i, k in enumerate(z) if k)


def nonprime_atoms(M: ReducedMonoid, max_length: int) -> list[int]:
    """Atom indices shown not to be prime within a bounded scan.

    Atom ``i`` is flagged when some scanned element has one factorization
    using it and another that does not. Atoms not flagged are only prime
    as far as the scan can tell.
    """
    flagged: set[int] = set()
    for x in elements_up_to_length(M, max_length):
        zs = list(iter_factorizations(M, x))
        if len(zs) < 2:
            continue
        for i in range(M.rank):
            uses = {z[i] > 0 for z in zs}
            if len(uses) == 2:
                flagged.add(i)
    return sorted(flagged)
