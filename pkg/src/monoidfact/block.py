"""Block monoids B(G) of finite abelian groups.

Elements of G = Z_{n_1} x ... x Z_{n_k} are tuples, and G \\ {0} is
enumerated lexicographically. A zero-sum sequence is a multiplicity
vector over that enumeration. The zero element is a prime of B(G) and is
left out of the embedding.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Sequence

from .errors import PresentationError, ResourceLimitError
from .monoid import MonoidPresentation, ReducedMonoid, atom_order

DEFAULT_MAX_ORDER = 64

GroupElement = tuple[int, ...]


@dataclass(frozen=True)
class FiniteAbelianGroup:
    orders: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.orders or any(n < 2 for n in self.orders):
            raise PresentationError("invariant factors must all be >= 2")

    @property
    def order(self) -> int:
        return prod(self.orders)

    def nonzero_elements(self) -> list[GroupElement]:
        return [g for g in product(*(range(n) for n in self.orders)) if any(g)]

    def add(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return tuple((a + b) % n for a, b, n in zip(g, h, self.orders))

    def neg(self, g: GroupElement) -> GroupElement:
        return tuple(-a % n for a, n in zip(g, self.orders))

    def davenport_lower_bound(self) -> int:
        """1 + sum(n_i - 1); equals D(G) for cyclic groups and p-groups."""
        return 1 + sum(n - 1 for n in self.orders)


def _group(G) -> FiniteAbelianGroup:
    return G if isinstance(G, FiniteAbelianGroup) else FiniteAbelianGroup(tuple(G))


def sequence_sum(G: FiniteAbelianGroup, mult: Sequence[int]) -> GroupElement:
    total = tuple(0 for _ in G.orders)
    for g, k in zip(G.nonzero_elements(), mult):
        scaled = tuple(a * k for a in g)
        total = G.add(total, scaled)
    return total


def block_atoms(G, max_order: int = DEFAULT_MAX_ORDER) -> list[tuple[int, ...]]:
    """Minimal zero-sum sequences over G \\ {0}, as multiplicity vectors.

    Every minimal zero-sum sequence is ``S * (-sigma(S))`` for a nonempty
    zero-sum-free ``S``, and conversely. Zero-sum-free sequences are grown
    one element at a time in nondecreasing element order; a sequence is
    kept while its subsequence sums avoid zero.
    """
    G = _group(G)
    if G.order > max_order:
        raise ResourceLimitError(f"group order {G.order} exceeds the cap {max_order}")
    elems = G.nonzero_elements()
    index = {g: i for i, g in enumerate(elems)}
    zero = tuple(0 for _ in G.orders)
    atoms: set[tuple[int, ...]] = set()

    # sums: set of all nonempty subsequence sums of the current sequence
    def grow(start: int, mult: list[int], total: GroupElement, sums: frozenset) -> None:
        for i in range(start, len(elems)):
            g = elems[i]
            new_sums = sums | {G.add(s, g) for s in sums} | {g}
            if zero in new_sums:
                continue
            mult[i] += 1
            new_total = G.add(total, g)
            closing = list(mult)
            closing[index[G.neg(new_total)]] += 1
            atoms.add(tuple(closing))
            grow(i, mult, new_total, frozenset(new_sums))
            mult[i] -= 1

    grow(0, [0] * len(elems), zero, frozenset())
    return sorted(atoms, key=atom_order)


def block_monoid(G, max_order: int = DEFAULT_MAX_ORDER, presentation: MonoidPresentation | None = None) -> ReducedMonoid:
    G = _group(G)
    atoms = block_atoms(G, max_order=max_order)
    if presentation is None:
        presentation = MonoidPresentation.block(G.orders)
    return ReducedMonoid(G.order - 1, tuple(atoms), presentation)
