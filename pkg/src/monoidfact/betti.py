"""Betti graphs and Betti elements.

The Betti graph of b has Z(b) as vertices, with an edge between two
factorizations that share an atom; b is a Betti element when the graph
is disconnected.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import MissingBoundError
from .factorization import Factorization, factorizations, iter_factorizations
from .monoid import ElementLike, ReducedMonoid, Vector, atom_gcd, atom_order, frobenius


class UnionFind:
    """Index-based disjoint sets with path compression and union by size."""

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]

    def groups(self) -> list[list[int]]:
        """Components as sorted index lists, ordered by smallest member."""
        by_root: dict[int, list[int]] = {}
        for i in range(len(self.parent)):
            by_root.setdefault(self.find(i), []).append(i)
        return sorted(by_root.values(), key=lambda g: g[0])


@dataclass(frozen=True)
class BettiGraph:
    element: Vector
    vertices: tuple[Factorization, ...]
    edges: tuple[tuple[int, int], ...]
    components: tuple[tuple[int, ...], ...]

    @property
    def connected(self) -> bool:
        return len(self.components) <= 1


COMPLETE = "complete"
BOUNDED = "bounded"


@dataclass(frozen=True)
class BettiSet:
    elements: tuple[Vector, ...]
    completeness: str = COMPLETE
    max_length: int | None = None
    # factorization sets of the listed elements, same order
    factorizations: tuple[tuple[Factorization, ...], ...] = field(default=(), compare=False, repr=False)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.elements


@dataclass(frozen=True)
class BettiOptions:
    max_length: int | None = None


def betti_graph(M: ReducedMonoid, b: ElementLike) -> BettiGraph:
    zs = factorizations(M, b)
    verts = zs.factorizations
    n = len(verts)
    supports = [frozenset(i for i, k in enumerate(z) if k) for z in verts]
    uf = UnionFind(n)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if supports[i] & supports[j]:
                edges.append((i, j))
                uf.union(i, j)
    comps = tuple(tuple(g) for g in uf.groups())
    return BettiGraph(zs.element, verts, tuple(edges), comps)


def is_disconnected(zs: Sequence[Factorization]) -> bool:
    """Connectivity of the Betti graph without materializing its edges.

    Each atom acts as a hub: all factorizations using it are merged.
    """
    if len(zs) < 2:
        return False
    uf = UnionFind(len(zs))
    first: dict[int, int] = {}
    for v, z in enumerate(zs):
        for i, k in enumerate(z):
            if k:
                if i in first:
                    uf.union(first[i], v)
                else:
                    first[i] = v
    root = uf.find(0)
    return any(uf.find(v) != root for v in range(1, len(zs)))


def numerical_scan_bound(M: ReducedMonoid) -> int:
    """Past this value every Betti graph of a numerical monoid is connected."""
    return frobenius(M) + 2 * M.atoms[-1][0]


def elements_up_to_length(M: ReducedMonoid, max_length: int) -> list[Vector]:
    """Distinct images of all exponent vectors of length 1..max_length."""
    seen: set[Vector] = set()
    layer = {tuple(a) for a in M.atoms}
    for _ in range(max_length):
        seen |= layer
        layer = {tuple(x + y for x, y in zip(v, a)) for v in layer for a in M.atoms} - seen
        if not layer:
            break
    return sorted(seen, key=atom_order)


def betti_elements(M: ReducedMonoid, opts: BettiOptions | None = None) -> BettiSet:
    """Betti elements of M.

    Numerical monoids with coprime atoms are scanned exhaustively up to
    ``frobenius + 2 * max atom`` and flagged complete. Any other monoid
    needs ``opts.max_length``: every element that is a sum of at most that
    many atoms is tested, and the result is flagged bounded.
    """
    opts = opts or BettiOptions()
    if M.is_numerical and atom_gcd(M) == 1:
        candidates = [(n,) for n in range(1, numerical_scan_bound(M) + 1)]
        completeness, bound = COMPLETE, None
    else:
        if opts.max_length is None:
            why = "atoms are not coprime" if M.is_numerical else "monoid is not numerical"
            raise MissingBoundError(f"{why}; a max_length bound is required for the Betti search")
        if opts.max_length < 1:
            raise MissingBoundError("max_length must be >= 1")
        candidates = elements_up_to_length(M, opts.max_length)
        completeness, bound = BOUNDED, opts.max_length
    found, facts = [], []
    for x in candidates:
        zs = tuple(iter_factorizations(M, x))
        if is_disconnected(zs):
            found.append(x)
            facts.append(zs)
    return BettiSet(tuple(found), completeness, bound, tuple(facts))


def to_dot(g: BettiGraph, name: str | None = None) -> str:
    """Render a Betti graph as an undirected DOT document."""
    el = str(g.element[0]) if len(g.element) == 1 else ",".join(map(str, g.element))
    title = name or f"betti_{el}".replace(",", "_")
    lines = [
        f'graph "{title}" {{',
        f'  label="{el}";',
        "  node [shape=ellipse];",
    ]
    for i, z in enumerate(g.vertices):
        lines.append(f'  "z{i}" [label="({",".join(map(str, z))})"];')
    for i, j in g.edges:
        lines.append(f'  "z{i}" -- "z{j}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
