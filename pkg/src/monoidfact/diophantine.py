"""Minimal nonnegative solutions of homogeneous linear Diophantine systems.

Breadth-first completion: a frontier vector ``x`` is extended by a unit
vector ``e_j`` only when ``<A x, A e_j> < 0`` (the step moves A x towards
zero), and any candidate dominating an accepted solution is discarded.
Level ``k`` of the search holds vectors of coordinate sum ``k``, so each
solution is accepted before any vector dominating it is generated.
"""
from __future__ import annotations

from typing import Sequence

from .errors import PresentationError, ResourceLimitError

Vector = tuple[int, ...]


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def _dominates(x: Vector, s: Vector) -> bool:
    return all(a >= b for a, b in zip(x, s))


def default_cap(matrix: Sequence[Sequence[int]]) -> int:
    n = len(matrix[0])
    return 10 * n * max(1, max(abs(c) for row in matrix for c in row))


def minimal_nonneg_solutions(matrix: Sequence[Sequence[int]], max_coordinate_sum: int | None = None) -> list[Vector]:
    """Nonzero componentwise-minimal x in N_0^n with A x = 0.

    Sorted by coordinate sum, then lexicographically. Raises
    :class:`ResourceLimitError` if the frontier is still nonempty past
    ``max_coordinate_sum`` (default ``10 * n * max|A_ij|``).
    """
    rows = [tuple(r) for r in matrix]
    if not rows or not rows[0] or len({len(r) for r in rows}) != 1:
        raise PresentationError("matrix must have at least one row and one column, rows of equal length")
    n = len(rows[0])
    cap = default_cap(rows) if max_coordinate_sum is None else max_coordinate_sum
    columns = [tuple(r[j] for r in rows) for j in range(n)]

    def image(x: Vector) -> Vector:
        return tuple(_dot(r, x) for r in rows)

    minimal: list[Vector] = []
    frontier = {tuple(int(i == j) for i in range(n)) for j in range(n)}
    level = 1
    while frontier:
        if level > cap:
            raise ResourceLimitError(
                f"completion did not finish within coordinate sum {cap}; raise max_coordinate_sum"
            )
        found = sorted(x for x in frontier if not any(image(x)))
        minimal.extend(found)
        nxt: set[Vector] = set()
        for x in frontier:
            ax = image(x)
            if not any(ax):
                continue
            for j in range(n):
                if _dot(ax, columns[j]) >= 0:
                    continue
                y = x[:j] + (x[j] + 1,) + x[j + 1:]
                if not any(_dominates(y, s) for s in minimal):
                    nxt.add(y)
        frontier = nxt
        level += 1
    return minimal
