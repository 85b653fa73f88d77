"""Brute-force reference computations, deliberately independent of the library paths."""
from __future__ import annotations

import random
from collections import deque
from functools import reduce
from itertools import combinations, product
from math import gcd


def sieve_members(gens, limit):
    """member[n] for 0 <= n <= limit, by forward reachability."""
    member = [False] * (limit + 1)
    member[0] = True
    for n in range(1, limit + 1):
        member[n] = any(n >= g and member[n - g] for g in gens)
    return member


def sieve_frobenius(gens):
    limit = max(gens) ** 2 + max(gens)
    member = sieve_members(gens, limit)
    gaps = [n for n, m in enumerate(member) if not m]
    return max(gaps) if gaps else -1


def dp_factorizations(gens, limit):
    """Z(n) for every n <= limit, built bottom-up: Z(n) = U_i Z(n - g_i) + e_i."""
    t = len(gens)
    Z = [set() for _ in range(limit + 1)]
    Z[0].add((0,) * t)
    for n in range(1, limit + 1):
        for i, g in enumerate(gens):
            if n >= g:
                for z in Z[n - g]:
                    Z[n].add(z[:i] + (z[i] + 1,) + z[i + 1:])
    return Z


def bfs_disconnected(zs):
    """Connectivity of the shared-atom graph by explicit adjacency and BFS."""
    zs = list(zs)
    if len(zs) < 2:
        return False
    adj = {i: [j for j in range(len(zs)) if j != i and any(a and b for a, b in zip(zs[i], zs[j]))]
           for i in range(len(zs))}
    seen, queue = {0}, deque([0])
    while queue:
        for j in adj[queue.popleft()]:
            if j not in seen:
                seen.add(j)
                queue.append(j)
    return len(seen) < len(zs)


def box_solutions(matrix, box):
    n = len(matrix[0])
    return [x for x in product(range(box + 1), repeat=n)
            if any(x) and all(sum(a * b for a, b in zip(row, x)) == 0 for row in matrix)]


def minimal_elements(vectors):
    vs = set(vectors)
    return {v for v in vs if not any(w != v and all(a <= b for a, b in zip(w, v)) for w in vs)}


def brute_block_atoms(orders, max_total):
    """Minimal zero-sum multiplicity vectors over G minus 0, with total <= max_total."""
    elems = [g for g in product(*(range(n) for n in orders)) if any(g)]

    def zero_sum(m):
        return all(sum(k * g[c] for k, g in zip(m, elems)) % n == 0 for c, n in enumerate(orders))

    out = set()
    for m in product(range(max_total + 1), repeat=len(elems)):
        if not 0 < sum(m) <= max_total or not zero_sum(m):
            continue
        proper = (s for s in product(*(range(k + 1) for k in m)) if any(s) and s != m)
        if not any(zero_sum(s) for s in proper):
            out.add(m)
    return out


def random_numerical_corpus(count, seed, max_atom=40, max_gens=5):
    rng = random.Random(seed)
    corpus = []
    while len(corpus) < count:
        gens = sorted(set(rng.sample(range(2, max_atom + 1), rng.randint(2, max_gens))))
        if reduce(gcd, gens) == 1:
            corpus.append(gens)
    return corpus


def direct_flags(gens, collision_length=None):
    """Factorial / HF / LF decided from the definitions by bounded exhaustive scans.

    The value scan runs to a1*a2 (two smallest generators), far enough for
    a1^{a2} = a2^{a1} to break uniqueness and half-factoriality. The
    equal-length scan runs over all multisets of n generators for
    n <= max - min + 1, which reaches the relation
    c^{b-a} a^{c-b} = b^{c-a} of any three generators a < b < c.
    """
    gens = sorted(gens)
    limit = gens[0] * gens[1] if len(gens) > 1 else gens[0]
    count = [0] * (limit + 1)
    lo = [None] * (limit + 1)
    hi = [None] * (limit + 1)
    count[0], lo[0], hi[0] = 1, 0, 0
    for g in gens:  # unbounded-knapsack count, each multiset counted once
        for n in range(g, limit + 1):
            count[n] += count[n - g]
    for n in range(1, limit + 1):
        prev = [n - g for g in gens if n >= g and lo[n - g] is not None]
        if prev:
            lo[n] = 1 + min(lo[p] for p in prev)
            hi[n] = 1 + max(hi[p] for p in prev)
    factorial = all(c <= 1 for c in count)
    half = all(lo[n] == hi[n] for n in range(limit + 1) if lo[n] is not None)

    span = collision_length or (gens[-1] - gens[0] + 1)
    length_factorial = True
    layer = {(0, (0,) * len(gens))}
    for _ in range(span):
        images = {}
        nxt = set()
        for s, z in layer:
            for i, g in enumerate(gens):
                nxt.add((s + g, z[:i] + (z[i] + 1,) + z[i + 1:]))
        for s, z in nxt:
            if images.setdefault(s, z) != z:
                length_factorial = False
                break
        if not length_factorial:
            break
        layer = nxt
    return factorial, half, length_factorial


def nondegenerate_pairs(zs):
    return [(z, w) for z, w in combinations(sorted(zs), 2) if not any(a and b for a, b in zip(z, w))]
