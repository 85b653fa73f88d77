import random

import pytest

from monoidfact import (
    BettiOptions,
    MissingBoundError,
    MonoidPresentation,
    NotInMonoidError,
    betti_elements,
    betti_graph,
    build_monoid,
    frobenius,
    to_dot,
)
from monoidfact.betti import UnionFind, numerical_scan_bound
from oracles import bfs_disconnected, dp_factorizations, random_numerical_corpus

BETTI_S = [24, 28, 29, 30, 32, 33, 34, 35, 36, 37, 38, 39, 42, 43, 44]


def test_betti_S(S):
    b = betti_elements(S)
    assert [x[0] for x in b] == BETTI_S
    assert b.completeness == "complete" and b.max_length is None


def test_betti_two_three(two_three):
    assert betti_elements(two_three).elements == ((6,),)


def test_betti_U(U):
    b = betti_elements(U, BettiOptions(6))
    assert b.elements == ((1, 1, 1, 1),)
    assert b.completeness == "bounded" and b.max_length == 6


def test_affine_requires_bound(U):
    with pytest.raises(MissingBoundError):
        betti_elements(U)
    with pytest.raises(MissingBoundError):
        betti_elements(build_monoid(MonoidPresentation.numerical([4, 6])))


def test_non_coprime_numerical_bounded():
    b = betti_elements(build_monoid(MonoidPresentation.numerical([4, 6])), BettiOptions(6))
    assert b.elements == ((12,),)


def test_graph_43(S):
    g = betti_graph(S, 43)
    assert len(g.vertices) == 4 and len(g.edges) == 2
    comps = [{g.vertices[i] for i in c} for c in g.components]
    z1, z2, z3, z4 = (1, 0, 0, 2, 0, 0, 0), (2, 0, 0, 0, 0, 0, 1), (0, 0, 2, 0, 1, 0, 0), (0, 1, 1, 0, 0, 1, 0)
    assert sorted(comps, key=min) == sorted([{z1, z2}, {z3, z4}], key=min)
    assert not g.connected


def test_graph_45(S):
    g = betti_graph(S, 45)
    assert len(g.vertices) == 7 and g.connected
    shared = sum(
        1 for i in range(7) for j in range(i + 1, 7)
        if any(a and b for a, b in zip(g.vertices[i], g.vertices[j]))
    )
    assert len(g.edges) == shared


def test_graph_of_atom(S):
    g = betti_graph(S, 11)
    assert len(g.vertices) == 1 and g.edges == () and g.connected


def test_graph_rejects_non_member(S):
    with pytest.raises(NotInMonoidError):
        betti_graph(S, 15)


def test_edge_soundness(S):
    for n in (43, 45, 60, 77):
        g = betti_graph(S, n)
        edges = set(g.edges)
        for i in range(len(g.vertices)):
            for j in range(i + 1, len(g.vertices)):
                share = any(a and b for a, b in zip(g.vertices[i], g.vertices[j]))
                assert share == ((i, j) in edges)


def test_components_numbered_by_smallest_vertex(S):
    g = betti_graph(S, 43)
    assert [c[0] for c in g.components] == sorted(c[0] for c in g.components)
    assert sorted(i for c in g.components for i in c) == list(range(len(g.vertices)))


def test_connected_above_scan_bound():
    rng = random.Random(7)
    for gens in random_numerical_corpus(15, seed=11):
        M = build_monoid(MonoidPresentation.numerical(gens))
        bound = numerical_scan_bound(M)
        for n in rng.sample(range(bound + 1, bound + 400), 10):
            assert betti_graph(M, n).connected


def test_betti_membership_matches_bfs_oracle():
    for gens in random_numerical_corpus(10, seed=3, max_atom=20):
        M = build_monoid(MonoidPresentation.numerical(gens))
        atoms = [a[0] for a in M.atoms]
        limit = numerical_scan_bound(M)
        Z = dp_factorizations(atoms, limit)
        expected = [n for n in range(1, limit + 1) if bfs_disconnected(Z[n])]
        assert [x[0] for x in betti_elements(M)] == expected


def test_betti_elements_have_disjoint_factorization_pair(S):
    b = betti_elements(S)
    for x, zs in zip(b.elements, b.factorizations):
        assert any(
            not any(p and q for p, q in zip(z, w)) for z in zs for w in zs if z != w
        ), x


def test_bounded_search_is_monotone():
    M = build_monoid(MonoidPresentation.kernel([[1, 2, -3, -1]]))
    small = set(betti_elements(M, BettiOptions(3)))
    large = set(betti_elements(M, BettiOptions(5)))
    assert small <= large


def test_union_find():
    uf = UnionFind(5)
    uf.union(3, 4)
    uf.union(1, 3)
    assert uf.groups() == [[0], [1, 3, 4], [2]]


def test_dot_single_vertex(S):
    dot = to_dot(betti_graph(S, 11))
    assert dot.startswith('graph "betti_11" {')
    assert '"z0" [label="(1,0,0,0,0,0,0)"];' in dot
    assert "--" not in dot


def test_dot_43_and_45(S):
    d43 = to_dot(betti_graph(S, 43))
    assert d43.count("[label=\"(") == 4 and d43.count(" -- ") == 2
    g45 = betti_graph(S, 45)
    d45 = to_dot(g45)
    assert d45.count("[label=\"(") == 7 and d45.count(" -- ") == len(g45.edges)
    assert to_dot(g45) == d45


def test_affine_dot_label(U):
    assert 'label="1,1,1,1";' in to_dot(betti_graph(U, (1, 1, 1, 1)))


def test_frobenius_of_S(S):
    # every Betti element lies below the scan bound
    assert max(BETTI_S) <= frobenius(S) + 2 * 21
