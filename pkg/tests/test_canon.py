import itertools
import random

import networkx as nx
import pytest

from qmain.canon import cycle_vertices, tree_canonical_code, tree_centers, unicyclic_canonical_code
from qmain.errors import NotATree, NotUnicyclic
from qmain.families import build, g2
from qmain.graph import from_edges

from oracles import brute_force_trees, brute_force_unicyclic, prufer_trees

P4 = from_edges(4, [(0, 1), (1, 2), (2, 3)])
S4 = from_edges(4, [(0, 1), (0, 2), (0, 3)])
C4 = from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def test_tree_code_relabel_and_distinctness():
    reversed_p4 = P4.relabel([3, 2, 1, 0])
    assert tree_canonical_code(P4) == tree_canonical_code(reversed_p4)
    assert tree_canonical_code(S4) != tree_canonical_code(P4)


def test_tree_code_four_vertices_two_classes():
    codes = {tree_canonical_code(from_edges(4, e)) for e in prufer_trees(4)}
    assert len(codes) == 2


def test_tree_centers():
    assert tree_centers(P4) == [1, 2]
    assert tree_centers(S4) == [0]
    assert tree_centers(from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])) == [2]


def test_not_a_tree():
    with pytest.raises(NotATree):
        tree_canonical_code(C4)
    with pytest.raises(NotATree):
        tree_canonical_code(from_edges(4, [(0, 1), (2, 3)]))


def test_unicyclic_code_examples():
    for perm in itertools.permutations(range(4)):
        assert unicyclic_canonical_code(C4.relabel(perm)) == unicyclic_canonical_code(C4)
    assert unicyclic_canonical_code(build(g2(1))) != unicyclic_canonical_code(C4)
    with pytest.raises(NotUnicyclic):
        unicyclic_canonical_code(P4)
    with pytest.raises(NotUnicyclic):
        unicyclic_canonical_code(from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))


def test_cycle_vertices():
    g = build(g2(2))
    cyc = cycle_vertices(g)
    assert sorted(cyc) == list(range(6))
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        assert g.has_edge(a, b)


@pytest.mark.parametrize("n", range(1, 8))
def test_tree_codes_separate_isomorphism_classes(n):
    reps = brute_force_trees(n)
    codes = {tree_canonical_code(from_edges(n, list(g.edges()))) for g in reps}
    assert len(codes) == len(reps)


@pytest.mark.parametrize("n", range(3, 7))
def test_unicyclic_codes_separate_isomorphism_classes(n):
    reps = brute_force_unicyclic(n)
    codes = {unicyclic_canonical_code(from_edges(n, list(g.edges()))) for g in reps}
    assert len(codes) == len(reps)
    if n == 5:
        assert len(codes) == 5


def test_unicyclic_code_agrees_with_networkx_isomorphism():
    # reflection-sensitive case: trees of different shape hanging on a 5-cycle
    rng = random.Random(7)
    graphs = []
    for _ in range(60):
        n = rng.randint(5, 9)
        r = rng.randint(3, n)
        edges = [(i, (i + 1) % r) for i in range(r)]
        for v in range(r, n):
            edges.append((rng.randrange(v), v))
        graphs.append(from_edges(n, edges))
    for g, h in itertools.combinations(graphs, 2):
        if g.n != h.n:
            continue
        same = nx.is_isomorphic(nx.Graph(g.edges()), nx.Graph(h.edges()))
        assert (unicyclic_canonical_code(g) == unicyclic_canonical_code(h)) == same


def test_codes_invariant_under_100_relabelings(trees_by_n, unicyclic_by_n):
    rng = random.Random(2024)
    for n in range(1, 10):
        for g in trees_by_n[n]:
            code = tree_canonical_code(g)
            for _ in range(100):
                perm = list(range(n))
                rng.shuffle(perm)
                assert tree_canonical_code(g.relabel(perm)) == code
    for n in range(3, 10):
        for g in unicyclic_by_n[n]:
            code = unicyclic_canonical_code(g)
            for _ in range(100):
                perm = list(range(n))
                rng.shuffle(perm)
                assert unicyclic_canonical_code(g.relabel(perm)) == code
