from itertools import combinations

import pytest

from oracles import clique_brute, is_join_brute
from wreathkit.groups import Cyclic, FreeAbelian
from wreathkit.sgraph import LazyCayley, SimpGraph, cayley_adjacent, clique_number, induced, is_join


def graph(vs, es):
    return SimpGraph.from_edges(vs, es)


C4 = graph("abcd", ["ab", "bc", "cd", "da"])
C5 = graph("abcde", ["ab", "bc", "cd", "de", "ea"])
K3 = graph("abc", ["ab", "bc", "ca"])
PATH = graph("abc", ["ab", "bc"])


def test_join_of_square_splits_diagonals():
    parts = {frozenset(p) for p in is_join(C4)}
    assert parts == {frozenset("ac"), frozenset("bd")}


def test_join_of_path():
    parts = {frozenset(p) for p in is_join(PATH)}
    assert parts == {frozenset("b"), frozenset("ac")}


def test_two_isolated_vertices_not_join():
    assert is_join(graph("ab", [])) is None


def test_join_needs_two_vertices():
    with pytest.raises(ValueError):
        is_join(graph("a", []))


def all_graphs(n):
    vs = list(range(n))
    pairs = list(combinations(vs, 2))
    for mask in range(1 << len(pairs)):
        yield vs, [p for i, p in enumerate(pairs) if mask >> i & 1]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_join_matches_brute_force(n):
    for vs, es in all_graphs(n):
        g = graph(vs, es)
        witness = is_join(g)
        assert (witness is not None) == is_join_brute(vs, es)
        if witness:
            a, b = witness
            assert a and b and set(a) | set(b) == set(vs)
            assert all(g.adjacent(x, y) for x in a for y in b)


def test_join_matches_brute_force_six_vertices(rng):
    pairs = list(combinations(range(6), 2))
    for _ in range(400):
        es = [p for p in pairs if rng.random() < 0.5]
        assert (is_join(graph(range(6), es)) is not None) == is_join_brute(range(6), es)


def test_clique_examples():
    assert clique_number(graph("abc", [])) == 1
    assert clique_number(K3) == 3
    assert clique_number(C5) == 2


@pytest.mark.parametrize("n", [3, 4, 5])
def test_clique_matches_brute_force(n):
    for vs, es in all_graphs(n):
        assert clique_number(graph(vs, es)) == clique_brute(vs, es)


def test_induced():
    assert induced(C4, "ac").edges == frozenset()
    assert induced(K3, "ab").edges == {frozenset("ab")}
    assert induced(K3, "abc") == K3
    with pytest.raises(KeyError):
        induced(K3, "az")


def test_cayley_adjacency_examples():
    c = LazyCayley(Cyclic(0), [1])
    assert cayley_adjacent(c, 3, 4)
    assert not cayley_adjacent(c, 3, 5)
    z2 = FreeAbelian(2)
    c2 = LazyCayley(z2, [z2.basis(0), z2.basis(1)])
    assert cayley_adjacent(c2, (0, 0), (1, 0))


def test_cayley_set_symmetrized_without_identity():
    c = LazyCayley(Cyclic(0), [2, 0])
    assert c.S == frozenset({2, -2})


def test_cayley_symmetric_and_left_invariant(rng):
    c = LazyCayley(Cyclic(0), [1, 3])
    for _ in range(300):
        b1, b2, b = (rng.randint(-8, 8) for _ in range(3))
        assert cayley_adjacent(c, b1, b2) == cayley_adjacent(c, b2, b1)
        assert cayley_adjacent(c, b1, b2) == cayley_adjacent(c, b + b1, b + b2)


def test_graph_json_round_trip():
    assert SimpGraph.from_json(C4.to_json()) == C4
