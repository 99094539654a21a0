"""Shard graphs, their spanning trees and the beta invariants of their matroids."""

import itertools

import pytest

from shardpoly.matroid import (
    Disconnected,
    MatroidView,
    ShardGraph,
    abd_decomposition,
    beta,
    contract,
    is_2connected,
    is_series_parallel,
    rank,
    shard_graph,
    spanning_trees,
    verify_abd,
    verify_connected_contractions,
    verify_prop72,
)
from shardpoly.weak_order_a import enumerate_arcs, parse_arc


def test_example_graph():
    G = shard_graph(parse_arc("1-4|A=2|B=3", 4))
    assert G.num_vertices == 3
    assert G.labels() == (1, 2, 3, 4)
    assert len(G.loopless()) == 4


def test_loops_for_outside_elements():
    G = shard_graph(parse_arc("2-3|A=|B=", 4))
    loops = [lab for (u, v), lab in G.edges if u == v]
    assert sorted(loops) == [1, 4]


@pytest.mark.parametrize("n", range(2, 8))
def test_spanning_trees_are_vertices(n):
    for alpha in enumerate_arcs(n):
        assert verify_prop72(alpha)


def test_tree_counts_single_edge():
    G = shard_graph(parse_arc("1-2|A=|B=", 2))
    assert spanning_trees(G) == {frozenset({1}), frozenset({2})}


def test_disconnected_rejected():
    with pytest.raises(Disconnected):
        spanning_trees(ShardGraph(3, (((0, 1), 1),), 1))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_structure(n):
    for alpha in enumerate_arcs(n):
        G = shard_graph(alpha)
        assert is_2connected(G)
        assert is_series_parallel(G)


def test_structure_negative():
    K4 = ShardGraph(4, tuple(((u, v), k) for k, (u, v) in enumerate(itertools.combinations(range(4), 2))), 6)
    assert is_2connected(K4)
    assert not is_series_parallel(K4)
    path = ShardGraph(3, (((0, 1), 1), ((1, 2), 2)), 2)
    assert not is_2connected(path)


def brute_is_matroid(M):
    """Oracle: the basis exchange axiom checked directly."""
    return all(
        any((B1 - {x}) | {y} in M.bases for y in B2 - B1)
        for B1, B2 in itertools.product(M.bases, repeat=2)
        for x in B1 - B2
    )


@pytest.mark.parametrize("n", [3, 4, 5])
def test_matroid_axioms(n):
    for alpha in enumerate_arcs(n):
        M = MatroidView.of_arc(alpha)
        assert brute_is_matroid(M)
        assert M.exchange_ok()
        assert M.rank() == len(alpha.B) + 1


@pytest.mark.parametrize("n", [3, 4, 5])
def test_beta_is_one(n):
    for alpha in enumerate_arcs(n):
        M = MatroidView.of_arc(alpha)
        loopless = MatroidView(frozenset(range(alpha.a, alpha.b + 1)), M.bases)
        assert beta(loopless) == 1
        # Elements outside the span are loops, which force beta to zero.
        assert beta(M) == (1 if (alpha.a, alpha.b) == (1, n) else 0)


def test_beta_of_small_matroids():
    # Uniform U(1,2) (two parallel edges) is connected series-parallel.
    assert beta(MatroidView(frozenset({1, 2}), frozenset({frozenset({1}), frozenset({2})}))) == 1
    # Free matroid on two elements (a tree) is disconnected.
    assert beta(MatroidView(frozenset({1, 2}), frozenset({frozenset({1, 2})}))) == 0
    # U(2,4) is not series-parallel: beta is 2.
    U24 = MatroidView(frozenset(range(4)), frozenset(frozenset(c) for c in itertools.combinations(range(4), 2)))
    assert beta(U24) == 2


def test_rank_and_contract():
    M = MatroidView.of_arc(parse_arc("1-4|A=2|B=3", 4))
    assert rank(M, M.ground) == M.rank()
    assert rank(M, ()) == 0
    N = contract(M, {1})
    assert N.ground == M.ground - {1}
    assert N.rank() == M.rank() - rank(M, {1})


@pytest.mark.parametrize("n", [3, 4, 5])
def test_abd_decomposition(n):
    for alpha in enumerate_arcs(n):
        assert verify_abd(alpha)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_connected_contractions(n):
    for alpha in enumerate_arcs(n):
        assert verify_connected_contractions(alpha)


def test_abd_example():
    y, shift = abd_decomposition(MatroidView.of_arc(parse_arc("1-4|A=3|B=2", 4)), 4)
    assert y.as_dict() == {(1, 2): 1, (1, 3, 4): 1, (2, 3, 4): 1, (1, 2, 3, 4): -1}
    assert not any(shift)
