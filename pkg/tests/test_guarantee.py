import math
import random

import pytest

from effchain import (
    Chain,
    Network,
    NotConnected,
    NotSymmetric,
    SomePairUnreachable,
    UnknownNode,
    as_symmetric,
    best_chain_multiplicative,
    build_network,
    guaranteed_min_all_pairs,
    guaranteed_min_by_tree,
    max_product_spanning_tree,
    tree_path,
)
from effchain.oracle import brute_best_tree
from helpers import random_connected_undirected, random_tree


def _triangle():
    return build_network(
        [("a", "b", 0.9, True), ("b", "c", 0.8, True), ("a", "c", 0.7, True)]
    )


def test_triangle_tree_drops_weakest_edge():
    level = guaranteed_min_by_tree(_triangle())
    assert [(e.u, e.v) for e in level.tree.edges] == [("a", "b"), ("b", "c")]
    assert level.value == 0.9 * 0.8
    assert level.method == "tree"


def test_triangle_methods_coincide():
    # Here the worst pair's best chain is forced through both tree edges,
    # so the conservative bound happens to be tight.
    tree = guaranteed_min_by_tree(_triangle())
    exact = guaranteed_min_all_pairs(_triangle())
    assert tree.value == exact.value
    assert exact.value == pytest.approx(0.72)
    assert exact.worst_pair == ("a", "c")
    assert exact.worst_chain.nodes == ("a", "b", "c")


def test_path_network_methods_coincide():
    net = build_network([("a", "b", 0.9, True), ("b", "c", 0.9, True)])
    assert guaranteed_min_by_tree(net).value == 0.81
    assert guaranteed_min_all_pairs(net).value == 0.81


def test_star_tree_bound_is_strictly_conservative():
    net = build_network(
        [("s", "a", 0.9, True), ("s", "b", 0.8, True), ("s", "c", 0.7, True)]
    )
    tree = guaranteed_min_by_tree(net)
    exact = guaranteed_min_all_pairs(net)
    assert tree.value == 0.9 * 0.8 * 0.7
    assert exact.value == 0.8 * 0.7
    assert tree.value < exact.value


def test_tree_method_requires_symmetric():
    with pytest.raises(NotSymmetric):
        guaranteed_min_by_tree(build_network([("a", "b", 0.9, False)]))


def test_tree_method_requires_connected():
    net = build_network([("a", "b", 0.9, True), ("c", "d", 0.9, True)])
    with pytest.raises(NotConnected):
        guaranteed_min_by_tree(net)


def test_all_pairs_reports_unreachable_pair():
    net = build_network([("a", "b", 0.9, False)])
    with pytest.raises(SomePairUnreachable) as exc_info:
        guaranteed_min_all_pairs(net)
    assert exc_info.value.pair == ("a", "b") or exc_info.value.pair == ("b", "a")


def test_all_pairs_on_directed_cycle():
    net = build_network(
        [("a", "b", 0.9, False), ("b", "c", 0.9, False), ("c", "a", 0.9, False)]
    )
    level = guaranteed_min_all_pairs(net)
    assert level.value == pytest.approx(0.81)
    assert level.worst_chain.length == 2


def test_all_pairs_witness_is_attained():
    rng = random.Random(600)
    for _ in range(50):
        net = random_connected_undirected(rng)
        level = guaranteed_min_all_pairs(net)
        u, v = level.worst_pair
        recomputed = best_chain_multiplicative(net, u, v)
        assert recomputed.efficiency == level.value
        assert level.worst_chain.nodes[0] == u
        assert level.worst_chain.nodes[-1] == v


def test_tree_bound_never_exceeds_exact_value():
    # When the worst chain happens to use every tree edge, the two sides
    # multiply the same factors in different orders and may differ by an
    # ulp; the isclose guard covers exactly that case.
    rng = random.Random(601)
    for _ in range(100):
        net = random_connected_undirected(rng)
        tree = guaranteed_min_by_tree(net)
        exact = guaranteed_min_all_pairs(net)
        assert tree.value <= exact.value or math.isclose(
            tree.value, exact.value, rel_tol=1e-12
        )


def test_every_pair_meets_the_tree_bound():
    rng = random.Random(602)
    for _ in range(30):
        net = random_connected_undirected(rng)
        bound = guaranteed_min_by_tree(net).value
        for a in net.nodes:
            for z in net.nodes:
                if a != z:
                    best = best_chain_multiplicative(net, a, z)
                    assert best.efficiency >= bound or math.isclose(
                        best.efficiency, bound, rel_tol=1e-12
                    )


def test_kruskal_matches_exhaustive_maximum():
    rng = random.Random(603)
    for _ in range(60):
        view = as_symmetric(random_connected_undirected(rng))
        tree = max_product_spanning_tree(view)
        brute_product, brute_edges = brute_best_tree(view)
        assert tree.product == brute_product
        assert tree.edges == brute_edges


def test_kruskal_tie_break_is_lexicographic():
    rng = random.Random(0)
    net = build_network(
        [("a", "b", 0.9, True), ("a", "c", 0.9, True), ("b", "c", 0.9, True)]
    )
    tree = max_product_spanning_tree(as_symmetric(net))
    assert [(e.u, e.v) for e in tree.edges] == [("a", "b"), ("a", "c")]


def test_empty_and_single_node_trees():
    empty = max_product_spanning_tree(as_symmetric(build_network([])))
    assert empty.edges == ()
    assert empty.product == 1.0
    single = Network(("a",), ())
    assert guaranteed_min_all_pairs(single).value == 1.0


def test_tree_path_on_star():
    net = build_network(
        [("s", "a", 0.9, True), ("s", "b", 0.8, True), ("s", "c", 0.7, True)]
    )
    tree = max_product_spanning_tree(as_symmetric(net))
    path = tree_path(tree, "a", "c")
    assert path.nodes == ("a", "s", "c")
    assert path.efficiency == 0.9 * 0.7


def test_tree_path_same_node_and_unknown_node():
    net = build_network([("a", "b", 0.9, True)])
    tree = max_product_spanning_tree(as_symmetric(net))
    assert tree_path(tree, "a", "a") == Chain(("a",), 1.0)
    with pytest.raises(UnknownNode):
        tree_path(tree, "a", "q")


def test_tree_paths_respect_the_full_product_bound():
    # The isclose guard covers paths using every tree edge, where the two
    # products multiply the same factors in different orders.
    rng = random.Random(604)
    for _ in range(50):
        net = random_tree(rng)
        tree = max_product_spanning_tree(as_symmetric(net))
        for u in tree.nodes:
            for v in tree.nodes:
                path = tree_path(tree, u, v)
                assert path.efficiency >= tree.product or math.isclose(
                    path.efficiency, tree.product, rel_tol=1e-12
                )


def test_guaranteed_level_fields_by_method():
    net = build_network([("a", "b", 0.9, True)])
    tree = guaranteed_min_by_tree(net)
    assert tree.tree is not None
    assert tree.worst_pair is None
    exact = guaranteed_min_all_pairs(net)
    assert exact.tree is None
    assert exact.worst_pair is not None
