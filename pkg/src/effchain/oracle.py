"""Exhaustive baselines for cross-checking the fast algorithms.

Everything here is deliberately naive: simple-chain enumeration by depth
first search and spanning-tree enumeration by trying every edge subset.
Both refuse networks large enough to make enumeration explode, so a typo
in a test cannot silently burn minutes.
"""

from itertools import combinations

from .errors import SizeLimitExceeded, UnknownNode
from .network import Edge, Network, UndirectedView
from .routing import Chain

MAX_CHAIN_NODES = 12
MAX_TREE_NODES = 8


def enumerate_chains(net: Network, a: str, z: str) -> list[Chain]:
    """Every simple chain from ``a`` to ``z``, in discovery order.

    Efficiencies are accumulated left to right along each chain.  The
    degenerate a == z case yields the single-node chain alone, matching
    the search convention.
    """
    if len(net.nodes) > MAX_CHAIN_NODES:
        raise SizeLimitExceeded(
            f"chain enumeration is capped at {MAX_CHAIN_NODES} nodes, "
            f"network has {len(net.nodes)}"
        )
    for label in (a, z):
        if label not in net:
            raise UnknownNode(f"no node {label!r} in network")
    if a == z:
        return [Chain((a,), 1.0)]
    adj = net._adj
    found: list[Chain] = []
    path = [a]
    on_path = {a}

    def extend(node: str, efficiency: float) -> None:
        for nxt, eta in adj[node]:
            if nxt in on_path:
                continue
            product = efficiency * eta
            if nxt == z:
                found.append(Chain(tuple(path) + (z,), product))
                continue
            path.append(nxt)
            on_path.add(nxt)
            extend(nxt, product)
            path.pop()
            on_path.remove(nxt)

    extend(a, 1.0)
    return found


def brute_best_chain(net: Network, a: str, z: str) -> Chain | None:
    """The maximum-efficiency chain by full enumeration, or None.

    Ties are broken toward fewer links, then the lexicographically
    smallest node sequence, so the answer is unique and reproducible.
    """
    chains = enumerate_chains(net, a, z)
    if not chains:
        return None
    return min(chains, key=lambda c: (-c.efficiency, c.length, c.nodes))


def enumerate_spanning_trees(view: UndirectedView) -> list[tuple[Edge, ...]]:
    """Every spanning tree of the view, as sorted edge tuples.

    Tries each (n-1)-subset of the edges and keeps those that connect all
    nodes; with exactly n-1 edges, connected and acyclic coincide.
    """
    nodes = view.nodes
    if len(nodes) > MAX_TREE_NODES:
        raise SizeLimitExceeded(
            f"spanning-tree enumeration is capped at {MAX_TREE_NODES} nodes, "
            f"view has {len(nodes)}"
        )
    if len(nodes) <= 1:
        return [()]
    trees: list[tuple[Edge, ...]] = []
    want = len(nodes) - 1
    for subset in combinations(view.edges, want):
        adj: dict[str, list[str]] = {u: [] for u in nodes}
        for e in subset:
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
        seen = {nodes[0]}
        stack = [nodes[0]]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) == len(nodes):
            trees.append(subset)
    return trees


def brute_best_tree(view: UndirectedView) -> tuple[float, tuple[Edge, ...]]:
    """The spanning tree of maximal edge product, by full enumeration.

    Returns (product, edges).  Products are computed over the
    endpoint-sorted edge tuple, the shared convention everywhere a tree
    product appears.  Ties break toward the lexicographically smallest
    endpoint sequence.  An unconnected view has no spanning trees and is
    reported as a ValueError.
    """
    trees = enumerate_spanning_trees(view)
    if not trees:
        raise ValueError("view has no spanning tree; it is not connected")
    best_product = -1.0
    best_edges: tuple[Edge, ...] = ()
    best_key: tuple[tuple[str, str], ...] = ()
    for edges in trees:
        product = 1.0
        for e in edges:
            product *= e.efficiency
        key = tuple((e.u, e.v) for e in edges)
        if product > best_product or (product == best_product and key < best_key):
            best_product = product
            best_edges = edges
            best_key = key
    return best_product, best_edges
