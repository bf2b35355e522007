"""Maximum-efficiency chain search.

Two interchangeable methods:

* best_chain_multiplicative -- Dijkstra over the (max, *) semiring on the
  raw efficiencies: the source starts at weight 1, unreached nodes sit at
  0, the largest-weight unsettled node is settled, and relaxation
  multiplies instead of adding.  Works because every efficiency is <= 1,
  so extending a chain can never increase its product.
* best_chain_via_lossiness -- replace every arc weight by its lossiness
  -log_b(efficiency) and run the classical additive shortest-path search;
  the minimum-lossiness chain is the maximum-product chain because
  -log_b is monotone decreasing on (0, 1].

Both settle nodes in the same order under the same tie-break rule, and
both return a simple chain: revisiting a node can never improve the
product, and relaxation requires strict improvement, so weight-1 arcs
cannot create improvement cycles either.
"""

import math
from dataclasses import dataclass
from heapq import heappop, heappush

from .errors import BadBase, UnknownNode
from .network import Network

TieBreak = str  # "low": settle the smallest label among ties; "high": the largest


@dataclass(frozen=True)
class Chain:
    """An ordered node walk from a source to a target with its efficiency.

    The efficiency equals the product of the traversed arcs' efficiencies,
    accumulated left to right.  A single-node chain (source == target) has
    efficiency 1.0, the empty product.
    """

    nodes: tuple[str, ...]
    efficiency: float

    @property
    def length(self) -> int:
        """Number of links."""
        return len(self.nodes) - 1


class _ReverseOrder:
    """Wrapper inverting comparison, for the reversed tie-break rule."""

    __slots__ = ("value",)

    def __init__(self, value):
        self.value = value

    def __lt__(self, other):
        return self.value > other.value


def _tie_key(tie_break: TieBreak):
    if tie_break == "low":
        return lambda label: label
    if tie_break == "high":
        return _ReverseOrder
    raise ValueError(f"tie_break must be 'low' or 'high', got {tie_break!r}")


def multiplicative_search(
    net: Network, source: str, target: str | None = None, tie_break: TieBreak = "low"
) -> tuple[dict[str, float], dict[str, str], list[str]]:
    """Run the multiplicative Dijkstra sweep from ``source``.

    Returns (weight, pred, settled): final node weights (absent = weight 0,
    unreached), the predecessor of each reached non-source node, and the
    settle order.  Stops as soon as ``target`` is settled; with
    target=None it settles every reachable node (used by the all-pairs
    guaranteed-level sweep).
    """
    key = _tie_key(tie_break)
    if source not in net:
        raise UnknownNode(f"no node {source!r} in network")
    adj = net._adj
    weight = {source: 1.0}
    pred: dict[str, str] = {}
    settled: set[str] = set()
    order: list[str] = []
    heap = [(-1.0, key(source), source)]
    while heap:
        neg_w, _, v = heappop(heap)
        if v in settled:
            continue
        settled.add(v)
        order.append(v)
        if v == target:
            break
        w = -neg_w
        for u, eta in adj[v]:
            if u in settled:
                continue
            candidate = w * eta
            # Strict improvement only: an equal-weight candidate never
            # overwrites an existing history.
            if candidate > weight.get(u, 0.0):
                weight[u] = candidate
                pred[u] = v
                heappush(heap, (-candidate, key(u), u))
    return weight, pred, order


def additive_search(
    net: Network,
    source: str,
    target: str | None = None,
    base: float = 2.0,
    tie_break: TieBreak = "low",
) -> tuple[dict[str, float], dict[str, str], list[str]]:
    """Run the classical min-sum Dijkstra over lossiness weights.

    Arc weights are -log_base(efficiency); the source starts at distance 0
    and unreached nodes are absent (conceptually at infinity).  Returns
    (distance, pred, settled) analogous to multiplicative_search.
    """
    key = _tie_key(tie_break)
    if source not in net:
        raise UnknownNode(f"no node {source!r} in network")
    log_base = math.log(base)
    adj = net._adj
    dist = {source: 0.0}
    pred: dict[str, str] = {}
    settled: set[str] = set()
    order: list[str] = []
    heap = [(0.0, key(source), source)]
    while heap:
        d, _, v = heappop(heap)
        if v in settled:
            continue
        settled.add(v)
        order.append(v)
        if v == target:
            break
        for u, eta in adj[v]:
            if u in settled:
                continue
            candidate = d + abs(math.log(eta) / log_base)
            if candidate < dist.get(u, math.inf):
                dist[u] = candidate
                pred[u] = v
                heappush(heap, (candidate, key(u), u))
    return dist, pred, order


def _reconstruct(pred: dict[str, str], source: str, target: str) -> tuple[str, ...]:
    nodes = [target]
    while nodes[-1] != source:
        nodes.append(pred[nodes[-1]])
    nodes.reverse()
    return tuple(nodes)


def _check_endpoints(net: Network, a: str, z: str) -> None:
    for label in (a, z):
        if label not in net:
            raise UnknownNode(f"no node {label!r} in network")


def best_chain_multiplicative(
    net: Network, a: str, z: str, tie_break: TieBreak = "low"
) -> Chain | None:
    """Find a maximum-efficiency chain from ``a`` to ``z``.

    Returns None when no chain exists.  ``a == z`` yields the single-node
    chain of efficiency 1.  Among unsettled nodes of equal maximal weight
    the tie_break rule decides which settles first; the optimum value does
    not depend on that choice.
    """
    _check_endpoints(net, a, z)
    if a == z:
        return Chain((a,), 1.0)
    weight, pred, _ = multiplicative_search(net, a, target=z, tie_break=tie_break)
    if z not in pred:
        return None
    return Chain(_reconstruct(pred, a, z), weight[z])


def best_chain_via_lossiness(
    net: Network, a: str, z: str, base: float = 2.0, tie_break: TieBreak = "low"
) -> Chain | None:
    """Find a maximum-efficiency chain by minimizing total lossiness.

    Every arc weight is transformed to -log_base(efficiency), a classical
    additive shortest-path search runs on the transformed weights, and the
    winning node sequence is reported with its efficiency recomputed as
    the product of its arcs.  The chosen base does not change which chain
    wins; it only rescales all lossiness totals by a positive constant.
    """
    if base <= 1.0:
        raise BadBase(f"log base must exceed 1, got {base!r}")
    _check_endpoints(net, a, z)
    if a == z:
        return Chain((a,), 1.0)
    _, pred, _ = additive_search(net, a, target=z, base=base, tie_break=tie_break)
    if z not in pred:
        return None
    nodes = _reconstruct(pred, a, z)
    efficiency = 1.0
    for u, v in zip(nodes, nodes[1:]):
        efficiency *= net.step_efficiency(u, v)
    return Chain(nodes, efficiency)
