"""Logistic network data model.

A network is a set of node labels plus a list of arcs, each carrying an
efficiency in (0, 1].  A pair of opposite directed arcs with equal
efficiency is collapsed into a single undirected link at build time;
service then flows both ways over that link with the same efficiency.
Node labels are plain strings (non-empty, no commas, no whitespace), and
every iteration order in the package is ascending by label so runs are
reproducible.

Networks are immutable after build_network returns and are safe to share
across threads; each query owns its own working state.
"""

from dataclasses import dataclass
from enum import Enum

from .algebra import check_efficiency
from .errors import (
    BadLabel,
    ConflictingArc,
    DuplicateArc,
    NotSymmetric,
    SelfLoop,
    UnknownNode,
)

# Opposite directed arcs merge into one undirected link when their
# efficiencies differ by no more than this.
MERGE_TOLERANCE = 1e-12


@dataclass(frozen=True, slots=True)
class Arc:
    """One service-carrying connection.

    A directed arc carries service tail -> head only.  An undirected arc
    (stored with tail < head) carries it both ways with equal efficiency.
    """

    tail: str
    head: str
    efficiency: float
    undirected: bool = False


@dataclass(frozen=True, slots=True)
class Edge:
    """An unordered weighted edge of an undirected view; u < v always."""

    u: str
    v: str
    efficiency: float


class NetworkKind(Enum):
    ONE_SIDED = "one-sided"
    SYMMETRIC_TWO_SIDED = "symmetric-two-sided"
    ASYMMETRIC_TWO_SIDED = "asymmetric-two-sided"
    MIXED = "mixed"


def validate_label(label: str, *, line: int | None = None) -> str:
    if not isinstance(label, str) or not label:
        raise BadLabel(f"node label must be a non-empty string, got {label!r}", line=line)
    if "," in label or any(ch.isspace() for ch in label):
        raise BadLabel(f"node label may not contain commas or whitespace: {label!r}", line=line)
    return label


class Network:
    """An immutable arc-weighted directed graph with optional undirected links.

    Use build_network() to construct one; it validates arcs and performs
    the opposite-arc merge.  The constructor itself assumes canonical,
    already-validated input.
    """

    __slots__ = ("_nodes", "_arcs", "_adj", "_eff")

    def __init__(self, nodes: tuple[str, ...], arcs: tuple[Arc, ...]):
        self._nodes = nodes
        self._arcs = arcs
        adj: dict[str, list[tuple[str, float]]] = {u: [] for u in nodes}
        eff: dict[tuple[str, str], float] = {}
        for arc in arcs:
            adj[arc.tail].append((arc.head, arc.efficiency))
            eff[(arc.tail, arc.head)] = arc.efficiency
            if arc.undirected:
                adj[arc.head].append((arc.tail, arc.efficiency))
                eff[(arc.head, arc.tail)] = arc.efficiency
        for u in adj:
            adj[u].sort()
        self._adj = adj
        self._eff = eff

    @property
    def nodes(self) -> tuple[str, ...]:
        """All node labels, ascending."""
        return self._nodes

    @property
    def arcs(self) -> tuple[Arc, ...]:
        """All arcs in canonical (tail, head) order."""
        return self._arcs

    def out_neighbors(self, u: str) -> list[tuple[str, float]]:
        """Nodes reachable from ``u`` in one service-carrying step.

        Heads of directed arcs leaving ``u`` plus the far endpoints of
        undirected links touching it, as (label, efficiency) pairs in
        ascending label order.
        """
        try:
            return list(self._adj[u])
        except KeyError:
            raise UnknownNode(f"no node {u!r} in network") from None

    def step_efficiency(self, u: str, v: str) -> float:
        """Efficiency of the single step u -> v, if the network carries one."""
        try:
            return self._eff[(u, v)]
        except KeyError:
            raise UnknownNode(f"no service-carrying step {u!r} -> {v!r}") from None

    def has_step(self, u: str, v: str) -> bool:
        return (u, v) in self._eff

    def __contains__(self, label: str) -> bool:
        return label in self._adj

    def __eq__(self, other) -> bool:
        if not isinstance(other, Network):
            return NotImplemented
        return self._nodes == other._nodes and self._arcs == other._arcs

    def __hash__(self):
        return hash((self._nodes, self._arcs))

    def __repr__(self) -> str:
        return f"Network({len(self._nodes)} nodes, {len(self._arcs)} arcs)"


@dataclass(frozen=True)
class UndirectedView:
    """A symmetric network exposed as a plain undirected weighted graph."""

    nodes: tuple[str, ...]
    edges: tuple[Edge, ...]

    def adjacency(self) -> dict[str, list[tuple[str, float]]]:
        adj: dict[str, list[tuple[str, float]]] = {u: [] for u in self.nodes}
        for e in self.edges:
            adj[e.u].append((e.v, e.efficiency))
            adj[e.v].append((e.u, e.efficiency))
        for u in adj:
            adj[u].sort()
        return adj


RawArc = tuple[str, str, float, bool]


def build_network(raw_arcs: list[RawArc] | tuple[RawArc, ...]) -> Network:
    """Validate raw (tail, head, efficiency, undirected) tuples into a Network.

    Opposite directed arcs whose efficiencies agree within MERGE_TOLERANCE
    become one undirected link (carrying the efficiency of the arc whose
    tail is the smaller label).  Opposite arcs with different efficiencies
    are both kept.  Rebuilding from a built network's arcs reproduces it.
    """
    directed: dict[tuple[str, str], float] = {}
    undirected: dict[tuple[str, str], float] = {}
    seen_labels: set[str] = set()
    nodes: set[str] = set()

    for tail, head, eta, undir in raw_arcs:
        for label in (tail, head):
            if label not in seen_labels:
                validate_label(label)
                seen_labels.add(label)
        if tail == head:
            raise SelfLoop(f"self-loop on node {tail!r}", pair=(tail, head))
        check_efficiency(eta, pair=(tail, head))
        nodes.add(tail)
        nodes.add(head)
        if undir:
            key = (tail, head) if tail < head else (head, tail)
            if key in undirected:
                raise DuplicateArc(
                    f"duplicate undirected link {key[0]!r} -- {key[1]!r}", pair=key
                )
            undirected[key] = eta
        else:
            key = (tail, head)
            if key in directed:
                raise DuplicateArc(f"duplicate arc {tail!r} -> {head!r}", pair=key)
            directed[key] = eta

    # A directed arc and an undirected link may not share an unordered pair.
    for (tail, head) in directed:
        key = (tail, head) if tail < head else (head, tail)
        if key in undirected:
            raise ConflictingArc(
                f"pair {key[0]!r} -- {key[1]!r} declared both directed and undirected",
                pair=(tail, head),
            )

    # Merge opposite directed arcs of (tolerably) equal efficiency.
    arcs: list[Arc] = []
    for (tail, head), eta in directed.items():
        if tail < head and (head, tail) in directed:
            if abs(eta - directed[(head, tail)]) <= MERGE_TOLERANCE:
                undirected[(tail, head)] = eta
                continue
        elif tail > head and (head, tail) in directed:
            if abs(eta - directed[(head, tail)]) <= MERGE_TOLERANCE:
                continue  # merged when the opposite arc was visited
        arcs.append(Arc(tail, head, eta, undirected=False))
    for (u, v), eta in undirected.items():
        arcs.append(Arc(u, v, eta, undirected=True))

    arcs.sort(key=lambda a: (a.tail, a.head))
    return Network(tuple(sorted(nodes)), tuple(arcs))


def classify(net: Network) -> NetworkKind:
    """Classify a network by how service flows between node pairs.

    One-sided: no pair carries service both ways (a network with no arcs
    counts as one-sided).  Two-sided: every pair with service carries it
    both ways -- symmetric when all such pairs collapsed to undirected
    links, asymmetric when some pair kept two unequal directed arcs.
    Mixed: anything else.
    """
    any_both_ways = False
    all_both_ways = True
    any_directed_pair = False
    directed_pairs = {(a.tail, a.head) for a in net.arcs if not a.undirected}
    for arc in net.arcs:
        if arc.undirected:
            any_both_ways = True
        elif (arc.head, arc.tail) in directed_pairs:
            any_both_ways = True
            any_directed_pair = True
        else:
            all_both_ways = False
    if not any_both_ways:
        return NetworkKind.ONE_SIDED
    if all_both_ways:
        if any_directed_pair:
            return NetworkKind.ASYMMETRIC_TWO_SIDED
        return NetworkKind.SYMMETRIC_TWO_SIDED
    return NetworkKind.MIXED


def as_symmetric(net: Network) -> UndirectedView:
    """Expose a symmetric two-sided network as an undirected graph.

    Each link appears exactly once as an unordered weighted edge.  Raises
    NotSymmetric if any directed-only arc is present.
    """
    edges = []
    for arc in net.arcs:
        if not arc.undirected:
            raise NotSymmetric(
                f"directed arc {arc.tail!r} -> {arc.head!r} has no undirected view"
            )
        edges.append(Edge(arc.tail, arc.head, arc.efficiency))
    return UndirectedView(net.nodes, tuple(edges))


def is_connected(view: UndirectedView) -> bool:
    """True iff every node is reachable from every other, ignoring direction."""
    if len(view.nodes) <= 1:
        return True
    adj = view.adjacency()
    start = view.nodes[0]
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v, _ in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == len(view.nodes)
