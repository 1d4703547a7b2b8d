"""Acyclic directed multigraphs with unit capacities, and the splitting transform.

A network here is a finite DAG with one distinguished source, an optional set
of sink nodes, and unit capacity on every edge. Parallel edges are allowed;
edges are identified by their integer id, not by their endpoints.

Cuts between the source and an arbitrary *edge set* A are reduced to ordinary
node-to-node cuts by `split_and_sink`: every edge e in A is split in two
through a fresh virtual node, and all virtual nodes are wired to a fresh
super-sink with effectively infinite capacity. A set of base edges then
separates the source from A exactly when it separates the source from the
super-sink, and minimum cuts correspond one to one.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import (
    CyclicGraph,
    DanglingEndpoint,
    EmptyTargetSet,
    SourceHasIncomingEdges,
    UnknownEdge,
)

NodeId = int
EdgeId = int


@dataclass(frozen=True)
class Network:
    """Validated unit-capacity DAG. Build through `build_network`.

    Nodes are 0..num_nodes-1 and edges are indexed by position in `edges`,
    each entry being a (tail, head) pair. `sinks` is advisory metadata used
    for reporting; it plays no role in cut computations.
    """

    num_nodes: int
    edges: tuple[tuple[NodeId, NodeId], ...]
    source: NodeId
    sinks: tuple[NodeId, ...] = ()

    def tail(self, e: EdgeId) -> NodeId:
        return self.edges[e][0]

    def head(self, e: EdgeId) -> NodeId:
        return self.edges[e][1]

    def check_edge(self, e: EdgeId) -> None:
        if not 0 <= e < len(self.edges):
            raise UnknownEdge(f"edge id {e} not in 0..{len(self.edges) - 1}")

    @cached_property
    def out_edges(self) -> tuple[tuple[EdgeId, ...], ...]:
        """Edge ids leaving each node, ascending."""
        adj: list[list[EdgeId]] = [[] for _ in range(self.num_nodes)]
        for e, (t, _) in enumerate(self.edges):
            adj[t].append(e)
        return tuple(tuple(lst) for lst in adj)

    @cached_property
    def in_edges(self) -> tuple[tuple[EdgeId, ...], ...]:
        """Edge ids entering each node, ascending."""
        adj: list[list[EdgeId]] = [[] for _ in range(self.num_nodes)]
        for e, (_, h) in enumerate(self.edges):
            adj[h].append(e)
        return tuple(tuple(lst) for lst in adj)

    @cached_property
    def _descendants(self) -> tuple[int, ...]:
        """Bitmask per node of all nodes reachable from it (itself included)."""
        masks = [1 << v for v in range(self.num_nodes)]
        for v in reversed(topological_order(self)):
            acc = masks[v]
            for e in self.out_edges[v]:
                acc |= masks[self.edges[e][1]]
            masks[v] = acc
        return tuple(masks)


def build_network(
    edges: Iterable[tuple[NodeId, NodeId]],
    source: NodeId,
    sinks: Sequence[NodeId] = (),
    num_nodes: Optional[int] = None,
) -> Network:
    """Validate and freeze a network.

    Node ids are inferred as 0..max(referenced id) unless `num_nodes` pins a
    larger range (isolated nodes are legal). Raises DanglingEndpoint when an
    edge, the source, or a sink falls outside the node range,
    SourceHasIncomingEdges when any edge enters the source, and CyclicGraph
    when the edge list admits no topological order. Sinks may have outgoing
    edges and nodes may be unreachable; neither is an error here.
    """
    edge_list = tuple((t, h) for t, h in edges)
    referenced = [source, *sinks]
    for t, h in edge_list:
        referenced.append(t)
        referenced.append(h)
    low = min(referenced)
    high = max(referenced)
    if low < 0:
        raise DanglingEndpoint(f"negative node id {low}")
    if num_nodes is None:
        num_nodes = high + 1
    elif high >= num_nodes:
        raise DanglingEndpoint(f"node id {high} outside declared range 0..{num_nodes - 1}")

    for e, (t, h) in enumerate(edge_list):
        if h == source:
            raise SourceHasIncomingEdges(f"edge {e} ({t} -> {h}) enters the source")

    net = Network(num_nodes=num_nodes, edges=edge_list, source=source, sinks=tuple(sinks))
    topological_order(net)  # raises CyclicGraph on a cycle
    return net


def topological_order(net: Network) -> list[NodeId]:
    """Topological order of all nodes, lowest node id first among the ready.

    Deterministic for a given network. Raises CyclicGraph if the edges admit
    no such order.
    """
    indeg = [0] * net.num_nodes
    for _, h in net.edges:
        indeg[h] += 1
    ready = [v for v in range(net.num_nodes) if indeg[v] == 0]
    heapq.heapify(ready)
    order: list[NodeId] = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for e in net.out_edges[v]:
            h = net.edges[e][1]
            indeg[h] -= 1
            if indeg[h] == 0:
                heapq.heappush(ready, h)
    if len(order) != net.num_nodes:
        raise CyclicGraph("edge list contains a directed cycle")
    return order


def edge_precedes(net: Network, d: EdgeId, e: EdgeId) -> bool:
    """True when edge d lies on some path ending with edge e.

    Holds when d == e or when a directed path runs from head(d) to tail(e).
    This is the reflexive reachability order on edges of a DAG.
    """
    net.check_edge(d)
    net.check_edge(e)
    if d == e:
        return True
    return bool(net._descendants[net.head(d)] >> net.tail(e) & 1)


@dataclass(frozen=True)
class TransformedNetwork:
    """A network rewritten so an edge-set target becomes a single sink node.

    `edges` and `capacities` describe the augmented graph; `back_map[k]` gives
    the base edge that augmented edge k came from, or None for the super-sink
    wiring. Both halves of a split edge map back to the same base id.
    `sink` is the super-sink node, or None for the identity transform (whose
    flows target an ordinary node instead).
    """

    base: Network
    target: frozenset[EdgeId]
    num_nodes: int
    edges: tuple[tuple[NodeId, NodeId], ...]
    capacities: tuple[int, ...]
    source: NodeId
    sink: Optional[NodeId]
    back_map: tuple[Optional[EdgeId], ...]
    split_nodes: tuple[tuple[EdgeId, NodeId], ...]

    @cached_property
    def out_edges(self) -> tuple[tuple[EdgeId, ...], ...]:
        adj: list[list[EdgeId]] = [[] for _ in range(self.num_nodes)]
        for k, (t, _) in enumerate(self.edges):
            adj[t].append(k)
        return tuple(tuple(lst) for lst in adj)

    @cached_property
    def in_edges(self) -> tuple[tuple[EdgeId, ...], ...]:
        adj: list[list[EdgeId]] = [[] for _ in range(self.num_nodes)]
        for k, (_, h) in enumerate(self.edges):
            adj[h].append(k)
        return tuple(tuple(lst) for lst in adj)


def split_and_sink(net: Network, target: Iterable[EdgeId]) -> TransformedNetwork:
    """Split every target edge through a virtual node and attach a super-sink.

    Each target edge e = (u, v) becomes u -> t_e -> v (two unit-capacity
    halves sharing e's back_map entry), and every virtual node t_e gains an
    edge to the super-sink with capacity len(net.edges) + 1, which no set of
    unit edges can saturate. Raises EmptyTargetSet on an empty target and
    UnknownEdge on an out-of-range id.
    """
    tset = frozenset(target)
    if not tset:
        raise EmptyTargetSet("target edge set is empty")
    for e in tset:
        net.check_edge(e)

    inf_cap = len(net.edges) + 1
    split_order = sorted(tset)
    split_node = {e: net.num_nodes + i for i, e in enumerate(split_order)}
    sink = net.num_nodes + len(split_order)

    edges: list[tuple[NodeId, NodeId]] = []
    caps: list[int] = []
    back: list[Optional[EdgeId]] = []
    for e, (t, h) in enumerate(net.edges):
        if e in tset:
            mid = split_node[e]
            edges.append((t, mid))
            caps.append(1)
            back.append(e)
            edges.append((mid, h))
            caps.append(1)
            back.append(e)
        else:
            edges.append((t, h))
            caps.append(1)
            back.append(e)
    for e in split_order:
        edges.append((split_node[e], sink))
        caps.append(inf_cap)
        back.append(None)

    return TransformedNetwork(
        base=net,
        target=tset,
        num_nodes=sink + 1,
        edges=tuple(edges),
        capacities=tuple(caps),
        source=net.source,
        sink=sink,
        back_map=tuple(back),
        split_nodes=tuple((e, split_node[e]) for e in split_order),
    )


def identity_transform(net: Network) -> TransformedNetwork:
    """Wrap a network unchanged, for flows whose target is an ordinary node."""
    n_edges = len(net.edges)
    return TransformedNetwork(
        base=net,
        target=frozenset(),
        num_nodes=net.num_nodes,
        edges=net.edges,
        capacities=(1,) * n_edges,
        source=net.source,
        sink=None,
        back_map=tuple(range(n_edges)),
        split_nodes=(),
    )
