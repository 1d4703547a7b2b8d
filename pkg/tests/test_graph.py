"""Network construction, validation, edge order, and the splitting transform."""

import pytest

from wtbound import (
    CyclicGraph,
    DanglingEndpoint,
    EmptyTargetSet,
    SourceHasIncomingEdges,
    UnknownEdge,
    build_network,
    edge_precedes,
    identity_transform,
    split_and_sink,
    topological_order,
)

from helpers import eset


def test_build_network_basics():
    net = build_network([(0, 1), (0, 1), (1, 2)], source=0, sinks=(2,))
    assert net.num_nodes == 3
    assert net.edges == ((0, 1), (0, 1), (1, 2))
    assert net.source == 0
    assert net.sinks == (2,)
    assert net.tail(2) == 1 and net.head(2) == 2
    assert net.out_edges == ((0, 1), (2,), ())
    assert net.in_edges == ((), (0, 1), (2,))


def test_build_network_infers_node_count_and_accepts_isolated_nodes():
    assert build_network([(0, 3)], source=0).num_nodes == 4
    assert build_network([(0, 1)], source=0, num_nodes=5).num_nodes == 5


def test_build_network_rejects_bad_node_ids():
    with pytest.raises(DanglingEndpoint):
        build_network([(0, -1)], source=0)
    with pytest.raises(DanglingEndpoint):
        build_network([(0, 2)], source=0, num_nodes=2)
    with pytest.raises(DanglingEndpoint):
        build_network([(0, 1)], source=0, sinks=(7,), num_nodes=2)
    with pytest.raises(DanglingEndpoint):
        build_network([(0, 1)], source=-1)


def test_build_network_rejects_edges_into_the_source():
    with pytest.raises(SourceHasIncomingEdges):
        build_network([(0, 1), (1, 0)], source=0)
    with pytest.raises(SourceHasIncomingEdges):
        build_network([(0, 1)], source=1)
    # Only the source is protected; other nodes may have any in-degree.
    build_network([(0, 1), (0, 1), (0, 1)], source=0)


def test_build_network_rejects_cycles():
    with pytest.raises(CyclicGraph):
        build_network([(0, 1), (1, 2), (2, 1)], source=0)
    with pytest.raises(CyclicGraph):
        build_network([(1, 1)], source=0, num_nodes=2)


def test_check_edge():
    net = build_network([(0, 1)], source=0)
    net.check_edge(0)
    with pytest.raises(UnknownEdge):
        net.check_edge(1)
    with pytest.raises(UnknownEdge):
        net.check_edge(-1)


def test_topological_order_is_deterministic_smallest_first():
    net = build_network([(0, 2), (0, 1)], source=0)
    assert topological_order(net) == [0, 1, 2]
    # Isolated nodes appear in id order alongside everything else.
    net2 = build_network([(1, 3)], source=1, num_nodes=5)
    assert topological_order(net2) == [0, 1, 2, 3, 4]


def test_topological_order_fig1(fig1):
    assert topological_order(fig1.net) == list(range(12))


def test_edge_precedes_is_path_reachability():
    #   0 -e0-> 1 -e2-> 2
    #   0 -e1-> 1
    net = build_network([(0, 1), (0, 1), (1, 2)], source=0)
    assert edge_precedes(net, 0, 0)
    assert edge_precedes(net, 0, 2)
    assert edge_precedes(net, 1, 2)
    assert not edge_precedes(net, 2, 0)
    # Parallel edges do not precede one another.
    assert not edge_precedes(net, 0, 1)
    assert not edge_precedes(net, 1, 0)
    with pytest.raises(UnknownEdge):
        edge_precedes(net, 0, 3)


def test_edge_precedes_fig1(fig1):
    ids = fig1.labels.edge_id
    # e1 reaches e16 through e7, but nothing runs back from e16 to e1.
    assert edge_precedes(fig1.net, ids("e1"), ids("e16"))
    assert not edge_precedes(fig1.net, ids("e16"), ids("e1"))
    # e6 goes straight into a sink, so it precedes no other edge.
    assert all(
        not edge_precedes(fig1.net, ids("e6"), e)
        for e in range(21)
        if e != ids("e6")
    )


def test_split_and_sink_shape(fig1):
    target = eset(fig1.labels, "e19 e20")
    tnet = split_and_sink(fig1.net, target)
    assert tnet.base is fig1.net
    assert tnet.target == target
    # Two virtual nodes plus one super-sink on top of the base 12 nodes.
    assert tnet.num_nodes == 15
    assert tnet.sink == 14
    assert tnet.split_nodes == ((18, 12), (19, 13))
    # 21 base edges, two of them doubled, plus two super-sink edges.
    assert len(tnet.edges) == 25
    supers = [k for k, b in enumerate(tnet.back_map) if b is None]
    assert supers == [23, 24]
    assert all(tnet.capacities[k] == 22 for k in supers)
    assert all(tnet.edges[k][1] == 14 for k in supers)
    assert sum(1 for c in tnet.capacities if c == 1) == 23


def test_split_and_sink_halves_share_back_map():
    net = build_network([(0, 1), (1, 2)], source=0)
    tnet = split_and_sink(net, {1})
    # Edge 1 = (1, 2) becomes (1, 3) and (3, 2); edge 0 is untouched.
    assert tnet.edges == ((0, 1), (1, 3), (3, 2), (3, 4))
    assert tnet.back_map == (0, 1, 1, None)
    assert tnet.capacities == (1, 1, 1, 3)


def test_split_and_sink_rejects_bad_targets(fig1):
    with pytest.raises(EmptyTargetSet):
        split_and_sink(fig1.net, ())
    with pytest.raises(UnknownEdge):
        split_and_sink(fig1.net, {21})


def test_identity_transform(fig1):
    tnet = identity_transform(fig1.net)
    assert tnet.edges == fig1.net.edges
    assert tnet.sink is None
    assert tnet.capacities == (1,) * 21
    assert tnet.back_map == tuple(range(21))
