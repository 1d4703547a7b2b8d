"""Shared utilities for the test suite."""

from __future__ import annotations

import random

from wtbound import base_path, build_network, max_flow, split_and_sink
from wtbound.fileio import LabelTable
from wtbound.graph import Network

CORPUS_SEED = 20260814

# Frozen structure of the bundled two-sink instance: its 48 wiretap sets fall
# into 15 equivalence classes. Each row is (capacity, primary cut, members in
# input order), with edges named by their labels.
FIG1_CLASSES = [
    (1, "e1", ("e6", "e7")),
    (1, "e2", ("e8", "e9")),
    (1, "e4", ("e12", "e13")),
    (1, "e5", ("e14", "e15")),
    (1, "e16", ("e18", "e19")),
    (1, "e17", ("e20", "e21")),
    (2, "e1 e2", ("e6 e18", "e6 e19", "e7 e18", "e7 e19", "e8 e16", "e8 e18", "e9 e18", "e9 e19")),
    (2, "e2 e3", ("e8 e11", "e9 e10")),
    (2, "e3 e5", ("e10 e14", "e10 e15", "e11 e14", "e11 e15")),
    (2, "e3 e16", ("e10 e19", "e11 e18")),
    (2, "e3 e17", ("e10 e21", "e11 e20")),
    (2, "e4 e5", ("e12 e20", "e12 e21", "e13 e17", "e13 e21", "e14 e20", "e14 e21", "e15 e20", "e15 e21")),
    (2, "e16 e17", ("e18 e20", "e18 e21", "e19 e20", "e19 e21")),
    (3, "e1 e2 e3", ("e1 e3 e16", "e1 e11 e16", "e2 e10 e16")),
    (3, "e3 e4 e5", ("e3 e5 e17", "e4 e10 e17", "e5 e11 e17")),
]

# Covering pairs of the domination order on those classes (low, high), and
# the six extra pairs transitivity adds to give the full strict order.
FIG1_COVERING = [
    (0, 6), (1, 6), (1, 7), (2, 11), (3, 8), (3, 11), (4, 6), (4, 9), (4, 12),
    (5, 10), (5, 11), (5, 12), (6, 13), (7, 13), (8, 14), (9, 13), (10, 14), (11, 14),
]

FIG1_ORDER = FIG1_COVERING + [
    (0, 13), (1, 13), (2, 14), (3, 14), (4, 13), (5, 14),
]

FIG1_MAXIMAL_CUTS = ("e1 e2 e3", "e3 e4 e5", "e16 e17")


def eset(labels: LabelTable, spec: str) -> frozenset[int]:
    """Edge-id set from a space-separated label string."""
    return frozenset(labels.edge_id(tok) for tok in spec.split())


def result_block(output: str) -> dict[str, str]:
    """Parse the key=value block a CLI command prints after [result]."""
    lines = output.splitlines()
    start = lines.index("[result]")
    block = {}
    for line in lines[start + 1 :]:
        if not line.strip():
            break
        key, _, value = line.partition("=")
        block[key] = value
    return block


def random_instance(seed: int) -> tuple[Network, list[frozenset[int]]]:
    """A random DAG (<=8 nodes, <=14 edges, parallel edges possible) plus a
    random collection (<=20 sets of <=3 edges, duplicates and unreachable
    edges allowed). Node ids ascend along every edge, so node 0 is always a
    valid source."""
    rng = random.Random(seed)
    n_nodes = rng.randint(2, 8)
    n_edges = rng.randint(1, 14)
    edges = []
    for _ in range(n_edges):
        t = rng.randrange(0, n_nodes - 1)
        h = rng.randrange(t + 1, n_nodes)
        edges.append((t, h))
    net = build_network(edges, source=0)
    sets = []
    for _ in range(rng.randint(1, 20)):
        size = min(rng.randint(1, 3), n_edges)
        sets.append(frozenset(rng.sample(range(n_edges), size)))
    return net, sets


def enumerate_decompositions(
    net: Network, target: frozenset[int], limit: int = 3, max_paths: int = 400
) -> list[tuple[tuple[int, ...], ...]]:
    """Up to `limit` distinct maximum path packings for a target, in base-edge
    form: each packing is mincut-many edge-disjoint source-to-target paths.
    Returns [] when the target is unreachable or the path space is too big."""
    tnet = split_and_sink(net, target)
    value = max_flow(tnet).value
    if value == 0:
        return []

    all_paths: list[tuple[int, ...]] = []

    def dfs(v: int, acc: list[int]) -> None:
        if len(all_paths) > max_paths:
            return
        if v == tnet.sink:
            all_paths.append(tuple(acc))
            return
        for k in tnet.out_edges[v]:
            acc.append(k)
            dfs(tnet.edges[k][1], acc)
            acc.pop()

    dfs(tnet.source, [])
    if len(all_paths) > max_paths:
        return []

    packings: list[tuple[tuple[int, ...], ...]] = []

    def rec(start: int, used: frozenset[int], acc: list[tuple[int, ...]]) -> None:
        if len(packings) >= limit:
            return
        if len(acc) == value:
            packings.append(tuple(acc))
            return
        for idx in range(start, len(all_paths)):
            p = all_paths[idx]
            if used.isdisjoint(p):
                rec(idx + 1, used | set(p), acc + [p])
                if len(packings) >= limit:
                    return

    rec(0, frozenset(), [])
    return [tuple(base_path(tnet, p) for p in packing) for packing in packings]
