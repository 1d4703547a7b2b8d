"""Brute-force reference implementations for cross-validation.

Everything in this module works straight from the definitions: minimum cuts
are found by trying every edge subset in increasing size order, equivalence
means literally sharing a minimum cut, and domination means some cut common
to the whole dominating class separates every member of the dominated one.
Nothing here touches the flow machinery, so agreement with the fast path is
meaningful evidence. Costs are exponential; the per-target search space is
capped (WTB_MAX_ORACLE_EDGES, default 18).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING, Iterable, NamedTuple, Sequence, Union

if TYPE_CHECKING:
    from .wiretap import WiretapCollection

from .cuts import Cut
from .errors import (
    EmptyTargetSet,
    InstanceTooLarge,
    NoPrimaryFound,
    UnreachableTarget,
)
from .graph import EdgeId, Network

DEFAULT_EDGE_LIMIT = 18
ENV_EDGE_LIMIT = "WTB_MAX_ORACLE_EDGES"


def edge_limit() -> int:
    """Per-target cap on the enumeration universe, overridable via env."""
    raw = os.environ.get(ENV_EDGE_LIMIT)
    return int(raw) if raw else DEFAULT_EDGE_LIMIT


@dataclass(frozen=True)
class MinCutFamily:
    """All minimum cuts of one target, sorted by ascending edge ids."""

    target: frozenset[EdgeId]
    capacity: int
    cuts: tuple[frozenset[EdgeId], ...]


def _reachable(net: Network, removed: frozenset[EdgeId]) -> set[int]:
    # plain depth-first reachability, kept separate from the fast path on purpose
    seen = {net.source}
    stack = [net.source]
    while stack:
        u = stack.pop()
        for e in net.out_edges[u]:
            if e in removed:
                continue
            v = net.edges[e][1]
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def _separated(net: Network, blockers: frozenset[EdgeId], target: frozenset[EdgeId]) -> bool:
    alive = _reachable(net, blockers)
    return all(e in blockers or net.tail(e) not in alive for e in target)


def _relevant_edges(net: Network, target: frozenset[EdgeId]) -> list[EdgeId]:
    """Edges lying on some source-to-target path; only these can appear in a
    minimum cut, since dropping any other edge from a cut keeps it a cut."""
    alive = _reachable(net, frozenset())
    # nodes from which some target edge's tail can be reached, by reverse walk
    feeds = {net.tail(a) for a in target}
    changed = True
    while changed:
        changed = False
        for t, h in net.edges:
            if h in feeds and t not in feeds:
                feeds.add(t)
                changed = True
    out = []
    for e, (t, h) in enumerate(net.edges):
        if t not in alive:
            continue
        if e in target or h in feeds:
            out.append(e)
    return out


def enumerate_min_cuts(net: Network, target: Iterable[EdgeId]) -> MinCutFamily:
    """Every minimum cut of `target`, by exhausting subsets in size order.

    Raises EmptyTargetSet on an empty target, UnknownEdge on a bad id, and
    InstanceTooLarge when more than edge_limit() edges lie on source-target
    paths. An unreachable target yields capacity 0 with the empty cut as the
    family's only member.
    """
    tset = frozenset(target)
    if not tset:
        raise EmptyTargetSet("target edge set is empty")
    for e in tset:
        net.check_edge(e)
    universe = _relevant_edges(net, tset)
    limit = edge_limit()
    if len(universe) > limit:
        raise InstanceTooLarge(
            f"{len(universe)} edges lie on paths to the target, limit is {limit} "
            f"(raise ${ENV_EDGE_LIMIT} to override)"
        )
    for k in range(len(universe) + 1):
        found = [
            frozenset(combo)
            for combo in combinations(universe, k)
            if _separated(net, frozenset(combo), tset)
        ]
        if found:
            found.sort(key=sorted)
            return MinCutFamily(target=tset, capacity=k, cuts=tuple(found))
    raise AssertionError("unreachable: deleting every path edge always separates")


def oracle_primary_min_cut(net: Network, target: Iterable[EdgeId]) -> Cut:
    """The family member that separates every other member, by inspection.

    Raises UnreachableTarget on capacity 0 and NoPrimaryFound if no unique
    such member exists (the fast path's correctness implies there always is
    one; this reports rather than assumes it).
    """
    family = enumerate_min_cuts(net, target)
    if family.capacity == 0:
        raise UnreachableTarget(
            f"no edge of {sorted(family.target)} is reachable from the source"
        )
    least = [
        c
        for c in family.cuts
        if all(_separated(net, c, other) for other in family.cuts)
    ]
    if len(least) != 1:
        raise NoPrimaryFound(
            f"{len(least)} candidates among {len(family.cuts)} minimum cuts "
            f"of {sorted(family.target)}"
        )
    return Cut(target=family.target, edges=least[0])


class OracleBounds(NamedTuple):
    n: int
    n_max: int
    classes: tuple[tuple[int, ...], ...]
    order: frozenset[tuple[int, int]]


def oracle_bounds(
    net: Network,
    coll: Union["WiretapCollection", Sequence[frozenset[EdgeId]]],
) -> OracleBounds:
    """Class count, maximal-class count, partition, and domination order.

    `coll` is a preprocessed collection (or a plain sequence of edge sets,
    each with at least one reachable edge). Two sets are equivalent iff their
    minimum-cut families intersect; classes are the components of that
    relation, listed by smallest member index. Class i is below class j iff
    some cut common to all of j's members separates all of i's members.
    """
    sets = list(coll.sets) if hasattr(coll, "sets") else list(coll)
    families = [set(enumerate_min_cuts(net, s).cuts) for s in sets]

    unvisited = set(range(len(sets)))
    classes: list[tuple[int, ...]] = []
    while unvisited:
        start = min(unvisited)
        comp = {start}
        frontier = [start]
        while frontier:
            i = frontier.pop()
            for j in list(unvisited - comp):
                if families[i] & families[j]:
                    comp.add(j)
                    frontier.append(j)
        unvisited -= comp
        classes.append(tuple(sorted(comp)))
    classes.sort(key=lambda c: c[0])

    common = [set.intersection(*(families[m] for m in cls)) for cls in classes]
    order: set[tuple[int, int]] = set()
    for i, cls_i in enumerate(classes):
        for j in range(len(classes)):
            if i == j:
                continue
            for cand in common[j]:
                if all(_separated(net, cand, sets[m]) for m in cls_i):
                    order.add((i, j))
                    break
    maximal = [
        i for i in range(len(classes)) if not any((i, j) in order for j in range(len(classes)))
    ]
    return OracleBounds(
        n=len(classes),
        n_max=len(maximal),
        classes=tuple(classes),
        order=frozenset(order),
    )


class CheckResult(NamedTuple):
    name: str
    ok: bool
    detail: str


def cross_check(net: Network, coll: "WiretapCollection") -> list[CheckResult]:
    """Compare every fast-path result against this module, item by item.

    Returns one record per check; `ok` False means the two implementations
    disagree, which is always a bug in one of them.
    """
    from . import wiretap
    from .cuts import mincut_capacity, primary_min_cut

    results: list[CheckResult] = []

    def record(name: str, ok: bool, detail: str = "") -> None:
        results.append(CheckResult(name, ok, detail))

    families = [enumerate_min_cuts(net, s) for s in coll.sets]
    for i, s in enumerate(coll.sets):
        fast = mincut_capacity(net, s)
        slow = families[i].capacity
        record(
            f"mincut[{i}]",
            fast == slow,
            f"fast {fast}, oracle {slow} for {sorted(s)}",
        )
        fast_cut = primary_min_cut(net, s).edges
        slow_cut = oracle_primary_min_cut(net, s).edges
        record(
            f"primary[{i}]",
            fast_cut == slow_cut,
            f"fast {sorted(fast_cut)}, oracle {sorted(slow_cut)} for {sorted(s)}",
        )

    ob = oracle_bounds(net, coll)
    classes = wiretap.partition_classes(net, coll)
    fast_partition = tuple(cls.members for cls in classes)
    record(
        "partition",
        fast_partition == ob.classes,
        f"fast {fast_partition}, oracle {ob.classes}",
    )

    fast_order: set[tuple[int, int]] = set()
    for i, ci in enumerate(classes):
        for j, cj in enumerate(classes):
            if i != j and wiretap.dominates(net, ci.representative, cj.representative):
                fast_order.add((i, j))
    record(
        "domination",
        frozenset(fast_order) == ob.order,
        f"fast {sorted(fast_order)}, oracle {sorted(ob.order)}",
    )

    report = wiretap.compute_bound(net, coll, mode="both")
    record("n", report.n_classes == ob.n, f"fast {report.n_classes}, oracle {ob.n}")
    record("n_max", report.n_max == ob.n_max, f"fast {report.n_max}, oracle {ob.n_max}")

    oracle_b = {
        oracle_primary_min_cut(net, coll.sets[ob.classes[i][0]]).edges
        for i in range(ob.n)
        if not any((i, j) in ob.order for j in range(ob.n))
    }
    fast_b = {cut.edges for cut in report.cuts}
    record(
        "maximal_cuts",
        fast_b == oracle_b,
        f"fast {sorted(map(sorted, fast_b))}, oracle {sorted(map(sorted, oracle_b))}",
    )
    return results
