"""Equivalence classes of wiretap sets, their domination order, and bounds.

Two wiretap sets are equivalent when they share a minimum cut; a set's class
is fully described by its primary minimum cut, so the classes form a finite
poset under domination (a strictly larger minimum-cut capacity plus a cut of
the dominator that also covers the dominated). Security codes only need to
treat one class per maximal element of that poset, which is where the
improved alphabet-size bound comes from: the count N_max of maximal classes,
always at most the class count N, which is at most the collection size.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .cuts import Cut, mincut_capacity, primary_min_cut, reachable_nodes
from .graph import EdgeId, Network

SetFormatter = Callable[[frozenset[EdgeId]], str]


def _default_format(edges: frozenset[EdgeId]) -> str:
    return "{" + ",".join(str(e) for e in sorted(edges)) + "}"


@dataclass(frozen=True)
class WiretapCollection:
    """Deduplicated wiretap sets with cached cut data, in input order.

    `mincuts[i]` is the minimum cut capacity of `sets[i]`; `regular[i]` says
    whether the set's size equals that capacity. Build via `preprocess`.
    """

    sets: tuple[frozenset[EdgeId], ...]
    mincuts: tuple[int, ...]
    regular: tuple[bool, ...]

    def __len__(self) -> int:
        return len(self.sets)


@dataclass(frozen=True)
class EquivalenceClass:
    """One class of mutually equivalent wiretap sets.

    `members` are indices into the owning collection, ascending;
    `representative` is the first member's edge set; every member shares
    `primary_cut` and `capacity`.
    """

    members: tuple[int, ...]
    representative: frozenset[EdgeId]
    primary_cut: Cut
    capacity: int


@dataclass(frozen=True)
class HasseDiagram:
    """The domination order on classes, reduced to covering pairs.

    A pair (i, j) in `covering` means class j dominates class i with nothing
    in between. `maximal` lists the indices dominated by no class.
    """

    classes: tuple[EquivalenceClass, ...]
    covering: tuple[tuple[int, int], ...]
    maximal: tuple[int, ...]


@dataclass(frozen=True)
class BoundReport:
    """Outcome of `compute_bound`.

    `n_classes` / `n_max` are None when the mode skipped them. `cuts` holds
    the accumulated primary cuts of the strongest pass that ran: the maximal
    class cuts in modes "nmax" and "both", one cut per class in mode "n".
    `recommended_alphabet` is the smallest size satisfying both this bound
    (strictly more symbols than maximal classes) and the decodability needs
    of `sinks_considered` sink nodes.
    """

    collection_size: int
    n_classes: Optional[int]
    n_max: Optional[int]
    cuts: tuple[Cut, ...]
    recommended_alphabet: int
    sinks_considered: int


def preprocess(
    net: Network,
    raw_sets: Iterable[Iterable[EdgeId]],
    describe: SetFormatter = _default_format,
) -> tuple[WiretapCollection, tuple[str, ...]]:
    """Deduplicate and drop degenerate sets, caching capacities.

    Duplicates keep their first occurrence; empty sets and sets none of whose
    edges is reachable from the source (minimum cut capacity 0) are dropped.
    Each drop produces a warning line. Raises UnknownEdge on bad ids.
    """
    warnings: list[str] = []
    kept: list[frozenset[EdgeId]] = []
    caps: list[int] = []
    seen: set[frozenset[EdgeId]] = set()
    for raw in raw_sets:
        s = frozenset(raw)
        if not s:
            warnings.append("empty set dropped")
            continue
        if s in seen:
            warnings.append(f"duplicate set {describe(s)} dropped")
            continue
        seen.add(s)
        cap = mincut_capacity(net, s)
        if cap == 0:
            warnings.append(f"unreachable set {describe(s)} dropped")
            continue
        kept.append(s)
        caps.append(cap)
    coll = WiretapCollection(
        sets=tuple(kept),
        mincuts=tuple(caps),
        regular=tuple(len(s) == c for s, c in zip(kept, caps)),
    )
    return coll, tuple(warnings)


def regularize(net: Network, target: Iterable[EdgeId]) -> Cut:
    """Stand-in of minimal size for a wiretap set: its primary minimum cut.

    Replacing a set by any of its minimum cuts preserves its equivalence
    class and all domination relations; the primary one makes the choice
    deterministic. Raises UnreachableTarget on capacity 0.
    """
    return primary_min_cut(net, target)


def equivalent(net: Network, a1: Iterable[EdgeId], a2: Iterable[EdgeId]) -> bool:
    """True when the two sets share a minimum cut.

    Equivalent to: both capacities equal the capacity of the union. The
    relation is reflexive, symmetric, and transitive on sets with at least
    one reachable edge.
    """
    s1, s2 = frozenset(a1), frozenset(a2)
    c1 = mincut_capacity(net, s1)
    c2 = mincut_capacity(net, s2)
    return c1 == c2 == mincut_capacity(net, s1 | s2)


def dominates(net: Network, a1: Iterable[EdgeId], a2: Iterable[EdgeId]) -> bool:
    """True when a2's class strictly dominates a1's.

    Requires a strictly smaller capacity on a1's side and a minimum cut of a2
    that also covers a1, detected through the union capacity. Never true for
    equivalent sets, so this induces an irreflexive order on classes.
    """
    s1, s2 = frozenset(a1), frozenset(a2)
    c1 = mincut_capacity(net, s1)
    c2 = mincut_capacity(net, s2)
    return c1 < c2 and mincut_capacity(net, s1 | s2) == c2


def partition_classes(net: Network, coll: WiretapCollection) -> tuple[EquivalenceClass, ...]:
    """Group the collection into equivalence classes, by first-member order.

    Each set is matched against one representative per known class of the
    same capacity (equivalence is transitive, so one probe per class
    suffices). Every member of a class has the same primary minimum cut;
    that cut is stored on the class.
    """
    reps: list[int] = []  # representative set index per class
    members: list[list[int]] = []
    for i, s in enumerate(coll.sets):
        cap = coll.mincuts[i]
        for c, r in enumerate(reps):
            if coll.mincuts[r] != cap:
                continue
            if mincut_capacity(net, coll.sets[r] | s) == cap:
                members[c].append(i)
                break
        else:
            reps.append(i)
            members.append([i])

    classes = []
    for r, mem in zip(reps, members):
        cut = primary_min_cut(net, coll.sets[r])
        assert all(
            primary_min_cut(net, coll.sets[m]).edges == cut.edges for m in mem[1:]
        ), "members of one class must share their primary minimum cut"
        classes.append(
            EquivalenceClass(
                members=tuple(mem),
                representative=coll.sets[r],
                primary_cut=cut,
                capacity=coll.mincuts[r],
            )
        )
    return tuple(classes)


def class_hasse(net: Network, classes: Sequence[EquivalenceClass]) -> HasseDiagram:
    """Domination order on classes, reduced to its covering pairs.

    Domination is tested once per ordered pair through the representatives.
    The full relation is a strict partial order (checked here); the covering
    pairs are the relation minus everything implied by transitivity.
    """
    n = len(classes)
    rel = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j or classes[i].capacity >= classes[j].capacity:
                continue
            union = classes[i].representative | classes[j].representative
            rel[i][j] = mincut_capacity(net, union) == classes[j].capacity

    for i in range(n):
        assert not rel[i][i], "domination must be irreflexive"
        for j in range(n):
            assert not (rel[i][j] and rel[j][i]), "domination must be asymmetric"
            if not rel[i][j]:
                continue
            for k in range(n):
                assert not rel[j][k] or rel[i][k], "domination must be transitive"

    covering = tuple(
        (i, j)
        for i in range(n)
        for j in range(n)
        if rel[i][j] and not any(rel[i][k] and rel[k][j] for k in range(n))
    )
    maximal = tuple(i for i in range(n) if not any(rel[i][j] for j in range(n)))
    return HasseDiagram(classes=tuple(classes), covering=covering, maximal=maximal)


def strict_order_pairs(diagram: HasseDiagram) -> frozenset[tuple[int, int]]:
    """Rebuild the full domination relation from the covering pairs."""
    n = len(diagram.classes)
    above: list[set[int]] = [set() for _ in range(n)]
    for i, j in diagram.covering:
        above[i].add(j)
    # propagate upward until stable; the diagram is acyclic so this settles
    changed = True
    while changed:
        changed = False
        for i in range(n):
            grown = above[i] | {k for j in above[i] for k in above[j]}
            if grown != above[i]:
                above[i] = grown
                changed = True
    return frozenset((i, j) for i in range(n) for j in above[i])


def reachable_after_delete(net: Network, removed: Iterable[EdgeId]) -> frozenset[EdgeId]:
    """Edges that still carry information once `removed` is deleted.

    These are the surviving edges whose tail the source still reaches. A
    wiretap set contained in the complement is already separated by
    `removed`; that is the pruning test of the bound computation.
    """
    gone = frozenset(removed)
    for e in gone:
        net.check_edge(e)
    alive = reachable_nodes(net, gone)
    return frozenset(
        e for e in range(len(net.edges)) if e not in gone and net.tail(e) in alive
    )


def _pick(
    coll: WiretapCollection,
    remaining: Sequence[int],
    select: str,
    rng: Optional[random.Random],
) -> int:
    if select == "cardinality":
        best = max(len(coll.sets[i]) for i in remaining)
        tied = [i for i in remaining if len(coll.sets[i]) == best]
    elif select == "mincut":
        best = max(coll.mincuts[i] for i in remaining)
        tied = [i for i in remaining if coll.mincuts[i] == best]
    else:
        raise ValueError(f"unknown selection rule {select!r}")
    if rng is not None and len(tied) > 1:
        return tied[rng.randrange(len(tied))]
    return min(tied, key=lambda i: tuple(sorted(coll.sets[i])))


def _edge_mask(edges: Iterable[EdgeId]) -> int:
    mask = 0
    for e in edges:
        mask |= 1 << e
    return mask


def _bound_pass(
    net: Network,
    coll: WiretapCollection,
    per_capacity: bool,
    select: str,
    rng: Optional[random.Random],
    cut_cache: dict[frozenset[EdgeId], Cut],
) -> list[Cut]:
    """One sweep of the pruning loop shared by both bound variants.

    Repeatedly: pick a remaining set (largest by the selection key, ties by
    lexicographically smallest edge list unless an rng decides), take its
    primary minimum cut, and discard everything that cut already separates.
    With `per_capacity` True only sets of the chosen capacity are discarded
    and every cut is kept: one cut per equivalence class comes out. With it
    False the accumulated cuts are pruned too, leaving exactly the primary
    cuts of the maximal classes, regardless of pick order.
    """
    remaining = list(range(len(coll.sets)))
    set_masks = [_edge_mask(s) for s in coll.sets]
    cuts: list[Cut] = []
    cut_masks: list[int] = []
    while remaining:
        idx = _pick(coll, remaining, select, rng)
        chosen = coll.sets[idx]
        cut = cut_cache.get(chosen)
        if cut is None:
            cut = primary_min_cut(net, chosen)
            cut_cache[chosen] = cut
        survivors = _edge_mask(reachable_after_delete(net, cut.edges))
        if per_capacity:
            cap = coll.mincuts[idx]
            remaining = [
                i
                for i in remaining
                if coll.mincuts[i] != cap or set_masks[i] & survivors
            ]
            cuts.append(cut)
        else:
            remaining = [i for i in remaining if set_masks[i] & survivors]
            alive = [t for t in range(len(cuts)) if cut_masks[t] & survivors]
            cuts = [cuts[t] for t in alive]
            cut_masks = [cut_masks[t] for t in alive]
            cuts.append(cut)
            cut_masks.append(_edge_mask(cut.edges))
    return cuts


def compute_bound(
    net: Network,
    coll: WiretapCollection,
    mode: str = "both",
    *,
    select: str = "cardinality",
    rng: Optional[random.Random] = None,
) -> BoundReport:
    """Alphabet-size lower bounds by iterated cut pruning.

    Modes: "nmax" computes only the count of maximal classes, "n" only the
    class count, "both" computes the two together. The returned
    recommendation is max(bound + 1, number of sinks), using the strongest
    bound computed; with no declared sinks the sink term is 0. An empty
    collection yields zero bounds. `select` picks the per-round choice key
    ("cardinality" or "mincut"); `rng`, when given, randomizes tie-breaks,
    which never changes the nmax result.
    """
    if mode not in ("nmax", "n", "both"):
        raise ValueError(f"unknown mode {mode!r}")
    cache: dict[frozenset[EdgeId], Cut] = {}
    n_classes = None
    n_max = None
    cuts: tuple[Cut, ...] = ()
    if mode in ("n", "both"):
        class_cuts = _bound_pass(net, coll, True, select, rng, cache)
        n_classes = len(class_cuts)
        cuts = tuple(class_cuts)
    if mode in ("nmax", "both"):
        max_cuts = _bound_pass(net, coll, False, select, rng, cache)
        n_max = len(max_cuts)
        cuts = tuple(max_cuts)

    if n_classes is not None and n_max is not None:
        assert n_max <= n_classes <= len(coll.sets)
    bound = n_max if n_max is not None else n_classes
    return BoundReport(
        collection_size=len(coll.sets),
        n_classes=n_classes,
        n_max=n_max,
        cuts=cuts,
        recommended_alphabet=max(bound + 1, len(net.sinks)),
        sinks_considered=len(net.sinks),
    )
