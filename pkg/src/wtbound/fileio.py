"""Text formats for networks and wiretap collections, generators, DOT export.

Network files are line oriented: `node L`, `edge L TAIL HEAD`, `source L`,
`sink L`, with `#` starting a comment anywhere and blank lines ignored. When
a file declares any `node` line the node set is closed and unknown labels are
errors; otherwise nodes spring into being on first use in an edge line.
Collection files hold one wiretap set per line as whitespace-separated edge
labels. Both formats round-trip exactly through the serializers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from math import comb
from typing import Iterable

from .errors import (
    CollectionTooLarge,
    ParameterOutOfRange,
    ParseError,
    UnknownEdgeLabel,
)
from .graph import EdgeId, Network, build_network
from .wiretap import HasseDiagram, WiretapCollection, preprocess

DEFAULT_MAX_SETS = 100_000


@dataclass(frozen=True)
class LabelTable:
    """Two-way mapping between file labels and internal integer ids."""

    node_labels: tuple[str, ...]
    edge_labels: tuple[str, ...]

    @cached_property
    def _edge_ids(self) -> dict[str, EdgeId]:
        return {lab: i for i, lab in enumerate(self.edge_labels)}

    def edge_id(self, label: str) -> EdgeId:
        try:
            return self._edge_ids[label]
        except KeyError:
            raise UnknownEdgeLabel(f"unknown edge label {label!r}") from None

    def edge_set(self, labels: Iterable[str]) -> frozenset[EdgeId]:
        return frozenset(self.edge_id(lab) for lab in labels)

    def format_edges(self, edges: Iterable[EdgeId]) -> str:
        """Comma-joined labels in ascending id order."""
        return ",".join(self.edge_labels[e] for e in sorted(edges))

    def format_set(self, edges: Iterable[EdgeId]) -> str:
        return "{" + self.format_edges(edges) + "}"


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((lineno, body.split()))
    return out


def _check_label(label: str, lineno: int) -> str:
    if "," in label:
        raise ParseError(f"line {lineno}: label {label!r} may not contain ','")
    return label


def parse_network(text: str) -> tuple[Network, LabelTable]:
    """Read a network file into a validated Network plus its label table.

    Raises ParseError on malformed lines, unknown or duplicate labels, and a
    missing or repeated source; construction errors (cycles, edges into the
    source) pass through from the graph layer.
    """
    node_labels: list[str] = []
    node_ids: dict[str, int] = {}
    edge_labels: list[str] = []
    edge_specs: list[tuple[int, str, str]] = []  # lineno, tail label, head label
    source_label: str | None = None
    source_line = 0
    sink_labels: list[str] = []
    explicit_nodes = False

    for lineno, tokens in _content_lines(text):
        directive, args = tokens[0], tokens[1:]
        if directive == "node":
            if len(args) != 1:
                raise ParseError(f"line {lineno}: node takes one label")
            lab = _check_label(args[0], lineno)
            if lab in node_ids:
                raise ParseError(f"line {lineno}: duplicate node {lab!r}")
            explicit_nodes = True
            node_ids[lab] = len(node_labels)
            node_labels.append(lab)
        elif directive == "edge":
            if len(args) != 3:
                raise ParseError(f"line {lineno}: edge takes label, tail, head")
            lab = _check_label(args[0], lineno)
            if lab in edge_labels:
                raise ParseError(f"line {lineno}: duplicate edge {lab!r}")
            edge_labels.append(lab)
            edge_specs.append((lineno, args[1], args[2]))
        elif directive == "source":
            if len(args) != 1:
                raise ParseError(f"line {lineno}: source takes one label")
            if source_label is not None:
                raise ParseError(f"line {lineno}: source already set on line {source_line}")
            source_label, source_line = args[0], lineno
        elif directive == "sink":
            if len(args) != 1:
                raise ParseError(f"line {lineno}: sink takes one label")
            if args[0] in sink_labels:
                raise ParseError(f"line {lineno}: duplicate sink {args[0]!r}")
            sink_labels.append(args[0])
        else:
            raise ParseError(f"line {lineno}: unknown directive {directive!r}")

    def resolve(label: str, lineno: int, create: bool) -> int:
        if label in node_ids:
            return node_ids[label]
        if explicit_nodes or not create:
            raise ParseError(f"line {lineno}: unknown node {label!r}")
        node_ids[label] = len(node_labels)
        node_labels.append(label)
        return node_ids[label]

    edges = []
    for lineno, tail_lab, head_lab in edge_specs:
        t = resolve(tail_lab, lineno, create=True)
        h = resolve(head_lab, lineno, create=True)
        edges.append((t, h))
    if source_label is None:
        raise ParseError("no source line")
    source = resolve(source_label, source_line, create=False)
    sinks = tuple(resolve(lab, 0, create=False) for lab in sink_labels)

    net = build_network(edges, source, sinks, num_nodes=len(node_labels))
    return net, LabelTable(node_labels=tuple(node_labels), edge_labels=tuple(edge_labels))


def serialize_network(net: Network, labels: LabelTable) -> str:
    """Write a network back out; parse_network(result) reproduces it exactly."""
    lines = [f"node {lab}" for lab in labels.node_labels]
    for e, (t, h) in enumerate(net.edges):
        lines.append(
            f"edge {labels.edge_labels[e]} {labels.node_labels[t]} {labels.node_labels[h]}"
        )
    lines.append(f"source {labels.node_labels[net.source]}")
    lines.extend(f"sink {labels.node_labels[t]}" for t in net.sinks)
    return "\n".join(lines) + "\n"


def parse_collection(
    text: str, net: Network, labels: LabelTable
) -> tuple[WiretapCollection, tuple[str, ...]]:
    """Read a collection file and preprocess it against `net`.

    Returns the deduplicated collection plus human-readable warnings for
    every dropped line. Raises UnknownEdgeLabel with a line number when a
    label is not in the table.
    """
    sets = []
    for lineno, tokens in _content_lines(text):
        try:
            sets.append(labels.edge_set(tokens))
        except UnknownEdgeLabel as exc:
            raise UnknownEdgeLabel(f"line {lineno}: {exc}") from None
    return preprocess(net, sets, describe=labels.format_set)


def serialize_collection(
    sets: Iterable[Iterable[EdgeId]], labels: LabelTable
) -> str:
    """One line per set, labels in ascending edge-id order."""
    lines = [
        " ".join(labels.edge_labels[e] for e in sorted(s)) for s in sets
    ]
    return "\n".join(lines) + ("\n" if lines else "")


def gen_combination(
    n: int, k: int, r: int, max_sets: int = DEFAULT_MAX_SETS
) -> tuple[str, str]:
    """Benchmark family: n relay nodes, one sink per k-subset of them.

    The source feeds every relay; each sink draws one edge from each relay of
    its subset. Wiretap sets take up to r relay-to-sink edges, no two from
    the same relay. Returns (network text, collection text), byte-identical
    across runs. Raises ParameterOutOfRange unless 1 <= k <= n and
    1 <= r <= n, CollectionTooLarge when the set count would top `max_sets`.
    """
    if n < 1:
        raise ParameterOutOfRange(f"n must be at least 1, got {n}")
    if not 1 <= k <= n:
        raise ParameterOutOfRange(f"k must satisfy 1 <= k <= n, got k={k}, n={n}")
    if not 1 <= r <= n:
        raise ParameterOutOfRange(f"r must satisfy 1 <= r <= n, got r={r}, n={n}")
    per_node = comb(n - 1, k - 1)  # lower edges per relay
    total = sum(comb(n, c) * per_node**c for c in range(1, r + 1))
    if total > max_sets:
        raise CollectionTooLarge(
            f"{total} wiretap sets would be generated, cap is {max_sets}"
        )

    subsets = list(combinations(range(1, n + 1), k))
    net_lines = ["node s"]
    net_lines += [f"node v{i}" for i in range(1, n + 1)]
    net_lines += [f"node t{j}" for j in range(1, len(subsets) + 1)]
    net_lines += [f"edge a{i} s v{i}" for i in range(1, n + 1)]
    lower: dict[int, list[str]] = {i: [] for i in range(1, n + 1)}
    for j, subset in enumerate(subsets, start=1):
        for i in subset:
            net_lines.append(f"edge b{i}_{j} v{i} t{j}")
            lower[i].append(f"b{i}_{j}")
    net_lines.append("source s")
    net_lines += [f"sink t{j}" for j in range(1, len(subsets) + 1)]

    set_lines = []
    for c in range(1, r + 1):
        for nodes in combinations(range(1, n + 1), c):
            for pick in product(*(lower[i] for i in nodes)):
                set_lines.append(" ".join(pick))
    assert len(set_lines) == total
    return "\n".join(net_lines) + "\n", "\n".join(set_lines) + "\n"


def gen_r_wiretap(
    net: Network, labels: LabelTable, r: int, max_sets: int = DEFAULT_MAX_SETS
) -> str:
    """Collection of every edge set of size 1..r, in size-then-id order.

    Raises ParameterOutOfRange for r < 1 and CollectionTooLarge when the
    count would top `max_sets`.
    """
    if r < 1:
        raise ParameterOutOfRange(f"r must be at least 1, got {r}")
    n_edges = len(net.edges)
    r_eff = min(r, n_edges)
    total = sum(comb(n_edges, c) for c in range(1, r_eff + 1))
    if total > max_sets:
        raise CollectionTooLarge(
            f"{total} wiretap sets would be generated, cap is {max_sets}"
        )
    lines = []
    for c in range(1, r_eff + 1):
        for ids in combinations(range(n_edges), c):
            lines.append(" ".join(labels.edge_labels[e] for e in ids))
    return "\n".join(lines) + ("\n" if lines else "")


def export_hasse_dot(diagram: HasseDiagram) -> str:
    """Render the class order as deterministic DOT text.

    One node per class, labeled Cl<i> with its member count; an arrow from
    each dominated class up to its covering dominator; maximal classes drawn
    with a double border.
    """
    lines = ["digraph classes {", "  rankdir=BT;"]
    maximal = set(diagram.maximal)
    for i, cls in enumerate(diagram.classes):
        count = len(cls.members)
        label = f"Cl{i + 1} ({count} set{'s' if count != 1 else ''})"
        extra = ", peripheries=2" if i in maximal else ""
        lines.append(f'  n{i + 1} [label="{label}"{extra}];')
    for lo, hi in sorted(diagram.covering):
        lines.append(f"  n{lo + 1} -> n{hi + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"
