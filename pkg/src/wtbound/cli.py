"""Command line front end.

Subcommands: bound, classes, hasse, primary-cut, mincut, gen, verify. Every
command prints a human-readable report followed by a `[result]` block of
key=value lines for scripting. Exit codes: 0 success, 1 usage error, 2 bad
input (unparseable files, unknown labels, unreachable targets, generator
range errors), 3 instance too large for brute-force verification, 4 verify
found a fast-vs-oracle mismatch.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import fileio, oracle, wiretap
from .cuts import mincut_capacity, primary_min_cut
from .errors import InstanceTooLarge, WtbError
from .fileio import LabelTable
from .graph import Network
from .wiretap import WiretapCollection


class _Parser(argparse.ArgumentParser):
    """argparse, but usage errors exit with code 1 instead of 2."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _load_network(path: str) -> tuple[Network, LabelTable]:
    return fileio.parse_network(Path(path).read_text())


def _load_collection(
    path: str, net: Network, labels: LabelTable
) -> tuple[WiretapCollection, tuple[str, ...]]:
    coll, warnings = fileio.parse_collection(Path(path).read_text(), net, labels)
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    return coll, warnings


def _parse_target(spec: str, labels: LabelTable) -> frozenset[int]:
    parts = [p.strip() for p in spec.split(",") if p.strip()]
    return labels.edge_set(parts)


def _network_summary(net: Network, labels: LabelTable) -> str:
    sinks = " ".join(labels.node_labels[t] for t in net.sinks) or "(none)"
    return (
        f"network: {net.num_nodes} nodes, {len(net.edges)} edges, "
        f"source {labels.node_labels[net.source]}, sinks {sinks}"
    )


def _finish(human: list[str], machine: list[tuple[str, object]], report_path: Optional[str] = None) -> None:
    text = "\n".join(human) + "\n\n[result]\n"
    text += "".join(f"{k}={v}\n" for k, v in machine)
    print(text, end="")
    if report_path:
        Path(report_path).write_text(text)


def _cmd_bound(args: argparse.Namespace) -> int:
    net, labels = _load_network(args.network)
    coll, _ = _load_collection(args.collection, net, labels)
    human = [_network_summary(net, labels)]
    machine: list[tuple[str, object]] = [
        ("nodes", net.num_nodes),
        ("edges", len(net.edges)),
    ]
    if args.regularize:
        cuts = [wiretap.regularize(net, s).edges for s in coll.sets]
        before = len(coll.sets)
        coll, _ = wiretap.preprocess(net, cuts, describe=labels.format_set)
        human.append(
            f"regularized: {before} sets replaced by {len(coll.sets)} distinct minimum cuts"
        )
        machine.append(("regularized_from", before))
    human.append(f"collection: {len(coll.sets)} sets")
    machine += [("sets", len(coll.sets)), ("mode", args.mode)]

    result = wiretap.compute_bound(net, coll, mode=args.mode, select=args.select)
    if result.n_classes is not None:
        human.append(f"equivalence classes (N): {result.n_classes}")
        machine.append(("n", result.n_classes))
    if result.n_max is not None:
        human.append(f"maximal classes (N_max): {result.n_max}")
        machine.append(("n_max", result.n_max))
    label = "maximal classes" if result.n_max is not None else "classes"
    human.append(f"primary cuts of the {label}:")
    human += [f"  {labels.format_set(c.edges)}" for c in result.cuts]
    machine.append(("cuts", len(result.cuts)))
    machine += [
        (f"cut.{i + 1}", labels.format_edges(c.edges)) for i, c in enumerate(result.cuts)
    ]
    bound = result.n_max if result.n_max is not None else result.n_classes
    human.append(
        f"an alphabet with more than {bound} symbols suffices for this collection; "
        f"recommended size at least {result.recommended_alphabet} "
        f"(covers {result.sinks_considered} sinks)"
    )
    machine.append(("recommended_alphabet", result.recommended_alphabet))
    _finish(human, machine, args.report)
    return 0


def _cmd_classes(args: argparse.Namespace) -> int:
    net, labels = _load_network(args.network)
    coll, _ = _load_collection(args.collection, net, labels)
    classes = wiretap.partition_classes(net, coll)
    human = [_network_summary(net, labels), f"collection: {len(coll.sets)} sets"]
    human.append(f"{len(classes)} equivalence classes")
    machine: list[tuple[str, object]] = [("sets", len(coll.sets)), ("classes", len(classes))]
    for i, cls in enumerate(classes, start=1):
        human.append(
            f"class {i}: capacity {cls.capacity}, primary cut "
            f"{labels.format_set(cls.primary_cut.edges)}, {len(cls.members)} sets"
        )
        human += [f"  {labels.format_set(coll.sets[m])}" for m in cls.members]
        machine += [
            (f"class.{i}.capacity", cls.capacity),
            (f"class.{i}.cut", labels.format_edges(cls.primary_cut.edges)),
            (f"class.{i}.size", len(cls.members)),
            (
                f"class.{i}.members",
                ";".join(labels.format_set(coll.sets[m]) for m in cls.members),
            ),
        ]
    _finish(human, machine)
    return 0


def _cmd_hasse(args: argparse.Namespace) -> int:
    net, labels = _load_network(args.network)
    coll, _ = _load_collection(args.collection, net, labels)
    classes = wiretap.partition_classes(net, coll)
    diagram = wiretap.class_hasse(net, classes)
    dot = fileio.export_hasse_dot(diagram)
    Path(args.dot).write_text(dot)
    human = [
        _network_summary(net, labels),
        f"{len(classes)} classes, {len(diagram.covering)} covering pairs, "
        f"{len(diagram.maximal)} maximal",
        "maximal classes: " + ", ".join(f"Cl{i + 1}" for i in diagram.maximal),
        f"wrote DOT to {args.dot}",
    ]
    machine: list[tuple[str, object]] = [
        ("classes", len(classes)),
        ("covering", len(diagram.covering)),
        ("maximal", ",".join(str(i + 1) for i in diagram.maximal)),
        ("dot", args.dot),
    ]
    machine += [
        (f"cover.{k + 1}", f"{lo + 1}<{hi + 1}")
        for k, (lo, hi) in enumerate(sorted(diagram.covering))
    ]
    _finish(human, machine)
    return 0


def _cmd_primary_cut(args: argparse.Namespace) -> int:
    net, labels = _load_network(args.network)
    target = _parse_target(args.target, labels)
    cut = primary_min_cut(net, target)
    human = [
        f"primary minimum cut of {labels.format_set(target)}: "
        f"{labels.format_set(cut.edges)} (capacity {cut.capacity})"
    ]
    machine = [
        ("target", labels.format_edges(target)),
        ("cut", labels.format_edges(cut.edges)),
        ("capacity", cut.capacity),
    ]
    _finish(human, machine)
    return 0


def _cmd_mincut(args: argparse.Namespace) -> int:
    net, labels = _load_network(args.network)
    target = _parse_target(args.target, labels)
    cap = mincut_capacity(net, target)
    human = [
        f"minimum cut capacity between source and {labels.format_set(target)}: {cap}"
    ]
    machine = [("target", labels.format_edges(target)), ("mincut", cap)]
    _finish(human, machine)
    return 0


def _cmd_gen_combination(args: argparse.Namespace) -> int:
    net_text, sets_text = fileio.gen_combination(
        args.n, args.k, args.r, max_sets=args.max_sets
    )
    net_path = Path(args.out_prefix + ".net")
    sets_path = Path(args.out_prefix + ".wsets")
    net_path.write_text(net_text)
    sets_path.write_text(sets_text)
    net, _ = fileio.parse_network(net_text)
    n_sets = sum(1 for line in sets_text.splitlines() if line.strip())
    human = [
        f"wrote {net_path} ({net.num_nodes} nodes, {len(net.edges)} edges, "
        f"{len(net.sinks)} sinks)",
        f"wrote {sets_path} ({n_sets} wiretap sets)",
    ]
    machine = [
        ("net", str(net_path)),
        ("wsets", str(sets_path)),
        ("nodes", net.num_nodes),
        ("edges", len(net.edges)),
        ("sinks", len(net.sinks)),
        ("sets", n_sets),
    ]
    _finish(human, machine)
    return 0


def _cmd_gen_rwiretap(args: argparse.Namespace) -> int:
    net, labels = _load_network(args.network)
    text = fileio.gen_r_wiretap(net, labels, args.r, max_sets=args.max_sets)
    Path(args.out).write_text(text)
    n_sets = sum(1 for line in text.splitlines() if line.strip())
    human = [f"wrote {args.out} ({n_sets} wiretap sets, sizes 1..{args.r})"]
    machine = [("wsets", args.out), ("sets", n_sets), ("r", args.r)]
    _finish(human, machine)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    net, labels = _load_network(args.network)
    coll, _ = _load_collection(args.collection, net, labels)
    checks = oracle.cross_check(net, coll)
    bad = [c for c in checks if not c.ok]
    human = []
    for c in checks:
        mark = "ok" if c.ok else "MISMATCH"
        line = f"{c.name}: {mark}"
        if not c.ok:
            line += f" ({c.detail})"
        human.append(line)
    human.append(f"verify: {len(checks)} checks, {len(bad)} mismatches")
    machine = [("checks", len(checks)), ("mismatches", len(bad))]
    _finish(human, machine)
    return 4 if bad else 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="wtb",
        description="Alphabet-size lower bounds for secure coding on wiretap networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="compute the class-count bounds N and N_max")
    p.add_argument("network")
    p.add_argument("collection")
    p.add_argument("--mode", choices=("nmax", "n", "both"), default="both")
    p.add_argument(
        "--regularize",
        action="store_true",
        help="replace every set by its primary minimum cut first",
    )
    p.add_argument(
        "--select",
        choices=("cardinality", "mincut"),
        default="cardinality",
        help="per-round choice key of the pruning loop",
    )
    p.add_argument("--report", help="also write the report to this file")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("classes", help="list the equivalence classes")
    p.add_argument("network")
    p.add_argument("collection")
    p.set_defaults(func=_cmd_classes)

    p = sub.add_parser("hasse", help="export the class order as a DOT diagram")
    p.add_argument("network")
    p.add_argument("collection")
    p.add_argument("--dot", required=True, help="output path for DOT text")
    p.set_defaults(func=_cmd_hasse)

    p = sub.add_parser("primary-cut", help="primary minimum cut of an edge set")
    p.add_argument("network")
    p.add_argument("--target", required=True, help="comma-separated edge labels")
    p.set_defaults(func=_cmd_primary_cut)

    p = sub.add_parser("mincut", help="minimum cut capacity to an edge set")
    p.add_argument("network")
    p.add_argument("--target", required=True, help="comma-separated edge labels")
    p.set_defaults(func=_cmd_mincut)

    p = sub.add_parser("gen", help="deterministic instance generators")
    gen_sub = p.add_subparsers(dest="generator", required=True)

    g = gen_sub.add_parser("combination", help="relay network with one sink per k-subset")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--r", type=int, required=True)
    g.add_argument("--out-prefix", required=True)
    g.add_argument("--max-sets", type=int, default=fileio.DEFAULT_MAX_SETS)
    g.set_defaults(func=_cmd_gen_combination)

    g = gen_sub.add_parser("rwiretap", help="all edge sets of size up to r")
    g.add_argument("network")
    g.add_argument("--r", type=int, required=True)
    g.add_argument("--out", required=True)
    g.add_argument("--max-sets", type=int, default=fileio.DEFAULT_MAX_SETS)
    g.set_defaults(func=_cmd_gen_rwiretap)

    p = sub.add_parser(
        "verify",
        help="cross-check fast results against brute force "
        "(universe capped per target; override with WTB_MAX_ORACLE_EDGES)",
    )
    p.add_argument("network")
    p.add_argument("collection")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InstanceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (WtbError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
