"""Command-line surface: graph files in, deterministic JSON reports out.

Graph file formats (selected by --format, else by file extension):

  text   lines of `vertices <n>` then `edge <u> <v> [<w>]` (weight
         defaults to 1); `#` starts a comment; blank lines are ignored.
  json   {"vertices": n, "edges": [[u, v, w], ...]}

Exit codes: 0 success (for `classify`: normal), 10 not integrally closed,
11 integrally closed but not normal, 2 input error, 3 resource budget
exceeded, 1 enumeration found disagreements.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .classifier import (
    GraphFamily,
    classify,
    cross_validate,
    graph_as_dict,
    verify_certificate,
)
from .closure import (
    DEFAULT_BOX_BUDGET,
    closure_power_generators,
    normality_scan,
)
from .errors import GraphError, GraphFileError, IdealError, ResourceLimitError
from .ideal import contains_power, edge_ideal, power
from .wgraph import build_graph, classify_compact

ENV_BOX_BUDGET = "NIL_BOX_BUDGET"


# ---------------------------------------------------------------------------
# Graph files
# ---------------------------------------------------------------------------

def _parse_int(text, lineno, what):
    try:
        return int(text)
    except ValueError:
        raise GraphFileError(f"{what} must be an integer, got {text!r}", lineno) from None


def parse_graph_text(text):
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertices":
            if n is not None:
                raise GraphFileError("duplicate vertices line", lineno)
            if len(parts) != 2:
                raise GraphFileError("expected: vertices <n>", lineno)
            n = _parse_int(parts[1], lineno, "vertex count")
        elif parts[0] == "edge":
            if n is None:
                raise GraphFileError("edge line before vertices header", lineno)
            if len(parts) not in (3, 4):
                raise GraphFileError("expected: edge <u> <v> [<w>]", lineno)
            u = _parse_int(parts[1], lineno, "endpoint")
            v = _parse_int(parts[2], lineno, "endpoint")
            w = _parse_int(parts[3], lineno, "weight") if len(parts) == 4 else 1
            edges.append((u, v, w))
        else:
            raise GraphFileError(f"unknown directive {parts[0]!r}", lineno)
    if n is None:
        raise GraphFileError("missing vertices header")
    return build_graph(n, edges)


def parse_graph_json(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFileError(f"invalid JSON: {exc}", exc.lineno) from None
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise GraphFileError('expected an object with "vertices" and "edges"')
    n = data["vertices"]
    if not isinstance(n, int):
        raise GraphFileError('"vertices" must be an integer')
    edges = []
    for item in data["edges"]:
        if not isinstance(item, list) or len(item) not in (2, 3):
            raise GraphFileError(f"edge entries must be [u, v] or [u, v, w], got {item!r}")
        edges.append(tuple(item) if len(item) == 3 else (item[0], item[1], 1))
    return build_graph(n, edges)


def parse_graph_file(path, fmt=None):
    """Parse a graph file; format from `fmt` or the file extension."""
    text = Path(path).read_text(encoding="utf-8")
    if fmt is None:
        fmt = "json" if str(path).endswith(".json") else "text"
    if fmt == "json":
        return parse_graph_json(text)
    return parse_graph_text(text)


def serialize_graph(G, fmt="text"):
    if fmt == "json":
        return json.dumps(graph_as_dict(G), indent=2, sort_keys=True) + "\n"
    lines = [f"vertices {G.n}"]
    lines.extend(f"edge {u} {v} {w}" for u, v, w in G.edge_list())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# JSON payloads
# ---------------------------------------------------------------------------

def _emit(payload):
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _config_payload(config):
    out = {
        "kind": config.kind,
        "vertices": list(config.vertices),
        "edges": [list(e) for e in config.edges],
    }
    if config.cycles:
        out["cycles"] = [list(c) for c in config.cycles]
    if config.pendant is not None:
        out["pendant"] = list(config.pendant)
    if config.kind == "F5":
        out["connectors"] = [list(e) for e in config.connectors]
    return out


def _certificate_payload(cert):
    out = {
        "kind": cert.config.kind,
        "t": cert.t,
        "witness": list(cert.witness),
        "verified": cert.verified,
    }
    if cert.note:
        out["note"] = cert.note
    return out


def _monomial(exponent):
    factors = [
        f"x{i}" if e == 1 else f"x{i}^{e}"
        for i, e in enumerate(exponent, start=1)
        if e
    ]
    return " ".join(factors) if factors else "1"


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_classify(args):
    G = parse_graph_file(args.file, args.format)
    report = classify(G)
    payload = {
        "graph": graph_as_dict(G),
        "integrally_closed": report.integrally_closed,
        "normal": report.normal,
        "configs": [_config_payload(c) for c in report.found],
        "certificate": None,
        "notes": list(report.notes),
    }
    if args.certificates and report.primary_certificate is not None:
        cert = report.primary_certificate
        if args.verify:
            cert = verify_certificate(G, cert, box_budget=args.box_budget)
        payload["certificate"] = _certificate_payload(cert)
        payload["certificate"]["witness_monomial"] = _monomial(cert.witness)
    _emit(payload)
    if report.normal:
        return 0
    return 10 if not report.integrally_closed else 11


def cmd_closure(args):
    G = parse_graph_file(args.file, args.format)
    I = edge_ideal(G)
    closure = closure_power_generators(I, args.k, box_budget=args.box_budget)
    pk = power(I, args.k)
    difference = [g for g in closure.gens if not contains_power(I, g, args.k)]
    _emit(
        {
            "k": args.k,
            "power_generators": [list(g) for g in pk.gens],
            "closure_generators": [list(g) for g in closure.gens],
            "difference": [list(g) for g in difference],
            "integrally_closed": not difference,
        }
    )
    return 0


def cmd_normality(args):
    G = parse_graph_file(args.file, args.format)
    verdict = normality_scan(edge_ideal(G), t_max=args.tmax, box_budget=args.box_budget)
    payload = {"status": verdict.status, "t": verdict.t}
    if verdict.witness is not None:
        payload["witness"] = list(verdict.witness)
        payload["witness_monomial"] = _monomial(verdict.witness)
    else:
        payload["note"] = (
            "no counterexample up to t_max; this bounds but does not prove normality"
        )
    _emit(payload)
    return 0


def cmd_compact(args):
    G = parse_graph_file(args.file, args.format)
    result = classify_compact(G)
    payload = {"tag": result.tag, "stems": list(result.stems)}
    if result.has_even_path is not None:
        payload["has_even_path"] = result.has_even_path
    _emit(payload)
    return 0


def cmd_enumerate(args):
    if args.max_vertices > args.safety_cap:
        raise GraphError(
            f"max-vertices {args.max_vertices} exceeds the safety cap "
            f"{args.safety_cap} (raise it with --safety-cap)"
        )
    weights = tuple(args.weights)
    report = cross_validate(
        GraphFamily(args.max_vertices, weights),
        t_max=args.tmax,
        box_budget=args.box_budget,
    )
    _emit(
        {
            "family": {"max_vertices": args.max_vertices, "weights": list(weights)},
            "t_max": args.tmax,
            "seed": args.seed,
            "graphs_checked": report.graphs_checked,
            "classes_checked": report.classes_checked,
            "disagreements": list(report.disagreements),
            "skipped": list(report.skipped),
            "normal_classes": report.normal_classes,
            "closed_not_normal_classes": report.closed_not_normal_classes,
            "not_closed_classes": report.not_closed_classes,
            "note": report.note,
        }
    )
    return 0 if report.agreed else 1


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _weights_arg(text):
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values or any(w < 1 for w in values):
        raise argparse.ArgumentTypeError("weights must be positive integers")
    return values


def _default_box_budget():
    raw = os.environ.get(ENV_BOX_BUDGET)
    if raw is None:
        return DEFAULT_BOX_BUDGET
    try:
        value = int(raw)
        if value < 1:
            raise ValueError
    except ValueError:
        raise GraphError(f"{ENV_BOX_BUDGET} must be a positive integer, got {raw!r}")
    return value


def _add_common(sub, with_format=True):
    if with_format:
        sub.add_argument(
            "--format",
            choices=("text", "json"),
            default=None,
            help="graph file format (default: by extension, .json means json)",
        )
    sub.add_argument(
        "--box-budget",
        type=int,
        default=None,
        metavar="N",
        help=f"lattice box volume budget (default {DEFAULT_BOX_BUDGET}, "
        f"or the {ENV_BOX_BUDGET} environment variable)",
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="nil",
        description="Integral closedness and normality of edge ideals of "
        "edge-weighted graphs.",
    )
    parser.add_argument("--version", action="version", version=f"nil {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="structural verdicts and certificate")
    p.add_argument("file")
    _add_common(p)
    p.add_argument(
        "--certificates",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="include the primary counterexample certificate (default on)",
    )
    p.add_argument(
        "--verify",
        action="store_true",
        help="check the certificate against the exact LP oracle",
    )
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("closure", help="generators of the closure of I^k vs I^k")
    p.add_argument("file")
    p.add_argument("k", type=int, help="power to close (k >= 1)")
    _add_common(p)
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("normality", help="scan powers 1..t_max for counterexamples")
    p.add_argument("file")
    _add_common(p)
    p.add_argument("--tmax", type=int, default=3, help="largest power to scan (default 3)")
    p.set_defaults(func=cmd_normality)

    p = sub.add_parser("compact", help="bouquet classification of a leafless graph")
    p.add_argument("file")
    _add_common(p, with_format=True)
    p.set_defaults(func=cmd_compact)

    p = sub.add_parser("enumerate", help="cross-validate classifier vs oracle")
    _add_common(p, with_format=False)
    p.add_argument("--max-vertices", type=int, default=4)
    p.add_argument("--weights", type=_weights_arg, default=(1, 2))
    p.add_argument("--tmax", type=int, default=3)
    p.add_argument("--seed", type=int, default=0, help="recorded in the report")
    p.add_argument("--safety-cap", type=int, default=6)
    p.set_defaults(func=cmd_enumerate)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "box_budget", None) is None:
            args.box_budget = _default_box_budget()
        elif args.box_budget < 1:
            raise GraphError("--box-budget must be a positive integer")
        if getattr(args, "k", None) is not None and args.k < 1:
            raise GraphError("k must be a positive integer")
        if getattr(args, "tmax", None) is not None and args.tmax < 1:
            raise GraphError("--tmax must be a positive integer")
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (GraphFileError, GraphError, IdealError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
