"""``cfconn`` command-line entry point.

Every subcommand prints one JSON report on stdout; diagnostics go to stderr.
Exit codes: 0 ok, 1 parse/connectivity, 2 bad coloring, 3 method refused,
4 scale limit, 70 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import fixtures
from .constructions import construct_cfc_coloring
from .errors import (
    CfcError,
    ColoringError,
    GraphParseError,
    MethodRefused,
    NotConnectedError,
    PreconditionError,
    ScaleError,
)
from .graph import Graph, is_complete, is_connected, parse_graph, render_graph
from .linegraph import DEFAULT_EDGE_CAP, iterated_line_graph
from .oracle import Limits, ORACLE_MAX_EDGES, cfc_oracle
from .solver import cfc_exact, cfc_iterated, k0
from .structure import (
    block_decomposition,
    classify_cut_components,
    find_bridges,
    is_claw_free,
    is_two_connected,
)
from .verify import VERIFY_MAX_EDGES, coloring_from_json, verify_cfc

SCHEMA = 1

EXIT_OK, EXIT_INPUT, EXIT_COLORING, EXIT_REFUSED, EXIT_SCALE = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        super().__init__(message)


def _load(args) -> Graph:
    if args.demo:
        try:
            g = fixtures.demo(args.demo)
        except KeyError as exc:
            raise CliError(EXIT_INPUT, str(exc.args[0])) from exc
    else:
        if not args.file:
            raise CliError(EXIT_INPUT, "no input: pass a graph file or --demo NAME")
        try:
            text = Path(args.file).read_text(encoding="utf-8")
        except OSError as exc:
            raise CliError(EXIT_INPUT, f"cannot read {args.file}: {exc.strerror}") from exc
        try:
            g = parse_graph(text)
        except (GraphParseError, PreconditionError) as exc:
            raise CliError(EXIT_INPUT, f"{args.file}: {exc}") from exc
    if not is_connected(g):
        raise CliError(EXIT_INPUT, "input graph is not connected")
    return g


def _limits(args) -> Limits:
    return Limits(max_edges=args.max_edges, max_colors=args.max_colors)


def _summary(g: Graph) -> dict:
    bridges = find_bridges(g) if g.n >= 2 else ()
    return {
        "n": g.n,
        "m": g.m,
        "complete": is_complete(g),
        "two_edge_connected": g.n >= 2 and not bridges,
        "two_connected": is_two_connected(g),
        "bridges": len(bridges),
    }


def cmd_analyze(g: Graph, args) -> dict:
    cs = classify_cut_components(g, _limits(args))
    out = cs.to_dict()
    if g.n >= 2:
        out.update(block_decomposition(g).to_dict())
    else:
        out.update({"blocks": [], "cut_vertices": []})
    out["claw_free"] = is_claw_free(g)
    out["complete"] = is_complete(g)
    return {"result": out}


def cmd_cfc(g: Graph, args) -> dict:
    limits = _limits(args)
    method = getattr(args, "method", "auto")
    if method == "oracle":
        r = cfc_oracle(g, limits, naive=getattr(args, "naive", False))
    else:
        try:
            r = cfc_exact(g, limits, allow_oracle=(method == "auto"))
        except MethodRefused as exc:
            raise CliError(EXIT_REFUSED, f"--method formula: {exc}") from exc
    return {"result": r.to_dict(g), "method": r.method.value}


def cmd_color(g: Graph, args) -> dict:
    c = construct_cfc_coloring(g, _limits(args))
    out = {"num_colors": c.num_colors}
    if args.output:
        Path(args.output).write_text(c.dumps(g), encoding="utf-8")
        out["written"] = args.output
    else:
        out["coloring"] = c.to_json_dict(g)
    return {"result": out}


def cmd_verify(g: Graph, args) -> dict:
    try:
        text = Path(args.coloring).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(EXIT_COLORING, f"cannot read {args.coloring}: {exc.strerror}") from exc
    c = coloring_from_json(g, text)
    w = verify_cfc(g, c, max_edges=args.verify_max_edges)
    if w.ok:
        return {"result": {"status": "PASS", "num_colors": c.num_colors, "witnesses": len(w.paths)}}
    return {"result": {"status": "FAIL", "num_colors": c.num_colors, "failing_pair": list(w.failing_pair)}}


def cmd_line(g: Graph, args) -> dict | None:
    lg = iterated_line_graph(g, args.k, args.edge_cap)
    text = render_graph(lg.graph)
    provenance = {
        "schema": SCHEMA,
        "k": args.k,
        "provenance": {
            x: (src if isinstance(src, str) else [src.u, src.v]) for x, src in lg.provenance.items()
        },
    }
    if args.k >= 1:
        provenance["original_edges"] = {
            x: sorted(e.key for e in lg.original_edges(x)) for x in lg.graph.vertices
        }
    if not args.output:
        sys.stdout.write(text)
        if args.provenance:
            Path(args.provenance).write_text(json.dumps(provenance, indent=2) + "\n", encoding="utf-8")
        return None
    sidecar = args.provenance or args.output + ".provenance.json"
    Path(args.output).write_text(text, encoding="utf-8")
    Path(sidecar).write_text(json.dumps(provenance, indent=2) + "\n", encoding="utf-8")
    return {"result": {"n": lg.graph.n, "m": lg.graph.m, "written": args.output, "provenance": sidecar}}


def _value(r) -> int | list[int]:
    return r.value if r.is_exact else list(r.value)


def cmd_iterate(g: Graph, args) -> dict:
    results = [cfc_iterated(g, k, args.edge_cap, _limits(args)) for k in range(args.k + 1)]
    return {
        "result": {
            "trajectory": [_value(r) for r in results],
            "methods": [r.method.value for r in results],
        }
    }


def cmd_k0(g: Graph, args) -> dict:
    return {"result": k0(g, args.edge_cap, _limits(args)).to_dict()}


COMMANDS = {
    "analyze": cmd_analyze,
    "cfc": cmd_cfc,
    "oracle": cmd_cfc,
    "color": cmd_color,
    "verify": cmd_verify,
    "line": cmd_line,
    "iterate": cmd_iterate,
    "k0": cmd_k0,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", nargs="?", help="edge list or DOT file")
    common.add_argument("--demo", metavar="NAME", help="use a built-in graph (P8, K5, K1,3, C5, paw, bowtie, "
                        "triangle-chain, triangle-chain3, petersen, spider)")
    common.add_argument("--max-edges", type=int, default=ORACLE_MAX_EDGES, help="oracle edge limit")
    common.add_argument("--max-colors", type=int, default=None, help="oracle color limit")
    common.add_argument("--edge-cap", type=int, default=DEFAULT_EDGE_CAP, help="line-graph edge limit")
    common.add_argument("--verify-max-edges", type=int, default=VERIFY_MAX_EDGES, help="verifier edge limit")
    common.add_argument("--quiet", action="store_true", help="omit timing from reports")

    parser = argparse.ArgumentParser(prog="cfconn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common], help="bridges, cut-path components, blocks, h")
    p = sub.add_parser("cfc", parents=[common], help="conflict-free connection number")
    p.add_argument("--method", choices=["auto", "formula", "oracle"], default="auto")
    p.add_argument("--naive", action="store_true", help="with --method oracle: unpruned enumeration")
    p = sub.add_parser("oracle", parents=[common], help="alias for cfc --method oracle")
    p.add_argument("--naive", action="store_true", help="unpruned enumeration")
    p.set_defaults(method="oracle")
    p = sub.add_parser("color", parents=[common], help="construct an optimal CFC-coloring")
    p.add_argument("-o", "--output", help="write the coloring JSON here")
    p = sub.add_parser("verify", parents=[common], help="check a coloring JSON")
    p.add_argument("--coloring", required=True, help="coloring JSON file")
    p = sub.add_parser("line", parents=[common], help="emit L^k(G)")
    p.add_argument("-k", type=int, default=1)
    p.add_argument("-o", "--output", help="edge list destination (stdout if omitted)")
    p.add_argument("--provenance", help="provenance sidecar path (default OUTPUT.provenance.json)")
    p = sub.add_parser("iterate", parents=[common], help="trajectory cfc(L^0) .. cfc(L^k)")
    p.add_argument("-k", type=int, default=5)
    sub.add_parser("k0", parents=[common], help="smallest k with cfc(L^k(G)) = 2")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "k", 0) < 0:
        print("cfconn: -k must be nonnegative", file=sys.stderr)
        return EXIT_INPUT
    start = time.perf_counter()
    try:
        g = _load(args)
        payload = COMMANDS[args.command](g, args)
    except CliError as exc:
        print(f"cfconn: {exc}", file=sys.stderr)
        return exc.code
    except ColoringError as exc:
        print(f"cfconn: bad coloring: {exc}", file=sys.stderr)
        return EXIT_COLORING
    except ScaleError as exc:
        print(f"cfconn: scale limit: {exc}; limits {json.dumps(exc.limits)}", file=sys.stderr)
        return EXIT_SCALE
    except MethodRefused as exc:
        print(f"cfconn: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (NotConnectedError, PreconditionError) as exc:
        print(f"cfconn: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CfcError as exc:
        print(f"cfconn: internal error: {exc}", file=sys.stderr)
        return 70
    if payload is None:
        return EXIT_OK
    report = {"schema": SCHEMA, "command": args.command, "input": _summary(g)}
    report.update(payload)
    if not args.quiet:
        report["timing_ms"] = round((time.perf_counter() - start) * 1000, 3)
    print(json.dumps(report, indent=2))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
