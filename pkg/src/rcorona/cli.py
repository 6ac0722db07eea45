"""Command-line front end: construction, spectra, verification, and
cospectral certification as reproducible batch runs.

Exit codes: 0 success / spectra match / verdict cospectral; 1 mismatch or
negative verdict; 2 usage error (bad flags, parameters, or input files);
3 violated mathematical hypothesis (disconnected base, non-regular input,
the m<n closed-form regime, ...).  All numeric output uses 17 significant
digits; pass --json where available for the machine-readable form.
"""

import argparse
import json
import sys

from .closedform import closed_form_spectrum, flatten
from .corona import double_corona, r_edge_corona, r_vertex_corona
from .cospectral import build_cospectral_pair
from .errors import GraphValidationError, HypothesisError
from .graphs import Graph, build_graph, generate, load_graph, save_graph, to_edge_list, to_graph_json
from .invariants import degree_kirchhoff, spanning_trees_matrix_tree, spanning_trees_spectral
from .spectra import compare_spectra, nl_spectrum

__all__ = ["main"]


def _fmt(v: float) -> str:
    return f"{v:.17g}"


def _load(path: str) -> Graph:
    if path == "null":
        return build_graph(0, [])
    return load_graph(path)


def _write_or_print(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _cmd_generate(args) -> int:
    params = [int(p) for p in args.params]
    g = generate(args.family, *params)
    if args.out:
        save_graph(g, args.out, args.format)
    else:
        sys.stdout.write(to_edge_list(g) if args.format == "edgelist" else to_graph_json(g) + "\n")
    return 0


def _build_corona(kind: str, files: list[str], allow_disconnected: bool):
    g = _load(files[0])
    if kind == "double":
        if len(files) != 3:
            raise ValueError("corona double takes three graphs: g g1 g2 ('null' allowed)")
        g1, g2 = _load(files[1]), _load(files[2])
    elif kind == "vertex":
        if len(files) != 2:
            raise ValueError("corona vertex takes two graphs: g g1")
        g1, g2 = _load(files[1]), build_graph(0, [])
    elif kind == "edge":
        if len(files) != 2:
            raise ValueError("corona edge takes two graphs: g g2")
        g1, g2 = build_graph(0, []), _load(files[1])
    else:
        raise ValueError(f"unknown corona kind {kind!r}")
    corona, layout = double_corona(g, g1, g2, allow_disconnected=allow_disconnected)
    return g, g1, g2, corona, layout


def _cmd_corona(args) -> int:
    _, _, _, corona, layout = _build_corona(args.kind, args.graphs, args.allow_disconnected)
    if args.out:
        save_graph(corona, args.out, args.format)
    else:
        sys.stdout.write(to_edge_list(corona) if args.format == "edgelist" else to_graph_json(corona) + "\n")
    if args.emit_layout:
        _write_or_print(layout.to_json(), args.emit_layout)
    print(f"vertices={corona.vertex_count} edges={corona.edge_count}", file=sys.stderr)
    return 0


def _cmd_spectrum(args) -> int:
    if args.corona:
        g, g1, g2, corona, _ = _build_corona(args.corona, args.graphs, args.allow_disconnected)
        corona_inputs = (g, g1, g2)
    else:
        if len(args.graphs) != 1:
            raise ValueError("spectrum takes one graph file unless --corona is given")
        corona = _load(args.graphs[0])
        corona_inputs = None

    numeric = closed = None
    if args.method in ("numeric", "both"):
        numeric = nl_spectrum(corona)
    cf = None
    if args.method in ("closed-form", "both"):
        if corona_inputs is None:
            raise HypothesisError(
                "closed-form spectra exist only for coronas; pass --corona"
            )
        cf = closed_form_spectrum(*corona_inputs)
        closed = flatten(cf)

    payload: dict = {"vertices": corona.vertex_count, "method": args.method}
    if numeric is not None:
        payload["numeric"] = list(numeric.values)
    if closed is not None:
        payload["closed_form"] = list(closed.values)
        payload["families"] = json.loads(cf.to_json())
    code = 0
    if args.method == "both":
        report = compare_spectra(closed, numeric, args.tol)
        payload["match"] = report.matched
        payload["max_deviation"] = report.max_deviation
        code = 0 if report.matched else 1

    if args.json:
        sys.stdout.write(json.dumps(payload) + "\n")
        return code

    if args.method == "both":
        print(f"{'numeric':>24}  {'closed-form':>24}  {'|diff|':>12}")
        for a, b in zip(numeric.values, closed.values):
            print(f"{_fmt(a):>24}  {_fmt(b):>24}  {abs(a - b):>12.3e}")
        print(f"verdict: {'MATCH' if payload['match'] else 'MISMATCH'}")
        print(f"max deviation: {_fmt(payload['max_deviation'])} (tol {_fmt(args.tol)})")
    else:
        values = numeric.values if numeric is not None else closed.values
        for v in values:
            print(_fmt(v))
    return code


def _cmd_cospectral(args) -> int:
    graphs = [_load(p) for p in args.graphs]
    cert = build_cospectral_pair(*graphs, tol=args.tol)
    if args.out:
        _write_or_print(cert.to_json(), args.out)
    if args.json:
        sys.stdout.write(cert.to_json() + "\n")
    else:
        print(f"verdict: {cert.verdict}")
        print(f"max deviation: {_fmt(cert.max_deviation)} (tol {_fmt(cert.tolerance)})")
        print(f"sizes: {cert.graph_a.vertex_count} and {cert.graph_b.vertex_count} vertices")
        print(f"non-regular: {cert.non_regular[0]} and {cert.non_regular[1]}")
    return 0 if cert.cospectral else 1


def _cmd_invariants(args) -> int:
    g = _load(args.graph)
    payload = json.dumps(
        {
            "spanning_trees": spanning_trees_matrix_tree(g),
            "spanning_trees_spectral": spanning_trees_spectral(g),
            "degree_kirchhoff": degree_kirchhoff(g),
        }
    )
    _write_or_print(payload, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rcorona",
        description="R-graph corona constructions and their normalized Laplacian spectra",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a catalog graph")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--out")
    p.add_argument("--format", choices=("edgelist", "json"), default="edgelist")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("corona", help="construct an R-graph corona")
    p.add_argument("kind", choices=("double", "vertex", "edge"))
    p.add_argument("graphs", nargs="+", help="graph files ('null' for the null graph)")
    p.add_argument("--out")
    p.add_argument("--format", choices=("edgelist", "json"), default="edgelist")
    p.add_argument("--emit-layout", metavar="PATH", help="write the block layout JSON")
    p.add_argument("--allow-disconnected", action="store_true")
    p.set_defaults(func=_cmd_corona)

    p = sub.add_parser("spectrum", help="normalized Laplacian spectrum")
    p.add_argument("graphs", nargs="+", help="graph file, or corona inputs with --corona")
    p.add_argument("--corona", choices=("double", "vertex", "edge"))
    p.add_argument("--method", choices=("numeric", "closed-form", "both"), default="numeric")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--json", action="store_true")
    p.add_argument("--allow-disconnected", action="store_true")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("cospectral", help="build and certify a cospectral corona pair")
    p.add_argument("graphs", nargs=6, metavar=("G",) * 6,
                   help="gA gB g1A g1B g2A g2B ('null' allowed for attachments)")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--out", metavar="CERT_JSON")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_cospectral)

    p = sub.add_parser("invariants", help="spanning trees and degree-Kirchhoff index")
    p.add_argument("graph")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_invariants)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HypothesisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (GraphValidationError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
