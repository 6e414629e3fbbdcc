"""Command-line surface.

Exit codes: 0 on success, 2 when a witness or rejection is the answer,
1 on errors (bad input, violated preconditions).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .decomposer import decompose
from .degeneracy import alpha_degeneracy, low_alpha_vertex
from .graph import Graph, parse_graph, serialize_graph
from .harness import (
    audit_sandwich,
    exact_tia,
    gen_class_free,
    gen_p5_free,
    parse_pattern,
    summarize,
    write_report,
)
from .oracles import (
    ForbiddenStructureFound,
    find_induced_complete_bipartite,
    find_induced_path,
)
from .separators import (
    DisconnectedGraphError,
    dbs_low_alpha_vertex,
    get_separator_provider,
    gyarfas_dominated_separator,
)
from .treedecomp import TreeDecomposition, parse_td, serialize_td, td_alpha, to_record, validate

OK, WITNESS, ERROR = 0, 2, 1


def _load_graph(path: str) -> Graph:
    return parse_graph(Path(path).read_text())


def _cmd_decompose(args) -> int:
    g = _load_graph(args.graph)
    log: list = []
    try:
        result = decompose(g, args.ell, log=log if args.log else None)
    except ForbiddenStructureFound as exc:
        print(json.dumps({"outcome": "rejected-p5", "witness": exc.witness.to_record()}))
        return WITNESS
    if isinstance(result, TreeDecomposition):
        payload = {
            "outcome": "decomposition",
            "td_alpha": td_alpha(g, result),
            "bound": 4 * args.ell,
        }
        if args.emit_td:
            Path(args.emit_td).write_text(serialize_td(result))
            payload["td_path"] = args.emit_td
        else:
            payload["td"] = to_record(result)
        if args.log:
            payload["log"] = log
        print(json.dumps(payload))
        return OK
    payload = {"outcome": "biclique", "witness": result.to_record()}
    if args.log:
        payload["log"] = log
    print(json.dumps(payload))
    return WITNESS


def _cmd_check_td(args) -> int:
    g = _load_graph(args.graph)
    td = parse_td(Path(args.td).read_text())
    problems = validate(g, td)
    if problems:
        print(json.dumps({"valid": False, "violations": problems}))
        return WITNESS
    print(json.dumps({"valid": True, "td_alpha": td_alpha(g, td)}))
    return OK


def _cmd_alpha_degeneracy(args) -> int:
    g = _load_graph(args.graph)
    print(alpha_degeneracy(g))
    return OK


def _cmd_find(args) -> int:
    g = _load_graph(args.graph)
    spec = args.pattern
    if spec == "p5":
        w = find_induced_path(g, 5)
    elif spec.startswith("path:"):
        w = find_induced_path(g, int(spec.split(":")[1]))
    elif spec.startswith("kll:"):
        ell = int(spec.split(":")[1])
        w = find_induced_complete_bipartite(g, ell, ell)
    else:
        print(f"unknown pattern {spec!r}", file=sys.stderr)
        return ERROR
    if w is None:
        print(json.dumps({"found": False}))
        return OK
    print(json.dumps({"found": True, "witness": w.to_record()}))
    return WITNESS


def _cmd_low_alpha(args) -> int:
    g = _load_graph(args.graph)
    report = low_alpha_vertex(g, args.ell, args.d)
    print(json.dumps(report.to_record()))
    return WITNESS if report.witness is not None else OK


def _cmd_separator(args) -> int:
    g = _load_graph(args.graph)
    try:
        cert = gyarfas_dominated_separator(g, args.t)
    except ForbiddenStructureFound as exc:
        print(json.dumps({"outcome": "path-found", "witness": exc.witness.to_record()}))
        return WITNESS
    except DisconnectedGraphError as exc:
        print(str(exc), file=sys.stderr)
        return ERROR
    print(json.dumps(cert.to_record()))
    return OK


def _cmd_dbs_vertex(args) -> int:
    g = _load_graph(args.graph)
    provider = get_separator_provider(f"pt-free:{args.t}")
    try:
        v, alpha = dbs_low_alpha_vertex(g, args.ell, args.t - 1, provider)
    except ForbiddenStructureFound as exc:
        print(json.dumps({"outcome": "class-breach", "witness": exc.witness.to_record()}))
        return WITNESS
    print(json.dumps({"vertex": v, "alpha_closed": alpha}))
    return OK


def _cmd_exact_tia(args) -> int:
    g = _load_graph(args.graph)
    print(exact_tia(g, cap=args.cap))
    return OK


def _cmd_gen(args) -> int:
    if args.kind in ("p5-union-join", "p5-perturb-filter"):
        method = "union-join" if args.kind == "p5-union-join" else "perturb-filter"
        g = gen_p5_free(args.n, args.seed, method)
    elif args.kind == "class-free":
        if not args.forbid:
            print("class-free generation needs --forbid", file=sys.stderr)
            return ERROR
        patterns = [parse_pattern(p) for p in args.forbid.split(",")]
        g = gen_class_free(args.n, args.seed, patterns)
    else:
        print(f"unknown kind {args.kind!r}", file=sys.stderr)
        return ERROR
    sys.stdout.write(serialize_graph(g))
    return OK


def _cmd_audit(args) -> int:
    corpus = sorted(Path(args.corpus).glob("*"))
    records = []
    failures = 0
    for i, path in enumerate(p for p in corpus if p.is_file()):
        g = parse_graph(path.read_text())
        try:
            records.append(audit_sandwich(g, seed=i, generator=path.name))
        except AssertionError as exc:
            failures += 1
            print(f"FAIL {path.name}: {exc}", file=sys.stderr)
    write_report(records, args.report)
    for ell, worst, bound in summarize(records):
        print(f"ell={ell}: worst bag alpha {worst} (bound {bound})")
    return ERROR if failures else OK


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="treealpha",
        description="Bounded-bag-independence tree decompositions of P5-free graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="biclique or a 4*ell decomposition")
    p.add_argument("graph")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--emit-td")
    p.add_argument("--log", action="store_true")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("check-td", help="validate a decomposition file")
    p.add_argument("graph")
    p.add_argument("td")
    p.set_defaults(func=_cmd_check_td)

    p = sub.add_parser("alpha-degeneracy", help="exact alpha-degeneracy")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_alpha_degeneracy)

    p = sub.add_parser("find", help="brute-force induced pattern search")
    p.add_argument("graph")
    p.add_argument("--pattern", required=True, help="p5 | kll:L | path:T")
    p.set_defaults(func=_cmd_find)

    p = sub.add_parser("low-alpha", help="vertex with small closed-neighborhood alpha")
    p.add_argument("graph")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--d", type=int, default=2)
    p.set_defaults(func=_cmd_low_alpha)

    p = sub.add_parser("separator", help="dominated balanced separator")
    p.add_argument("graph")
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=_cmd_separator)

    p = sub.add_parser("dbs-vertex", help="separator-driven low-alpha vertex")
    p.add_argument("graph")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=_cmd_dbs_vertex)

    p = sub.add_parser("exact-tia", help="exact tree-independence number (small n)")
    p.add_argument("graph")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=_cmd_exact_tia)

    p = sub.add_parser("gen", help="certified class-member graph generator")
    p.add_argument("--kind", required=True,
                   help="p5-union-join | p5-perturb-filter | class-free")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--forbid", help="comma-separated patterns for class-free")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("audit", help="bound-sandwich audit over a corpus directory")
    p.add_argument("--corpus", required=True)
    p.add_argument("--report", required=True)
    p.set_defaults(func=_cmd_audit)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(str(exc), file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
