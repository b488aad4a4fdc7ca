"""Command-line front end.

Exit codes: 0 = circular-arc (or success), 10 = not circular-arc,
1 = failed verification / cross-check disagreement, 2 = usage error,
70 = internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .edgetypes import InternalError, classify_all, complete
from .formats import (FormatError, parse_certificate, parse_edge_list,
                      parse_graph6, serialize_certificate)
from .graph import Graph, GraphError, reduce as reduce_graph
from .knotting import KnottingGraph, bipartite_or_odd_cycle, build_knotting
from .oracle import cross_check, oracle_is_ca
from .recognizer import POSITIVE, recognize, verify_negative, verify_positive

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_NOT_CA = 10
EXIT_INTERNAL = 70


class UsageError(Exception):
    pass


def _load_graph(path: str, fmt: str) -> Graph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    try:
        if fmt == "graph6":
            return parse_graph6(text)
        return parse_edge_list(text)
    except (FormatError, GraphError) as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _cmd_recognize(args) -> int:
    G = _load_graph(args.file, args.format)
    cert = recognize(G)
    doc = serialize_certificate(G, cert)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(doc)
    else:
        sys.stdout.write(doc)
    return EXIT_OK if cert.verdict == POSITIVE else EXIT_NOT_CA


def _cmd_verify(args) -> int:
    G = _load_graph(args.graph, args.format)
    try:
        with open(args.cert, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.cert}: {exc}") from exc
    try:
        cert = parse_certificate(G, text)
    except FormatError as exc:
        print(f"invalid certificate: {exc}", file=sys.stderr)
        return EXIT_INVALID
    ok = (verify_positive(G, cert) if cert.verdict == POSITIVE
          else verify_negative(G, cert))
    print("certificate OK" if ok else "certificate REJECTED")
    return EXIT_OK if ok else EXIT_INVALID


def _cmd_oracle(args) -> int:
    G = _load_graph(args.file, args.format)
    try:
        is_ca = oracle_is_ca(G)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print("circular-arc" if is_ca else "not-circular-arc")
    return EXIT_OK if is_ca else EXIT_NOT_CA


def _cmd_crosscheck(args) -> int:
    spec: Optional[dict] = None
    if args.random:
        try:
            n, count, prob, seed = args.random.split(",")
            spec = {"n": int(n), "count": int(count),
                    "edge_prob": float(prob), "seed": int(seed)}
        except ValueError as exc:
            raise UsageError("--random expects N,COUNT,P,SEED") from exc
    report = cross_check(args.max_n, spec)
    for item in report.disagreements:
        print(json.dumps(item, sort_keys=True))
    print(json.dumps({"checked": report.checked,
                      "disagreements": len(report.disagreements)}, sort_keys=True))
    return EXIT_OK if report.ok else EXIT_INVALID


def _completion_of(G: Graph):
    reduced, trace = reduce_graph(G)
    if reduced.n <= 1:
        raise UsageError("graph reduces to a trivial graph; nothing to complete")
    H, pairing = complete(classify_all(reduced))
    return reduced, trace, H, pairing


def _cmd_complete(args) -> int:
    G = _load_graph(args.file, args.format)
    _, _, H, pairing = _completion_of(G)
    names = H.graph.names
    doc = {
        "n": H.graph.n,
        "vertices": list(names),
        "edges": [[names[u], names[v]] for u, v in H.graph.edges()],
        "pairs": sorted([sorted((names[u], names[v]))
                         for u, v in pairing.items() if u < v]),
    }
    print(json.dumps(doc, sort_keys=True))
    return EXIT_OK


def _knotting_dot(K: KnottingGraph, names) -> str:
    lines = ["graph knotting {"]
    for u, i in K.copies:
        node = f'"{names[u]}/{i + 1}"'
        lines.append(f"  {node};")
    for a, (u, i) in enumerate(K.copies):
        for b in K.adjacency[a]:
            if b > a:
                v, j = K.copies[b]
                lines.append(f'  "{names[u]}/{i + 1}" -- "{names[v]}/{j + 1}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_knotting(args) -> int:
    G = _load_graph(args.file, args.format)
    _, _, H, _ = _completion_of(G)
    try:
        z = H.graph.index_of(args.anchor)
    except GraphError as exc:
        raise UsageError(str(exc)) from exc
    K = build_knotting(H, z)
    result = bipartite_or_odd_cycle(K)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(_knotting_dot(K, H.graph.names))
    if isinstance(result, dict):
        print(f"knotting graph at anchor {args.anchor!r}: bipartite")
        return EXIT_OK
    cyc = ", ".join(f"{H.graph.names[u]}/{i + 1}" for u, i in result)
    print(f"knotting graph at anchor {args.anchor!r}: NOT bipartite "
          f"(odd cycle: {cyc})")
    return EXIT_NOT_CA


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="circarc",
                                description="certifying circular-arc graph recognition")
    sub = p.add_subparsers(dest="command", required=True)

    def add_format(sp):
        sp.add_argument("--format", choices=["edgelist", "graph6"],
                        default="edgelist")

    sp = sub.add_parser("recognize", help="recognize a graph, emit a certificate")
    sp.add_argument("file")
    add_format(sp)
    sp.add_argument("--out", help="write the certificate here instead of stdout")
    sp.set_defaults(func=_cmd_recognize)

    sp = sub.add_parser("verify", help="check a certificate against a graph")
    sp.add_argument("graph")
    sp.add_argument("cert")
    add_format(sp)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("oracle", help="brute-force ground truth (small graphs)")
    sp.add_argument("file")
    add_format(sp)
    sp.set_defaults(func=_cmd_oracle)

    sp = sub.add_parser("crosscheck", help="compare recognizer with the oracle")
    sp.add_argument("--max-n", type=int, default=4)
    sp.add_argument("--random", help="N,COUNT,P,SEED for a randomized batch")
    sp.set_defaults(func=_cmd_crosscheck)

    sp = sub.add_parser("complete", help="print the circular completion")
    sp.add_argument("file")
    add_format(sp)
    sp.set_defaults(func=_cmd_complete)

    sp = sub.add_parser("knotting", help="inspect the knotting graph at an anchor")
    sp.add_argument("file")
    sp.add_argument("--anchor", required=True,
                    help="vertex name in the completion")
    sp.add_argument("--dot", help="write the knotting graph as DOT")
    add_format(sp)
    sp.set_defaults(func=_cmd_knotting)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
