"""Command-line interface.

Exit codes: 0 verified/pass, 1 checked and false, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import certify
from .graphs import cayley_s5, state_graph, trace
from .group_core import ParseError, parse_word
from .hamilton import (
    HamCycleWord,
    InvalidCertificateError,
    SpliceNotFoundError,
    canonicalize,
    find_ham_cycles,
    ham_cycle_failure,
    lift_cycle,
    path_certificate,
    splice_to_path,
)
from .puzzle_model import HOME, Position, encode
from .quotient import identity_coset, quotient_k0, quotient_k1

GRAPHS = ("state", "cayley-s5", "quotient-k0", "quotient-k1")
QUOTIENTS = {"quotient-k0": quotient_k0, "quotient-k1": quotient_k1}


def _graph(name: str):
    if name == "state":
        return state_graph()
    if name == "cayley-s5":
        return cayley_s5()
    return QUOTIENTS[name]().graph


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_certify(args) -> int:
    reports = certify.run(args.claim, threads=args.threads)
    if args.format == "json":
        text = certify.to_json_text(reports)
    elif args.verbose:
        text = "\n\n".join(r.to_text() for r in reports) + "\n"
    elif args.claim in ("lemma1", "table1"):
        text = reports[0].to_text() + "\n"
    else:
        text = "".join(r.summary_line() + "\n" for r in reports)
    _emit(args, text)
    return 0 if all(r.passed for r in reports) else 1


def cmd_search(args) -> int:
    if args.graph in QUOTIENTS:
        q = QUOTIENTS[args.graph]()
        graph, anchor = q.graph, identity_coset(q)
    else:
        graph, anchor = _graph(args.graph), 0
    found = find_ham_cycles(graph, limit=args.limit, anchor=anchor, threads=args.threads)
    if args.format == "json":
        certs = [c.to_json(graph) for c in found]
        _emit(args, json.dumps(certs, sort_keys=True, indent=2) + "\n")
    else:
        words = sorted({canonicalize(c.word) for c in found})
        _emit(args, "".join(w + "\n" for w in words))
    return 0


def cmd_lift(args) -> int:
    q = QUOTIENTS[args.graph]()
    word = parse_word(args.word)
    start = next(
        (v for v in range(len(q.graph)) if ham_cycle_failure(q.graph, v, word) is None),
        None,
    )
    if start is None:
        reason = ham_cycle_failure(q.graph, identity_coset(q), word)
        print(f"invalid certificate on {args.graph}: {reason} (from every coset)", file=sys.stderr)
        return 1
    try:
        cover = lift_cycle(q, HamCycleWord(word, start, q.graph.name))
    except InvalidCertificateError as exc:
        print(f"invalid certificate: {exc}", file=sys.stderr)
        return 1

    path = None
    if args.splice:
        try:
            path = splice_to_path(cover, q.base)
        except SpliceNotFoundError as exc:
            print(f"splice failed: {exc}", file=sys.stderr)
            return 1
        if not path.is_hamiltonian_path(len(q.base)):
            print("spliced walk is not a Hamiltonian path", file=sys.stderr)
            return 1

    if args.format == "json":
        payload = {"cover": cover.to_json(q.base)}
        if path is not None:
            payload["path"] = path_certificate(q.base, path)
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        text = cover.describe() + "\n"
        if path is not None:
            start_payload = q.base.vertices[path.start]
            text += f"path: {len(path.word)} moves from {start_payload}, verified Hamiltonian\n"
            text += path.word + "\n"
    _emit(args, text)
    return 0


def cmd_trace(args) -> int:
    word = parse_word(args.word) * args.repeat
    start_pos = Position.parse(args.start) if args.start else HOME
    graph = state_graph()
    walk = trace(graph, graph.index(start_pos), word)
    n = len(graph)
    if args.format == "json":
        payload = {
            "start": str(start_pos),
            "start_encoding": encode(start_pos).to_json(),
            "moves": len(word),
            "distinct": walk.distinct,
            "closed": walk.closed,
            "simple": walk.simple,
            "hamiltonian_cycle": walk.is_hamiltonian_cycle(n),
            "hamiltonian_path": walk.is_hamiltonian_path(n),
        }
        if args.positions:
            payload["positions"] = [str(graph.vertices[v]) for v in walk.visited]
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        lines = [str(graph.vertices[v]) for v in walk.visited] if args.positions else []
        lines.append(walk.summary(n))
        text = "\n".join(lines) + "\n"
    _emit(args, text)
    return 0


def cmd_export(args) -> int:
    graph = _graph(args.graph)
    if args.format == "json":
        data = QUOTIENTS[args.graph]().to_json() if args.graph in QUOTIENTS else graph.to_json()
        text = json.dumps(data, sort_keys=True) + "\n"
    else:
        text = graph.to_dot(labels=not args.no_labels)
    try:
        _emit(args, text)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cylpuzzle",
        description="Hamiltonian words for the cylindrical 5-puzzle state graph.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "json")):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("certify", help="verify a claim and print its report")
    p.add_argument("claim", choices=(*certify.CLAIMS, "all"))
    p.add_argument("--threads", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("search", help="enumerate Hamiltonian cycles of a graph")
    p.add_argument("graph", choices=GRAPHS)
    p.add_argument("--limit", type=int)
    p.add_argument("--threads", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("lift", help="lift a quotient Hamiltonian cycle to a cycle cover")
    p.add_argument("graph", choices=tuple(QUOTIENTS))
    p.add_argument("word")
    p.add_argument("--splice", action="store_true")
    common(p)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("trace", help="trace a move word through the state graph")
    p.add_argument("word")
    p.add_argument("--start", help="start position, e.g. 012/345 (default: home)")
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--positions", action="store_true", help="list every visited position")
    common(p)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("export", help="write a graph as DOT or JSON")
    p.add_argument("graph", choices=GRAPHS)
    p.add_argument("--no-labels", action="store_true")
    common(p, formats=("dot", "json"))
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    if getattr(args, "limit", None) is not None and args.limit < 1:
        parser.print_usage(sys.stderr)
        print("--limit must be positive", file=sys.stderr)
        return 2
    if getattr(args, "threads", 1) < 1 or getattr(args, "repeat", 1) < 0:
        print("--threads must be >= 1 and --repeat >= 0", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except ParseError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
