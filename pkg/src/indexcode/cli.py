"""Command-line front end.

Exit codes: 0 success, 1 bad input, 2 graph outside the supported class
(more than two deletions needed), 3 a verification or self-test failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .codec import (
    UnsupportedRemovalNumber,
    build_code,
    code_from_json,
    code_to_json,
)
from .generate import random_digraph, structured_digraph
from .graphs import (
    Digraph,
    GuardError,
    ParseError,
    parse_digraph,
    serialize_digraph,
)
from .interlinked import StructuralError, config_to_json_dict
from .mais import (
    MAX_MAIS_VERTICES,
    find_disjoint_cycle_pair,
    mais_oracle,
    removal_number,
)
from .selfcheck import run_level
from .verify import (
    DEFAULT_STATE_GUARD,
    MAX_MINRANK_ARCS,
    decodability_check,
    minrank_gf2,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_UNSUPPORTED = 2
EXIT_VERIFY = 3

__all__ = ["EXIT_INPUT", "EXIT_OK", "EXIT_UNSUPPORTED", "EXIT_VERIFY", "main"]


def _read_graph(path: str) -> Digraph:
    with open(path, encoding="utf-8") as fh:
        return parse_digraph(fh.read())


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        print(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def cmd_analyze(args) -> int:
    g = _read_graph(args.graph)
    q = args.q
    rr = removal_number(g)
    report: dict = {"n": g.num_vertices, "q": q, "r": rr.r}
    report["witness"] = sorted(rr.witness) if rr.witness is not None else None
    if g.num_vertices <= MAX_MAIS_VERTICES:
        report["mais"] = len(mais_oracle(g))
    else:
        report["mais"] = None
    status = EXIT_OK
    if rr.r is None:
        report["case"] = "unsupported"
        report["code_length"] = None
        report["decodable"] = None
        status = EXIT_UNSUPPORTED
    else:
        if rr.r == 0:
            report["case"] = "uncoded"
        elif rr.r == 1:
            report["case"] = "one-cycle"
        elif find_disjoint_cycle_pair(g) is not None:
            report["case"] = "disjoint-pair"
        else:
            report["case"] = "interlinked"
        code = build_code(g, q=q)
        report["code_length"] = code.length
        if q ** g.num_vertices <= args.max_bruteforce:
            rep = decodability_check(g, code, args.max_bruteforce)
            report["decodable"] = rep.ok
            if not rep.ok:
                status = EXIT_VERIFY
        else:
            report["decodable"] = None
    if g.num_arcs <= MAX_MINRANK_ARCS:
        report["minrank"] = minrank_gf2(g).value
    else:
        report["minrank"] = None
    if report["minrank"] is None or report["mais"] is None:
        report["minrank_equals_mais"] = None
    else:
        report["minrank_equals_mais"] = report["minrank"] == report["mais"]
    print(json.dumps(report, indent=2))
    return status


def cmd_encode(args) -> int:
    g = _read_graph(args.graph)
    code = build_code(g, q=args.q)
    _emit(code_to_json(code), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    with open(args.code, encoding="utf-8") as fh:
        code = code_from_json(fh.read())
    if args.q is not None and args.q != code.q:
        print(f"error: code file uses q={code.q}, not q={args.q}",
              file=sys.stderr)
        return EXIT_INPUT
    if code.n != g.num_vertices:
        print(f"error: code carries {code.n} messages, graph has "
              f"{g.num_vertices}", file=sys.stderr)
        return EXIT_INPUT
    rep = decodability_check(g, code, args.max_bruteforce)
    out = {
        "ok": rep.ok,
        "receivers": {str(i): v for i, v in sorted(rep.receivers.items())},
        "counterexamples": {
            str(i): [list(a), list(b)]
            for i, (a, b) in sorted(rep.counterexamples.items())},
    }
    print(json.dumps(out, indent=2))
    return EXIT_OK if rep.ok else EXIT_VERIFY


def cmd_minrank(args) -> int:
    g = _read_graph(args.graph)
    res = minrank_gf2(g)
    cols = list(g.vertices)
    out = {
        "minrank": res.value,
        "witness": [[row >> k & 1 for k in range(len(cols))]
                    for row in res.witness],
        "columns": cols,
    }
    print(json.dumps(out, indent=2))
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.random == (args.structured is not None):
        print("error: choose exactly one of --random or --structured",
              file=sys.stderr)
        return EXIT_INPUT
    if args.random:
        if args.n is None or args.p is None or args.seed is None:
            print("error: --random needs --n, --p and --seed",
                  file=sys.stderr)
            return EXIT_INPUT
        if args.config_out is not None:
            print("error: --config-out only applies to --structured",
                  file=sys.stderr)
            return EXIT_INPUT
        g = random_digraph(args.n, args.p, args.seed)
    else:
        parts = args.structured.split(",")
        if len(parts) != 9:
            print("error: --structured takes nine comma-separated lengths "
                  "(B,C,D,E,F,H,I,U,W)", file=sys.stderr)
            return EXIT_INPUT
        lengths = [int(s.strip()) for s in parts]
        g, cfg = structured_digraph(lengths)
        if args.config_out is not None:
            with open(args.config_out, "w", encoding="utf-8") as fh:
                fh.write(json.dumps(config_to_json_dict(cfg), indent=2) + "\n")
    _emit(serialize_digraph(g), args.out)
    return EXIT_OK


def cmd_selftest(args) -> int:
    results = run_level(args.level)
    for res in results:
        print(res.line)
    return EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="indexcode",
        description="Shortest broadcast codes for side-information graphs "
                    "that become acyclic after at most two vertex deletions.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="structural and coding report")
    p.add_argument("graph", help="graph file: 'n m' header then one arc per line")
    p.add_argument("--q", type=int, default=2, help="alphabet size (default 2)")
    p.add_argument("--max-bruteforce", type=int, default=DEFAULT_STATE_GUARD,
                   help="skip the exhaustive decoding check beyond this many "
                        "message vectors")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("encode", help="emit the code for a graph as JSON")
    p.add_argument("graph")
    p.add_argument("--q", type=int, default=2, help="alphabet size (default 2)")
    p.add_argument("--out", help="write here instead of stdout")
    p.set_defaults(fn=cmd_encode)

    p = sub.add_parser("verify", help="brute-force a code file against a graph")
    p.add_argument("graph")
    p.add_argument("code", help="JSON code file, as produced by encode")
    p.add_argument("--q", type=int, default=None,
                   help="reject the code file unless it uses this alphabet")
    p.add_argument("--max-bruteforce", type=int, default=DEFAULT_STATE_GUARD)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("minrank", help="exact GF(2) minrank with a witness")
    p.add_argument("graph")
    p.set_defaults(fn=cmd_minrank)

    p = sub.add_parser("gen", help="generate graph files")
    p.add_argument("--random", action="store_true",
                   help="seeded arc-probability model; needs --n, --p, --seed")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=int)
    p.add_argument("--structured",
                   help="nine comma-separated path lengths B,C,D,E,F,H,I,U,W "
                        "for a planted configuration")
    p.add_argument("--out", help="write here instead of stdout")
    p.add_argument("--config-out", dest="config_out",
                   help="also record the planted configuration as JSON")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("selftest", help="run the acceptance sweeps")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.set_defaults(fn=cmd_selftest)
    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except UnsupportedRemovalNumber as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (GuardError, StructuralError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
