"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 search
ended without a witness (exhausted or timed out).
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from typing import Sequence

from .cayley import generating_set, verify_hamilton_cycle
from .codefile import iter_code_lines, read_code
from .core import CodeList, format_word
from .counting import count, enumerate_involutions
from .optimal_codes import (
    ConstructionFailed,
    build_d_distance2,
    distance2_graph,
    find_hamilton,
    ogcb,
    verify_distance2,
)
from .recursive_codes import ValidationReport, coverage_violations, recursive_code, validate_properties

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SEARCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="invgray", description="Gray codes for involutions of types A, B, D.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt=True):
        sp.add_argument("--type", required=True, choices=["A", "B", "D"], dest="kind")
        sp.add_argument("--n", required=True, type=int)
        if fmt:
            sp.add_argument("--format", choices=["text", "json"], default="text")

    common(sub.add_parser("count", help="number of involutions"))
    common(sub.add_parser("enumerate", help="all involutions in lexicographic order"))

    g = sub.add_parser("generate", help="write a Gray code")
    common(g)
    g.add_argument("--algorithm", choices=["recursive", "optimal"], default="recursive")
    g.add_argument("--output", default="-")

    v = sub.add_parser("verify", help="check a code file")
    common(v)
    v.add_argument("--check", required=True, choices=["coverage", "gray", "cayley", "distance2"])
    v.add_argument("--strict-b", action="store_true")
    v.add_argument("--distance-only", action="store_true",
                   help="distance2: skip the move-type rule (graph Hamilton check)")
    v.add_argument("--path", action="store_true", help="distance2: do not check the wrap-around step")
    v.add_argument("--input", default="-")

    s = sub.add_parser("search", help="exhaustive Hamilton search in the distance-2 graph")
    common(s)
    s.add_argument("--object", choices=["cycle", "path"], default="cycle", dest="obj")
    s.add_argument("--distance", type=int, choices=[2], default=2)
    s.add_argument("--timeout-seconds", type=float, default=60.0)
    s.add_argument("--max-nodes", type=int, default=None)
    s.add_argument("--threads", type=int, default=1)
    return p


def _emit_code(code: CodeList, fmt: str, out, **extra) -> None:
    if fmt == "json":
        doc = {"type": code.kind, "n": code.n, **extra, "words": [list(w) for w in code]}
        out.write(json.dumps(doc) + "\n")
        return
    for line in iter_code_lines(code, **extra):
        out.write(line + "\n")


def _load(path: str, kind: str, n: int) -> CodeList:
    fh = sys.stdin if path == "-" else open(path)
    try:
        text = fh.read()
    finally:
        if fh is not sys.stdin:
            fh.close()
    if text.lstrip().startswith("{"):
        doc = json.loads(text)
        return CodeList(kind, n, tuple(tuple(w) for w in doc["words"]))
    code, _ = read_code(io.StringIO(text), kind, n)
    return code


def _report(rep: ValidationReport, fmt: str, out) -> int:
    if fmt == "json":
        doc = {"ok": rep.ok, "max_distance": rep.max_distance,
               "violations": [str(v) for v in rep.violations]}
        out.write(json.dumps(doc) + "\n")
    else:
        out.write("OK\n" if rep.ok else f"FAIL {rep.first()}\n")
    return EXIT_OK if rep.ok else EXIT_FAIL


def _generate(args) -> CodeList:
    if args.algorithm == "recursive":
        return recursive_code(args.kind, args.n)
    if args.kind == "B":
        return ogcb(args.n)
    if args.kind == "D":
        if args.n not in (4, 5):
            raise UsageError("optimal type-D codes are built for n = 4 and n = 5 only")
        return build_d_distance2(args.n)
    raise UsageError("type A has no distance-2 code; use --algorithm recursive")


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        if args.command == "count":
            value = count(args.kind, args.n)
            if args.format == "json":
                out.write(json.dumps({"type": args.kind, "n": args.n, "count": value}) + "\n")
            else:
                out.write(f"{value}\n")
            return EXIT_OK
        if args.command == "enumerate":
            _emit_code(enumerate_involutions(args.kind, args.n), args.format, out,
                       algorithm="enumerate")
            return EXIT_OK
        if args.command == "generate":
            code = _generate(args)
            if args.output == "-":
                _emit_code(code, args.format, out, algorithm=args.algorithm)
            else:
                with open(args.output, "w") as fh:
                    _emit_code(code, args.format, fh, algorithm=args.algorithm)
            return EXIT_OK
        if args.command == "verify":
            code = _load(args.input, args.kind, args.n)
            if args.check == "coverage":
                rep = ValidationReport(coverage_violations(code.kind, code.n, list(code.words)))
            elif args.check == "gray":
                rep = validate_properties(code, strict_b=args.strict_b)
            elif args.check == "cayley":
                rep = verify_hamilton_cycle(code, generating_set(code.kind, code.n))
            else:
                if code.kind == "A":
                    raise UsageError("distance-2 verification applies to types B and D")
                rep = verify_distance2(code, cyclic=not args.path, moves=not args.distance_only)
            return _report(rep, args.format, out)
        if args.command == "search":
            if args.threads < 1:
                raise UsageError("--threads must be >= 1")
            g = distance2_graph(args.kind, args.n)
            res = find_hamilton(g, args.obj, max_nodes=args.max_nodes,
                                timeout=args.timeout_seconds, threads=args.threads)
            if args.format == "json":
                out.write(res.to_json() + "\n")
            else:
                out.write(f"# outcome={res.outcome} nodes_expanded={res.nodes_expanded}\n")
                if res.witness is not None:
                    for w in res.witness:
                        out.write(format_word(w) + "\n")
            return EXIT_OK if res.found else EXIT_SEARCH
    except UsageError as exc:
        err.write(f"invgray: {exc}\n")
        return EXIT_USAGE
    except ConstructionFailed as exc:
        err.write(f"invgray: {exc}\n")
        return EXIT_SEARCH
    except (ValueError, OSError, KeyError) as exc:
        err.write(f"invgray: {exc}\n")
        return EXIT_USAGE
    return EXIT_USAGE


def main() -> None:
    sys.exit(run())
