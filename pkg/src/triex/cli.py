"""Command-line entry point: ``triex {bound,construct,triangles,verify,schur}``.

Exit status is 0 when everything checks out, 1 on a verification mismatch
and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from . import graph6, oracle, schur
from .extremal import build_extremal, max_triangles, maximizer_catalogue, rivin_best, triangular_decompose
from .graph import GraphError, triangle_count

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, record: dict, text: str) -> None:
    if args.output == "json":
        print(json.dumps(record))
    else:
        print(text)


def _nonneg(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {s}")
    return v


def _int_list(s: str) -> list[int]:
    try:
        return [int(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}") from None


# ---------------------------------------------------------------- commands


def cmd_bound(args) -> int:
    n = args.edges
    dec = triangular_decompose(n)
    best = max_triangles(n)
    rivin = rivin_best(n)
    # no vertices are needed for zero edges
    nv = dec.min_vertices if n else 0
    record = {
        "n": n,
        "r": dec.r,
        "t": dec.t,
        "max_triangles": best,
        "rivin_vertices": nv,
        "rivin_bound": rivin,
        "gap": rivin - best,
    }
    _emit(
        args,
        record,
        f"n={n} r={dec.r} t={dec.t} max_triangles={best} "
        f"rivin_bound(V={nv})={rivin:.6f} gap={rivin - best:.6f}",
    )
    return EXIT_OK


def cmd_construct(args) -> int:
    n = args.edges
    if n < 1:
        raise UsageError("construct needs at least one edge")
    dec = triangular_decompose(n)
    shapes = maximizer_catalogue(n)
    if args.variant == "disconnected":
        if dec.t != 1:
            raise UsageError(
                f"no disconnected triangle-maximal graph has {n} edges: "
                f"disconnected maximizers exist only when n = C(r,2)+1 (here t={dec.t})"
            )
        shapes = [s for s in shapes if not s.connected]
    elif args.variant == "connected":
        shapes = [s for s in shapes if s.connected]
    for s in shapes:
        g = build_extremal(s)
        code = graph6.encode(g)
        _emit(
            args,
            {"n": n, "shape": str(s), "graph6": code, "vertices": g.vertex_count, "triangles": triangle_count(g)},
            code,
        )
    return EXIT_OK


def cmd_triangles(args) -> int:
    status = EXIT_OK
    if args.input:
        fh = open(args.input)
    else:
        fh = sys.stdin
    try:
        for lineno, item in graph6.read_lines(fh):
            if isinstance(item, Exception):
                print(f"line {lineno}: {item}", file=sys.stderr)
                status = EXIT_USAGE
                continue
            t = triangle_count(item)
            code = graph6.encode(item)
            _emit(
                args,
                {"line": lineno, "graph6": code, "vertices": item.vertex_count, "edges": item.edge_count, "triangles": t},
                f"{code}\t{t}",
            )
    finally:
        if fh is not sys.stdin:
            fh.close()
    return status


def cmd_verify(args) -> int:
    failed = False
    if args.output == "text":
        print(f"{'n':>3} {'r':>3} {'t':>3} {'budget':>6} {'formula':>7} {'observed':>8} {'classes':>7}  result")
    for n in range(1, args.max_edges + 1):
        if args.vertex_budget is not None:
            task = oracle.EnumerationTask(n, args.vertex_budget, args.mode)
        elif args.mode == oracle.EXHAUSTIVE:
            task = oracle.EnumerationTask.exhaustive(n)
        else:
            task = oracle.EnumerationTask.structural(n)
        rep = oracle.enumerate_max(task, jobs=args.jobs)
        # a budget below r+2 cannot hold K_2 u K_r, so only the maximum is judged there
        classes_judged = task.vertex_budget >= triangular_decompose(n).r + 2
        ok = rep.observed_max == rep.formula_max and (rep.catalogue_match or not classes_judged)
        failed |= not ok
        d = triangular_decompose(n)
        record = rep.to_dict() | {"classes_judged": classes_judged, "pass": ok}
        _emit(
            args,
            record,
            f"{n:>3} {d.r:>3} {d.t:>3} {task.vertex_budget:>6} {rep.formula_max:>7} {rep.observed_max:>8} "
            f"{len(rep.maximizer_classes):>7}  {'PASS' if ok else 'FAIL'}",
        )
    if args.rivin_vertices:
        checked = equal = 0
        witness = None
        for v in range(1, args.rivin_vertices + 1):
            for m in range(1, v + 3):
                res = oracle.verify_rivin_average(v, m)
                checked += res.graphs_checked
                equal += res.equality_cases
                if not res:
                    witness = (v, m, graph6.encode(res.witness))
                    break
            if witness:
                break
        ok = witness is None
        failed |= not ok
        _emit(
            args,
            {"check": "rivin_average", "max_vertices": args.rivin_vertices, "graphs_checked": checked,
             "equality_cases": equal, "witness": witness, "pass": ok},
            f"rivin average, graphs on <= {args.rivin_vertices} vertices: {checked} checks, "
            f"{equal} equality cases (all complete)  {'PASS' if ok else 'FAIL ' + str(witness)}",
        )
    return EXIT_MISMATCH if failed else EXIT_OK


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"schur {args.formula} needs --{' --'.join(missing)}")
    return [getattr(args, n) for n in names]


def cmd_schur(args) -> int:
    f = args.formula
    if f == "table1":
        bad = False
        if args.output == "text":
            print(f"{'GroupId':>8} {'order':>6} {'d':>2} {'k':>2} {'reported':>8} {'computed':>8}  result")
        for row in schur.table1():
            bad |= not row.match
            _emit(
                args,
                {"group_id": row.group_id, "order": f"3^{row.order_exponent}", "d": row.d, "k": row.k,
                 "reported_exponent": row.reported_exponent, "computed_exponent": str(row.computed_exponent),
                 "match": row.match},
                f"{row.group_id:>8} {'3^' + str(row.order_exponent):>6} {row.d:>2} {row.k:>2} "
                f"{'3^' + str(row.reported_exponent):>8} {'3^' + str(row.computed_exponent):>8}  "
                f"{'match' if row.match else 'MISMATCH'}",
            )
        return EXIT_MISMATCH if bad else EXIT_OK
    if f == "special":
        rep = schur.special_bound(*_need(args, "p", "d", "k"))
    elif f == "nil3":
        rep = schur.nil3_bound(*_need(args, "p", "d", "n", "k", "e", "delta"))
    elif f == "simple":
        rep = schur.simple_nil3_bound(*_need(args, "p", "d", "n", "k"))
    elif f == "sharpened":
        rep = schur.sharpened_nil3_bound(*_need(args, "p", "d", "n", "k", "delta", "alpha"))
    elif f == "nonhomocyclic":
        rep = schur.non_homocyclic_bound(*_need(args, "p", "d", "n", "k", "alpha"))
    elif f == "vermani":
        p, m, rsub, dquot = _need(args, "p", "m", "rsub", "dquot")
        if args.tensor is not None:
            tensor = args.tensor
        else:
            quot, sub = _need(args, "quot_alpha", "sub_alpha")
            tensor = schur.abelian_tensor_exponent(quot, sub)
        rep = schur.vermani_improved_bound(p, m, rsub, dquot, tensor)
    elif f == "coclass":
        rep = schur.coclass_bound(*_need(args, "p", "coclass", "k"))
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown formula {f}")
    extra = "".join(f" {k}: p^{v}" for k, v in rep.variants.items())
    _emit(
        args,
        rep.to_dict(),
        f"{rep.formula_id}: |{rep.bound_on}| <= p^{rep.exponent} (floor p^{rep.exponent_floor}){extra}"
        + (f"  [assumes: {'; '.join(rep.assumptions)}]" if rep.assumptions else ""),
    )
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "json"), default="text")

    ap = argparse.ArgumentParser(prog="triex", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", parents=[common], help="maximum triangles for a given edge count")
    p.add_argument("--edges", type=_nonneg, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("construct", parents=[common], help="graph6 of the triangle-maximal graphs")
    p.add_argument("--edges", type=_nonneg, required=True)
    p.add_argument("--variant", choices=("auto", "connected", "disconnected"), default="auto")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("triangles", parents=[common], help="count triangles of graph6 input")
    p.add_argument("--input", help="graph6 file (default: stdin)")
    p.set_defaults(func=cmd_triangles)

    p = sub.add_parser("verify", parents=[common], help="brute-force check of the bound and the catalogue")
    p.add_argument("--max-edges", type=int, default=12)
    p.add_argument("--mode", choices=(oracle.STRUCTURAL, oracle.EXHAUSTIVE), default=oracle.STRUCTURAL)
    p.add_argument("--vertex-budget", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--rivin-vertices", type=int, default=6, help="0 skips the Rivin average sweep")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("schur", parents=[common], help="evaluate a Schur multiplier bound")
    p.add_argument(
        "formula",
        choices=("special", "nil3", "simple", "sharpened", "nonhomocyclic", "vermani", "coclass", "table1"),
    )
    for name in ("p", "d", "k", "n", "e", "delta", "coclass", "m", "rsub", "dquot", "tensor"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--alpha", type=_int_list, help="abelian invariants a1,a2,...")
    p.add_argument("--quot-alpha", type=_int_list, help="invariants of (G/K)^ab, for vermani")
    p.add_argument("--sub-alpha", type=_int_list, help="invariants of K, for vermani")
    p.set_defaults(func=cmd_schur)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (UsageError, schur.BoundError, oracle.WorkloadTooLarge, GraphError, ValueError, OSError) as exc:
        print(f"triex: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except oracle.CharacterizationMismatch as exc:
        print(f"triex: mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
