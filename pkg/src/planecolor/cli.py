"""Command-line front end.

Exit codes: 0 success / Extends, 10 FailsA, 11 FailsB, 2 usage error,
3 file or parse error, 4 input outside a command's precondition,
20 disagreement between decision and oracle.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .catalog import fig1a, fig1b
from .coloring import extend, is_R_critical
from .decider import NotInClass, classify_critical, decide_extension, validate_class
from .discharging import NoDesignatedTriangleFace, OuterLenNot6, discharge
from .enumerator import (
    GenConstraints,
    critical_search,
    enumerate_codes,
)
from .plane_graph import OuterNotCycle, PlaneGraphError, from_code
from .rotg import RotgParseError, format_rotg, parse_rotg_listed
from .verification import Disagreement, verify_theorem

SCHEMA = "planecolor.report/1"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_PRECONDITION = 4
EXIT_FAILS_A = 10
EXIT_FAILS_B = 11
EXIT_DISAGREEMENT = 20

CATALOG = {"fig1a": fig1a, "fig1b": fig1b}
FAMILIES = ("class", "triangle-free", "one-triangle")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise RotgParseError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_rotg_listed(text)


def _phi(text: str) -> tuple[int, ...]:
    try:
        cols = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"--phi expects comma-separated colours, got {text!r}") from exc
    if any(c not in (1, 2, 3) for c in cols):
        raise UsageError("colours must lie in 1..3")
    return cols


def _constraints(args) -> GenConstraints:
    fam = args.family
    tri = 0 if fam == "triangle-free" else 1
    other = 5 if fam == "class" else 4
    try:
        return GenConstraints(args.outer, args.max_n, tri, other, True, getattr(args, "min_triangles", 0))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _write_report(path: str | None, payload: dict) -> None:
    if path:
        payload = {"schema": SCHEMA, **payload}
        Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


# -- commands -----------------------------------------------------------------

def cmd_check(args) -> int:
    g, listed = _load(args.file)
    cols = _phi(args.phi)
    if len(cols) != len(listed):
        raise UsageError(f"--phi has {len(cols)} colours, the outer cycle has {len(listed)} vertices")
    phi = dict(zip(listed, cols))
    oracle = extend(g, phi) is not None
    try:
        d = decide_extension(g, phi)
    except NotInClass:
        print(f"NotInClass oracle_extends={str(oracle).lower()}")
        return EXIT_PRECONDITION
    print(d.witness_line())
    if d.extends != oracle:
        print(f"Disagreement oracle_extends={str(oracle).lower()}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    return {"Extends": EXIT_OK, "FailsA": EXIT_FAILS_A, "FailsB": EXIT_FAILS_B}[d.variant]


def cmd_classify(args) -> int:
    g, _ = _load(args.file)
    print(classify_critical(g))
    if args.details:
        rep = validate_class(g)
        crit = is_R_critical(g)
        print(f"outer_len={rep.outer_len} in_class={str(rep.in_class).lower()} "
              f"triangles={len(rep.triangles)} critical={str(crit.is_critical).lower()}")
    return EXIT_OK


def cmd_critical(args) -> int:
    c = _constraints(args)
    t0 = time.perf_counter()
    res = critical_search(c, prune=not args.no_prune, workers=args.workers, checkpoint=args.checkpoint)
    names = [classify_critical(g) for g in res.graphs]
    print(f"critical graphs: {len(res.graphs)}")
    for g, name in zip(res.graphs, names):
        print(f"  n={g.n} m={g.num_edges} {name}")
    if args.emit_dir:
        out = Path(args.emit_dir)
        out.mkdir(parents=True, exist_ok=True)
        for i, g in enumerate(res.graphs):
            (out / f"critical_{i:04d}.rotg").write_text(format_rotg(g))
    _write_report(args.report, {
        "command": "critical", "constraints": c.to_dict(), "graph_count": len(res.graphs),
        "classification": names, "closed_face_cut": res.closed_upto, "lookahead": res.lookahead,
        "certified_by": {str(k): v for k, v in res.certified_by.items()},
        "wall_time_s": round(time.perf_counter() - t0, 3)})
    return EXIT_OK


def cmd_enumerate(args) -> int:
    c = _constraints(args)
    codes = enumerate_codes(c, workers=args.workers)
    by_n: dict[int, int] = {}
    for row in codes:
        by_n[int(row[0])] = by_n.get(int(row[0]), 0) + 1
    print(f"graphs: {len(codes)}")
    for n in sorted(by_n):
        print(f"  n={n}: {by_n[n]}")
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for i, row in enumerate(codes):
            (out / f"graph_{i:06d}.rotg").write_text(format_rotg(from_code(row)))
    return EXIT_OK


def cmd_verify(args) -> int:
    outers = args.outer or [3, 4, 5, 6]
    t0 = time.perf_counter()
    total = None
    per = {}
    for L in outers:
        try:
            c = GenConstraints(L, args.max_n, 1, 5)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        ck = f"{args.checkpoint}.outer{L}" if args.checkpoint else None
        rep = verify_theorem(c, workers=args.workers, checkpoint=ck, fail_fast=False)
        per[str(L)] = rep.to_dict()
        if total is None:
            total = rep
        else:
            total.merge(rep)
        print(f"outer {L}: graphs={rep.graphs} precolorings={rep.assignments} "
              f"FailsA={rep.fails_a} FailsB={rep.fails_b} disagreements={len(rep.disagreements)}")
    wall = time.perf_counter() - t0
    print(f"total: graphs={total.graphs} precolorings={total.assignments} "
          f"disagreements={len(total.disagreements)}")
    _write_report(args.report, {
        "command": "verify", "constraints": {"outer_len": outers, "max_vertices": args.max_n,
                                             "max_triangles": 1, "min_other_cycle": 5},
        "graph_count": total.graphs, "precoloring_count": total.assignments,
        "proper_precoloring_count": total.proper,
        "failures": {"FailsA": total.fails_a, "FailsB": total.fails_b},
        "proper_failures": {"FailsA": total.proper_fails_a, "FailsB": total.proper_fails_b},
        "body_b_mismatches": total.body_b_mismatches, "bad_witnesses": total.bad_witnesses,
        "disagreements": total.disagreements, "zero_disagreements": total.ok,
        "by_outer": per, "wall_time_s": round(wall, 3)})
    return EXIT_OK if total.ok else EXIT_DISAGREEMENT


def cmd_discharge(args) -> int:
    g, _ = _load(args.file)
    t = [int(x) - 1 for x in args.triangle.split(",")] if args.triangle else None
    try:
        led = discharge(g, t)
    except (NoDesignatedTriangleFace, OuterLenNot6) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    print(f"n2={led.n2} n3={led.n3} initial={led.total_initial} final={led.total_final} "
          f"identity={led.identity_value} ok={str(led.ok).lower()}")
    for i, f in enumerate(g.faces):
        print(f"  face {i} len={f.length} initial={led.initial_faces[i]} final={led.final_faces[i]}")
    for v in range(g.n):
        print(f"  vertex {v + 1} deg={g.degree(v)} initial={led.initial_vertices[v]} final={led.final_vertices[v]}")
    return EXIT_OK if led.ok else EXIT_DISAGREEMENT


def cmd_catalog(args) -> int:
    g = CATALOG[args.name]()
    text = format_rotg(g, comment=f"{args.name}: r1..r6 = 1..6, t1..t3 = 7..9")
    if args.output == "-":
        sys.stdout.write(text)
    else:
        path = Path(args.output or f"{args.name}.rotg")
        path.write_text(text)
        print(f"wrote {path}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="planecolor", description="3-colouring extension on plane graphs with one triangle")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("check", help="decide whether a colouring of the outer cycle extends")
    s.add_argument("file")
    s.add_argument("--phi", required=True, help="colours c1,...,ck for the outer cycle as listed in the file")
    s.set_defaults(fn=cmd_check)

    s = sub.add_parser("classify", help="compare a graph with the two catalog graphs")
    s.add_argument("file")
    s.add_argument("--details", action="store_true", help="also print class membership and criticality")
    s.set_defaults(fn=cmd_classify)

    def family(sp):
        sp.add_argument("--outer", type=int, required=True)
        sp.add_argument("--max-n", type=int, required=True)
        sp.add_argument("--family", choices=FAMILIES, default="class")
        sp.add_argument("--workers", type=int, default=1)

    s = sub.add_parser("critical", help="search for critical graphs")
    family(s)
    s.add_argument("--no-prune", action="store_true")
    s.add_argument("--checkpoint")
    s.add_argument("--report")
    s.add_argument("--emit-dir")
    s.set_defaults(fn=cmd_critical)

    s = sub.add_parser("enumerate", help="count (and optionally write) the graphs of a family")
    family(s)
    s.add_argument("--min-triangles", type=int, default=0)
    s.add_argument("--out-dir")
    s.set_defaults(fn=cmd_enumerate)

    s = sub.add_parser("verify", help="decision vs oracle over every class graph")
    s.add_argument("--outer", type=int, action="append", help="outer length (repeatable; default 3..6)")
    s.add_argument("--max-n", type=int, default=12)
    s.add_argument("--report")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--checkpoint", help="checkpoint path prefix")
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("discharge", help="charge bookkeeping on a hexagon-bounded graph")
    s.add_argument("file")
    s.add_argument("--triangle", help="t1,t2,t3 (1-based) naming the triangular face")
    s.set_defaults(fn=cmd_discharge)

    s = sub.add_parser("catalog", help="catalog graphs")
    csub = s.add_subparsers(dest="action", parser_class=_Parser)
    csub.required = True
    e = csub.add_parser("emit", help="write a catalog graph as .rotg")
    e.add_argument("name", choices=sorted(CATALOG))
    e.add_argument("-o", "--output", help="output path ('-' for stdout); default NAME.rotg")
    e.set_defaults(fn=cmd_catalog)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "workers", 1) < 1:
            raise UsageError("--workers must be positive")
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RotgParseError, PlaneGraphError) as exc:
        if isinstance(exc, OuterNotCycle):
            print(f"precondition: {exc}", file=sys.stderr)
            return EXIT_PRECONDITION
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Disagreement as exc:  # pragma: no cover - verify collects instead of raising
        print(str(exc), file=sys.stderr)
        return EXIT_DISAGREEMENT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
