"""Command-line front end.

Exit codes: 0 = success / property holds, 1 = property fails (witness on
stdout), 2 = usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .complexes import SimplicialComplex, alexander_dual_ideal, vertices_of
from .dual_graph import UNBOUNDED, build_dual_graph, diameter, distance_pair
from .errors import SrdualError
from .families import FAMILY_NAMES, FamilyId, build, expected_diameter
from .fileio import export_graph, parse_facet_file, serialize_facet_file
from .gluing import GlueSpec, glue
from .search import SearchBudget, bounds, enumerate_mu
from .serre import is_buchsbaum, is_locally_connected, is_s2, connected_components


def _read_complex(path: str, letters: bool) -> SimplicialComplex:
    with open(path) as fh:
        return parse_facet_file(fh.read(), letters=letters)


def _facet_label(cx: SimplicialComplex, mask: int) -> str:
    parts = [cx.vertex_name(v) for v in vertices_of(mask)]
    if all(len(p) == 1 for p in parts):
        return "".join(parts)
    return " ".join(parts)


def _lookup_facet(cx: SimplicialComplex, token: str) -> int:
    """Resolve a facet given as letters ('ABC') or space-free name list."""
    names = {cx.vertex_name(v): v for v in range(cx.n)}
    if all(c in names for c in token):
        verts = [names[c] for c in token]
    else:
        verts = [names[t] for t in token.split(",") if t]
    mask = 0
    for v in verts:
        mask |= 1 << v
    if mask not in cx.facets:
        raise SrdualError("not a facet: %s" % token)
    return mask


def _emit(args, payload: dict, text_lines: list[str]):
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2))
    else:
        for ln in text_lines:
            print(ln)


def _cmd_check(args) -> int:
    cx = _read_complex(args.file, args.letters)
    prop = args.property
    witness = None
    if prop == "pure":
        holds = cx.is_pure
    elif prop == "connected":
        holds = connected_components(cx) == 1
    elif prop == "locally-connected":
        v = is_locally_connected(cx)
        holds, witness = v.holds, v.witness
    elif prop == "s2":
        v = is_s2(cx)
        holds, witness = v.holds, v.witness
    else:  # buchsbaum
        holds = is_buchsbaum(cx, field=args.field)
    lines = ["%s: %s" % (prop, "holds" if holds else "FAILS")]
    payload = {"property": prop, "holds": holds}
    if witness is not None and not holds:
        u, v_, s = witness
        lines.append("witness: %s, %s separated at %s" % (
            _facet_label(cx, u), _facet_label(cx, v_),
            _facet_label(cx, s) if s else "(empty face)"))
        payload["witness"] = [_facet_label(cx, u), _facet_label(cx, v_),
                              _facet_label(cx, s)]
    _emit(args, payload, lines)
    return 0 if holds else 1


def _cmd_diameter(args) -> int:
    cx = _read_complex(args.file, args.letters)
    g = build_dual_graph(cx)
    if args.pair:
        a = _lookup_facet(cx, args.pair[0])
        b = _lookup_facet(cx, args.pair[1])
        path = None
        if args.path:
            dist, path = distance_pair(g, a, b, want_path=True)
        else:
            dist = distance_pair(g, a, b)
        lines = ["distance: %s" % ("unbounded" if dist is UNBOUNDED else dist)]
        payload = {"distance": None if dist is UNBOUNDED else dist}
        if path is not None:
            labels = [_facet_label(cx, f) for f in path]
            lines.append("path: " + " -- ".join(labels))
            payload["path"] = labels
        _emit(args, payload, lines)
        return 0 if dist is not UNBOUNDED else 1
    diam = diameter(g)
    lines = ["diameter: %s" % ("unbounded" if diam is UNBOUNDED else diam)]
    _emit(args, {"diameter": None if diam is UNBOUNDED else diam}, lines)
    return 0 if diam is not UNBOUNDED else 1


def _cmd_dual_graph(args) -> int:
    cx = _read_complex(args.file, args.letters)
    g = build_dual_graph(cx)
    sys.stdout.write(export_graph(g, fmt=args.format, labels=args.labels))
    return 0


def _cmd_alexander_dual(args) -> int:
    cx = _read_complex(args.file, args.letters)
    ideal = alexander_dual_ideal(cx)
    lines = [_facet_label(cx, gmask) for gmask in ideal.generators]
    _emit(args, {"n": ideal.n, "generators": lines}, lines)
    return 0


def _cmd_glue(args) -> int:
    left = _read_complex(args.file_a, args.letters)
    right = _read_complex(args.file_b, args.letters)
    lnames = {left.vertex_name(v): v for v in range(left.n)}
    rnames = {right.vertex_name(v): v for v in range(right.n)}
    identify = {}
    for pair in args.identify.split(","):
        a, _, b = pair.partition("=")
        if not a or not b or a not in rnames or b not in lnames:
            raise SrdualError("bad identification %r (want right=left)" % pair)
        identify[rnames[a]] = lnames[b]
    out = glue(GlueSpec(left, right, identify, level=args.level))
    sys.stdout.write(serialize_facet_file(out))
    return 0


def _cmd_construct(args) -> int:
    fam = FamilyId(args.family, k=args.k, j=args.j, d=args.d, n=args.n)
    cx = build(fam, check=True)
    text = serialize_facet_file(cx)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)
        print("wrote %s: n=%d, %d facets, diameter %s" % (
            args.output, cx.n, len(cx.facets), expected_diameter(fam)))
    return 0


def _cmd_search_mu(args) -> int:
    budget = SearchBudget(max_nodes=args.budget_nodes,
                          max_seconds=args.budget_seconds)
    res = enumerate_mu(args.d, args.n, budget=budget, threads=args.threads,
                       checkpoint=args.checkpoint)
    lines = ["mu(%d, %d) %s %d" % (res.d, res.n,
                                   "=" if res.exhaustive else ">=", res.mu),
             "exhaustive: %s" % res.exhaustive,
             "nodes explored: %d" % res.nodes_explored,
             "elapsed: %.1f s" % res.elapsed]
    payload = {"d": res.d, "n": res.n, "mu": res.mu,
               "exhaustive": res.exhaustive,
               "nodes_explored": res.nodes_explored,
               "elapsed": res.elapsed, "witness": None}
    if res.witness is not None:
        w = res.witness
        labels = [_facet_label(w, f) for f in w.facets]
        lines.append("witness: " + " ".join(labels))
        payload["witness"] = labels
    _emit(args, payload, lines)
    return 0


def _cmd_bounds(args) -> int:
    b = bounds(args.d, args.n)
    entries = b.entries()
    lines = ["%s: %d" % (k, v) for k, v in sorted(entries.items())]
    lines.append("best: %d" % b.best)
    _emit(args, {"d": b.d, "n": b.n, "bounds": entries, "best": b.best}, lines)
    return 0


_TABLE_CELLS = ([(2, n) for n in range(4, 11)]
                + [(3, 7), (3, 8), (3, 9), (3, 10), (4, 8), (4, 9)])


def _cmd_verify_table(args) -> int:
    t0 = time.monotonic()
    ok = True
    report = []
    for d, n in _TABLE_CELLS:
        fam = FamilyId("table1_witness", d=d, n=n)
        want = expected_diameter(fam)
        cx = build(fam, check=False)
        got = diameter(build_dual_graph(cx))
        s2 = is_s2(cx).holds
        cell_ok = got == want and s2 and cx.n == n and cx.d == d
        ok &= cell_ok
        line = "cell (%d,%2d): diameter %s (expected %s), s2=%s  [%s]" % (
            d, n, got, want, s2, "ok" if cell_ok else "FAIL")
        report.append({"d": d, "n": n, "diameter": got, "expected": want,
                       "s2": s2, "ok": cell_ok})
        if not getattr(args, "json", False):
            print(line)
    elapsed = time.monotonic() - t0
    if getattr(args, "json", False):
        print(json.dumps({"cells": report, "ok": ok, "elapsed": elapsed},
                         indent=2))
    else:
        print("verify-table: %s (%d cells, %.1f s)" % (
            "all ok" if ok else "FAILURES", len(_TABLE_CELLS), elapsed))
    return 0 if ok else 1


def _add_file_arg(p):
    p.add_argument("file", help="facet file")
    p.add_argument("--letters", action="store_true",
                   help="treat each character of a token as a vertex")
    p.add_argument("--json", action="store_true", help="JSON output envelope")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="srdual",
        description="Dual graphs of (S2) Stanley-Reisner rings: checks, "
                    "constructions, bounds, and diameter search.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test a ring-theoretic property")
    _add_file_arg(p)
    p.add_argument("--property", required=True,
                   choices=["pure", "connected", "locally-connected",
                            "s2", "buchsbaum"])
    p.add_argument("--field", type=int, choices=[0, 2], default=0,
                   help="coefficient field for buchsbaum (0 or 2)")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("diameter", help="dual-graph diameter or pair distance")
    _add_file_arg(p)
    p.add_argument("--pair", nargs=2, metavar=("F1", "F2"),
                   help="two facets (letter strings or comma-joined names)")
    p.add_argument("--path", action="store_true", help="print a shortest path")
    p.set_defaults(func=_cmd_diameter)

    p = sub.add_parser("dual-graph", help="export the facet-ridge graph")
    _add_file_arg(p)
    p.add_argument("--format", required=True, choices=["dot", "json"])
    p.add_argument("--labels", choices=["facet", "complement"], default="facet")
    p.set_defaults(func=_cmd_dual_graph)

    p = sub.add_parser("alexander-dual", help="generators of the dual ideal")
    _add_file_arg(p)
    p.set_defaults(func=_cmd_alexander_dual)

    p = sub.add_parser("glue", help="glue two complexes along shared faces")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--letters", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--identify", required=True,
                   help="comma list b=a mapping right vertices to left")
    p.add_argument("--level", type=int, default=2,
                   help="target Serre level (default 2)")
    p.set_defaults(func=_cmd_glue)

    p = sub.add_parser("construct", help="build a named family instance")
    p.add_argument("family", choices=list(FAMILY_NAMES))
    p.add_argument("--k", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("-o", "--output", required=True,
                   help="output facet file ('-' for stdout)")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("search-mu", help="exhaustive/bounded search for mu(d,n)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--budget-nodes", type=int)
    p.add_argument("--budget-seconds", type=float)
    p.add_argument("--checkpoint", help="resumable checkpoint file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_search_mu)

    p = sub.add_parser("bounds", help="all applicable upper-bound formulas")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("verify-table", help="rebuild every table cell witness")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify_table)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        return args.func(args)
    except SrdualError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
