"""Command-line front end.

Every result is one JSON object per line on stdout with keys ``cmd``,
``input`` and ``result``.  Exit status: 0 ok, 1 input error, 2 when
``verify`` finds a violation.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import asdict
from fractions import Fraction
from typing import Sequence

from . import extremal
from .errors import SteinerError
from .indices import all_vertex_index, steiner_wiener, vertex_index
from .medians import check_gap_bounds, median_report
from .oracle import IndexMode
from .tree import Tree, format_tree, parse_tree, steiner_distance
from .verify import CHECKS, verify

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _ratio(x: Fraction) -> dict:
    return {"value": f"{x.numerator}/{x.denominator}",
            "approx": format(float(x), ".12g"), "approximate": True}


def _int_list(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _load_tree(path: str) -> tuple[Tree, dict]:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    t = parse_tree(text)
    digest = hashlib.sha256(format_tree(t).encode()).hexdigest()
    return t, {"tree": path, "sha256": digest}


def _emit(cmd: str, inp: dict, result) -> None:
    sys.stdout.write(json.dumps({"cmd": cmd, "input": inp, "result": result},
                                sort_keys=True, separators=(",", ":")) + "\n")


def _cmd_dist(a) -> int:
    t, inp = _load_tree(a.tree)
    inp["set"] = a.set
    _emit("dist", inp, {"value": str(steiner_distance(t, a.set))})
    return EXIT_OK


def _cmd_vertex_index(a) -> int:
    t, inp = _load_tree(a.tree)
    mode = IndexMode(a.mode)
    inp.update(k=a.k, mode=mode.value)
    if a.all_vertices:
        vec = all_vertex_index(t, a.k, mode)
        _emit("vertex-index", inp, {"values": [str(x) for x in vec.values]})
    else:
        if a.v is None:
            raise SteinerError("vertex-index needs --v or --all-vertices")
        inp["v"] = a.v
        _emit("vertex-index", inp, {"value": str(vertex_index(t, a.v, a.k, mode))})
    return EXIT_OK


def _cmd_wiener(a) -> int:
    t, inp = _load_tree(a.tree)
    inp["k"] = a.k
    _emit("wiener", inp, {"value": str(steiner_wiener(t, a.k))})
    return EXIT_OK


def _cmd_median(a) -> int:
    t, inp = _load_tree(a.tree)
    inp["k"] = a.k
    rep = median_report(t, a.k)
    gaps = check_gap_bounds(t, a.k, rep)
    _emit("median", inp, {
        "k": rep.k,
        "median_all": sorted(rep.median_all),
        "median_leaf": sorted(rep.median_leaf),
        "median_internal": sorted(rep.median_internal),
        "gap_leaf_internal": rep.gap_leaf_internal,
        "gap_leaf_all": rep.gap_leaf_all,
        "gap_internal_all": rep.gap_internal_all,
        "gap_bounds_hold": gaps._asdict(),
    })
    return EXIT_OK


def _cmd_comet(a) -> int:
    cm = extremal.comet(a.n, a.r)
    text = format_tree(cm.tree)
    if a.out:
        with open(a.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    _emit("comet", {"n": a.n, "r": a.r}, {
        "a": cm.a, "b": cm.b, "c": cm.c, "d": cm.d,
        "edges": [list(e) for e in cm.tree.edges], "tree": text,
    })
    return EXIT_OK


def _extremal_payload(shape) -> dict:
    if isinstance(shape, extremal.CometSpec):
        return {"comet": {"n": shape.n, "r": shape.r, "a": shape.a, "b": shape.b,
                          "c": shape.c, "d": shape.d}}
    return {"pendant_path": {**asdict(shape), "v": shape.v, "w": shape.w}}


def _cmd_bounds(a) -> int:
    inp = {"kind": a.kind, "n": a.n, "k": a.k}
    if a.kind == "global-local":
        lo, hi = extremal.global_local_bounds(a.n, a.k)
        _emit("bounds", inp, {"lower": _ratio(lo), "upper": _ratio(hi)})
        return EXIT_OK
    fn = {
        "leaf-pair": extremal.leaf_pair_ratio_bound,
        "internal-pair": extremal.internal_pair_ratio_bound,
        "leaf-centroid": extremal.leaf_centroid_lower_bound,
    }[a.kind]
    b = fn(a.n, a.k)
    _emit("bounds", inp, {"bound": _ratio(b.value), "witness": b.witness,
                          "extremal": _extremal_payload(b.extremal)})
    return EXIT_OK


def _cmd_closed_form(a) -> int:
    fn = (extremal.path_vertex_distance_closed if a.kind == "path"
          else extremal.pendant_path_distance_closed)
    _emit("closed-form", {"kind": a.kind, "a": a.a, "b": a.b, "k": a.k},
          {"value": str(fn(a.a, a.b, a.k))})
    return EXIT_OK


def _cmd_verify(a) -> int:
    k_policy = "all" if a.k == "all" else _int_list(a.k)
    rep = verify(a.nmax, a.checks, k_policy, workers=a.workers)
    inp = {"nmax": a.nmax, "checks": a.checks, "k": a.k}
    for c in rep.checks:
        _emit("verify", inp, {
            "check": c.name, "passed": c.passed, "trees_examined": c.trees_examined,
            "cases_checked": c.cases_checked, "cases_skipped": c.cases_skipped,
            "violations": len(c.violations), "witnesses": len(c.witnesses),
        })
        print(f"{c.name}: {c.elapsed:.3f}s", file=sys.stderr)
    if a.report:
        with open(a.report, "w", encoding="utf-8") as fh:
            fh.write(rep.to_json())
    return EXIT_OK if rep.passed else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="steinerk", description="Exact Steiner distance invariants on trees.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    s = sub.add_parser("dist", help="Steiner distance of a vertex set")
    s.add_argument("--tree", required=True)
    s.add_argument("--set", required=True, type=_int_list)
    s.set_defaults(func=_cmd_dist)

    s = sub.add_parser("vertex-index", help="Steiner k-distance of a vertex (or all vertices)")
    s.add_argument("--tree", required=True)
    s.add_argument("--k", required=True, type=int)
    s.add_argument("--mode", choices=[m.value for m in IndexMode], default="all")
    s.add_argument("--v", type=int)
    s.add_argument("--all-vertices", action="store_true")
    s.set_defaults(func=_cmd_vertex_index)

    s = sub.add_parser("wiener", help="Steiner k-Wiener index")
    s.add_argument("--tree", required=True)
    s.add_argument("--k", required=True, type=int)
    s.set_defaults(func=_cmd_wiener)

    s = sub.add_parser("median", help="the three Steiner k-medians and their gaps")
    s.add_argument("--tree", required=True)
    s.add_argument("--k", required=True, type=int)
    s.set_defaults(func=_cmd_median)

    s = sub.add_parser("comet", help="emit the r-comet on n vertices")
    s.add_argument("--n", required=True, type=int)
    s.add_argument("--r", required=True, type=int)
    s.add_argument("--out", help="also write the tree file here")
    s.set_defaults(func=_cmd_comet)

    s = sub.add_parser("bounds", help="extremal ratio bounds")
    s.add_argument("kind", choices=["leaf-pair", "internal-pair", "leaf-centroid", "global-local"])
    s.add_argument("--n", required=True, type=int)
    s.add_argument("--k", required=True, type=int)
    s.set_defaults(func=_cmd_bounds)

    s = sub.add_parser("closed-form", help="closed-form d_k on a path or pendant path")
    s.add_argument("kind", choices=["path", "pendant"])
    s.add_argument("--a", required=True, type=int)
    s.add_argument("--b", required=True, type=int)
    s.add_argument("--k", required=True, type=int)
    s.set_defaults(func=_cmd_closed_form)

    s = sub.add_parser("verify", help="check every theorem over all small free trees")
    s.add_argument("--nmax", required=True, type=int)
    s.add_argument("--checks", default="all",
                   help="'all' or a comma list of: " + ", ".join(CHECKS))
    s.add_argument("--k", default="all", help="'all' or a comma list of k values")
    s.add_argument("--report", help="write the full JSON report here")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=_cmd_verify)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"steinerk {args.cmd}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
