"""Command line front end: theorem sweeps and one-off computations."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from . import verify
from .complex import ComplexError, cm_check, dump_complex, dump_profile, load_complex, reduced_homology, wedge_signature
from .freegroup import CyclicWord, FreeGroupError, SearchBudgetExceeded, build_B_truncation, is_partial_basis_classes, whitehead_minimize
from .graph_core import GraphError, expected_dimension, l_separating_edges, load_graph, max_core, rank
from .poset import build_core_poset, build_nontrees, order_complex

GRAPH_SWEEPS = {
    "con-x": verify.verify_con_x,
    "core-retract": verify.verify_core_retract,
    "suspension": verify.verify_suspension,
    "quotient-step": verify.verify_quotient_step,
}


SWEEP_HELP = {
    "con-x": "non-tree posets are spheres, contractible iff an l-separating edge exists",
    "core-retract": "non-tree poset vs core poset, and the MaxCore retraction",
    "suspension": "deleting a loop shifts homology by one",
    "quotient-step": "X minus G-e against X(G/e)",
}


def _bounded(lo: int, hi: Optional[int] = None):
    def conv(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
        if v < lo or (hi is not None and v > hi):
            rng = f">= {lo}" if hi is None else f"in {lo}..{hi}"
            raise argparse.ArgumentTypeError(f"{v} must be {rng}")
        return v

    return conv


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pbcomplex", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def report_opts(sp):
        sp.add_argument("--out", type=Path, help="write the JSON report here")
        sp.add_argument("--timing", action="store_true", help="include elapsed time in the JSON report")

    for name in GRAPH_SWEEPS:
        sp = sub.add_parser(name, help=SWEEP_HELP[name])
        sp.add_argument("--max-edges", type=_bounded(1, 6), default=5)
        sp.add_argument("--max-labels", type=_bounded(0, 4), default=3)
        sp.add_argument("--jobs", type=_bounded(1), default=1)
        if name == "core-retract":
            sp.add_argument("--quillen", action="store_true", help="also run the fibre check on Core -> X")
        report_opts(sp)

    sp = sub.add_parser("inflation-cm", help="inflation preserves the Cohen-Macaulay property")
    sp.add_argument("--trials", type=_bounded(1), default=200)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=_bounded(1), default=1)
    report_opts(sp)

    sp = sub.add_parser("farey", help="rank-2 truncation against the determinant oracle")
    sp.add_argument("--max-len", type=_bounded(1, 8), default=8)
    report_opts(sp)

    sp = sub.add_parser("b3-probe", help="rank-3 truncation observations")
    sp.add_argument("--max-len", type=_bounded(1, 4), default=2)
    report_opts(sp)

    sp = sub.add_parser("homology", help="reduced integral homology of a complex file")
    sp.add_argument("--complex", type=Path, required=True)
    sp.add_argument("--collapse", action="store_true", help="run elementary collapses first")

    sp = sub.add_parser("cm-check", help="Cohen-Macaulay test of a complex file")
    sp.add_argument("--complex", type=Path, required=True)

    sp = sub.add_parser("whitehead", help="primitivity / partial basis test for conjugacy classes")
    sp.add_argument("--rank", type=_bounded(1, 26), required=True)
    sp.add_argument("--word", action="append", required=True, help="a cyclic word; repeat for a tuple")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--primitive", action="store_true", help="print whether the classes form a partial basis (default)")
    mode.add_argument("--minimize", action="store_true", help="print a Whitehead-minimal representative")

    sp = sub.add_parser("graph-info", help="summary of a labelled graph file")
    sp.add_argument("--graph", type=Path, required=True)
    return p


def _emit_report(rep: verify.VerificationReport, args) -> int:
    if args.out:
        args.out.write_text(rep.dumps(include_timing=args.timing) + "\n", encoding="utf-8")
    print(rep.summary_line(timing=False))
    print(f"elapsed {rep.elapsed:.2f}s", file=sys.stderr)
    if rep.failures:
        print(json.dumps(rep.failures[0], sort_keys=True), file=sys.stderr)
    return 0 if rep.passed or rep.observational else 1


def _write_truncation(rank_: int, max_len: int, out: Path) -> None:
    B = build_B_truncation(rank_, max_len)
    names = {v: str(v) for v in B.vertices}
    dump_complex(B, out.with_suffix(".cplx"), names)
    side = {"rank": rank_, "max_len": max_len, "vertices": {names[v]: list(v.letters) for v in B.vertices}}
    out.with_suffix(".vertices.json").write_text(json.dumps(side, sort_keys=True, indent=1) + "\n", encoding="utf-8")


def _graph_info(path: Path) -> dict:
    g = load_graph(path)
    X = build_nontrees(g)
    d = expected_dimension(rank(g), g.k)
    prof = reduced_homology(order_complex(X))
    return {
        "vertices": len(g.vertices),
        "edges": len(g.edges),
        "labels": g.k,
        "rank": rank(g),
        "d": d,
        "l_separating_edges": l_separating_edges(g),
        "max_core": sorted(max_core(g).edge_set),
        "nontrees": len(X),
        "core_subgraphs": len(build_core_poset(g)),
        "homology": prof.to_json(),
        "signature": str(wedge_signature(prof, d)),
    }


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cmd = args.command
    try:
        if cmd in GRAPH_SWEEPS:
            kw = {"quillen": args.quillen} if cmd == "core-retract" else {}
            return _emit_report(GRAPH_SWEEPS[cmd](args.max_edges, args.max_labels, jobs=args.jobs, **kw), args)
        if cmd == "inflation-cm":
            return _emit_report(verify.verify_inflation_cm(args.trials, args.seed, jobs=args.jobs), args)
        if cmd in ("farey", "b3-probe"):
            rep = verify.verify_farey(args.max_len) if cmd == "farey" else verify.verify_b3_probe(args.max_len)
            code = _emit_report(rep, args)
            if args.out:
                _write_truncation(2 if cmd == "farey" else 3, args.max_len, args.out)
            return code
        if cmd == "homology":
            print(dump_profile(reduced_homology(load_complex(args.complex), collapse_first=args.collapse)))
            return 0
        if cmd == "cm-check":
            print(json.dumps(cm_check(load_complex(args.complex)).to_json(), sort_keys=True))
            return 0
        if cmd == "whitehead":
            words = tuple(CyclicWord.parse(w, args.rank) for w in args.word)
            if args.minimize:
                t, total, _ = whitehead_minimize(words)
                print(json.dumps({"classes": [str(c) for c in t], "length": total}))
            else:
                print("true" if is_partial_basis_classes(words) else "false")
            return 0
        if cmd == "graph-info":
            print(json.dumps(_graph_info(args.graph), sort_keys=True))
            return 0
    except (OSError, GraphError, ComplexError, FreeGroupError, json.JSONDecodeError) as exc:
        print(f"pbcomplex {cmd}: {exc}", file=sys.stderr)
        return 2
    except SearchBudgetExceeded as exc:
        print(f"pbcomplex {cmd}: {exc}", file=sys.stderr)
        return 1
    raise AssertionError(cmd)  # argparse restricts the choices


def main() -> None:
    sys.exit(run())
