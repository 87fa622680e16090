"""Command-line front end: ``graphdim compute|generate|verify|reduce``.

Exit codes: 0 success, 1 input error, 2 search budget exhausted, 3 a verified
equality or reduction equivalence failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from joblib import Parallel, delayed

from . import auxiliary
from ._cover import BudgetExceeded
from .dimension import dimension
from .graph import GraphError, parse_edge_list
from .reductions import chains
from .reductions.cnf import FormulaError, parse_dimacs
from .specs import parse_spec
from .theorems import THEOREMS, UNARY, CaseConflictError, verify
from .validation import check_budget, check_n_jobs, check_variant

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_MISMATCH = 0, 1, 2, 3
DEFAULT_BUDGET = 20_000_000

_AUX = {
    "domination": auxiliary.domination_number,
    "vertex_cover": auxiliary.vertex_cover_number,
    "independence": auxiliary.independence_number,
    "locating_dominating": auxiliary.min_locating_dominating,
}


class InputError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _write_text(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w") as fh:
        fh.write(text)


def _graph_arg(text: str):
    """A graph argument is an edge-list file when such a file exists, otherwise a spec."""
    if os.path.isfile(text):
        return parse_edge_list(_read_text(text))
    return parse_spec(text)


def _solve_one(path: str, variant: str, budget: Optional[int]) -> dict:
    graph = parse_edge_list(_read_text(path))
    if variant in _AUX:
        return _AUX[variant](graph, budget).to_dict()
    return dimension(graph, variant, budget).to_dict()


def cmd_compute(args) -> int:
    variant = args.variant
    if args.k is not None:
        if variant not in ("trunc", "truncated"):
            raise InputError("--k only applies to --variant trunc")
        variant = f"truncated:{args.k}"
    if variant not in _AUX:
        variant = str(check_variant(variant))
    budget = check_budget(args.budget)
    inputs = args.input or ["-"]
    if len(inputs) == 1:
        results = [_solve_one(inputs[0], variant, budget)]
    else:
        jobs = check_n_jobs(args.threads)
        results = Parallel(n_jobs=jobs)(delayed(_solve_one)(p, variant, budget) for p in inputs)
    text = "".join(_dump(r) + "\n" for r in results)
    _write_text(args.output, text)
    return EXIT_OK


def cmd_generate(args) -> int:
    graph = parse_spec(args.spec)
    _write_text(args.output, graph.to_dot() if args.dot else graph.to_edge_list_text())
    return EXIT_OK


def cmd_verify(args) -> int:
    arity = 1 if args.theorem in UNARY else 2
    if args.theorem not in THEOREMS:
        raise InputError(f"unknown theorem {args.theorem!r}; expected one of {', '.join(THEOREMS)}")
    if len(args.graphs) != arity:
        raise InputError(f"{args.theorem} takes {arity} graph argument(s), got {len(args.graphs)}")
    graphs = [_graph_arg(g) for g in args.graphs]
    try:
        report = verify(args.theorem, *graphs, max_nodes=check_budget(args.budget))
    except CaseConflictError as exc:
        _write_text(args.output, _dump({"theorem": args.theorem, "holds": False, "error": str(exc)}) + "\n")
        return EXIT_MISMATCH
    out = report.to_dict()
    out["inputs"] = list(args.graphs)
    _write_text(args.output, _dump(out) + "\n")
    return EXIT_OK if report.holds else EXIT_MISMATCH


def _load_reduction_input(args):
    text = _read_text(args.input)
    if any(line.strip().startswith("p ") for line in text.splitlines()):
        return "cnf", parse_dimacs(text)
    return "graph", parse_edge_list(text)


def cmd_reduce(args) -> int:
    kind, source = _load_reduction_input(args)
    budget = check_budget(args.budget)
    if kind == "cnf":
        inst = chains.reduce_3sat(source, args.chain)
    else:
        if args.chain not in chains.GRAPH_STEPS:
            raise InputError(
                f"chain {args.chain!r} needs CNF input; graph input supports {', '.join(chains.GRAPH_STEPS)}"
            )
        if args.k is None:
            raise InputError("graph input needs the source budget --k")
        inst = chains.GRAPH_STEPS[args.chain](source, args.k)
    if args.output:
        _write_text(args.output, inst.graph.to_dot() if args.dot else inst.graph.to_edge_list_text())
        _write_text(args.output + ".json", _dump(inst.sidecar()) + "\n")
    summary = {"chain": args.chain, "order": inst.graph.n, "size": inst.graph.m, "budget": inst.budget}
    if kind == "cnf":
        expected = chains.expected_counts(args.chain, source.n_vars, source.m)
        summary["counts_match"] = expected == (inst.graph.n, inst.graph.m, inst.budget)
    status = EXIT_OK
    if args.check:
        if kind == "cnf":
            result = chains.check_3sat_chain(source, args.chain, budget)
        else:
            result = chains.check_graph_step(source, args.k, args.chain, budget)
        summary.update(result)
        if not result["equivalent"]:
            status = EXIT_MISMATCH
    if not summary.get("counts_match", True):
        status = EXIT_MISMATCH
    sys.stdout.write(_dump(summary) + "\n")
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphdim", description="Exact graph dimension toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node cap per exact solve")
        p.add_argument("--threads", type=int, default=None, help="worker count (default: all cores)")
        p.add_argument("--output", "-o", default=None, help="output path (default: stdout)")
        p.add_argument("--json", action="store_true", help="machine-readable output (always on; kept for scripts)")

    p = sub.add_parser("compute", help="exact dimension or auxiliary parameter of an edge-list graph")
    p.add_argument("--variant", required=True, help="dim, adim, ldim, ladim, trunc:<k>, or an auxiliary name")
    p.add_argument("--input", "-i", action="append", help="edge-list file; repeat for several graphs; '-' is stdin")
    p.add_argument("--k", type=int, default=None, help="truncation level for --variant trunc")
    common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("generate", help="write a family or product graph as an edge list")
    p.add_argument("spec", help="e.g. path:7, corona(path:4,path:5), strong(complete:3,path:3)")
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT instead of an edge list")
    common(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check a corona, twin or strong-product formula on concrete graphs")
    p.add_argument("theorem", help=", ".join(THEOREMS))
    p.add_argument("graphs", nargs="+", help="graph specs or edge-list files")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", help="build a reduction instance from DIMACS CNF or an edge-list graph")
    p.add_argument("chain", choices=chains.CHAINS)
    p.add_argument("input", nargs="?", default=None, help="DIMACS or edge-list file ('-' for stdin)")
    p.add_argument("--input", "-i", dest="input_flag", default=None, help="alternative to the positional input")
    p.add_argument("--k", type=int, default=None, help="source budget when the input is a graph")
    p.add_argument("--check", action="store_true", help="solve both sides exactly and compare decisions")
    p.add_argument("--dot", action="store_true", help="write the instance graph as DOT")
    common(p)
    p.set_defaults(func=cmd_reduce)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "reduce":
        args.input = args.input_flag or args.input
        if args.input is None:
            parser.error("reduce needs an input file")
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: search budget exhausted ({exc})", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, GraphError, FormulaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
