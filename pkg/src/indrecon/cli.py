"""Command-line front end.

Exit status: 0 success, 1 input or format error, 2 resource limit,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import analysis
from .errors import InvariantViolation, ResourceLimitError
from .graph import (
    FAMILY_KINDS,
    Graph,
    VertexSet,
    format_edge_list,
    format_set,
    make_family,
    members,
    parse_edge_list,
    recognize,
    vertex_set,
)
from .indsets import DEFAULT_LIMIT, eval_at, independence_number, independence_polynomial
from .recon import ReconGraph, build_recon, recon_distance
from .verify import sweep_families


class UsageError(Exception):
    """Bad command-line input; the message names the offending flag."""


def _int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"{flag}: expected comma-separated integers, got {text!r}") from None


def parse_set_arg(text: str, flag: str) -> VertexSet:
    """``"0,2"`` -> {0, 2}; the literal ``empty`` is the empty set."""
    if text.strip() == "empty":
        return 0
    values = _int_list(text, flag)
    if not values:
        raise UsageError(f"{flag}: empty vertex list; spell the empty set as 'empty'")
    if any(v < 0 for v in values):
        raise UsageError(f"{flag}: vertex labels must be non-negative")
    return vertex_set(values)


def _read_graph(path: str) -> Graph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"--graph: cannot read {path}: {exc.strerror}") from None
    try:
        return parse_edge_list(text)
    except ValueError as exc:
        raise UsageError(f"--graph {path}: {exc}") from None


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"--out: cannot write {out}: {exc.strerror}") from None


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# ---------------------------------------------------------------------------
# serialisation
# ---------------------------------------------------------------------------

def recon_to_dot(r: ReconGraph) -> str:
    name = f"I_{r.k}" if r.includes_empty else f"Istar_{r.k}"
    lines = [f"graph {name} {{"]
    for i, s in enumerate(r.labels.sets):
        lines.append(f'  s{i} [label="{format_set(s)}"];')
    for i, j in r.edges():
        lines.append(f"  s{i} -- s{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def recon_to_json(r: ReconGraph) -> dict:
    return {
        "k": r.k,
        "include_empty": r.includes_empty,
        "base_n": r.base_n,
        "order": r.order,
        "size": r.size,
        "vertices": [list(members(s)) for s in r.labels.sets],
        "edges": [list(e) for e in r.edges()],
    }


def analysis_report(g: Graph, k: int, include_empty: bool = True, *, budget: int = analysis.DEFAULT_BUDGET,
                    limit: int = DEFAULT_LIMIT) -> dict:
    """Every quantity the ``analyze`` subcommand reports, in output key order."""
    poly = independence_polynomial(g, limit=limit)
    r = build_recon(g, k, include_empty, limit=limit)
    comps = analysis.components(r)
    bp = analysis.parity_bipartition(r)
    if not bp.is_valid:
        raise InvariantViolation("parity classes are not a bipartition")
    if bp.even + bp.odd != r.order:
        raise InvariantViolation("parity classes do not cover the vertex set")
    ham = analysis.hamiltonicity(r, budget)
    if r.order:
        prof = analysis.degree_profile(r)
        degrees = {"min": prof.min_degree, "max": prof.max_degree, "regular": prof.is_regular}
    else:
        degrees = None
    fs = analysis.forest_status(r)
    fams = [g.family] if g.family is not None else recognize(g)
    return {
        "graph": {"n": g.n, "m": g.m, "family": str(fams[0]) if fams else None},
        "k": k,
        "include_empty": include_empty,
        "recon": {"order": r.order, "size": r.size},
        "alpha": independence_number(g),
        "polynomial": [str(c) for c in poly.coeffs],
        "eval_at_1": str(eval_at(poly, 1)),
        "eval_at_minus_1": str(eval_at(poly, -1)),
        "components": {"count": comps.count, "sizes": list(comps.sizes)},
        "bipartition": {"even": bp.even, "odd": bp.odd},
        "girth": analysis.girth(r),
        "degrees": degrees,
        "forest": {"is_forest": fs.is_forest, "is_tree": fs.is_tree},
        "hamiltonian": {"status": ham.status.value, "method": ham.method.value},
    }


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_family(args) -> int:
    if args.kind == "multipartite":
        if args.parts is None:
            raise UsageError("--parts is required for --kind multipartite")
        parts = _int_list(args.parts, "--parts")
        try:
            g = make_family("multipartite", parts=parts)
        except ValueError as exc:
            raise UsageError(f"--parts: {exc}") from None
    else:
        if args.n is None:
            raise UsageError(f"--n is required for --kind {args.kind}")
        try:
            g = make_family(args.kind, args.n)
        except ValueError as exc:
            raise UsageError(f"--n: {exc}") from None
    _write(format_edge_list(g), args.out)
    return 0


def _cmd_poly(args) -> int:
    g = _read_graph(args.graph)
    poly = independence_polynomial(g)
    out = {"coefficients": [str(c) for c in poly.coeffs]}
    if args.eval is not None:
        out["x"] = str(args.eval)
        out["value"] = str(eval_at(poly, args.eval))
    _write(_dumps(out), None)
    return 0


def _check_k(k: int) -> None:
    if k < 0:
        raise UsageError(f"--k: must be >= 0, got {k}")


def _cmd_build(args) -> int:
    _check_k(args.k)
    g = _read_graph(args.graph)
    r = build_recon(g, args.k, not args.no_empty)
    text = recon_to_dot(r) if args.format == "dot" else _dumps(recon_to_json(r))
    _write(text, args.out)
    return 0


def _cmd_analyze(args) -> int:
    _check_k(args.k)
    g = _read_graph(args.graph)
    _write(_dumps(analysis_report(g, args.k, not args.no_empty, budget=args.budget)), None)
    return 0


def _cmd_distance(args) -> int:
    _check_k(args.k)
    g = _read_graph(args.graph)
    s = parse_set_arg(args.source, "--from")
    t = parse_set_arg(args.target, "--to")
    r = build_recon(g, args.k, not args.no_empty)
    for flag, q in (("--from", s), ("--to", t)):
        if q not in r.labels:
            raise UsageError(f"{flag}: {format_set(q)} is not a vertex of the reconfiguration graph")
    found = recon_distance(r, s, t)
    if found is None:
        _write("unreachable\n", None)
    else:
        _write(f"{found.length}\n{found}\n", None)
    return 0


def _cmd_verify(args) -> int:
    if not 1 <= args.max_n <= 63:
        raise UsageError(f"--max-n: must be in [1, 63], got {args.max_n}")
    if args.random < 0:
        raise UsageError(f"--random: must be >= 0, got {args.random}")
    _write(_dumps(sweep_families(args.max_n, args.seed, args.random)), None)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="indrecon", description="k-independent reconfiguration graphs")
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("family", help="write a named family graph as an edge list")
    f.add_argument("--kind", required=True, choices=FAMILY_KINDS)
    f.add_argument("--n", type=int)
    f.add_argument("--parts")
    f.add_argument("--out")
    f.set_defaults(func=_cmd_family)

    q = sub.add_parser("poly", help="independence polynomial")
    q.add_argument("--graph", required=True)
    q.add_argument("--eval", type=int)
    q.set_defaults(func=_cmd_poly)

    def recon_args(sp):
        sp.add_argument("--graph", required=True)
        sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--no-empty", action="store_true")

    b = sub.add_parser("build", help="materialise I_k(G) as DOT or JSON")
    recon_args(b)
    b.add_argument("--format", choices=("dot", "json"), required=True)
    b.add_argument("--out")
    b.set_defaults(func=_cmd_build)

    a = sub.add_parser("analyze", help="structural report as JSON")
    recon_args(a)
    a.add_argument("--budget", type=int, default=analysis.DEFAULT_BUDGET)
    a.set_defaults(func=_cmd_analyze)

    d = sub.add_parser("distance", help="shortest reconfiguration sequence")
    recon_args(d)
    d.add_argument("--from", dest="source", required=True)
    d.add_argument("--to", dest="target", required=True)
    d.set_defaults(func=_cmd_distance)

    v = sub.add_parser("verify", help="sweep every claim over families and random graphs")
    v.add_argument("--max-n", type=int, default=8)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--random", type=int, default=0)
    v.set_defaults(func=_cmd_verify)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; that code is reserved for resource limits
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ResourceLimitError as exc:
        print(f"error: resource limit: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
