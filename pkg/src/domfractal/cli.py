"""Command-line front end: generate | solve | recurse | count | verify.

Exit codes: 0 success, 1 a verify check failed, 2 bad input (including an
out-of-range generation), 3 solver node budget exhausted, 4 a recursion
disagreed with its closed form.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from importlib import resources
from pathlib import Path

from domfractal import __version__, counting, oracle, recursion, verify
from domfractal.generators import Method, generate
from domfractal.graph import (
    DominationConstraint,
    Family,
    Graph,
    new_graph,
    parse_edgelist,
    to_dot,
    to_edgelist,
)

EXIT_OK, EXIT_CHECK_FAILED, EXIT_BAD_INPUT, EXIT_RESOURCE, EXIT_MISMATCH = 0, 1, 2, 3, 4

FAMILY_NAMES = {"web": Family.PSEUDOFRACTAL_WEB, "sierpinski": Family.SIERPINSKI}
GRAPH_FORMATS = ("edgelist", "dot", "json")
REPORT_FORMATS = ("json", "text")


class UsageError(Exception):
    pass


# -- serialization ----------------------------------------------------------------


def graph_to_json(g: Graph) -> dict:
    return {
        "n_vertices": g.n_vertices,
        "n_edges": g.n_edges,
        "boundary": list(g.boundary),
        "family": g.family.value,
        "generation": g.generation,
        "edges": [list(e) for e in g.edges()],
    }


def graph_from_json(data: dict) -> Graph:
    return new_graph(
        [tuple(e) for e in data["edges"]],
        data.get("boundary", ()),
        n_vertices=data["n_vertices"],
        generation=data.get("generation", 0),
        family=Family(data.get("family", Family.CUSTOM.value)),
    )


def render_graph(g: Graph, fmt: str) -> str:
    if fmt == "edgelist":
        return to_edgelist(g)
    if fmt == "dot":
        return to_dot(g)
    return dumps(graph_to_json(g))


def load_graph(path: str) -> Graph:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return graph_from_json(json.loads(text))
    return parse_edgelist(text)


def load_schema(name: str) -> dict:
    """One of the shipped JSON schemas: graph, solve, recurse, count, verify, manifest."""
    path = resources.files("domfractal") / "data" / "schemas" / f"{name}.schema.json"
    return json.loads(path.read_text())


def dumps(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def sha256_file(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def write_manifest(command: str, params: dict, outputs: list[Path]) -> Path:
    manifest = {
        "command": command,
        "parameters": params,
        "tool_version": __version__,
        "outputs": [str(p) for p in outputs],
        "checksums": {str(p): sha256_file(p) for p in outputs},
    }
    path = Path(str(outputs[0]) + ".manifest.json")
    path.write_text(dumps(manifest))
    return path


def emit(text: str, args: argparse.Namespace) -> None:
    """Write to --out (plus a manifest) or to stdout."""
    if args.out:
        out = Path(args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text)
        write_manifest(args.command, _parameters(args), [out])
    else:
        sys.stdout.write(text)


def _parameters(args: argparse.Namespace) -> dict:
    skip = {"out", "func", "command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _report_format(args) -> str:
    fmt = args.format or "json"
    if fmt not in REPORT_FORMATS:
        raise UsageError(f"--format for {args.command} must be one of {REPORT_FORMATS}")
    return fmt


def _vertex_list(text: str | None) -> frozenset[int]:
    if not text:
        return frozenset()
    try:
        return frozenset(int(t) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise UsageError(f"bad vertex list {text!r}") from exc


# -- subcommands ------------------------------------------------------------------


def cmd_generate(args) -> int:
    fmt = args.format or "edgelist"
    if fmt not in GRAPH_FORMATS:
        raise UsageError(f"--format for generate must be one of {GRAPH_FORMATS}")
    g = generate(FAMILY_NAMES[args.family], args.n, Method(args.method), allow_large=args.allow_large)
    emit(render_graph(g, fmt), args)
    return EXIT_OK


def _solve_graph(args) -> Graph:
    if args.graph:
        if args.family or args.n:
            raise UsageError("give either --graph or --family/--n, not both")
        return load_graph(args.graph)
    if not (args.family and args.n):
        raise UsageError("solve needs --graph PATH or both --family and --n")
    return generate(FAMILY_NAMES[args.family], args.n)


def cmd_solve(args) -> int:
    fmt = _report_format(args)
    g = _solve_graph(args)
    mode = oracle.Mode(args.mode)
    kw = {"budget": args.budget}
    forced, forbidden = _vertex_list(args.forced), _vertex_list(args.forbidden)
    targets = _vertex_list(args.targets) if args.targets else None
    if args.forced_hubs is not None:
        if forced or forbidden or targets is not None:
            raise UsageError("--forced-hubs cannot be combined with --forced/--forbidden/--targets")
        if len(g.boundary) < 3 or not 0 <= args.forced_hubs <= 3:
            raise UsageError("--forced-hubs needs a graph with three boundary vertices and k in 0..3")
        q = oracle.ClassQuery(g, g.boundary, args.forced_hubs)
        result = oracle.class_minimum(q, mode, args.cap, workers=args.threads, **kw)
        constraint = {"boundary_in_set": args.forced_hubs, "boundary": list(g.boundary)}
    else:
        try:
            c = DominationConstraint(forced, forbidden, targets)
            req = oracle.SolveRequest(g, c, mode, args.cap)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        result = oracle.solve(req, **kw)
        constraint = {
            "forced_in": sorted(forced),
            "forbidden": sorted(forbidden),
            "must_dominate": None if targets is None else sorted(targets),
        }
    report = {
        "graph": {
            "family": g.family.value,
            "generation": g.generation,
            "n_vertices": g.n_vertices,
            "n_edges": g.n_edges,
        },
        "constraint": constraint,
        "mode": mode.value,
        "result": result.to_json(),
    }
    if fmt == "json":
        emit(dumps(report), args)
    else:
        r = report["result"]
        lines = [f"min_size {r['min_size'] if r['feasible'] else 'infeasible'}"]
        if r["num_minima"] is not None:
            lines.append(f"num_minima {r['num_minima']}")
        for s in r.get("minima") or []:
            lines.append(" ".join(map(str, s)))
        if r.get("truncated"):
            lines.append("(listing truncated)")
        emit("\n".join(lines) + "\n", args)
    return EXIT_OK


def _strs(values) -> list:
    return [None if v is None else str(v) for v in values]


def recurse_rows(family: Family, n_max: int, check: str, pi1: str) -> tuple[list[dict], list[str]]:
    """Per-generation rows plus a list of mismatch messages."""
    if n_max < recursion.SEED_N:
        raise UsageError(f"--n-max must be >= {recursion.SEED_N}")
    rows, problems = [], []
    web = family is Family.PSEUDOFRACTAL_WEB
    state = recursion.PSEUDOFRACTAL_SEED if web else recursion.SIERPINSKI_SEED
    table = recursion.PSEUDOFRACTAL_TABLE if web else recursion.SIERPINSKI_TABLE
    for n in range(recursion.SEED_N, n_max + 1):
        closed = recursion.class_closed_forms(n) if web else recursion.sierpinski_closed_forms(n)
        gamma = recursion.domination_number(family, n)
        ev = recursion.evaluate_step(table, state.as_env(), pi1=pi1)
        row = {
            "n": n,
            "values": _strs(state.as_tuple()),
            "closed_form": _strs(closed.as_tuple()),
            "domination_number": str(state.domination_number),
            "theorem_domination_number": str(gamma),
            "next_step_certificate": {k: list(v) for k, v in recursion.argmin_certificate(ev).items()},
        }
        theorem_ok = state.domination_number == gamma
        full_ok = state == closed
        row["matches_theorem"] = theorem_ok
        row["matches_closed_form"] = full_ok
        if not theorem_ok:
            problems.append(f"n={n}: domination number {state.domination_number} != {gamma}")
        if check == "all" and not full_ok:
            problems.append(f"n={n}: recursion {state.as_tuple()} != closed form {closed.as_tuple()}")
        rows.append(row)
        if n < n_max:
            state = recursion.step_pseudofractal(state) if web else recursion.step_sierpinski(state, pi1=pi1)
    return rows, problems


def cmd_recurse(args) -> int:
    fmt = _report_format(args)
    family = FAMILY_NAMES[args.family]
    try:
        rows, problems = recurse_rows(family, args.n_max, args.check, args.pi1)
    except recursion.RecursionMismatch as exc:
        print(f"recursion mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    names = ("gamma0", "gamma1", "gamma2", "gamma3")
    if family is Family.SIERPINSKI:
        names = tuple(f"{k}" for k in recursion.SierpinskiState.__dataclass_fields__)
    report = {
        "family": family.value,
        "check": args.check,
        "pi1": args.pi1,
        "components": list(names),
        "rows": rows,
        "mismatches": problems,
    }
    if fmt == "json":
        emit(dumps(report), args)
    else:
        lines = ["n  gamma  " + " ".join(names)]
        for r in rows:
            flag = "" if r["matches_closed_form"] else "  <- differs from closed form"
            lines.append(f"{r['n']}  {r['domination_number']}  {' '.join(r['values'])}{flag}")
        emit("\n".join(lines) + "\n", args)
    for p in problems:
        print(f"mismatch: {p}", file=sys.stderr)
    return EXIT_MISMATCH if problems else EXIT_OK


def cmd_count(args) -> int:
    fmt = _report_format(args)
    if args.n_max < 1:
        raise UsageError("--n-max must be >= 1")
    report = counting.report_json(args.n_max, FAMILY_NAMES[args.family], args.method)
    if fmt == "json":
        emit(dumps(report), args)
    else:
        lines = ["n  N  a  log(a)/N  source"]
        for r in report["rows"]:
            lines.append(f"{r['n']}  {r['N']}  {r['counts']['a']}  {r['log_a_over_N']:.6f}  {r['source']}")
        emit("\n".join(lines) + "\n", args)
    return EXIT_OK


def cmd_verify(args) -> int:
    fmt = _report_format(args)
    report = verify.run_all(args.level)
    if fmt == "json":
        data = report.to_json()
        if not args.timings:
            for c in data["checks"]:
                del c["seconds"]
        emit(dumps(data), args)
    else:
        lines = [c.line() for c in report.checks]
        lines.append(f"{sum(c.passed for c in report.checks)}/{len(report.checks)} checks passed")
        emit("\n".join(lines) + "\n", args)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


# -- argument parsing -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", help="edgelist|dot|json for generate; json|text elsewhere")
    common.add_argument("--out", help="write here (plus <out>.manifest.json) instead of stdout")
    common.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET,
                        help="branch-and-bound node budget")
    common.add_argument("--threads", type=int, default=1, help="worker processes for the oracle")

    p = argparse.ArgumentParser(prog="domfractal", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", parents=[common], help="build G_n or S_n")
    g.add_argument("--family", choices=FAMILY_NAMES, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--method", choices=[m.value for m in Method], default=Method.ITERATIVE.value)
    g.add_argument("--allow-large", action="store_true", help="lift the n <= 16 cap")
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("solve", parents=[common], help="exact constrained minimum dominating sets")
    s.add_argument("--graph", help="edge-list or JSON graph file")
    s.add_argument("--family", choices=FAMILY_NAMES)
    s.add_argument("--n", type=int)
    s.add_argument("--forced", help="comma-separated vertices that must be in the set")
    s.add_argument("--forbidden", help="comma-separated vertices that must stay out")
    s.add_argument("--targets", help="comma-separated vertices to dominate (default all)")
    s.add_argument("--forced-hubs", type=int, metavar="K",
                   help="exactly K boundary vertices in the set, minimised over placements")
    s.add_argument("--mode", choices=[m.value for m in oracle.Mode], default=oracle.Mode.COUNT.value)
    s.add_argument("--cap", type=int, help="maximum number of sets listed in enumerate mode")
    s.set_defaults(func=cmd_solve)

    r = sub.add_parser("recurse", parents=[common], help="iterate the class recursions")
    r.add_argument("--family", choices=FAMILY_NAMES, required=True)
    r.add_argument("--n-max", type=int, required=True)
    r.add_argument("--check", choices=("all", "theorem"), default="all",
                   help="compare every component with its closed form, or only the domination number")
    r.add_argument("--pi1", choices=recursion.PI1_READINGS, default="phi1",
                   help="reading of the undefined pi term in the phi0 list")
    r.set_defaults(func=cmd_recurse)

    c = sub.add_parser("count", parents=[common], help="count minimum dominating sets")
    c.add_argument("--family", choices=FAMILY_NAMES, required=True)
    c.add_argument("--n-max", type=int, required=True)
    c.add_argument("--method", choices=counting.METHODS, default="recurrence")
    c.set_defaults(func=cmd_count)

    v = sub.add_parser("verify", parents=[common], help="run the acceptance checks")
    v.add_argument("--level", choices=verify.LEVELS, default="fast")
    v.add_argument("--timings", action="store_true", help="include per-check seconds in JSON")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget < 1 or args.threads < 1:
        print("error: --budget and --threads must be positive", file=sys.stderr)
        return EXIT_BAD_INPUT
    try:
        return args.func(args)
    except oracle.ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UsageError, ValueError, OSError, KeyError) as exc:  # ValueError covers GraphError, GenerationOutOfRange, JSON decode errors
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
