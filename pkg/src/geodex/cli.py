"""Command line front end: solve, verify, table, serve."""

from __future__ import annotations

import argparse
import json
import sys
import time

from .engine import (
    Outcome,
    Position,
    SearchBudgetExceeded,
    SearchDeadlineExceeded,
    grundy,
)
from .families import FAMILY_NAMES, named_graph
from .formulas import FormulaDomainError, closed_form_lookup
from .graphs import CapacityError, GraphError, parse_graph, recognize_family
from .solvers import solve_auto, solve_block_graph, solve_cactus, solve_tree
from .verify import VERIFY_FAMILIES, run_verify

SOLVER_NAMES = ("auto", "brute", "tree", "block", "cactus", "closed-form")

TABLE_FAMILIES = {
    # family -> first tabulated parameter value
    "path": 1,
    "cycle": 3,
    "complete": 1,
    "star": 1,
}


def _parse_dims(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise GraphError(f"bad --dims value {text!r}, expected e.g. 3,4")


def _load_graph(args: argparse.Namespace):
    if args.input and args.family:
        raise GraphError("pass --input or --family, not both")
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            return parse_graph(fh.read())
    if args.family:
        dims = _parse_dims(args.dims) if args.dims else None
        return named_graph(args.family, n=args.n, m=args.m, dims=dims,
                           seed=args.seed)
    raise GraphError("pass --input PATH or --family NAME")


def cmd_solve(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    start = time.perf_counter()
    if args.solver == "auto":
        sol = solve_auto(g)
        value: object = sol.value
        used = sol.solver
    elif args.solver == "brute":
        value = grundy(Position(g))
        used = "brute"
    elif args.solver == "closed-form":
        tag = recognize_family(g)
        looked = closed_form_lookup(g, tag)
        if looked is None:
            raise GraphError(
                f"no closed form for a {tag.kind.value} graph")
        value = looked
        used = "closed-form"
    else:
        solver = {"tree": solve_tree, "block": solve_block_graph,
                  "cactus": solve_cactus}[args.solver]
        value = solver(g)
        used = args.solver
    elapsed_ms = (time.perf_counter() - start) * 1000.0

    record: dict[str, object] = {"n": g.n}
    if isinstance(value, Outcome):
        record["outcome"] = value.value
    else:
        record["grundy"] = value
        record["outcome"] = ("N" if value else "P")
    record["solver_used"] = used
    record["elapsed_ms"] = round(elapsed_ms, 3)
    print(json.dumps(record))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_verify(args.family, count=args.count, max_n=args.max_n,
                        seed=args.seed)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(f"family={report.family} instances={report.instances} "
              f"seed={report.seed} max_n={report.max_n} "
              f"mismatches={len(report.mismatches)} "
              f"budget_exceeded={len(report.budget_exceeded)} "
              f"elapsed_ms={report.elapsed_ms:.1f}")
        for mm in report.mismatches:
            print(f"MISMATCH expected={mm.expected} got={mm.got}")
            for line in mm.graph.splitlines():
                print(f"  {line}")
    return 0 if report.ok else 1


def cmd_table(args: argparse.Namespace) -> int:
    if args.family not in TABLE_FAMILIES:
        raise GraphError(
            "table supports families: " + ", ".join(sorted(TABLE_FAMILIES)))
    first = TABLE_FAMILIES[args.family]
    if args.max_n < first:
        raise GraphError(f"--max-n must be at least {first} for "
                         f"{args.family}")
    rows: list[tuple[int, int]] = []
    for param in range(first, args.max_n + 1):
        g = named_graph(args.family, n=param)
        sol = solve_auto(g)
        if sol.grundy is None:
            raise GraphError("table needs a numeric value for every row")
        rows.append((param, sol.grundy))

    if args.json:
        text = json.dumps([{"param": p, "grundy": v} for p, v in rows])
    else:
        text = "param,grundy\n" + "\n".join(f"{p},{v}" for p, v in rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)

    if args.plot:
        path = _write_plot(args.family, rows, args.out)
        print(f"wrote {path}", file=sys.stderr)
    return 0


def _write_plot(family: str, rows: list[tuple[int, int]],
                out: str | None) -> str:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    if out:
        base = out.rsplit(".", 1)[0] if "." in out.rsplit("/", 1)[-1] else out
        path = base + ".png"
    else:
        path = f"geodex-table-{family}.png"
    params = [p for p, _ in rows]
    values = [v for _, v in rows]
    fig, ax = plt.subplots(figsize=(6, 3))
    ax.step(params, values, where="mid", marker="o")
    ax.set_xlabel("parameter")
    ax.set_ylabel("game value")
    ax.set_title(f"{family} family")
    ax.set_yticks(sorted(set(values)))
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(session_ttl=args.ttl, time_budget=args.time_budget)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geodex",
        description="Solvers for the closed geodetic game on finite graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_source(p: argparse.ArgumentParser) -> None:
        p.add_argument("--input", metavar="PATH",
                       help="edge list file (header 'n <count>', lines 'u v')")
        p.add_argument("--family", choices=FAMILY_NAMES,
                       help="build a named family instead of reading a file")
        p.add_argument("--n", type=int, help="size parameter for --family")
        p.add_argument("--m", type=int,
                       help="second size parameter (complete-bipartite)")
        p.add_argument("--dims", metavar="A,B,...",
                       help="grid dimensions, comma separated")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for the random families")

    p_solve = sub.add_parser("solve", help="compute the value of one graph")
    add_graph_source(p_solve)
    p_solve.add_argument("--solver", choices=SOLVER_NAMES, default="auto")
    p_solve.add_argument("--json", action="store_true",
                         help="accepted for symmetry; solve always emits JSON")
    p_solve.set_defaults(func=cmd_solve)

    p_verify = sub.add_parser(
        "verify", help="cross-check a fast solver against the oracle")
    p_verify.add_argument("--family", choices=VERIFY_FAMILIES, required=True)
    p_verify.add_argument("--count", type=int, default=100)
    p_verify.add_argument("--max-n", type=int, default=14)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--json", action="store_true",
                          help="emit the full report as JSON")
    p_verify.set_defaults(func=cmd_verify)

    p_table = sub.add_parser(
        "table", help="tabulate game values over a one-parameter family")
    p_table.add_argument("--family", choices=sorted(TABLE_FAMILIES),
                         required=True)
    p_table.add_argument("--max-n", type=int, default=12)
    p_table.add_argument("--out", metavar="PATH",
                         help="write the CSV here instead of stdout")
    p_table.add_argument("--plot", action="store_true",
                         help="also render a figure next to the output")
    p_table.add_argument("--json", action="store_true",
                         help="emit JSON rows instead of CSV")
    p_table.set_defaults(func=cmd_table)

    p_serve = sub.add_parser("serve", help="run the HTTP game service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--ttl", type=float, default=3600.0,
                         help="idle session lifetime in seconds")
    p_serve.add_argument("--time-budget", type=float, default=10.0,
                         help="per-request engine time limit in seconds")
    p_serve.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CapacityError, SearchBudgetExceeded, SearchDeadlineExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (GraphError, FormulaDomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
