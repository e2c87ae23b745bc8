"""Command-line interface: solve, transform, generate, analyze-chain, bench.

Machine output goes to stdout, diagnostics (including the fully resolved
configuration of every run) to stderr.  Exit codes: 0 success (solution
found, analysis passed, benchmark completed), 1 unknown (budget exhausted or
an analysis check failed), 2 usage or input error.  With a fixed seed, the
machine output of any invocation is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import configparser
import json
import logging
import sys
from typing import Optional

from . import bench as bench_mod
from . import markov
from .cnf import (
    assignment_to_vline,
    generate_planted_3sat,
    generate_random_3sat,
    parse_dimacs,
    serialize_dimacs,
)
from .solvers import ALGORITHMS, INIT_MODES, SolverConfig, run_solver
from .transform import cluster_expression, occurrence_map_lines

log = logging.getLogger("valsat")

EXIT_OK = 0
EXIT_UNKNOWN = 1
EXIT_USAGE = 2

CHAIN_CHECKS = ("stationary", "period", "limits", "closed-form", "first-passage")


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _log_config(command: str, args: argparse.Namespace) -> None:
    resolved = {k: v for k, v in sorted(vars(args).items()) if k != "func"}
    log.info("%s config: %s", command, resolved)


def _cmd_solve(args) -> int:
    formula = parse_dimacs(_read_input(args.input))
    for w in formula.warnings:
        log.warning("%s", w)
    cfg = SolverConfig(
        M=args.M,
        max_steps=args.max_steps,
        restarts=args.restarts,
        alpha=args.alpha,
        seed=args.seed,
        init_mode=args.init,
        accept_rounded=args.accept_rounded,
    )
    result = run_solver(args.algo, formula, cfg)
    stats = {
        "algo": args.algo,
        "M": args.M,
        "alpha": args.alpha,
        "seed": args.seed,
        "budget_per_restart": result.budget_per_restart,
        "steps": result.steps_used,
        "restarts": result.restarts_used,
        "reflections": {
            "positive": result.reflections.positive_reflections,
            "negative": result.reflections.negative_reflections,
            "interior": result.reflections.interior_steps,
        },
    }
    if result.satisfied:
        print("SAT")
        print(assignment_to_vline(result.assignment))
    else:
        print("UNKNOWN")
    print(json.dumps(stats, sort_keys=True, indent=2))
    return EXIT_OK if result.satisfied else EXIT_UNKNOWN


def _cmd_transform(args) -> int:
    formula = parse_dimacs(_read_input(args.input))
    for w in formula.warnings:
        log.warning("%s", w)
    cf = cluster_expression(formula)
    text = serialize_dimacs(cf.formula)
    map_text = "\n".join(occurrence_map_lines(cf)) + "\n"
    map_out = args.map_out
    if args.out == "-":
        if map_out is None:
            log.error("need --map-out when the formula goes to stdout")
            return EXIT_USAGE
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        if map_out is None:
            map_out = args.out + ".map"
    with open(map_out, "w", encoding="utf-8") as fh:
        fh.write(map_text)
    log.info("wrote %d clauses over %d variables", cf.formula.num_clauses, cf.formula.num_vars)
    return EXIT_OK


def _cmd_generate(args) -> int:
    m = args.m if args.m is not None else max(1, round(args.ratio * args.n))
    if args.planted:
        formula, solution = generate_planted_3sat(args.n, m, args.seed)
    else:
        formula, solution = generate_random_3sat(args.n, m, args.seed), None
    text = serialize_dimacs(formula)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    if args.solution_out:
        if solution is None:
            log.error("--solution-out requires --planted")
            return EXIT_USAGE
        with open(args.solution_out, "w", encoding="utf-8") as fh:
            fh.write(assignment_to_vline(solution) + "\n")
    return EXIT_OK


def _chain_csv(report: markov.CheckReport, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("check,line\n")
        for line in report.lines:
            fh.write(f"{report.name},\"{line}\"\n")


def _cmd_analyze_chain(args) -> int:
    if args.check == "stationary":
        report = markov.check_stationary(args.M, tol=args.tol or 1e-10)
    elif args.check == "period":
        report = markov.check_period(args.M)
    elif args.check == "limits":
        report = markov.check_limits(args.M, m_large=args.m_large, tol=args.tol or 1e-8)
    elif args.check == "closed-form":
        report = markov.check_closed_form(k_max=args.k, tol=args.tol or 1e-12)
    else:
        report = markov.check_first_passage(
            r=args.r, ts=(args.t,), trials=args.trials, seed=args.seed
        )
    for line in report.lines:
        print(line)
    print(f"check {report.name}: {'PASS' if report.ok else 'FAIL'}")
    if args.csv:
        _chain_csv(report, args.csv)
    return EXIT_OK if report.ok else EXIT_UNKNOWN


def _load_spec_file(path: str) -> bench_mod.ExperimentSpec:
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise FileNotFoundError(path)
    section = parser["experiment"]
    budget = section.get("budget", "")
    return bench_mod.ExperimentSpec(
        algo=section.get("algo", "valuation"),
        n_grid=tuple(int(x) for x in section.get("n_grid", "10,20,30,40").split(",")),
        ratio=section.getfloat("ratio", 4.0),
        M_rule=section.get("M_rule", "n"),
        seeds=section.getint("seeds", 25),
        budget=int(budget) if budget else None,
        restarts=section.getint("restarts", 1),
        alpha=section.getfloat("alpha", 0.1),
        init_mode=section.get("init_mode", "half"),
        instance_mode=section.get("instance_mode", "planted"),
        out_path=section.get("out", None) or None,
        timing=section.getboolean("timing", False),
    )


def _cmd_bench(args) -> int:
    if args.spec:
        spec = _load_spec_file(args.spec)
        if args.out:
            spec = bench_mod.ExperimentSpec(
                **{**spec.__dict__, "out_path": args.out}
            )
    else:
        spec = bench_mod.ExperimentSpec(
            algo=args.algo,
            n_grid=tuple(int(x) for x in args.n_grid.split(",")),
            ratio=args.ratio,
            M_rule=args.M_rule,
            seeds=args.seeds,
            budget=args.budget,
            restarts=args.restarts,
            alpha=args.alpha,
            init_mode=args.init,
            instance_mode=args.instances,
            out_path=args.out,
            timing=args.timing,
        )
    results = bench_mod.run_experiment(spec, jobs=args.jobs)
    report = bench_mod.scaling_report(results)
    if spec.out_path:
        print(report)
        log.info("wrote %d rows to %s", len(results), spec.out_path)
    else:
        sys.stdout.write(bench_mod.results_to_csv(results))
        print(report, file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="valsat",
        description="Stochastic local search for 3SAT on truth-valuation grids, "
        "with random-walk chain analysis and benchmarking.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run a solver on a DIMACS CNF file")
    p.add_argument("input", help="DIMACS CNF path, or - for stdin")
    p.add_argument("--algo", choices=ALGORITHMS, default="valuation",
                   help="solver: classic boolean walk, grid valuation walk, "
                        "clustered cubic hill climb, or clustered make-break flips")
    p.add_argument("--M", type=int, default=2,
                   help="grid resolution; levels are multiples of 1/M (M=1 is the boolean walk)")
    p.add_argument("--alpha", type=float, default=0.1,
                   help="total probability mass given to negative flips (sparrow)")
    p.add_argument("--seed", type=int, default=0, help="RNG seed (SplitMix64 stream)")
    p.add_argument("--max-steps", type=int, default=None,
                   help="per-restart step budget; default 3n classic, 4n²M² valuation, "
                        "2m² sparrow, 4n² hill climb")
    p.add_argument("--restarts", type=int, default=1, help="independent tries")
    p.add_argument("--init", choices=INIT_MODES, default="half",
                   help="valuation walk start: all levels M/2, uniform on even levels, "
                        "or uniform boolean")
    p.add_argument("--accept-rounded", action="store_true",
                   help="also accept when the barrier-rounded assignment satisfies "
                        "(extension beyond the plain walk; off by default)")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("transform", help="cluster a 3SAT formula so every variable "
                                         "occurs in at most 3 clauses")
    p.add_argument("input", help="DIMACS CNF path, or - for stdin")
    p.add_argument("-o", "--out", default="-", help="clustered DIMACS path (default stdout)")
    p.add_argument("--map-out", default=None,
                   help="sidecar mapping path, 'occ_var orig_var' per line "
                        "(default: <out>.map)")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("generate", help="generate random or planted 3SAT instances")
    p.add_argument("--n", type=int, required=True, help="variable count (>= 3)")
    p.add_argument("--m", type=int, default=None, help="clause count (default ratio*n)")
    p.add_argument("--ratio", type=float, default=4.0, help="clause/variable ratio")
    p.add_argument("--seed", type=int, default=0, help="RNG seed")
    p.add_argument("--planted", action="store_true",
                   help="guarantee satisfiability by planting a hidden solution")
    p.add_argument("--solution-out", default=None,
                   help="write the planted solution as a v-line to this path")
    p.add_argument("-o", "--out", default="-", help="DIMACS output path (default stdout)")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("analyze-chain",
                       help="verify properties of the reflecting-walk Markov chain")
    p.add_argument("--M", type=int, default=2, help="grid resolution")
    p.add_argument("--check", choices=CHAIN_CHECKS, required=True,
                   help="stationary distribution, period/cyclic classes, "
                        "large-power convergence limits, M=4 closed-form powers, "
                        "or first-passage Monte Carlo")
    p.add_argument("--k", type=int, default=20, help="max k for closed-form powers")
    p.add_argument("--t", type=float, default=1.0, help="first-passage time ratio")
    p.add_argument("--r", type=int, default=100, help="first-passage barrier distance")
    p.add_argument("--trials", type=int, default=100_000, help="Monte Carlo trials")
    p.add_argument("--seed", type=int, default=0, help="RNG seed")
    p.add_argument("--m-large", type=int, default=10_000, help="exponent for limit checks")
    p.add_argument("--tol", type=float, default=None, help="override check tolerance")
    p.add_argument("--csv", default=None, help="also write the report as CSV")
    p.set_defaults(func=_cmd_analyze_chain)

    p = sub.add_parser("bench", help="run a scaling study and write CSV results")
    p.add_argument("--spec", default=None,
                   help="INI spec file with an [experiment] section; overrides flags")
    p.add_argument("--algo", choices=ALGORITHMS, default="valuation")
    p.add_argument("--n-grid", default="10,20,30,40", help="comma-separated n values")
    p.add_argument("--ratio", type=float, default=4.0, help="clause/variable ratio")
    p.add_argument("--M-rule", default="n", help="grid rule: n, 2n, or a fixed integer")
    p.add_argument("--seeds", type=int, default=25, help="instances per n")
    p.add_argument("--budget", type=int, default=None, help="per-restart step budget")
    p.add_argument("--restarts", type=int, default=1)
    p.add_argument("--alpha", type=float, default=0.1)
    p.add_argument("--init", choices=INIT_MODES, default="half")
    p.add_argument("--instances", choices=bench_mod.INSTANCE_MODES, default="planted")
    p.add_argument("--timing", action="store_true",
                   help="record wall-clock times (breaks byte-determinism of the CSV)")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers for cells")
    p.add_argument("-o", "--out", default=None, help="CSV path (default: CSV to stdout)")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    logging.basicConfig(
        stream=sys.stderr, level=logging.INFO, format="%(levelname)s %(message)s"
    )
    parser = build_parser()
    args = parser.parse_args(argv)
    _log_config(args.command, args)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        log.error("%s", exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
