"""Benchmark harness: scaling studies of steps-to-solution over (n, M) grids.

Planted instances are the default so success needs no external solver; every
cell is generated and solved deterministically from the experiment spec, and
rows are emitted in (n, M, seed) order so reruns produce byte-identical CSV.
Wall-clock timing is opt-in because it would break that determinism; the
``wall_ms`` column is 0 unless ``timing`` is set.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .cnf import brute_force_sat, generate_planted_3sat, generate_random_3sat
from .rng import derive_seed
from .solvers import ALGORITHMS, SolverConfig, run_solver

CSV_HEADER = "algo,n,m,M,seed,solved,steps,restarts,wall_ms,pos_refl,neg_refl,final_hamming"

INSTANCE_MODES = ("planted", "random")


@dataclass(frozen=True)
class ExperimentSpec:
    """One scaling study: an algorithm over a grid of instance sizes.

    ``M_rule`` is "n", "2n", or a fixed integer (as a string); ``seeds``
    instances are run per n.  ``budget`` of None uses each algorithm's
    default step budget.  ``instance_mode`` "random" drops the planted
    solution (and the reflection/distance columns) and is capped at n <= 24
    so satisfiability stays decidable by brute force.
    """

    algo: str = "valuation"
    n_grid: tuple[int, ...] = (10, 20, 30, 40)
    ratio: float = 4.0
    M_rule: str = "n"
    seeds: int = 25
    budget: Optional[int] = None
    restarts: int = 1
    alpha: float = 0.1
    init_mode: str = "half"
    instance_mode: str = "planted"
    out_path: Optional[str] = None
    timing: bool = False

    def __post_init__(self):
        if self.algo not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algo!r}")
        if not self.n_grid:
            raise ValueError("n grid must be nonempty")
        if self.seeds < 1:
            raise ValueError("need at least one seed per cell")
        if self.instance_mode not in INSTANCE_MODES:
            raise ValueError(f"instance_mode must be one of {INSTANCE_MODES}")
        self.resolve_M(max(self.n_grid))  # validates the rule

    def resolve_M(self, n: int) -> int:
        if self.M_rule == "n":
            return n
        if self.M_rule == "2n":
            return 2 * n
        try:
            M = int(self.M_rule)
        except ValueError:
            raise ValueError(
                f"M rule must be 'n', '2n', or an integer, got {self.M_rule!r}"
            ) from None
        if M < 1:
            raise ValueError("fixed M must be >= 1")
        return M

    def clause_count(self, n: int) -> int:
        return max(1, round(self.ratio * n))


@dataclass(frozen=True)
class CellResult:
    """One (n, seed) cell of an experiment."""

    algo: str
    n: int
    m: int
    M: int
    seed: int
    solved: bool
    steps: int
    restarts: int
    wall_ms: int
    pos_refl: int
    neg_refl: int
    final_hamming: Optional[float]

    def csv_row(self) -> str:
        hamming = "" if self.final_hamming is None else repr(self.final_hamming)
        return (
            f"{self.algo},{self.n},{self.m},{self.M},{self.seed},"
            f"{int(self.solved)},{self.steps},{self.restarts},{self.wall_ms},"
            f"{self.pos_refl},{self.neg_refl},{hamming}"
        )


def _run_cell(args) -> CellResult:
    spec, n, seed = args
    m = spec.clause_count(n)
    M = spec.resolve_M(n)
    instance_seed = derive_seed(n, M, seed, 0)
    solver_seed = derive_seed(n, M, seed, 1)
    if spec.instance_mode == "planted":
        formula, planted = generate_planted_3sat(n, m, instance_seed)
    else:
        if n > 24:
            raise ValueError("random instance mode capped at n <= 24")
        formula = generate_random_3sat(n, m, instance_seed)
        planted = None
    cfg = SolverConfig(
        M=M,
        max_steps=spec.budget,
        restarts=spec.restarts,
        alpha=spec.alpha,
        seed=solver_seed,
        init_mode=spec.init_mode,
    )
    t0 = time.perf_counter()
    result = run_solver(spec.algo, formula, cfg, planted)
    wall_ms = int(round((time.perf_counter() - t0) * 1000)) if spec.timing else 0
    if result.satisfied and spec.instance_mode == "random" and n <= 24:
        # cross-check the one-sided verdict against the exhaustive oracle
        assert brute_force_sat(formula) is not None
    return CellResult(
        algo=spec.algo,
        n=n,
        m=m,
        M=M,
        seed=seed,
        solved=result.satisfied,
        steps=result.steps_used,
        restarts=result.restarts_used,
        wall_ms=wall_ms,
        pos_refl=result.reflections.positive_reflections,
        neg_refl=result.reflections.negative_reflections,
        final_hamming=result.final_hamming,
    )


def run_experiment(spec: ExperimentSpec, jobs: int = 1) -> list[CellResult]:
    """Run every (n, seed) cell and return results in (n, M, seed) order.

    Instance and solver seeds are derived independently per cell from
    (n, M, seed index), so the grid can be re-partitioned or parallelized
    without changing any cell's outcome.  Writes CSV to ``spec.out_path``
    when set.
    """
    cells = [
        (spec, n, seed)
        for n in sorted(spec.n_grid)
        for seed in range(spec.seeds)
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_cell, cells))
    else:
        results = [_run_cell(c) for c in cells]
    results.sort(key=lambda r: (r.n, r.M, r.seed))
    if spec.out_path:
        write_csv(results, spec.out_path)
    return results


def write_csv(results: list[CellResult], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(results_to_csv(results))


def results_to_csv(results: list[CellResult]) -> str:
    return "\n".join([CSV_HEADER] + [r.csv_row() for r in results]) + "\n"


@dataclass(frozen=True)
class ScalingFit:
    """Log-log least-squares fit of median solved steps against n."""

    slope: float
    intercept: float
    per_n: tuple[tuple[int, float, Optional[float]], ...]  # (n, solved frac, median steps)


def _per_n_summary(results: list[CellResult]):
    summary = []
    for n in sorted({r.n for r in results}):
        cells = [r for r in results if r.n == n]
        solved = [r for r in cells if r.solved]
        frac = len(solved) / len(cells)
        median = float(np.median([r.steps for r in solved])) if solved else None
        summary.append((n, frac, median))
    return summary


def fit_scaling(results: list[CellResult]) -> ScalingFit:
    """Fit log(median steps among solved cells) against log(n).

    Requires at least three distinct n values with a solved cell each;
    exhausted runs are censored observations and enter only through the
    solved fraction reported alongside.
    """
    summary = _per_n_summary(results)
    points = [(n, med) for n, _frac, med in summary if med is not None and med > 0]
    if len(points) < 3:
        raise ValueError(
            f"need >= 3 distinct n values with solved cells, have {len(points)}"
        )
    xs = np.log([p[0] for p in points])
    ys = np.log([p[1] for p in points])
    slope, intercept = np.polyfit(xs, ys, 1)
    return ScalingFit(float(slope), float(intercept), tuple(summary))


def scaling_report(results: list[CellResult]) -> str:
    """Human-readable scaling summary; degrades gracefully when too few cells
    solved for a fit."""
    lines = ["n  solved_fraction  median_steps_solved"]
    for n, frac, med in _per_n_summary(results):
        med_s = f"{med:.0f}" if med is not None else "-"
        lines.append(f"{n}  {frac:.3f}  {med_s}")
    try:
        fit = fit_scaling(results)
        lines.append(
            f"log-log fit: slope {fit.slope:.4f}, intercept {fit.intercept:.4f}"
        )
    except ValueError as exc:
        lines.append(f"log-log fit: unavailable ({exc})")
    return "\n".join(lines)
