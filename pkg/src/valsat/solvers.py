"""The four stochastic local search solvers behind one result type.

* ``schoening_classic`` — boolean random walk: flip a random literal of a
  random unsatisfied clause, 3n flips per try.
* ``valuation_walk`` — the same walk lifted to the grid {0, 1/M, ..., 1}:
  move a variable of a minimal-valuation clause one level, reflecting at the
  barriers, 4·n²·M² steps per try.  M = 1 reproduces the classic walk.
* ``hill_climb`` — coordinate ascent on clustered formulas: each variable's
  clause-valuation product is a cubic in that variable, maximized exactly on
  [0, 1]; random reinitialization on stalls.
* ``clustered_sparrow`` — boolean make−break flips on clustered formulas
  with the three-class (negative/null/positive) probability function, 2m²
  flips per try.

All solvers are Monte Carlo and one-sided: a returned assignment is
re-verified and always correct, while ``exhausted`` means unknown, never
unsatisfiable.  Runs are deterministic given (formula, config).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import _kernels
from .cnf import Assignment, CnfFormula, evaluate
from .rng import SplitMix64
from .transform import (
    ClusteredFormula,
    cluster_expression,
    lift_assignment,
    project_assignment,
)
from .valuation import MAX_GRID_RESOLUTION

INIT_MODES = ("half", "s0", "boolean")
ALGORITHMS = ("classic", "valuation", "hillclimb", "sparrow")

HILL_CLIMB_STALL_TOL = 1e-9
TRACE_STEP_LIMIT = 5_000_000


class SoundnessError(RuntimeError):
    """A solver produced an assignment that fails re-verification."""


@dataclass(frozen=True)
class SolverConfig:
    """Knobs shared by all four solvers.

    ``max_steps`` is the per-restart budget; None picks the algorithm's
    default (3n classic, 4·n²·M² valuation walk, 2·m² sparrow, 4·n² hill
    climb, n counting occurrence variables for the clustered algorithms).
    ``init_mode`` applies to the valuation walk: "half" starts every level
    at M/2 (M must be even), "s0" draws levels uniformly from the even
    levels, "boolean" from {0, M}.  ``accept_rounded`` also accepts when the
    barrier-rounded assignment satisfies — an extension beyond the plain
    walk, off by default.
    """

    M: int = 1
    max_steps: Optional[int] = None
    restarts: int = 1
    alpha: float = 0.1
    seed: int = 0
    init_mode: str = "half"
    accept_rounded: bool = False
    collect_trace: bool = False
    debug_checks: bool = False

    def __post_init__(self):
        if self.M < 1:
            raise ValueError("grid resolution M must be >= 1")
        if self.M > MAX_GRID_RESOLUTION:
            raise ValueError(f"M must be <= {MAX_GRID_RESOLUTION}")
        if self.max_steps is not None and self.max_steps < 1:
            raise ValueError("max_steps must be >= 1")
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")
        if not 0.0 < self.alpha < 1.0:
            raise ValueError("alpha must lie strictly between 0 and 1")
        if self.init_mode not in INIT_MODES:
            raise ValueError(f"init_mode must be one of {INIT_MODES}")


@dataclass(frozen=True)
class ReflectionStats:
    """Forced barrier moves classified against a known solution, plus free
    interior steps.  All zero unless the solver was given a planted solution."""

    positive_reflections: int = 0
    negative_reflections: int = 0
    interior_steps: int = 0

    @property
    def total(self) -> int:
        return self.positive_reflections + self.negative_reflections + self.interior_steps


@dataclass
class SolverResult:
    """Outcome of one solver invocation.

    ``assignment`` is a verified satisfying assignment of the input formula
    (for the clustered solvers: of the original formula, after projection),
    or None when every restart exhausted its budget.
    """

    assignment: Optional[Assignment]
    steps_used: int
    restarts_used: int
    budget_per_restart: int
    reflections: ReflectionStats = field(default_factory=ReflectionStats)
    final_hamming: Optional[float] = None
    trace: Optional[np.ndarray] = None

    @property
    def satisfied(self) -> bool:
        return self.assignment is not None


@dataclass(frozen=True)
class FlipClass:
    """Sign classification of a flip's make − break balance."""

    delta: int

    @property
    def label(self) -> str:
        if self.delta > 0:
            return "positive"
        if self.delta < 0:
            return "negative"
        return "null"


def sparrow_flip_probabilities(
    n1: int, n2: int, n3: int, alpha: float
) -> tuple[float, float, float]:
    """Per-flip selection probabilities for (negative, null, positive) flips.

    With all three classes present, negative flips share mass alpha and the
    null and positive classes get (1−alpha)/2 each.  An absent positive (or
    null) class hands its half to the surviving one; with no negative flips
    the null and positive classes split the mass evenly; a lone class takes
    probability 1.  Entries for empty classes are 0.
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError("alpha must lie strictly between 0 and 1")
    if min(n1, n2, n3) < 0:
        raise ValueError("class counts must be nonnegative")
    present = (n1 > 0, n2 > 0, n3 > 0)
    if not any(present):
        raise ValueError("no flips to choose from")
    if present == (True, True, True):
        return alpha / n1, (1 - alpha) / (2 * n2), (1 - alpha) / (2 * n3)
    if present == (True, True, False):
        return alpha / n1, (1 - alpha) / n2, 0.0
    if present == (True, False, True):
        return alpha / n1, 0.0, (1 - alpha) / n3
    if present == (False, True, True):
        return 0.0, 0.5 / n2, 0.5 / n3
    if present == (True, False, False):
        return 1.0 / n1, 0.0, 0.0
    if present == (False, True, False):
        return 0.0, 1.0 / n2, 0.0
    return 0.0, 0.0, 1.0 / n3


def _verified(formula: CnfFormula, values: Assignment, solver: str) -> Assignment:
    ok, unsat = evaluate(formula, values)
    if not ok:
        raise SoundnessError(
            f"{solver} returned an assignment violating clauses {unsat[:5]}"
        )
    return values


def _boolean_hamming(a: Assignment, b: Assignment) -> float:
    return float(sum(x != y for x, y in zip(a, b)))


# ---------------------------------------------------------------------------
# Classic boolean walk


def schoening_classic(
    formula: CnfFormula, cfg: SolverConfig, planted: Optional[Assignment] = None
) -> SolverResult:
    """Boolean random walk: per try, guess uniformly, then up to 3n times flip
    a uniform literal of a uniform unsatisfied clause.

    Every flip happens at a boolean barrier, so with a planted solution each
    step is classified as a positive or negative reflection.
    """
    if formula.num_clauses == 0:
        raise ValueError("solver needs at least one clause")
    n = formula.num_vars
    budget = cfg.max_steps if cfg.max_steps is not None else 3 * n
    rng = SplitMix64(cfg.seed)

    occ: list[list[tuple[int, bool]]] = [[] for _ in range(n)]
    for ci, clause in enumerate(formula.clauses):
        for lit in clause.literals:
            occ[lit.var - 1].append((ci, lit.negated))

    pos_refl = neg_refl = 0
    total_steps = 0
    trace: list[tuple[int, int, int]] = [] if cfg.collect_trace else None

    for restart in range(cfg.restarts):
        values = [rng.coin() for _ in range(n)]
        true_count = [0] * formula.num_clauses
        unsat: list[int] = []
        unsat_pos = [-1] * formula.num_clauses
        for ci, clause in enumerate(formula.clauses):
            true_count[ci] = sum(
                lit.holds(values[lit.var - 1]) for lit in clause.literals
            )
            if true_count[ci] == 0:
                unsat_pos[ci] = len(unsat)
                unsat.append(ci)

        for _step in range(budget):
            if not unsat:
                final = tuple(values)
                return SolverResult(
                    assignment=_verified(formula, final, "schoening_classic"),
                    steps_used=total_steps,
                    restarts_used=restart + 1,
                    budget_per_restart=budget,
                    reflections=ReflectionStats(pos_refl, neg_refl, 0),
                    final_hamming=_boolean_hamming(final, planted) if planted else None,
                    trace=np.array(trace, dtype=np.int32) if trace is not None else None,
                )
            ci = unsat[rng.bounded(len(unsat))]
            lit = formula.clauses[ci].literals[rng.bounded(len(formula.clauses[ci]))]
            v = lit.var - 1
            if planted is not None:
                if values[v] != planted[v]:
                    pos_refl += 1
                else:
                    neg_refl += 1
            values[v] = not values[v]
            if trace is not None:
                trace.append((ci, v, 1 if values[v] else -1))
            for cj, negated in occ[v]:
                if values[v] != negated:  # literal became true
                    true_count[cj] += 1
                    if true_count[cj] == 1:
                        last = unsat.pop()
                        pos = unsat_pos[cj]
                        if last != cj:
                            unsat[pos] = last
                            unsat_pos[last] = pos
                        unsat_pos[cj] = -1
                else:
                    true_count[cj] -= 1
                    if true_count[cj] == 0:
                        unsat_pos[cj] = len(unsat)
                        unsat.append(cj)
            total_steps += 1

    final = tuple(values)
    return SolverResult(
        assignment=None,
        steps_used=total_steps,
        restarts_used=cfg.restarts,
        budget_per_restart=budget,
        reflections=ReflectionStats(pos_refl, neg_refl, 0),
        final_hamming=_boolean_hamming(final, planted) if planted else None,
        trace=np.array(trace, dtype=np.int32) if trace is not None else None,
    )


# ---------------------------------------------------------------------------
# Valuation walk on the grid


def _packed_arrays(formula: CnfFormula):
    """Clause literal arrays plus a CSR map from variable to its clauses."""
    signed, lens = formula.packed()
    lit_var = np.abs(signed) - 1
    lit_var[signed == 0] = 0
    lit_neg = (signed < 0).astype(np.uint8)
    counts = np.zeros(formula.num_vars, dtype=np.int64)
    for clause in formula.clauses:
        for lit in clause.literals:
            counts[lit.var - 1] += 1
    occ_start = np.zeros(formula.num_vars + 1, dtype=np.int64)
    np.cumsum(counts, out=occ_start[1:])
    occ_clause = np.zeros(int(occ_start[-1]), dtype=np.int64)
    fill = occ_start[:-1].copy()
    for ci, clause in enumerate(formula.clauses):
        for lit in clause.literals:
            v = lit.var - 1
            occ_clause[fill[v]] = ci
            fill[v] += 1
    return lit_var, lit_neg, lens, occ_start, occ_clause


def valuation_walk(
    formula: CnfFormula, cfg: SolverConfig, planted: Optional[Assignment] = None
) -> SolverResult:
    """Grid random walk guided by minimal-valuation clauses.

    Starts per ``cfg.init_mode``; each step picks a uniformly random clause of
    exactly minimal valuation (exact integer comparison), a uniform literal of
    it, and moves that variable one level — a fair coin in the interior, a
    forced reflection at levels 0 and M.  It accepts only when the valuation
    is boolean and satisfies the formula.  With M = 1 every state is a
    barrier, every minimal clause is unsatisfied, and every step is a forced
    flip — the classic walk with a longer budget.
    """
    if formula.num_clauses == 0:
        raise ValueError("solver needs at least one clause")
    if any(len(c) > 3 for c in formula.clauses):
        raise ValueError("valuation walk supports clauses of length <= 3")
    if cfg.init_mode == "half" and cfg.M % 2 != 0 and cfg.M != 1:
        raise ValueError("init_mode 'half' needs even M (level M/2 must exist)")
    if cfg.init_mode == "half" and cfg.M == 1:
        raise ValueError("init_mode 'half' is undefined for M=1; use 's0' or 'boolean'")

    n, M = formula.num_vars, cfg.M
    budget = cfg.max_steps if cfg.max_steps is not None else 4 * n * n * M * M
    if cfg.collect_trace and budget > TRACE_STEP_LIMIT:
        raise ValueError(f"tracing capped at {TRACE_STEP_LIMIT} steps per restart")
    if cfg.collect_trace and cfg.restarts != 1:
        raise ValueError("tracing supported only with restarts=1")

    lit_var, lit_neg, lens, occ_start, occ_clause = _packed_arrays(formula)
    levels = np.zeros(n, dtype=np.int64)
    planted_levels = (
        np.array([M if b else 0 for b in planted], dtype=np.int64)
        if planted is not None
        else np.zeros(0, dtype=np.int64)
    )
    trace = (
        np.zeros((budget, 3), dtype=np.int32)
        if cfg.collect_trace
        else np.zeros((0, 3), dtype=np.int32)
    )
    init_code = INIT_MODES.index(cfg.init_mode)
    state = _kernels.U64(cfg.seed)

    pos_refl = neg_refl = interior = 0
    total_steps = 0
    for restart in range(cfg.restarts):
        status, steps, p, ng, it, state, err = _kernels.valuation_walk_kernel(
            lit_var,
            lit_neg,
            lens,
            occ_start,
            occ_clause,
            np.int64(M),
            levels,
            np.int64(budget),
            np.int64(init_code),
            planted_levels,
            trace,
            cfg.debug_checks,
            cfg.accept_rounded,
            state,
        )
        if err:
            raise AssertionError(
                f"walk invariant violated (code {err}) at step {steps}"
            )
        total_steps += int(steps)
        pos_refl += int(p)
        neg_refl += int(ng)
        interior += int(it)
        reflections = ReflectionStats(pos_refl, neg_refl, interior)
        hamming = (
            sum(abs(k - pk) for k, pk in zip(levels, planted_levels)) / M
            if planted is not None
            else None
        )
        if status:
            if status == 1:
                values = tuple(bool(k == M) for k in levels)
            else:  # rounded acceptance
                values = tuple(bool(2 * k > M) for k in levels)
            return SolverResult(
                assignment=_verified(formula, values, "valuation_walk"),
                steps_used=total_steps,
                restarts_used=restart + 1,
                budget_per_restart=budget,
                reflections=reflections,
                final_hamming=hamming,
                trace=trace[: int(steps)].copy() if cfg.collect_trace else None,
            )

    return SolverResult(
        assignment=None,
        steps_used=total_steps,
        restarts_used=cfg.restarts,
        budget_per_restart=budget,
        reflections=ReflectionStats(pos_refl, neg_refl, interior),
        final_hamming=hamming,
        trace=trace[:budget].copy() if cfg.collect_trace else None,
    )


# ---------------------------------------------------------------------------
# Cubic coordinate ascent on clustered formulas


def maximize_cubic_on_unit_interval(
    c0: float, c1: float, c2: float, c3: float
) -> tuple[float, float]:
    """Maximize c0 + c1·x + c2·x² + c3·x³ over [0, 1].

    Candidates are the endpoints and the derivative's real roots inside
    (0, 1); ties go to the smaller x.  Degenerate (quadratic, linear,
    constant) coefficient patterns are handled by the same candidate logic.
    """
    candidates = [0.0, 1.0]
    a, b, c = 3.0 * c3, 2.0 * c2, c1
    if a == 0.0:
        if b != 0.0:
            candidates.append(-c / b)
    else:
        disc = b * b - 4.0 * a * c
        if disc >= 0.0:
            sq = math.sqrt(disc)
            candidates.append((-b - sq) / (2.0 * a))
            candidates.append((-b + sq) / (2.0 * a))
    best_x, best_f = 0.0, -math.inf
    for x in sorted(candidates):
        if not 0.0 <= x <= 1.0:
            continue
        f = c0 + x * (c1 + x * (c2 + x * c3))
        if f > best_f:
            best_x, best_f = x, f
    return best_x, best_f


def _clause_factor(clause, values: np.ndarray, var0: int) -> tuple[float, float]:
    """Clause valuation as an affine function b0 + b1·t of t = v(var0+1)."""
    rest = 1.0
    for lit in clause.literals:
        if lit.var - 1 == var0:
            continue
        v = values[lit.var - 1]
        rest *= 1.0 - (1.0 - v if lit.negated else v)
    for lit in clause.literals:
        if lit.var - 1 == var0:
            if lit.negated:
                return 1.0, -rest
            return 1.0 - rest, rest
    raise ValueError("variable does not occur in clause")


def hill_climb(
    cf: ClusteredFormula, cfg: SolverConfig, planted: Optional[Assignment] = None
) -> SolverResult:
    """Coordinate ascent over real-valued valuations of a clustered formula.

    Sweeping variables cyclically, each variable's product of (at most three)
    clause valuations is a cubic in that variable, maximized exactly on
    [0, 1].  The whole-expression valuation never decreases within a sweep.
    A try stalls when a sweep changes no variable (an exact coordinate-wise
    maximum) or improves the expression valuation by less than a 1e-9
    relative margin while short of 1 — the margin is relative because the
    valuation is a product over all clauses and can sit far below any fixed
    absolute threshold on larger inputs.  The next try restarts from fresh
    uniform valuations.  Acceptance
    requires every clause valuation to hit 1 exactly, after which interior
    variables (all their clauses carried by other literals) are zeroed, the
    boolean assignment is checked on the clustered formula, and the
    projection to the original variables is returned.

    ``planted`` is an original-variables assignment used only to report the
    final real-valued distance in occurrence space.
    """
    formula = cf.formula
    if formula.num_clauses == 0:
        raise ValueError("solver needs at least one clause")
    n = formula.num_vars
    var_clauses: list[list] = [[] for _ in range(n)]
    for clause in formula.clauses:
        for lit in clause.literals:
            var_clauses[lit.var - 1].append(clause)
    if any(len(cl) > 3 for cl in var_clauses):
        raise ValueError("input is not clustered: some variable exceeds 3 clauses")

    budget = cfg.max_steps if cfg.max_steps is not None else 4 * n * n
    rng = SplitMix64(cfg.seed)
    lifted_planted = (
        np.array(lift_assignment(cf, planted), dtype=float)
        if planted is not None
        else None
    )

    def total_valuation(values) -> float:
        total = 1.0
        for clause in formula.clauses:
            prod = 1.0
            for lit in clause.literals:
                v = values[lit.var - 1]
                prod *= v if lit.negated else 1.0 - v
            total *= 1.0 - prod
        return total

    def clause_values(values) -> np.ndarray:
        out = np.empty(formula.num_clauses)
        for i, clause in enumerate(formula.clauses):
            prod = 1.0
            for lit in clause.literals:
                v = values[lit.var - 1]
                prod *= v if lit.negated else 1.0 - v
            out[i] = 1.0 - prod
        return out

    total_steps = 0
    values = None
    for restart in range(cfg.restarts):
        values = np.array([rng.unit() for _ in range(n)])
        prev_total = total_valuation(values)
        stalled = False
        steps_this_restart = 0
        while not stalled and steps_this_restart < budget:
            changed = False
            for var0 in range(n):
                if steps_this_restart >= budget:
                    break
                if cfg.debug_checks:
                    before = total_valuation(values)
                coeffs = [1.0, 0.0, 0.0, 0.0]
                for clause in var_clauses[var0]:
                    b0, b1 = _clause_factor(clause, values, var0)
                    new = [0.0, 0.0, 0.0, 0.0]
                    for i, ci in enumerate(coeffs):
                        if ci == 0.0:
                            continue
                        new[i] += ci * b0
                        if i + 1 < 4:
                            new[i + 1] += ci * b1
                    coeffs = new
                x_star, _ = maximize_cubic_on_unit_interval(*coeffs)
                if x_star != values[var0]:
                    changed = True
                values[var0] = x_star
                total_steps += 1
                steps_this_restart += 1
                if cfg.debug_checks:
                    after = total_valuation(values)
                    if after < before - 1e-12:
                        raise AssertionError(
                            f"expression valuation decreased: {before} -> {after}"
                        )
            cv = clause_values(values)
            if (cv == 1.0).all():
                for var0 in range(n):
                    if values[var0] not in (0.0, 1.0):
                        values[var0] = 0.0
                boolean = tuple(bool(v == 1.0) for v in values)
                ok, _ = evaluate(formula, boolean)
                if ok:
                    projected = project_assignment(cf, boolean)
                    hamming = (
                        float(np.abs(values - lifted_planted).sum())
                        if lifted_planted is not None
                        else None
                    )
                    return SolverResult(
                        assignment=_verified(cf.source, projected, "hill_climb"),
                        steps_used=total_steps,
                        restarts_used=restart + 1,
                        budget_per_restart=budget,
                        final_hamming=hamming,
                    )
            new_total = total_valuation(values)
            if new_total < 1.0:
                margin = HILL_CLIMB_STALL_TOL * max(prev_total, 5e-324)
                if not changed or new_total - prev_total < margin:
                    stalled = True
            prev_total = new_total

    hamming = (
        float(np.abs(values - lifted_planted).sum())
        if lifted_planted is not None and values is not None
        else None
    )
    return SolverResult(
        assignment=None,
        steps_used=total_steps,
        restarts_used=cfg.restarts,
        budget_per_restart=budget,
        final_hamming=hamming,
    )


# ---------------------------------------------------------------------------
# Clustered Sparrow


def clustered_sparrow(
    cf: ClusteredFormula, cfg: SolverConfig, planted: Optional[Assignment] = None
) -> SolverResult:
    """Make−break flips on a clustered formula with three-class sampling.

    Per step, every variable of an unsatisfied clause is a candidate flip,
    classified by Δ = make − break over the clauses containing it (its whole
    cluster).  One flip is drawn by the class probability function and
    performed; 2m² flips per try.  ``planted`` (original variables) is lifted
    and used only for the final-distance report.
    """
    formula = cf.formula
    if formula.num_clauses == 0:
        raise ValueError("solver needs at least one clause")
    n, m = formula.num_vars, formula.num_clauses
    budget = cfg.max_steps if cfg.max_steps is not None else 2 * m * m
    rng = SplitMix64(cfg.seed)
    lifted_planted = lift_assignment(cf, planted) if planted is not None else None

    occ: list[list[tuple[int, bool]]] = [[] for _ in range(n)]
    for ci, clause in enumerate(formula.clauses):
        for lit in clause.literals:
            occ[lit.var - 1].append((ci, lit.negated))

    total_steps = 0
    values: list[bool] = []
    for restart in range(cfg.restarts):
        values = [rng.coin() for _ in range(n)]
        true_count = [0] * m
        unsat: set[int] = set()
        for ci, clause in enumerate(formula.clauses):
            true_count[ci] = sum(
                lit.holds(values[lit.var - 1]) for lit in clause.literals
            )
            if true_count[ci] == 0:
                unsat.add(ci)

        for _step in range(budget):
            if not unsat:
                boolean = tuple(values)
                ok, _ = evaluate(formula, boolean)
                if not ok:
                    raise SoundnessError("sparrow bookkeeping out of sync")
                projected = project_assignment(cf, boolean)
                return SolverResult(
                    assignment=_verified(cf.source, projected, "clustered_sparrow"),
                    steps_used=total_steps,
                    restarts_used=restart + 1,
                    budget_per_restart=budget,
                    final_hamming=(
                        _boolean_hamming(boolean, lifted_planted)
                        if lifted_planted is not None
                        else None
                    ),
                )

            candidates = sorted({lit.var - 1 for ci in unsat for lit in formula.clauses[ci].literals})
            assert candidates, "unsatisfied formula must offer candidate flips"
            classes: dict[str, list[int]] = {"negative": [], "null": [], "positive": []}
            for v in candidates:
                make = brk = 0
                for ci, negated in occ[v]:
                    lit_true = values[v] != negated
                    if true_count[ci] == 0:
                        make += 1  # flipping v makes its false literal true
                    elif true_count[ci] == 1 and lit_true:
                        brk += 1
                classes[FlipClass(make - brk).label].append(v)

            if cfg.debug_checks and any(
                len(formula.clauses[ci]) == 3 for ci in unsat
            ):
                if not classes["null"] and not classes["positive"]:
                    raise AssertionError(
                        "unsatisfied 3-literal clause without a null/positive flip"
                    )

            p_neg, p_null, p_pos = sparrow_flip_probabilities(
                len(classes["negative"]),
                len(classes["null"]),
                len(classes["positive"]),
                cfg.alpha,
            )
            mass_neg = p_neg * len(classes["negative"])
            mass_null = p_null * len(classes["null"])
            u = rng.unit()
            if u < mass_neg:
                pool = classes["negative"]
            elif u < mass_neg + mass_null:
                pool = classes["null"]
            else:
                pool = classes["positive"] or classes["null"] or classes["negative"]
            v = pool[rng.bounded(len(pool))]

            values[v] = not values[v]
            for ci, negated in occ[v]:
                if values[v] != negated:
                    true_count[ci] += 1
                    if true_count[ci] == 1:
                        unsat.discard(ci)
                else:
                    true_count[ci] -= 1
                    if true_count[ci] == 0:
                        unsat.add(ci)
            total_steps += 1

    return SolverResult(
        assignment=None,
        steps_used=total_steps,
        restarts_used=cfg.restarts,
        budget_per_restart=budget,
        final_hamming=(
            _boolean_hamming(tuple(values), lifted_planted)
            if lifted_planted is not None
            else None
        ),
    )


# ---------------------------------------------------------------------------
# Dispatch


def run_solver(
    algo: str,
    formula: CnfFormula,
    cfg: SolverConfig,
    planted: Optional[Assignment] = None,
) -> SolverResult:
    """Run a solver by name on a plain formula.

    The clustered algorithms transform the input first; their results are
    already projected back to the original variables.
    """
    if algo == "classic":
        return schoening_classic(formula, cfg, planted)
    if algo == "valuation":
        return valuation_walk(formula, cfg, planted)
    if algo == "hillclimb":
        return hill_climb(cluster_expression(formula), cfg, planted)
    if algo == "sparrow":
        return clustered_sparrow(cluster_expression(formula), cfg, planted)
    raise ValueError(f"unknown algorithm {algo!r}; expected one of {ALGORITHMS}")
