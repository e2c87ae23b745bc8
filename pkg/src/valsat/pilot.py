"""Pre-registered pilot thresholds for the solver-effectiveness acceptance run.

Protocol (run once, before the acceptance suite was ever executed, and
frozen here):

* 200 planted instances, n=20, m=80, instance seeds 10000..10199 — disjoint
  from the acceptance run's seeds 0..99.
* classic walk: ``SolverConfig(seed=<instance seed>, restarts=100)`` with the
  default 3n per-try budget.  Pilot result: 200/200 solved.
* valuation walk: ``SolverConfig(M=20, seed=<instance seed>,
  init_mode="half")`` with the default 4·n²·M² budget and a single try.
  Pilot result: 0/200 solved — the walk's acceptance event (every variable
  simultaneously at a barrier while the formula is satisfied) was never
  observed at this size; see the scaling study in the benchmark docs.
* threshold rule: Wilson 99.95% lower bound on the pilot fraction, minus
  three binomial standard errors for a 100-run acceptance sample at that
  bound, floored to a multiple of 0.05 and clamped at 0.

The acceptance criterion asserts each solver's 100-run solved fraction is at
least its threshold below.  The valuation threshold of 0.0 is vacuous by
necessity: a pilot that never succeeds cannot justify any positive bar, and
inventing one would be dishonest.  The acceptance test still runs and
reports the observed fraction.
"""

PILOT_SEED_BASE = 10_000
PILOT_RUNS = 200

THRESHOLDS = {
    "classic": 0.85,
    "valuation": 0.00,
}

PILOT_SOLVED = {
    "classic": 200,
    "valuation": 0,
}
