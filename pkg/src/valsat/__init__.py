"""Stochastic local search for 3SAT on truth-valuation grids.

Instead of flipping boolean values, the grid solvers move per-variable truth
valuations k/M one step at a time, reflecting at 0 and 1; companion modules
verify the Markov-chain structure of those walks and benchmark solver
scaling.  See README.md for a tour.
"""

from .cnf import (
    Assignment,
    Clause,
    CnfFormula,
    DimacsParseError,
    Literal,
    assignment_to_vline,
    brute_force_sat,
    evaluate,
    generate_planted_3sat,
    generate_random_3sat,
    parse_dimacs,
    serialize_dimacs,
)
from .valuation import (
    ValuationVector,
    as_boolean_assignment,
    clause_valuation,
    clause_valuation_numerator,
    expression_valuation,
    hamming_distance,
    hamming_steps,
    literal_valuation,
)
from .transform import (
    ClusteredFormula,
    ClusterInfo,
    cluster_expression,
    lift_assignment,
    occurrence_map_lines,
    project_assignment,
)
from .solvers import (
    ALGORITHMS,
    FlipClass,
    ReflectionStats,
    SolverConfig,
    SolverResult,
    SoundnessError,
    clustered_sparrow,
    hill_climb,
    maximize_cubic_on_unit_interval,
    run_solver,
    schoening_classic,
    sparrow_flip_probabilities,
    valuation_walk,
)
from .markov import (
    CheckReport,
    CyclicDecomposition,
    MarkovVerificationError,
    check_closed_form,
    check_first_passage,
    check_limits,
    check_period,
    check_stationary,
    closed_form_power_m4,
    convergence_limits,
    expected_limit_row,
    first_passage_estimate,
    matrix_power,
    normal_first_passage_limit,
    period_and_classes,
    reflecting_walk_matrix,
    stationary_closed_form,
    stationary_distribution,
)
from .bench import (
    CSV_HEADER,
    CellResult,
    ExperimentSpec,
    ScalingFit,
    fit_scaling,
    results_to_csv,
    run_experiment,
    scaling_report,
)
from .rng import SplitMix64, derive_seed

__version__ = "0.1.0"
