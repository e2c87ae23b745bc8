"""Markov-chain analysis of the per-variable reflecting random walk.

The walk on levels {0, ..., M} moves ±1 with probability 1/2 in the interior
and deterministically off the two barriers.  This module builds its
transition matrix, solves for the stationary distribution, computes the
period and cyclic decomposition, checks the periodic-chain convergence
limits, evaluates the closed-form powers known for M = 4, and estimates
barrier-free first-passage probabilities by Monte Carlo against the normal
limit.

Transition matrices are plain dense row-stochastic ndarrays; state i stands
for valuation i/M.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from ._kernels import U64, first_passage_kernel

ROW_SUM_TOL = 1e-12


class MarkovVerificationError(AssertionError):
    """A numerically checked chain property failed to hold."""


@dataclass(frozen=True)
class CyclicDecomposition:
    """Period d and the classes S_0..S_{d-1} (as state-index tuples) cycled by
    every positive transition."""

    d: int
    classes: tuple[tuple[int, ...], ...]


def reflecting_walk_matrix(M: int) -> np.ndarray:
    """Transition matrix of the reflecting walk: zero diagonal, 1/2 on the
    interior off-diagonals, probability-1 moves at the two barriers."""
    if M < 1:
        raise ValueError("grid resolution M must be >= 1")
    A = np.zeros((M + 1, M + 1))
    A[0, 1] = 1.0
    A[M, M - 1] = 1.0
    for i in range(1, M):
        A[i, i - 1] = 0.5
        A[i, i + 1] = 0.5
    return A


def _check_square_stochastic(A: np.ndarray) -> int:
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"transition matrix must be square, got {A.shape}")
    if (A < 0).any():
        raise ValueError("transition matrix has negative entries")
    if np.abs(A.sum(axis=1) - 1.0).max() > ROW_SUM_TOL:
        raise ValueError("transition matrix rows must sum to 1")
    return A.shape[0]


def _bfs_depths(adj: list[list[int]], start: int) -> list[int]:
    depths = [-1] * len(adj)
    depths[start] = 0
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if depths[v] < 0:
                depths[v] = depths[u] + 1
                queue.append(v)
    return depths


def _adjacency(A: np.ndarray) -> tuple[list[list[int]], list[list[int]]]:
    n = A.shape[0]
    fwd: list[list[int]] = [[] for _ in range(n)]
    rev: list[list[int]] = [[] for _ in range(n)]
    for u in range(n):
        for v in np.flatnonzero(A[u] > 0.0):
            fwd[u].append(int(v))
            rev[int(v)].append(u)
    return fwd, rev


def stationary_distribution(A: np.ndarray) -> np.ndarray:
    """Solve pi @ A = pi with sum(pi) = 1 by a direct linear solve.

    A direct solve is used on purpose: the walks here are periodic, so plain
    power iteration would oscillate instead of converging.
    """
    n = _check_square_stochastic(A)
    fwd, rev = _adjacency(A)
    if min(_bfs_depths(fwd, 0)) < 0 or min(_bfs_depths(rev, 0)) < 0:
        raise ValueError("chain is not irreducible; stationary solve undefined")
    B = A.T - np.eye(n)
    B[-1, :] = 1.0
    rhs = np.zeros(n)
    rhs[-1] = 1.0
    try:
        pi = np.linalg.solve(B, rhs)
    except np.linalg.LinAlgError as exc:
        raise ValueError(f"stationary solve failed: {exc}") from exc
    return pi


def stationary_closed_form(M: int) -> np.ndarray:
    """Known stationary distribution of the reflecting walk: 1/(2M) at the
    barriers, 1/M at interior states."""
    if M < 1:
        raise ValueError("grid resolution M must be >= 1")
    pi = np.full(M + 1, 1.0 / M)
    pi[0] = pi[M] = 1.0 / (2.0 * M)
    return pi


def period_and_classes(A: np.ndarray) -> CyclicDecomposition:
    """Period (gcd of return-path lengths from state 0) and the cyclic classes.

    Computed from a breadth-first search: every positive transition u -> v
    contributes depth(u) + 1 - depth(v) to the gcd, and states are classed by
    depth mod period.
    """
    n = _check_square_stochastic(A)
    fwd, rev = _adjacency(A)
    depths = _bfs_depths(fwd, 0)
    if min(depths) < 0 or min(_bfs_depths(rev, 0)) < 0:
        raise ValueError("chain is not irreducible; period undefined")
    d = 0
    for u in range(n):
        for v in fwd[u]:
            d = math.gcd(d, depths[u] + 1 - depths[v])
    d = abs(d) if d else 1
    classes = tuple(
        tuple(s for s in range(n) if depths[s] % d == r) for r in range(d)
    )
    return CyclicDecomposition(d, classes)


def matrix_power(A: np.ndarray, k: int) -> np.ndarray:
    """A**k by repeated squaring; rows stay stochastic to rounding error."""
    _check_square_stochastic(A)
    if k < 0:
        raise ValueError("exponent must be >= 0")
    return np.linalg.matrix_power(np.asarray(A, dtype=float), k)


def expected_limit_row(A: np.ndarray, from_state: int, parity: str) -> np.ndarray:
    """The convergence-theorem prediction for lim p_k(from_state, ·) along
    steps of the given parity: d·pi on the reachable cyclic class, 0 off it."""
    pi = stationary_distribution(A)
    decomp = period_and_classes(A)
    offset = 0 if parity == "even" else 1
    start_class = next(
        r for r, cls in enumerate(decomp.classes) if from_state in cls
    )
    target = decomp.classes[(start_class + offset) % decomp.d]
    row = np.zeros_like(pi)
    for s in target:
        row[s] = decomp.d * pi[s]
    return row


def convergence_limits(
    A: np.ndarray,
    from_state: int,
    parity: str,
    m_large: int = 10_000,
    tol: float = 1e-8,
) -> np.ndarray:
    """Row of A**m_large from ``from_state``, verified against d·pi.

    ``m_large`` must have the requested parity.  Raises
    :class:`MarkovVerificationError` if the row deviates from the periodic
    convergence limit by more than ``tol`` anywhere.
    """
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    if m_large % 2 != (0 if parity == "even" else 1):
        raise ValueError(f"exponent {m_large} does not have {parity} parity")
    row = matrix_power(A, m_large)[from_state]
    expected = expected_limit_row(A, from_state, parity)
    err = np.abs(row - expected).max()
    if err > tol:
        raise MarkovVerificationError(
            f"row of A^{m_large} from state {from_state} deviates from the "
            f"periodic limit by {err:.3e} (tol {tol:.1e})"
        )
    return row


def closed_form_power_m4(exponent: int) -> np.ndarray:
    """Closed-form power of the M = 4 reflecting-walk matrix.

    Odd exponents 2k-1 and even exponents 2k have explicit 5x5 forms with
    entries built from (2**(k-1) ± 1) over 2**k and 2**(k+1); they are exact
    in double precision for the k range used here.
    """
    if exponent < 1:
        raise ValueError("exponent must be >= 1")
    if exponent % 2:
        k = (exponent + 1) // 2
        hi = (2.0 ** (k - 1) + 1) / 2.0**k
        lo = (2.0 ** (k - 1) - 1) / 2.0**k
        hi2 = (2.0 ** (k - 1) + 1) / 2.0 ** (k + 1)
        lo2 = (2.0 ** (k - 1) - 1) / 2.0 ** (k + 1)
        return np.array(
            [
                [0.0, hi, 0.0, lo, 0.0],
                [hi2, 0.0, 0.5, 0.0, lo2],
                [0.0, 0.5, 0.0, 0.5, 0.0],
                [lo2, 0.0, 0.5, 0.0, hi2],
                [0.0, lo, 0.0, hi, 0.0],
            ]
        )
    k = exponent // 2
    out_hi = (2.0 ** (k - 1) + 1) / 2.0 ** (k + 1)
    out_lo = (2.0 ** (k - 1) - 1) / 2.0 ** (k + 1)
    mid_hi = (2.0**k + 1) / 2.0 ** (k + 1)
    mid_lo = (2.0**k - 1) / 2.0 ** (k + 1)
    return np.array(
        [
            [out_hi, 0.0, 0.5, 0.0, out_lo],
            [0.0, mid_hi, 0.0, mid_lo, 0.0],
            [0.25, 0.0, 0.5, 0.0, 0.25],
            [0.0, mid_lo, 0.0, mid_hi, 0.0],
            [out_lo, 0.0, 0.5, 0.0, out_hi],
        ]
    )


def normal_first_passage_limit(t: float) -> float:
    """Limit probability that a symmetric unit walk first passes level r
    within t·r² steps, as r grows: 2(1 − Φ(1/√t)) = erfc(1/√(2t)).

    Φ is evaluated through the C library's erfc, accurate to a few ULPs,
    far inside the 1e-7 budget documented for this value.
    """
    if t <= 0:
        raise ValueError("time ratio t must be > 0")
    return math.erfc(1.0 / math.sqrt(2.0 * t))


def first_passage_estimate(r: int, t: float, trials: int, seed: int) -> float:
    """Monte Carlo estimate of the probability that a symmetric ±1 walk first
    reaches +r within floor(t·r²) steps.  Deterministic per seed."""
    if r < 1:
        raise ValueError("barrier distance r must be >= 1")
    if trials < 1:
        raise ValueError("need at least one trial")
    if t <= 0:
        raise ValueError("time ratio t must be > 0")
    n_steps = int(t * r * r)
    hits, _ = first_passage_kernel(r, n_steps, trials, U64(seed))
    return hits / trials


# ---------------------------------------------------------------------------
# Named checks (shared by the CLI report command and the acceptance tests)


@dataclass(frozen=True)
class CheckReport:
    name: str
    ok: bool
    lines: tuple[str, ...]


def check_stationary(M: int, tol: float = 1e-10) -> CheckReport:
    """Stationary solve matches the closed form and satisfies pi @ A = pi."""
    A = reflecting_walk_matrix(M)
    pi = stationary_distribution(A)
    err_closed = np.abs(pi - stationary_closed_form(M)).max()
    err_fixed = np.abs(pi @ A - pi).max()
    ok = bool(err_closed <= tol and err_fixed <= tol)
    lines = (
        f"M={M} stationary: {np.array2string(pi, precision=6)}",
        f"  max deviation from closed form (barriers 1/{2*M}, interior 1/{M}): {err_closed:.3e}",
        f"  max |pi@A - pi|: {err_fixed:.3e}  (tol {tol:.1e})",
    )
    return CheckReport("stationary", ok, lines)


def check_period(M: int) -> CheckReport:
    """Period is 2 and the classes are the even/odd level sets."""
    A = reflecting_walk_matrix(M)
    decomp = period_and_classes(A)
    want_even = tuple(s for s in range(M + 1) if s % 2 == 0)
    want_odd = tuple(s for s in range(M + 1) if s % 2 == 1)
    ok = decomp.d == 2 and decomp.classes == (want_even, want_odd)
    lines = (
        f"M={M} period d={decomp.d}",
        f"  S0={decomp.classes[0]}",
        f"  S1={decomp.classes[1] if decomp.d > 1 else ()}",
    )
    return CheckReport("period", ok, lines)


def check_limits(
    M: int, from_state: int = 0, m_large: int = 10_000, tol: float = 1e-8
) -> CheckReport:
    """Rows of a large matched-parity power equal d·pi on the reachable class."""
    A = reflecting_walk_matrix(M)
    lines = []
    ok = True
    for parity, exponent in (("even", m_large), ("odd", m_large + 1)):
        try:
            row = convergence_limits(A, from_state, parity, exponent, tol)
            lines.append(
                f"M={M} A^{exponent} row from {from_state} ({parity}): "
                f"{np.array2string(row, precision=6)}"
            )
        except MarkovVerificationError as exc:
            ok = False
            lines.append(f"M={M} {parity}: FAILED: {exc}")
    return CheckReport("limits", ok, tuple(lines))


def check_closed_form(k_max: int = 20, tol: float = 1e-12) -> CheckReport:
    """Closed-form M=4 powers match numeric matrix powers entrywise."""
    A = reflecting_walk_matrix(4)
    worst = 0.0
    for k in range(1, k_max + 1):
        for exponent in (2 * k - 1, 2 * k):
            err = np.abs(closed_form_power_m4(exponent) - matrix_power(A, exponent)).max()
            worst = max(worst, err)
    ok = worst <= tol
    lines = (
        f"M=4 closed-form powers vs numeric, k=1..{k_max} "
        f"(exponents 1..{2*k_max}): max entry error {worst:.3e} (tol {tol:.1e})",
    )
    return CheckReport("closed-form", ok, lines)


def check_first_passage(
    r: int = 100,
    ts: tuple[float, ...] = (0.5, 1.0, 2.0, 4.0),
    trials: int = 100_000,
    seed: int = 0,
    n_se: float = 3.0,
) -> CheckReport:
    """Monte Carlo first-passage estimates sit within n_se standard errors of
    the normal limit."""
    lines = []
    ok = True
    for i, t in enumerate(ts):
        est = first_passage_estimate(r, t, trials, seed + i)
        limit = normal_first_passage_limit(t)
        se = math.sqrt(max(est * (1.0 - est), 1e-12) / trials)
        dev = abs(est - limit)
        good = dev <= n_se * se
        ok = ok and good
        lines.append(
            f"r={r} t={t}: estimate {est:.5f} vs limit {limit:.5f} "
            f"(|diff| {dev:.5f}, {n_se:.0f}*SE {n_se * se:.5f}) "
            f"{'ok' if good else 'FAILED'}"
        )
    return CheckReport("first-passage", ok, tuple(lines))
