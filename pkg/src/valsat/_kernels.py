"""Compiled inner loops (numba).

The kernels consume the same SplitMix64 stream as :mod:`valsat.rng`, drawing
in a documented order, so a run is reproducible bit for bit from its seed no
matter which path executes it.  All uint64 arithmetic is kept explicitly
unsigned; mixing signed ints into uint64 expressions would silently promote
to float64 under numba's rules.
"""

from __future__ import annotations

import numpy as np
from numba import njit

U64 = np.uint64
I64 = np.int64

_GOLDEN = U64(0x9E3779B97F4A7C15)
_MIX1 = U64(0xBF58476D1CE4E5B9)
_MIX2 = U64(0x94D049BB133111EB)
_ZERO = U64(0)
_ONE = U64(1)


@njit(cache=True, inline="always")
def _sm64(state):
    state = state + _GOLDEN
    z = state
    z = (z ^ (z >> U64(30))) * _MIX1
    z = (z ^ (z >> U64(27))) * _MIX2
    return state, z ^ (z >> U64(31))


@njit(cache=True, inline="always")
def _sm64_bounded(state, n):
    # exact uniform in [0, n): reject draws below 2**64 mod n
    r = (_ZERO - n) % n
    while True:
        state, z = _sm64(state)
        if z >= r:
            return state, z % n


@njit(cache=True, inline="always")
def _sm64_coin(state):
    state, z = _sm64(state)
    return state, z >> U64(63)


@njit(cache=True)
def sm64_stream(seed, count):
    """Raw outputs, for cross-checking against the pure-Python generator."""
    out = np.empty(count, dtype=np.uint64)
    state = U64(seed)
    for i in range(count):
        state, z = _sm64(state)
        out[i] = z
    return out


@njit(cache=True)
def sm64_bounded_stream(seed, n, count):
    out = np.empty(count, dtype=np.uint64)
    state = U64(seed)
    bound = U64(n)
    for i in range(count):
        state, z = _sm64_bounded(state, bound)
        out[i] = z
    return out


@njit(cache=True, inline="always")
def _clause_numerator(c, lit_var, lit_neg, lens, levels, M):
    # clause valuation as an integer over the common denominator M**3
    prod = I64(1)
    length = lens[c]
    for t in range(length):
        k = levels[lit_var[c, t]]
        a = M - k if lit_neg[c, t] else k
        prod *= M - a
    full = I64(1)
    for _ in range(length):
        full *= M
    scale = I64(1)
    for _ in range(3 - length):
        scale *= M
    return (full - prod) * scale


@njit(cache=True)
def valuation_walk_kernel(
    lit_var,
    lit_neg,
    lens,
    occ_start,
    occ_clause,
    M,
    levels,
    budget,
    init_mode,
    planted,
    trace,
    debug,
    accept_rounded,
    state,
):
    """One pass of the grid random walk.

    Per step: find the clauses of minimal valuation (exact integer compare),
    pick one uniformly, pick one of its literals uniformly, then move that
    variable one level: a fair coin in the interior, a forced step at the
    barriers.  Draw order per step: tie index, literal index, direction coin
    (interior only); initialization draws come first.

    init_mode: 0 = every level at M/2, 1 = uniform over even levels,
    2 = uniform over {0, M}.  ``planted`` (boolean levels, or empty) turns on
    reflection labeling.  ``trace`` with budget rows records
    (clause, variable, signed level change) per step.  ``accept_rounded``
    additionally tests the barrier-rounded assignment each step (an opt-in
    extension beyond the plain walk).

    Returns (status, steps, pos_refl, neg_refl, interior, state, err) with
    status 1 = satisfying assignment reached, 2 = rounded assignment
    satisfies (only when accept_rounded), 0 = budget exhausted.
    """
    n = levels.shape[0]
    m = lens.shape[0]
    full = M * M * M
    has_planted = planted.shape[0] == n
    do_trace = trace.shape[0] >= budget

    if init_mode == 0:
        for i in range(n):
            levels[i] = M // 2
    elif init_mode == 1:
        n_even = U64(M // 2 + 1)
        for i in range(n):
            state, v = _sm64_bounded(state, n_even)
            levels[i] = I64(2) * I64(v)
    else:
        for i in range(n):
            state, b = _sm64_coin(state)
            levels[i] = M if b else I64(0)

    num = np.empty(m, dtype=np.int64)
    for c in range(m):
        num[c] = _clause_numerator(c, lit_var, lit_neg, lens, levels, M)
    nbool = 0
    for i in range(n):
        if levels[i] == 0 or levels[i] == M:
            nbool += 1

    pos_refl = I64(0)
    neg_refl = I64(0)
    interior = I64(0)

    for step in range(budget):
        mn = full + 1
        ties = I64(0)
        first_min = I64(0)
        for c in range(m):
            v = num[c]
            if v < mn:
                mn = v
                ties = I64(1)
                first_min = c
            elif v == mn:
                ties += 1

        if nbool == n and mn == full:
            return 1, I64(step), pos_refl, neg_refl, interior, state, 0

        if accept_rounded:
            rounded_sat = True
            for c in range(m):
                clause_sat = False
                for t in range(lens[c]):
                    k = levels[lit_var[c, t]]
                    val = 2 * k > M
                    if lit_neg[c, t]:
                        val = not val
                    if val:
                        clause_sat = True
                        break
                if not clause_sat:
                    rounded_sat = False
                    break
            if rounded_sat:
                return 2, I64(step), pos_refl, neg_refl, interior, state, 0

        state, j_u = _sm64_bounded(state, U64(ties))
        if ties == 1:
            chosen = first_min  # the draw above still consumed one value
        else:
            j = I64(j_u)
            chosen = I64(-1)
            for c in range(m):
                if num[c] == mn:
                    if j == 0:
                        chosen = c
                        break
                    j -= 1

        state, li = _sm64_bounded(state, U64(lens[chosen]))
        var = lit_var[chosen, I64(li)]
        lvl = levels[var]

        if lvl == 0:
            new = I64(1)
            if has_planted:
                if planted[var] == M:
                    pos_refl += 1
                else:
                    neg_refl += 1
        elif lvl == M:
            new = M - 1
            if has_planted:
                if planted[var] == 0:
                    pos_refl += 1
                else:
                    neg_refl += 1
        else:
            state, b = _sm64_coin(state)
            new = lvl + 1 if b else lvl - 1
            if has_planted:
                interior += 1

        if do_trace:
            trace[step, 0] = chosen
            trace[step, 1] = var
            trace[step, 2] = new - lvl

        if debug:
            if new < 0 or new > M:
                return 0, I64(step), pos_refl, neg_refl, interior, state, 1
            if has_planted:
                delta = abs(new - planted[var]) - abs(lvl - planted[var])
                if delta != 1 and delta != -1:
                    return 0, I64(step), pos_refl, neg_refl, interior, state, 2

        old_boundary = lvl == 0 or lvl == M
        new_boundary = new == 0 or new == M
        if new_boundary and not old_boundary:
            nbool += 1
        elif old_boundary and not new_boundary:
            nbool -= 1
        levels[var] = new

        for k in range(occ_start[var], occ_start[var + 1]):
            c = occ_clause[k]
            num[c] = _clause_numerator(c, lit_var, lit_neg, lens, levels, M)

    return 0, budget, pos_refl, neg_refl, interior, state, 0


@njit(cache=True)
def first_passage_kernel(r, n_steps, trials, state):
    """Count symmetric ±1 walks from 0 whose first visit to +r happens within
    n_steps steps.  Each step consumes one bit of a buffered 64-bit draw."""
    hits = I64(0)
    buf = _ZERO
    nbits = 0
    for _ in range(trials):
        pos = I64(0)
        for _step in range(n_steps):
            if nbits == 0:
                state, buf = _sm64(state)
                nbits = 64
            bit = buf & _ONE
            buf = buf >> _ONE
            nbits -= 1
            if bit == _ONE:
                pos += 1
                if pos == r:
                    hits += 1
                    break
            else:
                pos -= 1
    return hits, state
