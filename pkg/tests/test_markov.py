"""Chain analysis: matrices, stationary solves, periods, limits, first passage."""

import math

import numpy as np
import pytest
import scipy.special

from valsat.markov import (
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

M1 = np.array([[0.0, 1.0], [1.0, 0.0]])
M2 = np.array([[0.0, 1.0, 0.0], [0.5, 0.0, 0.5], [0.0, 1.0, 0.0]])
M4 = np.array(
    [
        [0.0, 1.0, 0.0, 0.0, 0.0],
        [0.5, 0.0, 0.5, 0.0, 0.0],
        [0.0, 0.5, 0.0, 0.5, 0.0],
        [0.0, 0.0, 0.5, 0.0, 0.5],
        [0.0, 0.0, 0.0, 1.0, 0.0],
    ]
)


class TestMatrix:
    def test_hand_matrices(self):
        assert np.array_equal(reflecting_walk_matrix(1), M1)
        assert np.array_equal(reflecting_walk_matrix(2), M2)
        assert np.array_equal(reflecting_walk_matrix(4), M4)

    @pytest.mark.parametrize("M", [1, 2, 3, 8, 33])
    def test_structure(self, M):
        A = reflecting_walk_matrix(M)
        assert np.allclose(A.sum(axis=1), 1.0, atol=1e-12)
        assert np.all(np.diag(A) == 0.0)
        assert A[0, 1] == 1.0 and A[M, M - 1] == 1.0
        for i in range(1, M):
            assert A[i, i - 1] == 0.5 and A[i, i + 1] == 0.5

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            reflecting_walk_matrix(0)


class TestStationary:
    def test_m1(self):
        assert np.allclose(stationary_distribution(M1), [0.5, 0.5], atol=1e-12)

    def test_m2(self):
        assert np.allclose(stationary_distribution(M2), [0.25, 0.5, 0.25], atol=1e-12)

    def test_m8_closed_form(self):
        pi = stationary_distribution(reflecting_walk_matrix(8))
        assert pi[0] == pytest.approx(1 / 16, abs=1e-12)
        assert pi[8] == pytest.approx(1 / 16, abs=1e-12)
        assert np.allclose(pi[1:8], 1 / 8, atol=1e-12)

    @pytest.mark.parametrize("M", range(1, 65))
    def test_closed_form_full_range(self, M):
        A = reflecting_walk_matrix(M)
        pi = stationary_distribution(A)
        assert np.abs(pi - stationary_closed_form(M)).max() <= 1e-10
        assert np.abs(pi @ A - pi).max() <= 1e-10

    def test_rejects_reducible(self):
        block = np.array(
            [
                [0.0, 1.0, 0.0, 0.0],
                [1.0, 0.0, 0.0, 0.0],
                [0.0, 0.0, 0.0, 1.0],
                [0.0, 0.0, 1.0, 0.0],
            ]
        )
        with pytest.raises(ValueError, match="irreducible"):
            stationary_distribution(block)

    def test_rejects_non_stochastic(self):
        with pytest.raises(ValueError):
            stationary_distribution(np.array([[0.5, 0.2], [0.5, 0.5]]))


class TestPeriod:
    def test_m1_classes(self):
        assert period_and_classes(M1) == CyclicDecomposition(2, ((0,), (1,)))

    def test_m2_classes(self):
        assert period_and_classes(M2) == CyclicDecomposition(2, ((0, 2), (1,)))

    def test_m3_odd_listing(self):
        A = reflecting_walk_matrix(3)
        assert period_and_classes(A) == CyclicDecomposition(2, ((0, 2), (1, 3)))

    @pytest.mark.parametrize("M", range(1, 33))
    def test_even_odd_listings(self, M):
        decomp = period_and_classes(reflecting_walk_matrix(M))
        assert decomp.d == 2
        assert decomp.classes[0] == tuple(range(0, M + 1, 2))
        assert decomp.classes[1] == tuple(range(1, M + 1, 2))

    def test_aperiodic_chain(self):
        lazy = np.array([[0.5, 0.5], [0.5, 0.5]])
        assert period_and_classes(lazy).d == 1


class TestPowers:
    def test_m1_square_is_identity(self):
        assert np.array_equal(matrix_power(M1, 2), np.eye(2))

    def test_m2_cube_equals_base(self):
        assert np.array_equal(matrix_power(M2, 3), M2)

    def test_m2_square_display(self):
        want = np.array([[0.5, 0.0, 0.5], [0.0, 1.0, 0.0], [0.5, 0.0, 0.5]])
        assert np.abs(matrix_power(M2, 2) - want).max() <= 1e-12

    def test_power_zero(self):
        assert np.array_equal(matrix_power(M4, 0), np.eye(5))

    def test_rows_stay_stochastic(self):
        P = matrix_power(reflecting_walk_matrix(7), 10_001)
        assert np.allclose(P.sum(axis=1), 1.0, atol=1e-9)

    def test_negative_exponent(self):
        with pytest.raises(ValueError):
            matrix_power(M2, -1)


class TestConvergence:
    @pytest.mark.parametrize("M", [2, 3, 4, 8])
    def test_limit_rows(self, M):
        A = reflecting_walk_matrix(M)
        even = convergence_limits(A, 0, "even", 10_000, tol=1e-8)
        odd = convergence_limits(A, 0, "odd", 10_001, tol=1e-8)
        pi = stationary_closed_form(M)
        # barrier limit 1/M, interior limits 2/M on the reachable class
        assert even[0] == pytest.approx(1 / M, abs=1e-8)
        for s in range(2, M - 1, 2):
            assert even[s] == pytest.approx(2 / M, abs=1e-8)
        for s in range(1, M, 2):
            assert odd[s] == pytest.approx(2 * pi[s], abs=1e-8)
        if M % 2 == 0:
            assert even[M] == pytest.approx(1 / M, abs=1e-8)
        else:
            assert odd[M] == pytest.approx(1 / M, abs=1e-8)

    def test_m2_display_values(self):
        row = convergence_limits(M2, 0, "even", 10_000)
        assert np.allclose(row, [0.5, 0.0, 0.5], atol=1e-10)

    def test_parity_mismatch(self):
        with pytest.raises(ValueError, match="parity"):
            convergence_limits(M2, 0, "even", 10_001)

    def test_detects_violation(self):
        # M=8 is far from its limit after only two steps
        with pytest.raises(MarkovVerificationError):
            convergence_limits(reflecting_walk_matrix(8), 0, "even", 2, tol=1e-12)

    def test_expected_row_masks_class(self):
        row = expected_limit_row(M2, 0, "odd")
        assert np.allclose(row, [0.0, 1.0, 0.0], atol=1e-12)


class TestClosedForm:
    def test_k1_odd_is_base_matrix(self):
        assert np.abs(closed_form_power_m4(1) - M4).max() == 0.0

    def test_k2_even_matches_numeric(self):
        assert np.abs(closed_form_power_m4(4) - matrix_power(M4, 4)).max() <= 1e-12

    @pytest.mark.parametrize("k", range(1, 21))
    def test_full_range(self, k):
        for e in (2 * k - 1, 2 * k):
            assert np.abs(closed_form_power_m4(e) - matrix_power(M4, e)).max() <= 1e-12

    def test_center_row_constant_for_odd_powers(self):
        assert np.array_equal(
            closed_form_power_m4(19)[2], np.array([0.0, 0.5, 0.0, 0.5, 0.0])
        )

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            closed_form_power_m4(0)


class TestFirstPassage:
    def test_limit_values(self):
        assert normal_first_passage_limit(1.0) == pytest.approx(0.3173, abs=1e-4)
        assert normal_first_passage_limit(0.25) == pytest.approx(0.0455, abs=1e-4)

    def test_limit_vs_scipy(self):
        for t in (0.1, 0.5, 1.0, 2.0, 10.0, 1e6):
            ours = normal_first_passage_limit(t)
            phi = scipy.special.ndtr(1.0 / math.sqrt(t))
            assert ours == pytest.approx(2.0 * (1.0 - phi), abs=1e-12)

    def test_limit_saturates(self):
        assert normal_first_passage_limit(1e12) == pytest.approx(1.0, abs=1e-5)

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            normal_first_passage_limit(0.0)
        with pytest.raises(ValueError):
            first_passage_estimate(0, 1.0, 10, 0)
        with pytest.raises(ValueError):
            first_passage_estimate(10, 1.0, 0, 0)

    def test_estimate_deterministic(self):
        a = first_passage_estimate(10, 1.0, 2000, seed=5)
        b = first_passage_estimate(10, 1.0, 2000, seed=5)
        assert a == b

    def test_estimate_near_limit(self):
        trials = 20_000
        est = first_passage_estimate(100, 1.0, trials, seed=2)
        limit = normal_first_passage_limit(1.0)
        se = math.sqrt(est * (1 - est) / trials)
        assert abs(est - limit) <= 3 * se

    def test_long_horizon_near_certain(self):
        est = first_passage_estimate(10, 400.0, 500, seed=1)
        limit = normal_first_passage_limit(400.0)  # ~0.96 at this time ratio
        assert est > 0.9
        assert abs(est - limit) <= 4 * math.sqrt(limit * (1 - limit) / 500)


class TestCheckReports:
    def test_stationary_report(self):
        rep = check_stationary(2)
        assert rep.ok and any("0.25" in line for line in rep.lines)

    def test_period_report(self):
        assert check_period(5).ok

    def test_limits_report(self):
        assert check_limits(3).ok

    def test_limits_report_failure(self):
        rep = check_limits(8, m_large=10, tol=1e-12)
        assert not rep.ok

    def test_closed_form_report(self):
        assert check_closed_form(k_max=5).ok

    def test_first_passage_report_small(self):
        rep = check_first_passage(r=40, ts=(1.0,), trials=5_000, seed=3, n_se=4.0)
        assert rep.ok
