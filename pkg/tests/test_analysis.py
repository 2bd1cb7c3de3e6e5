"""Tests for closed-form probabilities and sweep tables."""
import math
from fractions import Fraction

import numpy as np
import pytest

from groverlab.analysis import (
    SweepGrid,
    closed_form_probability,
    optimal_iterations,
    phase_params_for,
    probability_floor,
    single_iteration_amplitude_long,
    single_iteration_probability,
    sweep,
)
from groverlab.model import AlgorithmKind, geometry_from_lambda
from groverlab.operators import iteration_matrix
from groverlab.subspace import run, success_probability


def cubic_exact(m: Fraction) -> Fraction:
    return 4 * m ** 3 - 8 * m ** 2 + 5 * m


class TestClosedFormProbability:
    def test_half_proportion_single_iteration(self):
        assert closed_form_probability(0.5, 1) == pytest.approx(0.5, abs=1e-12)

    def test_full_proportion_no_iterations(self):
        assert closed_form_probability(1.0, 0) == pytest.approx(1.0, abs=1e-15)

    def test_quarter_proportion_single_iteration(self):
        assert closed_form_probability(0.25, 1) == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("bad", [0.0, -0.5, 1.5])
    def test_rejects_out_of_domain(self, bad):
        with pytest.raises(ValueError):
            closed_form_probability(bad, 1)

    def test_rejects_negative_iterations(self):
        with pytest.raises(ValueError):
            closed_form_probability(0.5, -1)

    def test_matches_engine_on_a_grid(self):
        for lam in np.linspace(0.01, 1.0, 60):
            g = geometry_from_lambda(float(lam))
            it = iteration_matrix(AlgorithmKind.ORIGINAL, phase_params_for(AlgorithmKind.ORIGINAL, 0.0), g)
            for k in (0, 1, 2, 5, 9):
                engine = success_probability(run(it, k))
                assert abs(engine - closed_form_probability(float(lam), k)) < 1e-10


class TestOptimalIterations:
    @pytest.mark.parametrize("lam,expected", [(0.5, 1), (1.0, 0), (1 / 64, 6), (0.25, 1)])
    def test_values(self, lam, expected):
        assert optimal_iterations(lam) == expected

    def test_rejects_out_of_domain(self):
        with pytest.raises(ValueError):
            optimal_iterations(0.0)


class TestSingleIterationAmplitude:
    def test_full_proportion_at_pi(self):
        a1 = single_iteration_amplitude_long(1.0, math.pi)
        assert a1 == pytest.approx(-1.0, abs=1e-12)

    def test_pi_phase_recovers_triple_angle_form(self):
        # at phi = pi the amplitude is sqrt(m) * (3 - 4m) = sin(3 theta)
        for m in np.linspace(0.01, 1.0, 40):
            expected = math.sqrt(m) * (3.0 - 4.0 * m)
            assert single_iteration_amplitude_long(float(m), math.pi) == pytest.approx(
                expected, abs=1e-12
            )

    def test_half_proportion_at_half_pi_is_certain(self):
        assert abs(single_iteration_amplitude_long(0.5, math.pi / 2)) ** 2 == pytest.approx(
            1.0, abs=1e-12
        )

    def test_rejects_out_of_domain(self):
        with pytest.raises(ValueError):
            single_iteration_amplitude_long(0.0, 1.0)


class TestSingleIterationProbability:
    def test_agrees_with_exact_rational_cubic(self):
        for j in range(1, 25):
            m = Fraction(j, 24)
            assert single_iteration_probability(float(m)) == pytest.approx(
                float(cubic_exact(m)), abs=1e-13
            )

    @pytest.mark.parametrize("m", [5 / 6, 1 / 3])
    def test_floor_value_at_known_points(self, m):
        assert single_iteration_probability(m) == pytest.approx(25 / 27, abs=1e-12)

    def test_full_proportion(self):
        assert single_iteration_probability(1.0) == 1.0

    def test_matches_squared_amplitude_at_half_pi(self):
        for m in np.linspace(0.001, 1.0, 1000):
            amp = single_iteration_amplitude_long(float(m), math.pi / 2)
            assert abs(abs(amp) ** 2 - single_iteration_probability(float(m))) < 1e-12

    def test_matches_statevector_engine_at_realizable_proportions(self):
        from groverlab.model import LongParams, make_search_space
        from groverlab.statevector import run_full, target_probability

        for n in range(1, 11):
            size = 2 ** n
            for num_targets in {1, max(1, size // 3), size // 2 or 1, size}:
                space = make_search_space(n, range(num_targets))
                out = run_full(space, AlgorithmKind.LONG, LongParams(math.pi / 2), 1)
                expected = single_iteration_probability(num_targets / size)
                assert abs(target_probability(out) - expected) < 1e-10

    def test_rejects_out_of_domain(self):
        with pytest.raises(ValueError):
            single_iteration_probability(1.2)


class TestProbabilityFloor:
    def test_third_proportion(self):
        assert probability_floor(1 / 3) == pytest.approx(25 / 27, abs=1e-12)

    def test_critical_point_endpoint(self):
        assert probability_floor(5 / 6) == pytest.approx(25 / 27, abs=1e-12)

    def test_single_point_interval(self):
        assert probability_floor(1.0) == 1.0

    @pytest.mark.parametrize("m_min", [0.05, 1 / 3, 0.4, 0.6, 5 / 6, 0.95])
    def test_agrees_with_grid_scan(self, m_min):
        grid = np.linspace(m_min, 1.0, 100001)
        scan = np.min(4 * grid ** 3 - 8 * grid ** 2 + 5 * grid)
        assert probability_floor(m_min) == pytest.approx(float(scan), abs=1e-8)

    def test_cubic_never_dips_below_floor_on_third_interval(self):
        grid = np.linspace(1 / 3, 1.0, 100000)
        values = 4 * grid ** 3 - 8 * grid ** 2 + 5 * grid
        assert float(np.min(values)) >= 25 / 27 - 1e-9

    def test_rejects_out_of_domain(self):
        with pytest.raises(ValueError):
            probability_floor(0.0)


class TestSweep:
    def test_grid_validation(self):
        with pytest.raises(ValueError):
            SweepGrid(kind=AlgorithmKind.LONG, k=1, lambda_min=0.0)
        with pytest.raises(ValueError):
            SweepGrid(kind=AlgorithmKind.LONG, k=1, lambda_min=0.9, lambda_max=0.5)
        with pytest.raises(ValueError):
            SweepGrid(kind=AlgorithmKind.LONG, k=1, phase_steps=0)
        with pytest.raises(ValueError):
            SweepGrid(kind=AlgorithmKind.LONG, k=-1)

    def test_row_count_and_order(self):
        grid = SweepGrid(kind=AlgorithmKind.LONG, k=2, lambda_steps=4, phase_steps=3)
        result = sweep(grid)
        assert len(result.rows) == 12
        lambdas = [row[0] for row in result.rows]
        assert lambdas == sorted(lambdas)  # lambda-major ordering
        phases = [row[1] for row in result.rows[:3]]
        assert phases == sorted(phases)
        assert all(row[2] == 2 for row in result.rows)
        assert all(0.0 <= row[3] <= 1.0 for row in result.rows)

    def test_deterministic_across_calls(self):
        grid = SweepGrid(kind=AlgorithmKind.LI_CM, k=5, lambda_steps=7, phase_steps=9)
        assert sweep(grid).rows == sweep(grid).rows

    def test_matches_per_cell_engine_runs(self):
        grid = SweepGrid(kind=AlgorithmKind.LI_PC, k=4, lambda_steps=5, phase_steps=6)
        result = sweep(grid)
        for lam, phase, k, prob in result.rows:
            g = geometry_from_lambda(lam)
            it = iteration_matrix(grid.kind, phase_params_for(grid.kind, phase), g)
            assert abs(prob - success_probability(run(it, k))) < 1e-14

    def test_original_kind_ignores_phase_axis(self):
        grid = SweepGrid(
            kind=AlgorithmKind.ORIGINAL, k=1,
            lambda_min=0.5, lambda_max=0.5, lambda_steps=1, phase_steps=5,
        )
        result = sweep(grid)
        probs = {row[3] for row in result.rows}
        assert len(result.rows) == 5
        assert all(p == pytest.approx(0.5, abs=1e-12) for p in probs)

    def test_matched_sweeps_tabulate_one_field(self):
        fields = []
        for kind in (AlgorithmKind.LONG, AlgorithmKind.LI_DF, AlgorithmKind.LI_CM, AlgorithmKind.LI_PC):
            grid = SweepGrid(kind=kind, k=5, lambda_steps=11, phase_steps=13)
            fields.append(sweep(grid, matched_from_long=True).probability_grid())
        for other in fields[1:]:
            assert np.max(np.abs(fields[0] - other)) < 1e-10

    def test_long_surface_has_certainty_ridge_at_pi_for_quarter_proportion(self):
        grid = SweepGrid(
            kind=AlgorithmKind.LONG, k=1,
            lambda_min=0.25, lambda_max=0.25, lambda_steps=1,
            phase_min=math.pi, phase_max=math.pi, phase_steps=1,
        )
        assert sweep(grid).rows[0][3] == pytest.approx(1.0, abs=1e-12)
