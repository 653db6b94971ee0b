"""Counter-based sampling: reproducibility, conservation, statistics."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hvnogo import (
    Counts4,
    EmptySample,
    GeneralParams,
    JointDist,
    compare,
    fringe_sweep,
    joint_from_params,
    quantum_joint,
    quantum_params,
    sample_events,
    sweep_to_csv,
    wave_statistics,
)
from hvnogo.montecarlo import SWEEP_CSV_HEADER

F = Fraction
FIXED = quantum_joint(math.pi / 3, math.pi / 4)


class TestSampleEvents:
    def test_zero_shots(self):
        assert sample_events(FIXED, 0, 7).as_tuple() == (0, 0, 0, 0)

    def test_degenerate_distribution(self):
        counts = sample_events(JointDist((1.0, 0.0, 0.0, 0.0)), 1000, 7)
        assert counts.as_tuple() == (1000, 0, 0, 0)

    def test_zero_probability_cells_stay_empty(self):
        counts = sample_events(JointDist((0.5, 0.0, 0.5, 0.0)), 50_000, 11)
        assert counts.n01 == 0 and counts.n11 == 0
        assert counts.total == 50_000

    def test_reproducible(self):
        a = sample_events(FIXED, 10_000, 42)
        b = sample_events(FIXED, 10_000, 42)
        assert a == b

    def test_seed_changes_the_stream(self):
        assert sample_events(FIXED, 10_000, 42) != sample_events(FIXED, 10_000, 43)

    def test_partitioned_ranges_merge_to_the_sequential_run(self):
        n = 10_001
        whole = sample_events(FIXED, n, 42)
        for cut in (1, 4, 5, 2_500, 9_999):
            head = sample_events(FIXED, cut, 42)
            tail = sample_events(FIXED, n - cut, 42, first_shot=cut)
            merged = tuple(h + t for h, t in zip(head.as_tuple(), tail.as_tuple()))
            assert merged == whole.as_tuple(), f"cut at {cut}"

    @given(st.integers(min_value=0, max_value=3000), st.integers(min_value=0, max_value=2**32))
    @settings(max_examples=40, deadline=None)
    def test_conservation(self, n, seed):
        assert sample_events(FIXED, n, seed).total == n

    def test_exact_mode_joint_accepted(self):
        counts = sample_events(joint_from_params(GeneralParams(F(1, 3), F(1, 2), F(1, 4))), 1000, 5)
        assert counts.total == 1000

    def test_million_shot_concentration(self):
        counts = sample_events(FIXED, 1_000_000, 802)
        report = compare(counts, FIXED)
        assert report.tv < 0.005
        assert report.passed

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            sample_events(FIXED, -1, 0)
        with pytest.raises(ValueError):
            sample_events(FIXED, 10, -2)


class TestCompare:
    def test_exactly_proportional_counts(self):
        report = compare(Counts4(250, 250, 250, 250), JointDist((0.25,) * 4))
        assert report.tv == 0.0
        assert report.z_max == 0.0
        assert report.passed

    def test_gross_mismatch_fails(self):
        report = compare(Counts4(1000, 0, 0, 0), JointDist((0.25,) * 4))
        assert not report.passed
        assert report.z_max > 5

    def test_counts_in_a_null_cell_fail(self):
        report = compare(Counts4(999, 1, 0, 0), JointDist((1.0, 0.0, 0.0, 0.0)))
        assert not report.passed
        assert report.z_max == math.inf

    def test_null_cells_without_counts_are_fine(self):
        report = compare(Counts4(1000, 0, 0, 0), JointDist((1.0, 0.0, 0.0, 0.0)))
        assert report.passed

    def test_empty_sample(self):
        with pytest.raises(EmptySample):
            compare(Counts4(0, 0, 0, 0), FIXED)

    def test_false_failure_rate_below_two_percent(self):
        failures = sum(
            not compare(sample_events(FIXED, 100_000, seed), FIXED).passed for seed in range(100)
        )
        assert failures < 2

    def test_model_agnostic_sampling(self):
        alpha, phi = math.pi / 3, math.pi / 4
        via_params = joint_from_params(quantum_params(alpha, phi))
        direct = quantum_joint(alpha, phi)
        assert compare(sample_events(via_params, 200_000, 9), direct).passed
        assert compare(sample_events(direct, 200_000, 9), via_params).passed


class TestFringeSweep:
    def test_pure_wave_has_no_b0_events(self):
        rows = fringe_sweep(math.pi / 2, [0.6, 1.9], 20_000, 3)
        for row in rows:
            assert row.f_a0_given_b0 is None
            assert row.f_a0_given_b1 is not None

    def test_pure_particle_has_no_b1_events(self):
        rows = fringe_sweep(0.0, [0.6, 1.9], 20_000, 3)
        for row in rows:
            assert row.f_a0_given_b1 is None
            assert abs(row.f_a0_given_b0 - 0.5) < 0.02

    def test_balanced_sweep_tracks_the_fringe(self):
        grid = [2 * math.pi * i / 16 for i in range(17)]
        rows = fringe_sweep(math.pi / 4, grid, 100_000, 801)
        assert len(rows) == 17
        for row in rows:
            assert abs(row.f_a0_given_b1 - wave_statistics(row.phi).p0) < 0.02
            assert abs(row.f_a0_given_b0 - 0.5) < 0.02

    def test_shots_must_be_positive(self):
        with pytest.raises(ValueError):
            fringe_sweep(0.5, [0.0], 0, 1)


class TestCsv:
    def test_header_and_empty_fields(self):
        rows = fringe_sweep(0.0, [0.0, 1.0], 100, 5)
        text = sweep_to_csv(rows)
        lines = text.strip().split("\n")
        assert lines[0] == SWEEP_CSV_HEADER
        assert len(lines) == 3
        # pure particle: the b=1 conditional column is empty
        assert lines[1].split(",")[5] == ""

    def test_deterministic_bytes(self):
        rows = fringe_sweep(0.7, [0.0, 0.5, 1.0], 1000, 12)
        again = fringe_sweep(0.7, [0.0, 0.5, 1.0], 1000, 12)
        assert sweep_to_csv(rows) == sweep_to_csv(again)
