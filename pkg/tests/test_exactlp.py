"""Exact LP engine: toy systems, certificate audits, and the brute-force oracle."""

from fractions import Fraction

import pytest
import sympy
from numpy.random import Generator, Philox

from hvnogo import (
    DimensionMismatch,
    GeneralParams,
    LinearSystem,
    brute_force_feasible,
    constraint_system,
    enumerate_basic_solutions,
    lp_feasible,
    matrix_rank,
    residual,
    verify_certificate,
)

F = Fraction


def sympy_rank(rows):
    """Independent rank oracle."""
    return sympy.Matrix([[sympy.Rational(v) for v in row] for row in rows]).rank()


class TestToySystems:
    def test_simplex_on_a_segment(self):
        system = LinearSystem(((F(1), F(1)),), (F(1),))
        report = lp_feasible(system)
        assert report.feasible
        assert all(v >= 0 for v in report.witness)
        assert all(r == 0 for r in residual(system, report.witness))

    def test_contradictory_rows(self):
        system = LinearSystem(((F(1),), (F(1),)), (F(1, 3), F(2, 3)))
        report = lp_feasible(system)
        assert not report.feasible
        assert verify_certificate(system, report.certificate)
        # the hand certificate: y = (-1, 1) gives y.A = 0 and y.b = 1/3 > 0
        assert verify_certificate(system, (F(-1), F(1)))
        assert not verify_certificate(system, (F(1), F(-1)))

    def test_zero_certificate_rejected(self):
        system = LinearSystem(((F(1),), (F(1),)), (F(1, 3), F(2, 3)))
        assert not verify_certificate(system, (F(0), F(0)))

    def test_certificate_dimension_checked(self):
        system = LinearSystem(((F(1),), (F(1),)), (F(1, 3), F(2, 3)))
        with pytest.raises(DimensionMismatch):
            verify_certificate(system, (F(1),))

    def test_residual_dimension_checked(self):
        system = LinearSystem(((F(1), F(2)),), (F(1),))
        with pytest.raises(DimensionMismatch):
            residual(system, (F(1),))

    def test_ragged_matrix_rejected(self):
        with pytest.raises(DimensionMismatch):
            LinearSystem(((F(1), F(2)), (F(1),)), (F(1), F(1)))

    def test_constraint_system_is_feasible(self):
        system = constraint_system(GeneralParams(F(1, 3), F(1, 2), F(1, 4)))
        report = lp_feasible(system)
        assert report.feasible
        assert all(r == 0 for r in residual(system, report.witness))


class TestEnumerator:
    def test_segment_vertices(self):
        system = LinearSystem(((F(1), F(1)),), (F(1),))
        points = enumerate_basic_solutions(system)
        assert set(points) == {(F(1), F(0)), (F(0), F(1))}

    def test_infeasible_system_has_no_points(self):
        system = LinearSystem(((F(1),), (F(1),)), (F(1, 3), F(2, 3)))
        assert enumerate_basic_solutions(system) == ()

    def test_zero_matrix_cases(self):
        consistent = LinearSystem(((F(0), F(0)),), (F(0),))
        assert enumerate_basic_solutions(consistent) == ((F(0), F(0)),)
        inconsistent = LinearSystem(((F(0), F(0)),), (F(1),))
        assert enumerate_basic_solutions(inconsistent) == ()


def random_system(rng: Generator, force_feasible: bool) -> LinearSystem:
    m = int(rng.integers(1, 7))
    n = int(rng.integers(1, 13))
    matrix = tuple(
        tuple(F(int(rng.integers(-4, 5)), int(rng.integers(1, 4))) for _ in range(n)) for _ in range(m)
    )
    if force_feasible:
        witness = [F(int(rng.integers(0, 5)), int(rng.integers(1, 3))) for _ in range(n)]
        rhs = tuple(sum(c * w for c, w in zip(row, witness)) for row in matrix)
    else:
        rhs = tuple(F(int(rng.integers(-4, 5)), int(rng.integers(1, 4))) for _ in range(m))
    return LinearSystem(matrix, rhs)


class TestOracleEquivalence:
    def test_simplex_agrees_with_enumeration(self):
        rng = Generator(Philox(key=99))
        for trial in range(120):
            system = random_system(rng, force_feasible=trial % 2 == 0)
            report = lp_feasible(system)
            assert report.feasible == brute_force_feasible(system), f"disagreement on trial {trial}"
            if report.feasible:
                assert all(v >= 0 for v in report.witness)
                assert all(r == 0 for r in residual(system, report.witness))
            else:
                assert verify_certificate(system, report.certificate)


class TestRank:
    def test_against_sympy_on_random_matrices(self):
        rng = Generator(Philox(key=7))
        for _ in range(60):
            m = int(rng.integers(1, 7))
            n = int(rng.integers(1, 9))
            rows = [[F(int(rng.integers(-3, 4)), int(rng.integers(1, 4))) for _ in range(n)] for _ in range(m)]
            assert matrix_rank(rows) == sympy_rank(rows)

    def test_constraint_matrix_rank_is_six_for_interior_parameters(self):
        rng = Generator(Philox(key=8))
        for _ in range(40):
            params = GeneralParams(
                F(int(rng.integers(1, 12)), 12), F(int(rng.integers(1, 12)), 12), F(int(rng.integers(1, 12)), 12)
            )
            system = constraint_system(params)
            assert sympy_rank(system.matrix) == 6
            assert matrix_rank(system.matrix) == 6

    def test_degenerate_objectivity_row_stays_linear(self):
        # e_p = 0 turns the first objectivity row into p(0,0,p) = 0
        system = constraint_system(GeneralParams(F(1, 3), F(0), F(1, 4)))
        row = system.matrix[4]
        assert row[0] == 1 and all(v == 0 for i, v in enumerate(row) if i != 0)
        assert system.rhs[4] == 0
