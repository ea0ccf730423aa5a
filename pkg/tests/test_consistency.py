import itertools

import numpy as np
import pytest

from concord.core.basis import basis_orthogonal, basis_raw
from concord.core.consistency import (
    check_consistency,
    check_l_consistency,
    triad_inconsistency,
)
from concord.core.matrix import LogMatrix, validate

from conftest import consistent_from_stimuli, random_reciprocal


def reciprocal_3x3(m12, m23, m13):
    return validate(
        [[1, m12, m13], [1 / m12, 1, m23], [1 / m13, 1 / m23, 1]]
    )


class TestTriadInconsistency:
    def test_worked_value(self):
        # min(|1 - 5/4|, |1 - 4/5|) for the (2, 2, 5) triad
        assert triad_inconsistency(2, 2, 5) == pytest.approx(0.2)

    def test_consistent_triad_is_zero(self):
        assert triad_inconsistency(2, 4, 8) == pytest.approx(0.0)

    def test_range(self, rng):
        for _ in range(200):
            x, y, z = np.exp(rng.uniform(-3, 3, size=3))
            value = triad_inconsistency(x, y, z)
            assert 0.0 <= value < 1.0


class TestCheckConsistency:
    def test_consistent_matrix(self):
        report = check_consistency(validate(consistent_from_stimuli([8, 4, 1])))
        assert report.global_inconsistency <= 1e-12
        assert report.consistent
        assert len(report.triads) == 1

    def test_worked_example(self):
        report = check_consistency(reciprocal_3x3(2, 2, 5))
        assert report.triads[0][:3] == (1, 2, 3)
        assert report.triads[0][3] == pytest.approx(0.2)
        assert report.global_inconsistency == pytest.approx(0.2)
        assert not report.consistent

    def test_two_by_two_has_no_triads(self):
        report = check_consistency(validate([[1, 4], [0.25, 1]]))
        assert report.triads == ()
        assert report.global_inconsistency == 0.0
        assert report.consistent

    def test_sorted_worst_first_ties_lexicographic(self, rng):
        m = validate(random_reciprocal(rng, 6))
        report = check_consistency(m)
        values = [t[3] for t in report.triads]
        assert values == sorted(values, reverse=True)
        assert len(report.triads) == 20  # C(6, 3)
        consistent = check_consistency(validate(np.ones((5, 5))))
        assert [t[:3] for t in consistent.triads] == sorted(
            itertools.combinations(range(1, 6), 3)
        )

    def test_worst_limits_count(self, rng):
        report = check_consistency(validate(random_reciprocal(rng, 7)))
        assert len(report.worst(10)) == 10
        assert report.worst(10)[0][3] == report.global_inconsistency


class TestLConsistency:
    def test_every_raw_basis_matrix(self):
        for n in range(2, 9):
            for k in range(1, n):
                assert check_l_consistency(LogMatrix(entries=basis_raw(n, k)), tol=1e-12)

    def test_linear_combinations(self, rng):
        for n in range(3, 9):
            raw = basis_orthogonal(n).raw
            coeffs = rng.normal(size=n - 1)
            combo = sum(c * b for c, b in zip(coeffs, raw))
            assert check_l_consistency(LogMatrix(entries=combo), tol=1e-10)

    def test_broken_entry_detected(self):
        bad = basis_raw(3, 1).copy()
        bad[0, 1] = 2.0  # breaks triad (1,2,3) and antisymmetry
        assert not check_l_consistency(LogMatrix(entries=bad), tol=1e-10)

    def test_non_antisymmetric_rejected(self):
        x = np.zeros((3, 3))
        x[0, 1] = 1.0  # no mirrored negative entry
        assert not check_l_consistency(LogMatrix(entries=x), tol=1e-10)

    def test_small_matrices(self):
        assert check_l_consistency(LogMatrix(entries=np.zeros((1, 1))), tol=1e-10)
        assert check_l_consistency(LogMatrix(entries=np.array([[0, 2], [-2, 0]])), tol=1e-10)
