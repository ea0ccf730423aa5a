"""Property-based invariants of the projection machinery."""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from concord.core.basis import basis_orthogonal
from concord.core.consistency import check_consistency, check_l_consistency
from concord.core.matrix import LogMatrix, exp_transform, log_transform, validate
from concord.core.projection import approximate, project_fast
from concord.core.weights import extract_weights
from concord.oracles import (
    geometric_mean_approximation,
    gram_schmidt_projection,
    normal_equations_projection,
)

from conftest import consistent_from_stimuli

finite = st.floats(-2.5, 2.5, allow_nan=False, allow_infinity=False)


@st.composite
def log_matrices(draw, min_n=2, max_n=8):
    n = draw(st.integers(min_n, max_n))
    vals = draw(st.lists(finite, min_size=n * n, max_size=n * n))
    return LogMatrix(entries=np.array(vals).reshape(n, n))


@st.composite
def reciprocal_matrices(draw, min_n=2, max_n=8):
    n = draw(st.integers(min_n, max_n))
    count = n * (n - 1) // 2
    vals = draw(st.lists(finite, min_size=count, max_size=count))
    x = np.zeros((n, n))
    x[np.triu_indices(n, 1)] = vals
    return validate(np.exp(x - x.T))


@st.composite
def stimuli_vectors(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    vals = draw(st.lists(finite, min_size=n, max_size=n))
    return np.exp(np.array(vals))


@settings(max_examples=60, deadline=None)
@given(log_matrices())
def test_projection_lies_in_subspace(a):
    result = project_fast(a)
    assert check_l_consistency(result.projected, tol=1e-10)


@settings(max_examples=60, deadline=None)
@given(log_matrices())
def test_projection_idempotent(a):
    once = project_fast(a)
    twice = project_fast(once.projected)
    np.testing.assert_allclose(
        twice.projected.entries, once.projected.entries, atol=1e-12
    )


@settings(max_examples=60, deadline=None)
@given(log_matrices())
def test_residual_orthogonal_to_every_basis_matrix(a):
    result = project_fast(a)
    residual = a.entries - result.projected.entries
    for t in basis_orthogonal(a.n).orthogonal:
        assert abs(np.sum(residual * t)) <= 1e-10


@settings(max_examples=60, deadline=None)
@given(log_matrices(), st.floats(0.1, 10.0))
def test_scaling_equivariance(a, lam):
    # base change of the logarithm is a uniform scaling of log space
    scaled = project_fast(LogMatrix(entries=lam * a.entries))
    plain = project_fast(a)
    np.testing.assert_allclose(
        scaled.projected.entries, lam * plain.projected.entries, atol=1e-10
    )


@settings(max_examples=40, deadline=None)
@given(reciprocal_matrices(min_n=2, max_n=7))
def test_log_base_independence_of_approximation(m):
    natural = approximate(m).consistent.entries
    base2 = np.exp2(project_fast(LogMatrix(entries=np.log2(m.entries))).projected.entries)
    np.testing.assert_allclose(base2, natural, rtol=1e-10)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 10), st.data())
def test_spanning_linear_combinations_are_fixed_points(n, data):
    coeffs = data.draw(st.lists(finite, min_size=n - 1, max_size=n - 1))
    raw = basis_orthogonal(n).raw
    combo = sum(c * b for c, b in zip(coeffs, raw))
    a = LogMatrix(entries=combo + np.zeros((n, n)))
    result = project_fast(a)
    assert result.residual_norm <= 1e-10
    np.testing.assert_allclose(result.projected.entries, a.entries, atol=1e-10)


@settings(max_examples=40, deadline=None)
@given(stimuli_vectors(min_n=1, max_n=10))
def test_consistent_matrices_are_fixed_points(s):
    m = validate(consistent_from_stimuli(s))
    result = approximate(m)
    np.testing.assert_allclose(result.consistent.entries, m.entries, rtol=1e-12)


@settings(max_examples=40, deadline=None)
@given(reciprocal_matrices())
def test_oracles_agree_pairwise(m):
    a = log_transform(m)
    results = [
        project_fast(a).projected.entries,
        gram_schmidt_projection(a).entries,
        geometric_mean_approximation(m).entries,
        normal_equations_projection(a).entries,
    ]
    for x, y in itertools.combinations(results, 2):
        assert np.max(np.abs(x - y)) <= 1e-9


@settings(max_examples=40, deadline=None)
@given(log_matrices(min_n=2, max_n=8))
def test_projection_of_arbitrary_input_matches_normal_equations(a):
    fast = project_fast(a).projected.entries
    ne = normal_equations_projection(a).entries
    np.testing.assert_allclose(fast, ne, atol=1e-9)


@settings(max_examples=30, deadline=None)
@given(reciprocal_matrices(min_n=3, max_n=8), st.data())
def test_projection_beats_random_consistent_candidates(m, data):
    a = log_transform(m)
    result = project_fast(a)
    base = result.residual_norm
    n = m.n
    for _ in range(20):
        noise = np.array(data.draw(st.lists(finite, min_size=n, max_size=n)))
        w = np.log(extract_weights(result.consistent).values) + noise
        candidate = w[:, None] - w[None, :]
        distance = float(np.linalg.norm(a.entries - candidate))
        assert distance >= base - 1e-12
        if np.max(np.abs(candidate - result.projected.entries)) > 1e-6:
            assert distance > base


@settings(max_examples=30, deadline=None)
@given(reciprocal_matrices(min_n=2, max_n=8))
def test_round_trip_through_logs(m):
    np.testing.assert_allclose(
        exp_transform(log_transform(m)).entries, m.entries, rtol=1e-14
    )


@settings(max_examples=30, deadline=None)
@given(reciprocal_matrices(min_n=3, max_n=7))
def test_analysis_chain_is_coherent(m):
    result = approximate(m)
    weights = extract_weights(result.consistent)
    reconstructed = weights.values[:, None] / weights.values[None, :]
    np.testing.assert_allclose(reconstructed, result.consistent.entries, rtol=1e-10)
    assert check_consistency(result.consistent, tol=1e-10).consistent


def _holds_all_triples(x: np.ndarray, tol: float) -> bool:
    n = x.shape[0]
    return all(
        abs(x[p, q] + x[q, s] - x[p, s]) <= tol
        for p, q, s in itertools.permutations(range(n), 3)
    )


def _holds_ordered_triples(x: np.ndarray, tol: float) -> bool:
    n = x.shape[0]
    return all(
        abs(x[i, j] + x[j, k] - x[i, k]) <= tol
        for i, j, k in itertools.combinations(range(n), 3)
    )


def test_ordered_triple_condition_equivalent_for_antisymmetric(rng):
    # brute force over all triples vs the i<j<k restriction, n <= 8
    for n in range(3, 9):
        cases = []
        raw = basis_orthogonal(n).raw
        coeffs = rng.normal(size=n - 1)
        member = sum(c * b for c, b in zip(coeffs, raw)) + np.zeros((n, n))
        cases.append(member)
        broken = member.copy()
        broken[0, 1] += 0.5
        broken[1, 0] -= 0.5  # stays antisymmetric, leaves the subspace
        cases.append(broken)
        noise = rng.normal(size=(n, n))
        cases.append(noise - noise.T)
        for x in cases:
            assert _holds_all_triples(x, 1e-9) == _holds_ordered_triples(x, 1e-9)
