import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from harmonet.graphs import make_complete, make_path, make_ring
from harmonet.spectral import (
    Spectrum,
    apply_spectral_function,
    eig_sym,
    laplacian,
    potential_matrix,
    w_pair,
)

OMEGAS = [0.0, 0.5, 1.0, 5.0, 50.0]


def _max(a):
    return float(np.max(np.abs(a)))


def test_two_vertex_potential():
    w = 0.7
    v = potential_matrix(make_path(2), w).v
    np.testing.assert_array_equal(v, [[1 + w**2, -(w**2)], [-(w**2), 1 + w**2]])


def test_path3_potential_matches_closed_matrix():
    w = 1.3
    v = potential_matrix(make_path(3), w).v
    expected = [[1 + w**2, -(w**2), 0], [-(w**2), 1 + 2 * w**2, -(w**2)], [0, -(w**2), 1 + w**2]]
    np.testing.assert_allclose(v, expected, rtol=0, atol=1e-15)


def test_zero_coupling_is_identity(any_graph):
    np.testing.assert_array_equal(potential_matrix(any_graph, 0.0).v, np.eye(any_graph.n))


def test_regular_graphs_match_degree_form(symmetric_graph):
    g = symmetric_graph
    w = 1.7
    z = g.degrees[0]
    np.testing.assert_allclose(potential_matrix(g, w).v, (1 + z * w**2) * np.eye(g.n) - w**2 * g.adjacency, atol=1e-13)


@pytest.mark.parametrize("omega", [-1.0, np.nan, np.inf])
def test_potential_rejects_bad_omega(omega):
    with pytest.raises(ValueError):
        potential_matrix(make_path(2), omega)


def test_potential_smallest_eigenvalue_is_one(any_graph):
    for w in OMEGAS:
        lam = eig_sym(potential_matrix(any_graph, w).v).eigenvalues
        assert lam[0] >= 1 - 1e-9
        assert abs(lam[0] - 1) <= 1e-9


@pytest.mark.parametrize("w", [0.3, 1.0, 4.0])
def test_small_graph_eigenvalues(w):
    np.testing.assert_allclose(eig_sym(potential_matrix(make_path(2), w).v).eigenvalues, [1, 1 + 2 * w**2], rtol=1e-13)
    np.testing.assert_allclose(
        eig_sym(potential_matrix(make_path(3), w).v).eigenvalues, [1, 1 + w**2, 1 + 3 * w**2], rtol=1e-13
    )
    np.testing.assert_allclose(eig_sym(np.eye(4)).eigenvalues, np.ones(4))


def test_spectrum_invariants_over_grid(any_graph):
    for w in OMEGAS:
        m = potential_matrix(any_graph, w).v
        s = eig_sym(m)
        q = s.eigenvectors
        assert _max(q.T @ q - np.eye(any_graph.n)) <= 1e-10
        assert _max(s.reconstruct() - m) <= 1e-10 * (1 + _max(m))
        assert np.all(np.diff(s.eigenvalues) >= 0)


def test_eig_sym_deterministic():
    m = potential_matrix(make_ring(7), 1.3).v
    a, b = eig_sym(m), eig_sym(m.copy())
    np.testing.assert_array_equal(a.eigenvalues, b.eigenvalues)
    np.testing.assert_array_equal(a.eigenvectors, b.eigenvectors)


def test_eig_sym_rejects_bad_input():
    with pytest.raises(ValueError, match="symmetric"):
        eig_sym([[1.0, 2.0], [0.0, 1.0]])
    with pytest.raises(ValueError, match="non-finite"):
        eig_sym([[1.0, np.nan], [np.nan, 1.0]])
    with pytest.raises(ValueError, match="square"):
        eig_sym(np.ones((2, 3)))


def test_uniform_vector_in_kernel(any_graph):
    u = np.ones(any_graph.n) / np.sqrt(any_graph.n)
    for w in OMEGAS:
        v = potential_matrix(any_graph, w).v
        assert _max(v @ u - u) <= 1e-10
    assert np.all(laplacian(any_graph).sum(axis=1) == 0)


def test_spectral_function_composition(any_graph):
    for w in (0.5, 5.0):
        s = eig_sym(potential_matrix(any_graph, w).v)
        root = apply_spectral_function(s, np.sqrt)
        again = apply_spectral_function(eig_sym(root), np.square)
        direct = apply_spectral_function(s, lambda x: np.square(np.sqrt(x)))
        assert _max(again - direct) <= 1e-9 * (1 + _max(direct))


@pytest.mark.parametrize("n", range(3, 21))
def test_meanfield_square_root_closed_form(n):
    for w in (0.3, 1.0, 7.0):
        s = eig_sym(potential_matrix(make_complete(n), w).v)
        root = np.sqrt(1 + n * w**2)
        ones = np.ones((n, n))
        w_closed = root * np.eye(n) + (1 - root) / n * ones
        winv_closed = (np.eye(n) + (root - 1) / n * ones) / root
        assert _max(apply_spectral_function(s, np.sqrt) - w_closed) <= 1e-10
        assert _max(apply_spectral_function(s, lambda x: 1 / np.sqrt(x)) - winv_closed) <= 1e-10


def test_spectral_function_rejects_non_finite():
    s = eig_sym(np.diag([0.0, 1.0]))
    with np.errstate(divide="ignore"):
        with pytest.raises(ValueError, match="not finite"):
            apply_spectral_function(s, lambda x: 1 / x)


def test_w_pair(any_graph):
    for w in OMEGAS:
        v = potential_matrix(any_graph, w)
        root, inv = w_pair(v)
        assert _max(root @ root - v.v) <= 1e-10 * (1 + _max(v.v))
        assert _max(root @ inv - np.eye(any_graph.n)) <= 1e-10
        assert eig_sym(root).eigenvalues[0] > 0 and eig_sym(inv).eigenvalues[0] > 0


def test_w_pair_two_vertex_eigenvalues():
    root, _ = w_pair(potential_matrix(make_path(2), 1.0))
    np.testing.assert_allclose(np.linalg.eigvalsh(root), [1, np.sqrt(3)], rtol=1e-14)


def test_w_pair_rejects_indefinite():
    with pytest.raises(ValueError, match="positive definite"):
        w_pair(np.diag([-1.0, 1.0]))


@settings(max_examples=60, deadline=None)
@given(arrays(np.float64, (5, 5), elements=st.floats(-10, 10)))
def test_random_symmetric_reconstruction(a):
    m = a + a.T
    s = eig_sym(m)
    assert isinstance(s, Spectrum)
    assert _max(s.eigenvectors.T @ s.eigenvectors - np.eye(5)) <= 1e-10
    assert _max(s.reconstruct() - m) <= 1e-10 * (1 + _max(m))
