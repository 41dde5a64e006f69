import math

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.metrics import adjusted_rand_score

from iconviz.errors import InvalidKError
from iconviz.patterns import Pattern
from iconviz.spectral import (
    SpectralChainClusterer,
    _kmeans_pp_init,
    _kmeans_single,
    align_clusters,
    build_similarity,
    choose_k,
    kmeans_cluster,
    laplacian_matrix,
    median_heuristic_sigma,
    spectral_embed,
)


def blob_matrix(seed=0, centers=((0.0, 0.0), (10.0, 10.0)), per_blob=10, spread=0.3):
    rng = np.random.default_rng(seed)
    rows, labels = [], []
    for label, center in enumerate(centers):
        rows.append(rng.normal(center, spread, size=(per_blob, len(center))))
        labels += [label] * per_blob
    return np.vstack(rows), np.array(labels)


# --- similarity -------------------------------------------------------------

def test_identical_points_have_similarity_one():
    model = build_similarity(np.array([[1.0, 2.0], [1.0, 2.0]]), sigma=1.0)
    assert model.similarity[0, 1] == pytest.approx(1.0)
    assert model.similarity[0, 0] == 0.0


def test_distance_sigma_sqrt2_gives_exp_minus_one():
    sigma = 0.7
    x = np.array([[0.0], [sigma * math.sqrt(2.0)]])
    model = build_similarity(x, sigma=sigma)
    assert model.similarity[0, 1] == pytest.approx(math.exp(-1.0), abs=1e-12)


def test_collinear_equidistant_points_median_sigma():
    d = 2.5
    model = build_similarity(np.array([[0.0], [d], [2 * d]]))
    assert model.sigma == pytest.approx(d)
    assert model.similarity[0, 1] == pytest.approx(math.exp(-0.5), abs=1e-12)
    assert model.similarity[1, 2] == pytest.approx(math.exp(-0.5), abs=1e-12)
    assert model.similarity[0, 2] == pytest.approx(math.exp(-2.0), abs=1e-12)


def test_median_sigma_falls_back_to_one_on_coincident_points():
    assert median_heuristic_sigma(np.zeros((4, 2))) == 1.0


def test_similarity_matrix_properties():
    matrix, _ = blob_matrix(3)
    w = build_similarity(matrix).similarity
    assert np.array_equal(w, w.T)
    assert np.all(np.diag(w) == 0.0)
    assert w.min() >= 0.0 and w.max() <= 1.0


# --- Laplacian and k selection ----------------------------------------------

def test_laplacian_row_sums_zero_and_psd():
    matrix, _ = blob_matrix(5)
    model = spectral_embed(build_similarity(matrix), k=2)
    lap = model.laplacian
    assert np.allclose(lap, lap.T)
    assert np.max(np.abs(lap.sum(axis=1))) < 1e-10
    assert model.eigenvalues.min() > -1e-8
    assert model.eigenvalues[0] == pytest.approx(0.0, abs=1e-9)
    assert model.embedding.shape[1] == model.k


def block_diagonal_similarity(sizes=(3, 4, 5), weight=0.8):
    n = sum(sizes)
    w = np.zeros((n, n))
    offset = 0
    for size in sizes:
        w[offset : offset + size, offset : offset + size] = weight
        offset += size
    np.fill_diagonal(w, 0.0)
    return w


def test_three_blocks_give_three_zero_eigenvalues_and_k3():
    from iconviz.spectral import SpectralModel

    w = block_diagonal_similarity()
    model = spectral_embed(SpectralModel(sigma=1.0, similarity=w))
    zero_count = int((model.eigenvalues < 1e-8 * max(1.0, model.eigenvalues[-1])).sum())
    assert zero_count == 3
    assert model.k == 3
    labels = kmeans_cluster(model.embedding, model.k, seed=0)
    truth = [0] * 3 + [1] * 4 + [2] * 5
    assert adjusted_rand_score(truth, labels) == 1.0


def test_all_zero_similarity_means_every_point_isolated():
    from iconviz.spectral import SpectralModel

    w = np.zeros((4, 4))
    model = spectral_embed(SpectralModel(sigma=1.0, similarity=w))
    assert np.allclose(model.laplacian, 0.0)
    assert np.allclose(model.eigenvalues, 0.0)
    assert model.k == 4


def test_complete_uniform_graph_spectrum_and_eigengap_fallback():
    from iconviz.spectral import SpectralModel

    n, w = 6, 0.5
    similarity = np.full((n, n), w)
    np.fill_diagonal(similarity, 0.0)
    model = spectral_embed(SpectralModel(sigma=1.0, similarity=similarity))
    # closed form: one zero eigenvalue, the rest n*w
    assert model.eigenvalues[0] == pytest.approx(0.0, abs=1e-9)
    assert np.allclose(model.eigenvalues[1:], n * w)
    # only one zero eigenvalue, so the eigengap rule decided k; every gap in
    # the flat tail ties at ~0, so any candidate in [2, n-1] is admissible
    assert 2 <= model.k <= n - 1


def test_choose_k_eigengap_hand_example():
    eigenvalues = np.array([0.0, 0.01, 0.02, 1.0, 1.1])
    assert choose_k(eigenvalues) == 3


def test_choose_k_override_validation():
    eigenvalues = np.array([0.0, 0.5, 0.9])
    assert choose_k(eigenvalues, override=2) == 2
    with pytest.raises(InvalidKError):
        choose_k(eigenvalues, override=0)
    with pytest.raises(InvalidKError):
        choose_k(eigenvalues, override=4)


def test_choose_k_two_chains_degenerate_range():
    assert choose_k(np.array([0.0, 1.3])) == 2


# --- k-means ------------------------------------------------------------------

def test_kmeans_k1_puts_everything_in_cluster_zero():
    matrix, _ = blob_matrix(1)
    assert set(kmeans_cluster(matrix, 1, seed=0)) == {0}


def test_kmeans_two_points_two_clusters():
    labels = kmeans_cluster(np.array([[0.0], [5.0]]), 2, seed=1)
    assert set(labels) == {0, 1}
    assert labels[0] != labels[1]


def test_kmeans_recovers_separated_blobs():
    matrix, truth = blob_matrix(7)
    labels = kmeans_cluster(matrix, 2, seed=3)
    assert adjusted_rand_score(truth, labels) == 1.0


def test_kmeans_matches_brute_force_best_split_in_1d():
    # optimal 2-means in 1-D is a contiguous split of the sorted points
    rng = np.random.default_rng(11)
    points = np.concatenate([rng.normal(0, 1.0, 10), rng.normal(8, 1.0, 10)])
    x = points.reshape(-1, 1)

    ordered = np.sort(points)
    best_wcss = math.inf
    for split in range(1, 20):
        left, right = ordered[:split], ordered[split:]
        wcss = ((left - left.mean()) ** 2).sum() + ((right - right.mean()) ** 2).sum()
        best_wcss = min(best_wcss, wcss)

    labels = kmeans_cluster(x, 2, seed=5)
    centers = np.array([x[labels == c].mean() for c in (0, 1)])
    wcss = sum((points[i] - centers[labels[i]]) ** 2 for i in range(20))
    assert wcss == pytest.approx(best_wcss, rel=1e-9)


@pytest.mark.parametrize("seed", range(5))
def test_kmeans_wcss_never_increases(seed):
    rng = np.random.default_rng(seed)
    points = rng.normal(size=(40, 3))
    centers = _kmeans_pp_init(points, 4, rng)
    _, _, _, history = _kmeans_single(points, centers, max_iter=300, tol=1e-6)
    assert all(later <= earlier + 1e-9 for earlier, later in zip(history, history[1:]))


@pytest.mark.parametrize("seed", range(5))
def test_kmeans_invariant_under_row_permutation(seed):
    rng = np.random.default_rng(100 + seed)
    matrix = rng.normal(size=(30, 4))
    permutation = rng.permutation(30)
    base = kmeans_cluster(matrix, 3, seed=7)
    permuted = kmeans_cluster(matrix[permutation], 3, seed=7)
    assert np.array_equal(permuted, base[permutation])


def test_kmeans_invalid_k():
    matrix, _ = blob_matrix(2)
    with pytest.raises(InvalidKError):
        kmeans_cluster(matrix, 0, seed=0)
    with pytest.raises(InvalidKError):
        kmeans_cluster(matrix, len(matrix) + 1, seed=0)


def test_scale_covariance_of_similarity_and_partition():
    matrix, truth = blob_matrix(13, centers=((0, 0), (6, 6), (-6, 6)), per_blob=6)
    scale = 3.7
    sigma = median_heuristic_sigma(matrix)
    model_a = spectral_embed(build_similarity(matrix, sigma), k=3)
    model_b = spectral_embed(build_similarity(matrix * scale, sigma * scale), k=3)
    assert np.allclose(model_a.similarity, model_b.similarity, atol=1e-12)
    eps = 1e-8
    zeros_a = int((model_a.eigenvalues < eps * max(1, model_a.eigenvalues[-1])).sum())
    zeros_b = int((model_b.eigenvalues < eps * max(1, model_b.eigenvalues[-1])).sum())
    assert zeros_a == zeros_b
    labels_a = kmeans_cluster(model_a.embedding, 3, seed=0)
    labels_b = kmeans_cluster(model_b.embedding, 3, seed=0)
    assert adjusted_rand_score(labels_a, labels_b) == 1.0


def test_non_converging_input_raises_eigensolver_failure():
    from iconviz.errors import EigensolverFailure
    from iconviz.spectral import SpectralModel

    poisoned = np.full((4, 4), np.nan)
    with pytest.raises(EigensolverFailure):
        spectral_embed(SpectralModel(sigma=1.0, similarity=poisoned))


# --- cluster alignment --------------------------------------------------------

def test_align_unanimous_cluster():
    assignments = np.zeros(5, dtype=int)
    result = align_clusters(assignments, [Pattern.P5] * 5)
    assert result.mapping == {0: Pattern.P5}
    assert result.agreement == 1.0


def test_align_majority_with_tie_toward_lower_pattern():
    assignments = np.zeros(5, dtype=int)
    labels = [Pattern.P2] * 3 + [Pattern.P4] * 2
    result = align_clusters(assignments, labels)
    assert result.mapping == {0: Pattern.P2}
    assert result.agreement == pytest.approx(0.6)
    tied = align_clusters(np.zeros(4, dtype=int), [Pattern.P2, Pattern.P2, Pattern.P4, Pattern.P4])
    assert tied.mapping == {0: Pattern.P2}


def test_align_reports_empty_cluster():
    assignments = np.array([0, 0, 1])
    labels = [Pattern.P1, Pattern.P1, Pattern.P7]
    result = align_clusters(assignments, labels, k=3)
    assert 2 not in result.mapping
    assert any("empty" in w for w in result.warnings)


# --- estimator facade ----------------------------------------------------------

def test_clusterer_estimator_end_to_end():
    matrix, truth = blob_matrix(21, centers=((0, 0), (9, 9)), per_blob=8)
    clusterer = SpectralChainClusterer(k=2, seed=0)
    labels = clusterer.fit_predict(matrix)
    assert adjusted_rand_score(truth, labels) == 1.0
    assert clusterer.k_ == 2
    assert clusterer.eigenvalues_.shape == (16,)
    assert clusterer.embedding_.shape == (16, 2)
    params = clusterer.get_params()
    assert params["k"] == 2 and params["seed"] == 0
    assert clone(clusterer).get_params() == params
