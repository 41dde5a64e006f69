"""Spectral clustering of chain feature vectors.

Three steps over standardized features: a fully connected Gaussian
similarity graph, the unnormalized Laplacian L = D - W whose first k
eigenvectors embed the chains, and k-means on the embedding rows. The
number of zero eigenvalues of L equals the number of connected components
of the similarity graph, which drives the automatic choice of k.

k-means is written here rather than borrowed: the contract pins an
absolute 1e-6 tolerance on centroid movement and seeding on the
lexicographically canonicalized row order, which makes results invariant
under row permutation for a fixed seed.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin

from .errors import EigensolverFailure, InvalidKError
from .patterns import Pattern

log = logging.getLogger("iconviz.spectral")

ZERO_EIGENVALUE_REL_TOL = 1e-8
KMEANS_RESTARTS = 10
KMEANS_MAX_ITER = 300
KMEANS_TOL = 1e-6


@dataclass
class SpectralModel:
    """State of the pipeline; fields fill in as the steps run."""

    sigma: float
    similarity: np.ndarray
    laplacian: np.ndarray | None = None
    eigenvalues: np.ndarray | None = None
    eigenvectors: np.ndarray | None = None
    k: int | None = None
    embedding: np.ndarray | None = None
    assignments: np.ndarray | None = None


@dataclass
class ClusterAlignment:
    mapping: dict[int, Pattern]
    agreement: float
    warnings: list[str] = field(default_factory=list)


def _pairwise_distances(matrix: np.ndarray) -> np.ndarray:
    diff = matrix[:, None, :] - matrix[None, :, :]
    return np.sqrt((diff**2).sum(axis=2))


def median_heuristic_sigma(matrix: np.ndarray) -> float:
    """Median of the pairwise Euclidean distances; 1.0 when that median is 0."""
    n = matrix.shape[0]
    dist = _pairwise_distances(matrix)
    upper = dist[np.triu_indices(n, k=1)]
    if upper.size == 0:
        return 1.0
    median = float(np.median(upper))
    return median if median > 0.0 else 1.0


def build_similarity(matrix: np.ndarray, sigma: float | None = None) -> SpectralModel:
    """Fully connected Gaussian similarity: s_ij = exp(-||xi-xj||^2 / (2 sigma^2)).

    The diagonal is zero, and entries are mirrored from one computation per
    pair so W is exactly symmetric.
    """
    if sigma is None:
        sigma = median_heuristic_sigma(matrix)
    dist_sq = _pairwise_distances(matrix) ** 2
    similarity = np.exp(-dist_sq / (2.0 * sigma * sigma))
    np.fill_diagonal(similarity, 0.0)
    similarity = np.triu(similarity, k=1)
    similarity = similarity + similarity.T
    return SpectralModel(sigma=float(sigma), similarity=similarity)


def laplacian_matrix(similarity: np.ndarray) -> np.ndarray:
    return np.diag(similarity.sum(axis=1)) - similarity


def choose_k(eigenvalues: np.ndarray, override: int | None = None) -> int:
    """Pick the cluster count.

    Explicit override wins; else the count of (numerically) zero
    eigenvalues when more than one similarity-graph component exists; else
    the largest eigengap over 2 <= j <= min(10, n-1). With only two chains
    the gap range is empty and k falls back to 2.
    """
    n = eigenvalues.shape[0]
    if override is not None:
        if override < 1 or override > n:
            raise InvalidKError(override, n)
        return override
    eps = ZERO_EIGENVALUE_REL_TOL * max(1.0, float(eigenvalues[-1]))
    zero_count = int((eigenvalues < eps).sum())
    if zero_count > 1:
        return zero_count
    k_max = min(10, n - 1)
    if k_max < 2:
        return min(2, n)
    gaps = eigenvalues[2 : k_max + 1] - eigenvalues[1:k_max]
    return int(np.argmax(gaps)) + 2


def spectral_embed(model: SpectralModel, k: int | None = None) -> SpectralModel:
    """Eigendecompose L = D - W and keep the first k eigenvectors as rows."""
    model.laplacian = laplacian_matrix(model.similarity)
    try:
        eigenvalues, eigenvectors = np.linalg.eigh(model.laplacian)
    except np.linalg.LinAlgError as exc:
        raise EigensolverFailure(str(exc)) from exc
    model.eigenvalues = eigenvalues
    model.eigenvectors = eigenvectors
    model.k = choose_k(eigenvalues, k)
    model.embedding = eigenvectors[:, : model.k]
    return model


def _lexicographic_order(matrix: np.ndarray) -> np.ndarray:
    # np.lexsort sorts by the last key first; feed columns reversed so the
    # first feature column is the primary key
    return np.lexsort(matrix.T[::-1])


def _kmeans_pp_init(points: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    n = points.shape[0]
    centers = np.empty((k, points.shape[1]))
    centers[0] = points[int(rng.integers(n))]
    closest_sq = ((points - centers[0]) ** 2).sum(axis=1)
    for c in range(1, k):
        total = float(closest_sq.sum())
        if total <= 0.0:
            idx = int(rng.integers(n))
        else:
            target = rng.random() * total
            idx = min(int(np.searchsorted(np.cumsum(closest_sq), target)), n - 1)
        centers[c] = points[idx]
        closest_sq = np.minimum(closest_sq, ((points - centers[c]) ** 2).sum(axis=1))
    return centers


def _kmeans_single(
    points: np.ndarray,
    centers: np.ndarray,
    max_iter: int,
    tol: float,
) -> tuple[np.ndarray, np.ndarray, float, list[float]]:
    """One Lloyd run; returns (labels, centers, wcss, wcss after each assignment)."""
    n, k = points.shape[0], centers.shape[0]
    history: list[float] = []
    labels = np.zeros(n, dtype=int)
    for _ in range(max_iter):
        dist_sq = ((points[:, None, :] - centers[None, :, :]) ** 2).sum(axis=2)
        labels = dist_sq.argmin(axis=1)
        history.append(float(dist_sq[np.arange(n), labels].sum()))
        new_centers = centers.copy()
        empty = []
        for c in range(k):
            members = points[labels == c]
            if members.shape[0]:
                new_centers[c] = members.mean(axis=0)
            else:
                empty.append(c)
        if empty:
            # relocate each empty center to a distinct farthest point
            point_cost = dist_sq[np.arange(n), labels]
            order = np.argsort(-point_cost, kind="stable")
            for slot, c in enumerate(empty):
                new_centers[c] = points[order[slot % n]]
        shift = float(np.sqrt(((new_centers - centers) ** 2).sum(axis=1)).max())
        centers = new_centers
        if shift <= tol:
            break
    dist_sq = ((points[:, None, :] - centers[None, :, :]) ** 2).sum(axis=2)
    labels = dist_sq.argmin(axis=1)
    wcss = float(dist_sq[np.arange(points.shape[0]), labels].sum())
    return labels, centers, wcss, history


def kmeans_cluster(
    embedding: np.ndarray,
    k: int,
    seed: int,
    n_restarts: int = KMEANS_RESTARTS,
    max_iter: int = KMEANS_MAX_ITER,
    tol: float = KMEANS_TOL,
) -> np.ndarray:
    """Seeded k-means++ with restarts; best run by within-cluster sum of squares.

    Rows are sorted lexicographically before seeding, so permuting the
    input rows permutes the labels accordingly and nothing else.
    """
    n = embedding.shape[0]
    if k < 1 or k > n:
        raise InvalidKError(k, n)
    order = _lexicographic_order(embedding)
    canonical = embedding[order]
    rng = np.random.default_rng(seed)
    best: tuple[float, np.ndarray] | None = None
    for _ in range(n_restarts):
        centers = _kmeans_pp_init(canonical, k, rng)
        labels, _, wcss, _ = _kmeans_single(canonical, centers, max_iter, tol)
        if best is None or wcss < best[0]:
            best = (wcss, labels)
    assignments = np.empty(n, dtype=int)
    assignments[order] = best[1]
    return assignments


def align_clusters(
    assignments: np.ndarray, structural_labels: list[Pattern], k: int | None = None
) -> ClusterAlignment:
    """Map each cluster to its modal structural pattern (ties to the lower
    pattern number) and report the overall agreement rate.

    Pass k to also flag clusters that ended up empty; those stay out of the
    mapping.
    """
    present = sorted(set(int(c) for c in assignments))
    clusters = list(range(k)) if k is not None else present
    mapping: dict[int, Pattern] = {}
    warnings: list[str] = []
    for cluster in clusters:
        votes = Counter(
            structural_labels[i] for i in range(len(structural_labels)) if assignments[i] == cluster
        )
        if not votes:
            warnings.append(f"cluster {cluster} is empty")
            continue
        top = max(votes.values())
        mapping[cluster] = min(p for p, count in votes.items() if count == top)
    hits = sum(
        1
        for i, pattern in enumerate(structural_labels)
        if mapping.get(int(assignments[i])) == pattern
    )
    agreement = hits / len(structural_labels) if structural_labels else 0.0
    for warning in warnings:
        log.warning(warning)
    return ClusterAlignment(mapping=mapping, agreement=agreement, warnings=warnings)


class SpectralChainClusterer(ClusterMixin, BaseEstimator):
    """sklearn-style front door for the full three-step pipeline.

    Parameters
    ----------
    k : int or None
        Cluster count; None picks it from the spectrum (zero-eigenvalue
        count, then largest eigengap).
    sigma : float or None
        Gaussian bandwidth; None uses the median pairwise distance.
    seed : int
        Seed for the k-means++ restarts.
    """

    def __init__(
        self,
        k: int | None = None,
        sigma: float | None = None,
        seed: int = 0,
        n_restarts: int = KMEANS_RESTARTS,
        max_iter: int = KMEANS_MAX_ITER,
        tol: float = KMEANS_TOL,
    ):
        self.k = k
        self.sigma = sigma
        self.seed = seed
        self.n_restarts = n_restarts
        self.max_iter = max_iter
        self.tol = tol

    def fit(self, X: np.ndarray, y=None):
        model = build_similarity(np.asarray(X, dtype=float), self.sigma)
        model = spectral_embed(model, self.k)
        model.assignments = kmeans_cluster(
            model.embedding, model.k, self.seed, self.n_restarts, self.max_iter, self.tol
        )
        self.model_ = model
        self.sigma_ = model.sigma
        self.affinity_matrix_ = model.similarity
        self.laplacian_ = model.laplacian
        self.eigenvalues_ = model.eigenvalues
        self.embedding_ = model.embedding
        self.k_ = model.k
        self.labels_ = model.assignments
        return self
