"""Five-dimensional chain descriptors used by the clustering pipeline.

Density is computed on the directed chain (mutual edges count twice, which
separates path-like from mutual-extended shapes at equal node counts).
Clustering coefficient and shortest paths use the undirected projection:
those are the classic small-world definitions, and the projection is always
connected because every chain node is reachable from an outbreak source.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from .contagion import ContagionChain
from .errors import DegenerateChainError, TooFewChainsError

FEATURE_NAMES = ("n_nodes", "n_edges", "density", "avg_clustering", "avg_path_len")


@dataclass(frozen=True)
class ChainFeatures:
    n_nodes: int
    n_edges: int
    density: float
    avg_clustering: float
    avg_path_length: float

    def as_array(self) -> np.ndarray:
        return np.array(
            [self.n_nodes, self.n_edges, self.density, self.avg_clustering, self.avg_path_length],
            dtype=float,
        )


def _undirected_neighbors(chain: ContagionChain) -> dict[str, set[str]]:
    neighbors: dict[str, set[str]] = {node: set() for node in chain.node_ids}
    for a, b in chain.contagion_edges:
        neighbors[a].add(b)
        neighbors[b].add(a)
    return neighbors


def _avg_clustering(neighbors: dict[str, set[str]]) -> float:
    coefficients = []
    for node, adjacent in neighbors.items():
        k = len(adjacent)
        if k < 2:
            continue
        links = 0
        adjacent_list = list(adjacent)
        for i, u in enumerate(adjacent_list):
            for v in adjacent_list[i + 1 :]:
                if v in neighbors[u]:
                    links += 1
        coefficients.append(2.0 * links / (k * (k - 1)))
    # fsum: exactly-rounded total, so node iteration order (set-hash
    # dependent) cannot leak into the last float bit
    return math.fsum(coefficients) / len(neighbors)


def _avg_path_length(neighbors: dict[str, set[str]]) -> float:
    """Mean shortest-path length over all unordered node pairs (BFS per node)."""
    nodes = list(neighbors)
    total = 0
    pairs = 0
    for start in nodes:
        dist = {start: 0}
        queue = deque([start])
        while queue:
            node = queue.popleft()
            for neighbor in neighbors[node]:
                if neighbor not in dist:
                    dist[neighbor] = dist[node] + 1
                    queue.append(neighbor)
        total += sum(dist.values())
        pairs += len(dist) - 1
    # each unordered pair counted twice; projection is connected by construction
    return total / pairs


def compute_features(chain: ContagionChain) -> ChainFeatures:
    """Compute the five-dimensional descriptor of one chain."""
    n = len(chain.node_ids)
    if n < 2:
        raise DegenerateChainError(f"chain {chain.chain_id} has {n} node(s)")
    e = len(chain.contagion_edges)
    neighbors = _undirected_neighbors(chain)
    return ChainFeatures(
        n_nodes=n,
        n_edges=e,
        density=e / (n * (n - 1)),
        avg_clustering=_avg_clustering(neighbors),
        avg_path_length=_avg_path_length(neighbors),
    )


def feature_matrix(features: list[ChainFeatures]) -> np.ndarray:
    return np.vstack([f.as_array() for f in features]) if features else np.empty((0, 5))


def standardize_features(features: list[ChainFeatures] | np.ndarray) -> np.ndarray:
    """Per-column z-scores (population std); zero-variance columns become 0."""
    matrix = features if isinstance(features, np.ndarray) else feature_matrix(features)
    if matrix.shape[0] < 2:
        raise TooFewChainsError(f"need >= 2 chains, got {matrix.shape[0]}")
    mean = matrix.mean(axis=0)
    std = matrix.std(axis=0)
    scale = np.where(std == 0.0, 1.0, std)
    standardized = (matrix - mean) / scale
    standardized[:, std == 0.0] = 0.0
    return standardized


class ChainFeatureExtractor(TransformerMixin, BaseEstimator):
    """Transformer mapping contagion chains to (standardized) feature rows.

    fit() learns column means and population stds over the training chains;
    transform() emits the z-scored 5-column matrix (or raw values with
    standardize=False), so the extractor drops into sklearn pipelines in
    front of any clusterer.
    """

    def __init__(self, standardize: bool = True):
        self.standardize = standardize

    def fit(self, X: list[ContagionChain], y=None):
        matrix = feature_matrix([compute_features(chain) for chain in X])
        if self.standardize and matrix.shape[0] < 2:
            raise TooFewChainsError(f"need >= 2 chains, got {matrix.shape[0]}")
        self.mean_ = matrix.mean(axis=0) if len(X) else np.zeros(5)
        std = matrix.std(axis=0) if len(X) else np.ones(5)
        self.zero_variance_ = std == 0.0
        self.scale_ = np.where(self.zero_variance_, 1.0, std)
        return self

    def transform(self, X: list[ContagionChain]) -> np.ndarray:
        matrix = feature_matrix([compute_features(chain) for chain in X])
        if not self.standardize:
            return matrix
        standardized = (matrix - self.mean_) / self.scale_
        standardized[:, self.zero_variance_] = 0.0
        return standardized
