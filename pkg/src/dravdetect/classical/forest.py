"""Random forest: bagged Gini decision trees with random feature
subsets, hard-vote probabilities."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import DataError
from .validation import predict_labels


@dataclass
class TreeNode:
    feature: int = -1
    threshold: float = 0.0
    left: "TreeNode | None" = None
    right: "TreeNode | None" = None
    counts: np.ndarray | None = None  # leaf class counts

    @property
    def is_leaf(self) -> bool:
        return self.counts is not None


def _gini(counts: np.ndarray) -> float:
    n = counts.sum()
    if n == 0:
        return 0.0
    p = counts / n
    return float(1.0 - np.sum(p * p))


def _best_gini_split(X, y, feature_idx):
    """Best (feature, threshold) by Gini impurity decrease; ties keep the
    first candidate in feature order / lowest threshold."""
    n = len(y)
    best = None  # (weighted_impurity, feature, threshold)
    for f in feature_idx:
        col = X[:, f]
        order = np.argsort(col, kind="stable")
        sv = col[order]
        sy = y[order]
        left = np.zeros(2)
        total = np.bincount(sy, minlength=2).astype(np.float64)
        for k in range(n - 1):
            left[sy[k]] += 1
            if sv[k] == sv[k + 1]:
                continue
            nl = k + 1
            nr = n - nl
            w = (nl * _gini(left) + nr * _gini(total - left)) / n
            if best is None or w < best[0] - 1e-12:
                best = (w, f, (sv[k] + sv[k + 1]) / 2.0)
    return best


def _grow_tree(X, y, rng, max_features, min_samples_split=2) -> TreeNode:
    counts = np.bincount(y, minlength=2).astype(np.float64)
    if len(y) < min_samples_split or counts.max() == len(y):
        return TreeNode(counts=counts)
    if max_features is None or max_features >= X.shape[1]:
        feature_idx = np.arange(X.shape[1])
    else:
        feature_idx = np.sort(rng.choice(X.shape[1], size=max_features, replace=False))
    best = _best_gini_split(X, y, feature_idx)
    if best is None:
        return TreeNode(counts=counts)
    _, f, thr = best
    mask = X[:, f] <= thr
    return TreeNode(
        feature=int(f),
        threshold=float(thr),
        left=_grow_tree(X[mask], y[mask], rng, max_features, min_samples_split),
        right=_grow_tree(X[~mask], y[~mask], rng, max_features, min_samples_split),
    )


def _tree_vote(node: TreeNode, x: np.ndarray) -> int:
    while not node.is_leaf:
        node = node.left if x[node.feature] <= node.threshold else node.right
    return int(np.argmax(node.counts))  # tie -> lower class index


@dataclass
class ForestModel:
    trees: list[TreeNode]
    n_features: int
    seed: int

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=np.float64)
        if X.shape[1] != self.n_features:
            raise DataError(
                f"model trained on {self.n_features} features, got {X.shape[1]}"
            )
        votes = np.zeros((len(X), 2))
        for tree in self.trees:
            for i, x in enumerate(X):
                votes[i, _tree_vote(tree, x)] += 1
        return votes / len(self.trees)

    def predict(self, X: np.ndarray) -> np.ndarray:
        return predict_labels(self.predict_proba(X))


def train_random_forest(
    X: np.ndarray, y: np.ndarray, n_trees: int = 100, seed: int = 42
) -> ForestModel:
    """Bootstrap per tree (n draws with replacement), sqrt(n_features)
    candidate features per split, grown until pure or below 2 samples.
    Per-tree seed = base seed + tree index, so serial and parallel
    training agree."""
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    if len(X) == 0:
        raise DataError("cannot train a forest on empty data")
    n = len(y)
    max_features = max(1, int(math.sqrt(X.shape[1])))
    trees = []
    for t in range(n_trees):
        rng = np.random.default_rng(seed + t)
        idx = rng.integers(0, n, size=n)
        trees.append(_grow_tree(X[idx], y[idx], rng, max_features))
    return ForestModel(trees=trees, n_features=X.shape[1], seed=seed)
