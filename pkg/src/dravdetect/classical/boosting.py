"""Gradient boosting for binary logistic loss: depth-limited regression
trees on residuals with Newton leaf values and shrinkage."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..errors import DataError
from .validation import predict_labels

_EPS = 1e-12


@dataclass
class RegNode:
    feature: int = -1
    threshold: float = 0.0
    left: "RegNode | None" = None
    right: "RegNode | None" = None
    value: float | None = None

    @property
    def is_leaf(self) -> bool:
        return self.value is not None


def _best_mse_split(X, r):
    """Maximize sum_l^2/n_l + sum_r^2/n_r over all (feature, threshold)."""
    n = len(r)
    total = r.sum()
    best = None  # (score, feature, threshold)
    for f in range(X.shape[1]):
        col = X[:, f]
        order = np.argsort(col, kind="stable")
        sv = col[order]
        sr = r[order]
        csum = np.cumsum(sr)
        for k in range(n - 1):
            if sv[k] == sv[k + 1]:
                continue
            nl = k + 1
            sl = csum[k]
            score = sl * sl / nl + (total - sl) ** 2 / (n - nl)
            if best is None or score > best[0] + 1e-12:
                best = (score, f, (sv[k] + sv[k + 1]) / 2.0)
    return best


def _grow_reg_tree(X, r, h, depth, max_depth) -> RegNode:
    """Fit residuals r; leaf value is the Newton step sum(r)/sum(h)
    with h = p(1-p)."""
    if depth >= max_depth or len(r) < 2:
        return RegNode(value=float(r.sum() / (h.sum() + _EPS)))
    best = _best_mse_split(X, r)
    if best is None:
        return RegNode(value=float(r.sum() / (h.sum() + _EPS)))
    _, f, thr = best
    mask = X[:, f] <= thr
    return RegNode(
        feature=int(f),
        threshold=float(thr),
        left=_grow_reg_tree(X[mask], r[mask], h[mask], depth + 1, max_depth),
        right=_grow_reg_tree(X[~mask], r[~mask], h[~mask], depth + 1, max_depth),
    )


def _tree_output(node: RegNode, X: np.ndarray) -> np.ndarray:
    out = np.empty(len(X))
    for i, x in enumerate(X):
        n = node
        while not n.is_leaf:
            n = n.left if x[n.feature] <= n.threshold else n.right
        out[i] = n.value
    return out


def _log_loss(y: np.ndarray, p: np.ndarray) -> float:
    p = np.clip(p, _EPS, 1 - _EPS)
    return float(-np.mean(y * np.log(p) + (1 - y) * np.log(1 - p)))


@dataclass
class GbModel:
    f0: float
    trees: list[RegNode]
    learning_rate: float
    max_depth: int
    n_features: int
    train_loss_curve: list[float] = field(default_factory=list)

    def raw_scores(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=np.float64)
        if X.shape[1] != self.n_features:
            raise DataError(
                f"model trained on {self.n_features} features, got {X.shape[1]}"
            )
        F = np.full(len(X), self.f0)
        for tree in self.trees:
            F += self.learning_rate * _tree_output(tree, X)
        return F

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        p1 = 1.0 / (1.0 + np.exp(-self.raw_scores(X)))
        return np.column_stack([1.0 - p1, p1])

    def predict(self, X: np.ndarray) -> np.ndarray:
        return predict_labels(self.predict_proba(X))


def train_gradient_boosting(
    X: np.ndarray,
    y: np.ndarray,
    n_rounds: int = 100,
    learning_rate: float = 0.1,
    max_depth: int = 6,
) -> GbModel:
    """F0 = log-odds of the class-1 prior; each round fits residuals
    y - p and adds shrunken Newton leaf values.  The recorded loss
    curve has n_rounds + 1 points (index 0 = prior only)."""
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    if len(set(y.tolist())) < 2:
        raise DataError("gradient boosting needs both classes present")
    prior = y.mean()
    f0 = math.log(prior / (1 - prior))
    F = np.full(len(y), f0)
    trees: list[RegNode] = []
    curve = []
    for _ in range(n_rounds + 1):
        p = 1.0 / (1.0 + np.exp(-F))
        curve.append(_log_loss(y, p))
        if len(trees) == n_rounds:
            break
        r = y - p
        h = p * (1 - p)
        tree = _grow_reg_tree(X, r, h, 0, max_depth)
        trees.append(tree)
        F += learning_rate * _tree_output(tree, X)
    return GbModel(
        f0=f0,
        trees=trees,
        learning_rate=learning_rate,
        max_depth=max_depth,
        n_features=X.shape[1],
        train_loss_curve=curve,
    )
