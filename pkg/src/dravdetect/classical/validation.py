"""Cross-validation folds and the shared prediction surface helpers."""

from __future__ import annotations

import numpy as np

from ..errors import DataError, UsageError
from ..metrics import evaluate


def predict_labels(proba: np.ndarray) -> np.ndarray:
    """argmax with ties resolved to the lower class index."""
    return np.argmax(proba, axis=1).astype(np.int64)


def stratified_folds(y: np.ndarray, folds: int, seed: int) -> list[np.ndarray]:
    """Deterministic stratified fold assignment: per-class shuffle, then
    round-robin over folds so every fold contains both classes."""
    y = np.asarray(y)
    class_counts = [int((y == c).sum()) for c in (0, 1)]
    if folds > min(c for c in class_counts if c > 0):
        raise UsageError(
            f"{folds} folds but smallest class has {min(class_counts)} samples"
        )
    rng = np.random.default_rng(seed)
    assignment = np.empty(len(y), dtype=np.int64)
    for c in (0, 1):
        idx = np.flatnonzero(y == c)
        rng.shuffle(idx)
        assignment[idx] = np.arange(len(idx)) % folds
    return [np.flatnonzero(assignment == f) for f in range(folds)]


def cross_validate(trainer, X, y, folds: int = 5, seed: int = 42) -> list[float]:
    """Per-fold validation macro-F1 of `trainer(X_train, y_train) -> model`."""
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    if len(X) != len(y):
        raise DataError("feature matrix and labels differ in length")
    scores = []
    for val_idx in stratified_folds(y, folds, seed):
        mask = np.ones(len(y), dtype=bool)
        mask[val_idx] = False
        model = trainer(X[mask], y[mask])
        proba = model.predict_proba(X[val_idx])
        scores.append(evaluate(y[val_idx], predict_labels(proba)).macro_f1)
    return scores
