"""Soft-margin SVM trained with SMO (maximal-violating-pair working set
selection), Platt-scaled probabilities, and grid search over kernels."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from ..errors import DataError, UsageError
from ..metrics import evaluate
from .validation import predict_labels, stratified_folds

KERNELS = ("linear", "rbf", "poly", "sigmoid")
GRID_C = (0.1, 1.0, 10.0, 100.0)
GRID_GAMMA = ("scale", "auto")


@dataclass(frozen=True)
class SvmParams:
    kernel: str = "rbf"
    C: float = 1.0
    gamma: str | float = "scale"  # "scale" | "auto" | explicit positive value
    degree: int = 3
    coef0: float = 0.0

    def __post_init__(self):
        if self.kernel not in KERNELS:
            raise UsageError(f"unknown kernel {self.kernel!r}, expected one of {KERNELS}")
        if self.C <= 0:
            raise UsageError(f"C must be positive, got {self.C}")


def resolve_gamma(gamma: str | float, X: np.ndarray) -> float:
    if isinstance(gamma, (int, float)):
        if gamma <= 0:
            raise UsageError(f"gamma must be positive, got {gamma}")
        return float(gamma)
    n_features = X.shape[1]
    if gamma == "auto":
        return 1.0 / n_features
    if gamma == "scale":
        var = float(X.var())
        return 1.0 / (n_features * var) if var > 0 else 1.0 / n_features
    raise UsageError(f"unknown gamma mode {gamma!r}")


def kernel_matrix(
    X: np.ndarray, Z: np.ndarray, kernel: str, gamma: float, degree: int, coef0: float
) -> np.ndarray:
    if kernel == "linear":
        return X @ Z.T
    dot = X @ Z.T
    if kernel == "rbf":
        sq = (
            np.sum(X**2, axis=1)[:, None]
            - 2 * dot
            + np.sum(Z**2, axis=1)[None, :]
        )
        return np.exp(-gamma * np.maximum(sq, 0.0))
    if kernel == "poly":
        return (gamma * dot + coef0) ** degree
    if kernel == "sigmoid":
        return np.tanh(gamma * dot + coef0)
    raise UsageError(f"unknown kernel {kernel!r}")


def _smo_solve(K: np.ndarray, s: np.ndarray, C: float, tol: float, max_iter: int):
    """Solve min 1/2 a'Qa - e'a  s.t. 0 <= a <= C, s'a = 0  (Q = ss' * K).

    Returns (alpha, bias).  s is the +/-1 label vector."""
    n = len(s)
    alpha = np.zeros(n)
    u = np.zeros(n)  # u_i = sum_j alpha_j s_j K_ij
    neg_e = s.astype(np.float64).copy()  # -E_i = s_i - u_i
    for _ in range(max_iter):
        up = (alpha < C - 1e-12) & (s > 0) | (alpha > 1e-12) & (s < 0)
        low = (alpha < C - 1e-12) & (s < 0) | (alpha > 1e-12) & (s > 0)
        if not up.any() or not low.any():
            break
        i = np.flatnonzero(up)[np.argmax(neg_e[up])]
        j = np.flatnonzero(low)[np.argmin(neg_e[low])]
        m, M = neg_e[i], neg_e[j]
        if m - M <= tol:
            break
        if s[i] != s[j]:
            L = max(0.0, alpha[j] - alpha[i])
            H = min(C, C + alpha[j] - alpha[i])
        else:
            L = max(0.0, alpha[i] + alpha[j] - C)
            H = min(C, alpha[i] + alpha[j])
        eta = max(K[i, i] + K[j, j] - 2 * K[i, j], 1e-12)
        # E_i - E_j = neg_e[j] - neg_e[i]
        aj_new = np.clip(alpha[j] + s[j] * (neg_e[j] - neg_e[i]) / eta, L, H)
        dj = aj_new - alpha[j]
        if abs(dj) < 1e-14:
            break
        di = -s[i] * s[j] * dj
        alpha[i] += di
        alpha[j] = aj_new
        u += di * s[i] * K[:, i] + dj * s[j] * K[:, j]
        neg_e = s - u
    up = (alpha < C - 1e-12) & (s > 0) | (alpha > 1e-12) & (s < 0)
    low = (alpha < C - 1e-12) & (s < 0) | (alpha > 1e-12) & (s > 0)
    hi = neg_e[up].max() if up.any() else 0.0
    lo = neg_e[low].min() if low.any() else 0.0
    bias = (hi + lo) / 2.0
    return alpha, bias


def _fit_platt(decision: np.ndarray, y: np.ndarray, max_iter: int = 100):
    """Newton fit of P(class 1 | f) = 1 / (1 + exp(A f + B))."""
    prior1 = float(np.sum(y == 1))
    prior0 = float(len(y) - prior1)
    hi = (prior1 + 1.0) / (prior1 + 2.0)
    lo = 1.0 / (prior0 + 2.0)
    t = np.where(y == 1, hi, lo)
    A, B = 0.0, math.log((prior0 + 1.0) / (prior1 + 1.0))
    f = decision

    def nll(A, B):
        z = A * f + B
        # stable log(1 + exp(z)) formulation
        return float(np.sum(np.where(z >= 0, t * z + np.log1p(np.exp(-z)),
                                     (t - 1) * z + np.log1p(np.exp(z)))))

    sigma = 1e-12
    best = nll(A, B)
    for _ in range(max_iter):
        z = A * f + B
        p = np.where(z >= 0, np.exp(-z) / (1 + np.exp(-z)), 1 / (1 + np.exp(z)))
        d1 = t - p
        d2 = p * (1 - p)
        g1 = float(np.sum(f * d1))
        g2 = float(np.sum(d1))
        if abs(g1) < 1e-5 and abs(g2) < 1e-5:
            break
        h11 = float(np.sum(f * f * d2)) + sigma
        h22 = float(np.sum(d2)) + sigma
        h21 = float(np.sum(f * d2))
        det = h11 * h22 - h21 * h21
        dA = -(h22 * g1 - h21 * g2) / det
        dB = -(-h21 * g1 + h11 * g2) / det
        step = 1.0
        while step >= 1e-10:
            cand = nll(A + step * dA, B + step * dB)
            if cand < best + 1e-12:
                A += step * dA
                B += step * dB
                best = cand
                break
            step /= 2.0
        else:
            break
    return A, B


@dataclass
class SvmModel:
    params: SvmParams
    gamma_value: float
    support_vectors: np.ndarray
    dual_coef: np.ndarray  # alpha_i * s_i for support vectors
    bias: float
    platt_a: float
    platt_b: float
    n_features: int
    # full-problem duals kept for feasibility checks
    alpha: np.ndarray
    train_signs: np.ndarray

    def decision_function(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=np.float64)
        if X.shape[1] != self.n_features:
            raise DataError(
                f"model trained on {self.n_features} features, got {X.shape[1]}"
            )
        if len(self.support_vectors) == 0:
            return np.full(len(X), self.bias)
        K = kernel_matrix(
            X,
            self.support_vectors,
            self.params.kernel,
            self.gamma_value,
            self.params.degree,
            self.params.coef0,
        )
        return K @ self.dual_coef + self.bias

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        f = self.decision_function(X)
        z = np.clip(self.platt_a * f + self.platt_b, -500, 500)
        p1 = 1.0 / (1.0 + np.exp(z))
        return np.column_stack([1.0 - p1, p1])

    def predict(self, X: np.ndarray) -> np.ndarray:
        return predict_labels(self.predict_proba(X))


def train_svm(
    X: np.ndarray,
    y: np.ndarray,
    params: SvmParams = SvmParams(),
    tol: float = 1e-3,
    max_iter: int = 200_000,
) -> SvmModel:
    """Class index 1 maps to the +1 side of the margin."""
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    if not np.all(np.isfinite(X)):
        raise DataError("non-finite values in the feature matrix")
    if len(set(y.tolist())) < 2:
        raise DataError("SVM training needs both classes present")
    s = np.where(y == 1, 1.0, -1.0)
    gamma = resolve_gamma(params.gamma, X)
    K = kernel_matrix(X, X, params.kernel, gamma, params.degree, params.coef0)
    alpha, bias = _smo_solve(K, s, params.C, tol, max_iter)
    sv = alpha > 1e-10
    decision = K @ (alpha * s) + bias
    platt_a, platt_b = _fit_platt(decision, y)
    return SvmModel(
        params=params,
        gamma_value=gamma,
        support_vectors=X[sv].copy(),
        dual_coef=(alpha * s)[sv].copy(),
        bias=bias,
        platt_a=platt_a,
        platt_b=platt_b,
        n_features=X.shape[1],
        alpha=alpha,
        train_signs=s,
    )


@dataclass
class CvEntry:
    params: SvmParams
    fold_scores: list[float]
    mean_score: float


@dataclass
class CvResult:
    entries: list[CvEntry]
    best_index: int

    @property
    def best_params(self) -> SvmParams:
        return self.entries[self.best_index].params

    @property
    def best_score(self) -> float:
        return self.entries[self.best_index].mean_score


def svm_grid_search(
    X: np.ndarray,
    y: np.ndarray,
    kernels=KERNELS,
    Cs=GRID_C,
    gammas=GRID_GAMMA,
    folds: int = 5,
    seed: int = 42,
    scoring: str = "macro_f1",
) -> tuple[CvResult, SvmModel]:
    """Exhaustive kernel x C x gamma search scored by mean validation
    macro-F1 over stratified folds; the winner (first in enumeration
    order on ties) is refit on the full data."""
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    fold_idx = stratified_folds(y, folds, seed)
    entries: list[CvEntry] = []
    for kernel, C, gamma in product(kernels, Cs, gammas):
        params = SvmParams(kernel=kernel, C=C, gamma=gamma)
        scores = []
        for val_idx in fold_idx:
            mask = np.ones(len(y), dtype=bool)
            mask[val_idx] = False
            model = train_svm(X[mask], y[mask], params)
            pred = model.predict(X[val_idx])
            report = evaluate(y[val_idx], pred)
            scores.append(
                report.macro_f1 if scoring == "macro_f1" else report.accuracy
            )
        entries.append(CvEntry(params, scores, float(np.mean(scores))))
    best_index = max(range(len(entries)), key=lambda i: (entries[i].mean_score, -i))
    result = CvResult(entries=entries, best_index=best_index)
    return result, train_svm(X, y, result.best_params)
