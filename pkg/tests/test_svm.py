import numpy as np
import pytest

from dravdetect.classical import SvmParams, svm_grid_search, train_svm
from dravdetect.classical.svm import resolve_gamma
from dravdetect.errors import DataError, UsageError


def separable_clusters(seed=0, n=20):
    rng = np.random.default_rng(seed)
    X = np.vstack([rng.normal(-2, 0.3, (n, 2)), rng.normal(2, 0.3, (n, 2))])
    y = np.array([0] * n + [1] * n)
    return X, y


def test_linear_separable_perfect_training_accuracy():
    X, y = separable_clusters()
    model = train_svm(X, y, SvmParams(kernel="linear", C=1.0))
    assert (model.predict(X) == y).all()


def test_xor_rbf():
    X = np.array([[0, 0], [1, 1], [0, 1], [1, 0]], dtype=float)
    y = np.array([1, 1, 0, 0])
    model = train_svm(X, y, SvmParams(kernel="rbf", C=10.0))
    assert (model.predict(X) == y).all()


@pytest.mark.parametrize("kernel", ["linear", "rbf", "poly", "sigmoid"])
def test_dual_feasibility_all_kernels(kernel):
    rng = np.random.default_rng(hash(kernel) % 2**32)
    for _ in range(5):
        n = int(rng.integers(6, 25))
        X = rng.normal(size=(n, 3))
        y = rng.integers(0, 2, n)
        if len(set(y.tolist())) < 2:
            continue
        C = float(rng.choice([0.1, 1.0, 10.0]))
        model = train_svm(X, y, SvmParams(kernel=kernel, C=C))
        assert model.alpha.min() >= -1e-9
        assert model.alpha.max() <= C + 1e-9
        assert abs((model.alpha * model.train_signs).sum()) <= 1e-6


def test_probabilities_normalized_and_consistent():
    X, y = separable_clusters(seed=3)
    model = train_svm(X, y, SvmParams(kernel="rbf", C=1.0))
    proba = model.predict_proba(X)
    assert np.abs(proba.sum(axis=1) - 1).max() < 1e-9
    assert ((proba >= 0) & (proba <= 1)).all()
    # Platt direction: class-1 side gets class-1 probability > 0.5
    assert (np.argmax(proba, axis=1) == model.predict(X)).all()


def test_single_class_rejected():
    X = np.zeros((4, 2))
    with pytest.raises(DataError):
        train_svm(X, np.zeros(4, dtype=int))


def test_non_finite_rejected():
    X, y = separable_clusters()
    X[0, 0] = np.nan
    with pytest.raises(DataError):
        train_svm(X, y)


def test_gamma_resolution():
    X = np.array([[0.0, 1.0], [2.0, 3.0]])
    assert resolve_gamma("auto", X) == pytest.approx(0.5)
    assert resolve_gamma("scale", X) == pytest.approx(1 / (2 * X.var()))
    assert resolve_gamma(0.3, X) == pytest.approx(0.3)
    with pytest.raises(UsageError):
        resolve_gamma(-1.0, X)


def test_grid_search_evaluates_32_combinations():
    X, y = separable_clusters(n=15)
    result, model = svm_grid_search(X, y, folds=3, seed=42)
    assert len(result.entries) == 32
    kernels = {e.params.kernel for e in result.entries}
    assert kernels == {"linear", "rbf", "poly", "sigmoid"}
    assert {e.params.C for e in result.entries} == {0.1, 1.0, 10.0, 100.0}
    assert (model.predict(X) == y).all()


def test_grid_search_tie_breaks_by_enumeration_order():
    # fully separable -> many perfect combinations; linear is enumerated first
    X, y = separable_clusters(n=15)
    result, _ = svm_grid_search(X, y, folds=3, seed=42)
    perfect = [i for i, e in enumerate(result.entries) if e.mean_score == 1.0]
    assert result.best_index == perfect[0]


def test_grid_search_rejects_too_many_folds():
    X = np.random.default_rng(0).normal(size=(8, 2))
    y = np.array([0, 0, 0, 0, 1, 1, 1, 1])
    with pytest.raises(UsageError):
        svm_grid_search(X, y, folds=5, seed=1)
