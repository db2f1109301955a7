"""End-to-end training and prediction assembly used by the CLI."""

from __future__ import annotations

import numpy as np

from .bundle import ModelBundle
from .classical import (
    SvmParams,
    make_voting_model,
    predict_labels,
    svm_grid_search,
    train_gradient_boosting,
    train_random_forest,
    train_svm,
)
from .config import PipelineConfig
from .corpus import LabeledCorpus, encode_labels, split_train_validation
from .errors import DataError
from .features import (
    Word2VecConfig,
    apply_scaler,
    embedding_matrix,
    fit_scaler,
    fit_tfidf,
    fuse_matrices,
    tfidf_matrix,
    train_word2vec,
)
from .interchange import PredictionRow
from .metrics import EvalReport, evaluate
from .textprep import preprocess_corpus


def build_features(bundle_parts, corpus: LabeledCorpus, strip_indic_digits=True):
    tfidf, w2v, scaler = bundle_parts
    docs = preprocess_corpus(corpus, strip_indic_digits)
    X = fuse_matrices(tfidf_matrix(tfidf, docs), embedding_matrix(w2v, docs))
    return apply_scaler(scaler, X)


def _train_classifier(config: PipelineConfig, X: np.ndarray, y: np.ndarray):
    if config.model == "svm":
        params = SvmParams(
            kernel=config.svm_kernel, C=config.svm_c, gamma=config.svm_gamma
        )
        return train_svm(X, y, params), None
    if config.model == "svm-grid":
        cv_result, model = svm_grid_search(
            X,
            y,
            folds=config.cv_folds,
            seed=config.seed,
            scoring=config.grid_scoring,
        )
        return model, cv_result
    if config.model == "rf":
        return train_random_forest(X, y, config.n_trees, config.seed), None
    if config.model == "gb":
        return (
            train_gradient_boosting(
                X, y, config.gb_rounds, config.gb_learning_rate, config.gb_max_depth
            ),
            None,
        )
    if config.model == "ensemble":
        rf = train_random_forest(X, y, config.n_trees, config.seed)
        gb = train_gradient_boosting(
            X, y, config.gb_rounds, config.gb_learning_rate, config.gb_max_depth
        )
        return make_voting_model([rf, gb]), None
    raise AssertionError(f"unreachable model {config.model!r}")


def train_pipeline(
    config: PipelineConfig, corpus: LabeledCorpus
) -> tuple[ModelBundle, EvalReport]:
    """80/20 split, feature models fitted on the training portion only,
    classifier trained and scored on the held-out validation slice."""
    train, validation = split_train_validation(
        corpus, config.validation_fraction, config.seed
    )
    if len(train) == 0:
        raise DataError("training split is empty")
    docs = preprocess_corpus(train, config.strip_indic_digits)
    tfidf = fit_tfidf(docs, max_features=config.tfidf_max_features)
    w2v = train_word2vec(
        docs,
        Word2VecConfig(
            dim=config.embedding_dim,
            window=config.w2v_window,
            epochs=config.w2v_epochs,
            negatives=config.w2v_negatives,
            seed=config.seed,
        ),
    )
    X_raw = fuse_matrices(tfidf_matrix(tfidf, docs), embedding_matrix(w2v, docs))
    scaler = fit_scaler(X_raw)
    X = apply_scaler(scaler, X_raw)
    y, label_map = encode_labels(train)
    classifier, cv_result = _train_classifier(config, X, y)
    bundle = ModelBundle(
        tfidf=tfidf,
        word2vec=w2v,
        scaler=scaler,
        classifier=classifier,
        label_map=label_map,
        meta={"config": config.to_dict(), "format": "dravdetect-pipeline"},
    )
    if len(validation) > 0:
        X_val = build_features(
            (tfidf, w2v, scaler), validation, config.strip_indic_digits
        )
        y_val, _ = encode_labels(validation)
        report = evaluate(y_val, predict_labels(classifier.predict_proba(X_val)))
    else:
        X_tr = X
        report = evaluate(y, predict_labels(classifier.predict_proba(X_tr)))
    return bundle, report


def predict_pipeline(bundle: ModelBundle, corpus: LabeledCorpus) -> list[PredictionRow]:
    strip = bool(bundle.meta.get("config", {}).get("strip_indic_digits", True))
    X = build_features((bundle.tfidf, bundle.word2vec, bundle.scaler), corpus, strip)
    proba = bundle.classifier.predict_proba(X)
    labels = predict_labels(proba)
    ai_col = bundle.label_map.encode("AI")
    return [
        PredictionRow(
            id=r.id,
            gold=r.label,
            predicted=bundle.label_map.decode(int(labels[i])),
            p_ai=float(proba[i, ai_col]),
        )
        for i, r in enumerate(corpus.reviews)
    ]
