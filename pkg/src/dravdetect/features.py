"""Feature extraction: TF-IDF (unigrams + bigrams), averaged word
embeddings, feature fusion and standardization."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .errors import DataError
from .textprep import TokenizedDoc


# ---------------------------------------------------------------- TF-IDF


@dataclass
class TfidfModel:
    vocabulary: dict[str, int]  # term -> dense column index
    idf: np.ndarray  # aligned with column indices
    max_features: int
    ngram_range: tuple[int, int] = (1, 2)

    @property
    def n_features(self) -> int:
        return len(self.vocabulary)


def _ngrams(tokens: list[str], ngram_range: tuple[int, int]):
    lo, hi = ngram_range
    for n in range(lo, hi + 1):
        for i in range(len(tokens) - n + 1):
            yield " ".join(tokens[i : i + n])


def fit_tfidf(
    docs: list[TokenizedDoc],
    max_features: int = 5000,
    ngram_range: tuple[int, int] = (1, 2),
) -> TfidfModel:
    """Smoothed idf: ln((1+N)/(1+df)) + 1.  When the candidate n-grams
    exceed max_features, the top max_features by total corpus frequency
    are kept, ties broken lexicographically."""
    if not any(d.tokens for d in docs):
        raise DataError("cannot fit TF-IDF: all documents are empty")
    total = Counter()
    df = Counter()
    for doc in docs:
        grams = list(_ngrams(doc.tokens, ngram_range))
        total.update(grams)
        df.update(set(grams))
    terms = sorted(total, key=lambda t: (-total[t], t))[:max_features]
    terms.sort()
    vocabulary = {t: i for i, t in enumerate(terms)}
    n_docs = len(docs)
    idf = np.array(
        [math.log((1 + n_docs) / (1 + df[t])) + 1.0 for t in terms], dtype=np.float64
    )
    return TfidfModel(vocabulary, idf, max_features, ngram_range)


def transform_tfidf(model: TfidfModel, doc: TokenizedDoc) -> np.ndarray:
    """count * idf, then L2-normalized; all-OOV or empty doc -> zero vector."""
    vec = np.zeros(model.n_features, dtype=np.float64)
    for gram, count in Counter(_ngrams(doc.tokens, model.ngram_range)).items():
        idx = model.vocabulary.get(gram)
        if idx is not None:
            vec[idx] = count * model.idf[idx]
    norm = np.linalg.norm(vec)
    if norm > 0:
        vec /= norm
    return vec


def tfidf_matrix(model: TfidfModel, docs: list[TokenizedDoc]) -> np.ndarray:
    return np.stack([transform_tfidf(model, d) for d in docs]) if docs else np.zeros(
        (0, model.n_features)
    )


# ---------------------------------------------------------------- Word2Vec


@dataclass
class Word2VecConfig:
    dim: int = 100
    window: int = 5
    epochs: int = 10
    negatives: int = 5
    min_count: int = 1
    initial_lr: float = 0.025
    min_lr: float = 1e-4
    seed: int = 42


@dataclass
class Word2VecModel:
    vocabulary: dict[str, int]  # token -> matrix row
    vectors: np.ndarray  # (V, dim)
    config: Word2VecConfig

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]


def train_word2vec(
    docs: list[TokenizedDoc], config: Word2VecConfig = Word2VecConfig()
) -> Word2VecModel:
    """Skip-gram with negative sampling; single-threaded and
    deterministic for a fixed seed.

    Dynamic window (uniform in 1..window per center token), unigram
    noise distribution raised to 0.75, linearly decayed learning rate.
    """
    counts = Counter()
    for doc in docs:
        counts.update(doc.tokens)
    vocab_terms = sorted(
        (t for t, c in counts.items() if c >= config.min_count),
        key=lambda t: (-counts[t], t),
    )
    if not vocab_terms:
        raise DataError("cannot train word2vec: empty corpus")
    vocabulary = {t: i for i, t in enumerate(vocab_terms)}
    V, D = len(vocabulary), config.dim

    rng = np.random.default_rng(config.seed)
    w_in = (rng.random((V, D)) - 0.5) / D
    w_out = np.zeros((V, D), dtype=np.float64)

    noise = np.array([counts[t] for t in vocab_terms], dtype=np.float64) ** 0.75
    noise /= noise.sum()

    encoded = [
        np.array([vocabulary[t] for t in doc.tokens if t in vocabulary], dtype=np.int64)
        for doc in docs
    ]
    total_tokens = sum(len(doc) for doc in encoded)
    total_steps = max(1, config.epochs * total_tokens)
    step = 0
    for _ in range(config.epochs):
        for doc in encoded:
            n = len(doc)
            for pos in range(n):
                lr = max(
                    config.min_lr,
                    config.initial_lr * (1 - step / total_steps),
                )
                step += 1
                b = int(rng.integers(1, config.window + 1))
                center = doc[pos]
                for ctx_pos in range(max(0, pos - b), min(n, pos + b + 1)):
                    if ctx_pos == pos:
                        continue
                    ctx = doc[ctx_pos]
                    targets = np.empty(config.negatives + 1, dtype=np.int64)
                    targets[0] = ctx
                    targets[1:] = rng.choice(V, size=config.negatives, p=noise)
                    labels = np.zeros(config.negatives + 1)
                    labels[0] = 1.0
                    v = w_in[center]
                    u = w_out[targets]
                    scores = 1.0 / (1.0 + np.exp(-np.clip(u @ v, -30, 30)))
                    g = (labels - scores) * lr
                    grad_in = g @ u
                    w_out[targets] += np.outer(g, v)
                    w_in[center] += grad_in
    return Word2VecModel(vocabulary, w_in, config)


def embed_document(model: Word2VecModel, doc: TokenizedDoc) -> np.ndarray:
    """Mean of in-vocabulary token vectors; empty/all-OOV -> zero vector."""
    rows = [model.vocabulary[t] for t in doc.tokens if t in model.vocabulary]
    if not rows:
        return np.zeros(model.dim, dtype=np.float64)
    return model.vectors[rows].mean(axis=0)


def embedding_matrix(model: Word2VecModel, docs: list[TokenizedDoc]) -> np.ndarray:
    return np.stack([embed_document(model, d) for d in docs]) if docs else np.zeros(
        (0, model.dim)
    )


# ---------------------------------------------------------------- fusion


def fuse_features(tfidf_vec: np.ndarray, embed_vec: np.ndarray) -> np.ndarray:
    """Concatenate the TF-IDF block (first) with the embedding block."""
    return np.concatenate([np.asarray(tfidf_vec), np.asarray(embed_vec)])


def fuse_matrices(tfidf: np.ndarray, embeddings: np.ndarray) -> np.ndarray:
    tfidf = np.asarray(tfidf)
    embeddings = np.asarray(embeddings)
    if tfidf.shape[0] != embeddings.shape[0]:
        raise DataError(
            f"row mismatch when fusing: {tfidf.shape[0]} vs {embeddings.shape[0]}"
        )
    return np.hstack([tfidf, embeddings])


# ---------------------------------------------------------------- scaling


@dataclass
class Scaler:
    mean: np.ndarray
    std: np.ndarray  # population standard deviation
    constant: np.ndarray  # boolean mask of zero-variance columns

    @property
    def n_features(self) -> int:
        return self.mean.shape[0]


def fit_scaler(X: np.ndarray, population: bool = True) -> Scaler:
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[0] == 0:
        raise DataError("scaler needs a non-empty 2-D matrix")
    mean = X.mean(axis=0)
    std = X.std(axis=0, ddof=0 if population else 1)
    std = np.nan_to_num(std, nan=0.0)
    return Scaler(mean=mean, std=std, constant=std == 0.0)


def apply_scaler(scaler: Scaler, X: np.ndarray) -> np.ndarray:
    X = np.asarray(X, dtype=np.float64)
    if X.shape[1] != scaler.n_features:
        raise DataError(
            f"scaler fitted on {scaler.n_features} columns, got {X.shape[1]}"
        )
    safe_std = np.where(scaler.constant, 1.0, scaler.std)
    out = (X - scaler.mean) / safe_std
    out[:, scaler.constant] = 0.0
    return out
