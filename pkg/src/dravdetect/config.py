"""Pipeline configuration with defaults matching the reported recipe:
5000 TF-IDF features, 100-dim embeddings, 100 trees / boosting rounds,
learning rate 0.1, 5 CV folds, seed 42."""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import UsageError

MODEL_CHOICES = ("svm", "svm-grid", "rf", "gb", "ensemble")


@dataclass
class PipelineConfig:
    language: str = "unknown"
    model: str = "svm-grid"
    seed: int = 42
    validation_fraction: float = 0.2
    # features
    tfidf_max_features: int = 5000
    embedding_dim: int = 100
    w2v_window: int = 5
    w2v_epochs: int = 10
    w2v_negatives: int = 5
    strip_indic_digits: bool = True
    # classifiers
    svm_kernel: str = "rbf"
    svm_c: float = 1.0
    svm_gamma: str = "scale"
    n_trees: int = 100
    gb_rounds: int = 100
    gb_learning_rate: float = 0.1
    gb_max_depth: int = 6
    cv_folds: int = 5
    grid_scoring: str = "macro_f1"  # or "accuracy"

    def __post_init__(self):
        if self.model not in MODEL_CHOICES:
            raise UsageError(f"unknown model {self.model!r}, expected {MODEL_CHOICES}")

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)


def load_config_file(path: str | Path) -> dict:
    path = Path(path)
    if not path.is_file():
        raise UsageError(f"config file not found: {path}")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON config: {exc}")
    unknown = set(data) - {f.name for f in dataclasses.fields(PipelineConfig)}
    if unknown:
        raise UsageError(f"{path}: unknown config keys {sorted(unknown)}")
    return data


def make_config(file_path: str | Path | None = None, **overrides) -> PipelineConfig:
    """Config file values first, then explicit flag overrides."""
    data = load_config_file(file_path) if file_path else {}
    data.update({k: v for k, v in overrides.items() if v is not None})
    try:
        return PipelineConfig(**data)
    except TypeError as exc:
        raise UsageError(f"bad configuration: {exc}")
