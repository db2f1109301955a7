"""Loading, validation, label encoding and splitting of review datasets."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import DataError, UsageError

CLASSES = ("AI", "HUMAN")


@dataclass(frozen=True)
class Review:
    id: str
    text: str
    label: str | None = None  # "AI" | "HUMAN" | None for unlabeled inputs


@dataclass
class LabeledCorpus:
    reviews: list[Review]
    language: str = "unknown"
    split: str = "unlabeled"

    def __len__(self) -> int:
        return len(self.reviews)

    def __iter__(self):
        return iter(self.reviews)

    @property
    def fully_labeled(self) -> bool:
        return all(r.label is not None for r in self.reviews)


@dataclass(frozen=True)
class ColumnSchema:
    id: str = "id"
    text: str = "text"
    label: str = "label"
    delimiter: str = ","


class LabelMap:
    """Bijective class-name <-> index mapping, lexicographic by name."""

    def __init__(self, classes=CLASSES):
        self.classes = tuple(sorted(classes))
        self._index = {c: i for i, c in enumerate(self.classes)}

    def encode(self, label: str) -> int:
        return self._index[label]

    def decode(self, index: int) -> str:
        return self.classes[index]

    def __len__(self) -> int:
        return len(self.classes)

    def __eq__(self, other) -> bool:
        return isinstance(other, LabelMap) and other.classes == self.classes


def load_reviews(
    path: str | Path,
    schema: ColumnSchema = ColumnSchema(),
    language: str = "unknown",
    split: str = "unlabeled",
    require_labels: bool = False,
) -> LabeledCorpus:
    """Read a delimiter-separated UTF-8 file (header row required) into a corpus.

    File order is preserved. Errors carry 1-based row numbers (header = row 1).
    """
    path = Path(path)
    if not path.is_file():
        raise DataError(f"input file not found: {path}")
    reviews: list[Review] = []
    seen: set[str] = set()
    with path.open(encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh, delimiter=schema.delimiter)
        header = reader.fieldnames
        if header is None:
            raise DataError(f"{path}: empty file, header row required")
        for col in (schema.id, schema.text):
            if col not in header:
                raise DataError(f"{path}: missing column {col!r} (row 1)")
        has_label = schema.label in header
        if require_labels and not has_label:
            raise DataError(f"{path}: missing column {schema.label!r} (row 1)")
        for rownum, row in enumerate(reader, start=2):
            rid = (row.get(schema.id) or "").strip()
            if not rid:
                raise DataError(f"{path}: empty id (row {rownum})")
            if rid in seen:
                raise DataError(f"{path}: duplicate id {rid!r} (row {rownum})")
            seen.add(rid)
            text = row.get(schema.text) or ""
            if not text.strip():
                raise DataError(f"{path}: empty text field (row {rownum})")
            label = None
            if has_label:
                raw = (row.get(schema.label) or "").strip()
                if raw or require_labels:
                    if raw not in CLASSES:
                        raise DataError(
                            f"{path}: unknown label {raw!r} (row {rownum}), "
                            f"expected one of {CLASSES}"
                        )
                    label = raw
            reviews.append(Review(id=rid, text=text, label=label))
    return LabeledCorpus(reviews=reviews, language=language, split=split)


def encode_labels(corpus: LabeledCorpus) -> tuple[np.ndarray, LabelMap]:
    label_map = LabelMap()
    encoded = []
    for r in corpus.reviews:
        if r.label is None:
            raise DataError(f"review {r.id!r} is unlabeled; cannot encode")
        encoded.append(label_map.encode(r.label))
    return np.asarray(encoded, dtype=np.int64), label_map


def class_distribution(corpus: LabeledCorpus) -> dict[str, int]:
    counts = {c: 0 for c in CLASSES}
    for r in corpus.reviews:
        if r.label is None:
            raise DataError(f"review {r.id!r} is unlabeled")
        counts[r.label] += 1
    return counts


def split_train_validation(
    corpus: LabeledCorpus, validation_fraction: float, seed: int
) -> tuple[LabeledCorpus, LabeledCorpus]:
    """Unstratified shuffle split; validation size = round-half-up(n * fraction).

    Both halves keep the original file order of their members.
    """
    if not 0 <= validation_fraction < 1:
        raise UsageError(f"validation fraction must be in [0, 1), got {validation_fraction}")
    n = len(corpus)
    if n == 0:
        raise DataError("cannot split an empty corpus")
    n_val = int(math.floor(n * validation_fraction + 0.5))
    rng = np.random.default_rng(seed)
    perm = rng.permutation(n)
    val_idx = set(perm[:n_val].tolist())
    train = [r for i, r in enumerate(corpus.reviews) if i not in val_idx]
    val = [r for i, r in enumerate(corpus.reviews) if i in val_idx]
    return (
        LabeledCorpus(train, corpus.language, "train"),
        LabeledCorpus(val, corpus.language, "validation"),
    )
