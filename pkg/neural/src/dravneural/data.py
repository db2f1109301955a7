"""Corpus loading, label handling, split, and the predictions
interchange format (independent re-implementation of the shared
contracts; this package never imports the classical pipeline)."""

from __future__ import annotations

import csv
import math
import random
from dataclasses import dataclass
from pathlib import Path

CLASSES = ("AI", "HUMAN")
LABEL_TO_INDEX = {c: i for i, c in enumerate(CLASSES)}
INTERCHANGE_HEADER = ("id", "gold", "predicted", "p_ai")


@dataclass(frozen=True)
class Example:
    id: str
    text: str
    label: str | None


def load_corpus(path: str | Path) -> list[Example]:
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"corpus file not found: {path}")
    out: list[Example] = []
    with path.open(encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        for row in reader:
            label = (row.get("label") or "").strip() or None
            if label is not None and label not in CLASSES:
                raise ValueError(f"{path}: unknown label {label!r}")
            out.append(Example(row["id"].strip(), row["text"], label))
    return out


def split_train_validation(examples, fraction=0.2, seed=42):
    n_val = int(math.floor(len(examples) * fraction + 0.5))
    order = list(range(len(examples)))
    random.Random(seed).shuffle(order)
    val_idx = set(order[:n_val])
    train = [e for i, e in enumerate(examples) if i not in val_idx]
    val = [e for i, e in enumerate(examples) if i in val_idx]
    return train, val


def write_interchange(path, ids, golds, predicted_idx, p_ai):
    with Path(path).open("w", encoding="utf-8", newline="\n") as fh:
        fh.write("\t".join(INTERCHANGE_HEADER) + "\n")
        for rid, gold, pred, p in zip(ids, golds, predicted_idx, p_ai):
            fh.write(f"{rid}\t{gold or ''}\t{CLASSES[int(pred)]}\t{float(p)!r}\n")


def macro_f1(y_true, y_pred) -> float:
    f1s = []
    for c in (0, 1):
        tp = sum(1 for t, p in zip(y_true, y_pred) if t == c and p == c)
        fp = sum(1 for t, p in zip(y_true, y_pred) if t != c and p == c)
        fn = sum(1 for t, p in zip(y_true, y_pred) if t == c and p != c)
        prec = tp / (tp + fp) if tp + fp else 0.0
        rec = tp / (tp + fn) if tp + fn else 0.0
        f1s.append(2 * prec * rec / (prec + rec) if prec + rec else 0.0)
    return sum(f1s) / len(f1s)


def write_report_kv(path, metrics: dict) -> None:
    with Path(path).open("w", encoding="utf-8") as fh:
        for key, value in metrics.items():
            fh.write(f"{key}\t{value!r}\n")
