"""Confusion matrix, per-class / macro precision-recall-F1 and accuracy."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .corpus import CLASSES
from .errors import DataError


@dataclass(frozen=True)
class EvalReport:
    confusion: tuple[tuple[int, int], tuple[int, int]]  # [true][pred]
    precision: tuple[float, float]
    recall: tuple[float, float]
    f1: tuple[float, float]
    support: tuple[int, int]
    macro_precision: float
    macro_recall: float
    macro_f1: float
    accuracy: float


def confusion_matrix(y_true, y_pred) -> np.ndarray:
    y_true = np.asarray(y_true, dtype=np.int64)
    y_pred = np.asarray(y_pred, dtype=np.int64)
    if y_true.shape != y_pred.shape:
        raise DataError(
            f"label vectors differ in length: {y_true.shape[0]} vs {y_pred.shape[0]}"
        )
    for name, v in (("gold", y_true), ("predicted", y_pred)):
        if v.size and (v.min() < 0 or v.max() > 1):
            raise DataError(f"{name} labels out of range {{0,1}}")
    cm = np.zeros((2, 2), dtype=np.int64)
    np.add.at(cm, (y_true, y_pred), 1)
    return cm


def evaluate(y_true, y_pred) -> EvalReport:
    """Zero-division convention: undefined precision/recall -> 0."""
    y_true = np.asarray(y_true, dtype=np.int64)
    if y_true.size == 0:
        raise DataError("cannot evaluate an empty label vector")
    cm = confusion_matrix(y_true, y_pred)
    precision, recall, f1, support = [], [], [], []
    for c in range(2):
        tp = cm[c, c]
        fp = cm[1 - c, c]
        fn = cm[c, 1 - c]
        p = tp / (tp + fp) if tp + fp else 0.0
        r = tp / (tp + fn) if tp + fn else 0.0
        f = 2 * p * r / (p + r) if p + r else 0.0
        precision.append(float(p))
        recall.append(float(r))
        f1.append(float(f))
        support.append(int(tp + fn))
    return EvalReport(
        confusion=tuple(tuple(int(x) for x in row) for row in cm),
        precision=tuple(precision),
        recall=tuple(recall),
        f1=tuple(f1),
        support=tuple(support),
        macro_precision=float(np.mean(precision)),
        macro_recall=float(np.mean(recall)),
        macro_f1=float(np.mean(f1)),
        accuracy=float(np.trace(cm) / cm.sum()),
    )


def render_report(report: EvalReport) -> str:
    """Human-readable table; values rounded to 2 decimals for display."""
    lines = [f"{'':<12}{'P':>8}{'R':>8}{'F1':>8}{'support':>10}"]
    for c, name in enumerate(CLASSES):
        lines.append(
            f"{name:<12}{report.precision[c]:>8.2f}{report.recall[c]:>8.2f}"
            f"{report.f1[c]:>8.2f}{report.support[c]:>10d}"
        )
    lines.append(
        f"{'macro avg':<12}{report.macro_precision:>8.2f}{report.macro_recall:>8.2f}"
        f"{report.macro_f1:>8.2f}{sum(report.support):>10d}"
    )
    lines.append(f"{'accuracy':<12}{report.accuracy:>8.2f}")
    return "\n".join(lines) + "\n"


def report_to_kv(report: EvalReport) -> str:
    """Machine-readable flat key-value form; full precision, round-trippable."""
    pairs: list[tuple[str, object]] = []
    for i in range(2):
        for j in range(2):
            pairs.append((f"confusion_{CLASSES[i].lower()}_{CLASSES[j].lower()}",
                          report.confusion[i][j]))
    for c, name in enumerate(CLASSES):
        low = name.lower()
        pairs += [
            (f"precision_{low}", report.precision[c]),
            (f"recall_{low}", report.recall[c]),
            (f"f1_{low}", report.f1[c]),
            (f"support_{low}", report.support[c]),
        ]
    pairs += [
        ("macro_precision", report.macro_precision),
        ("macro_recall", report.macro_recall),
        ("macro_f1", report.macro_f1),
        ("accuracy", report.accuracy),
    ]
    return "".join(f"{k}\t{v!r}\n" for k, v in pairs)


def report_from_kv(text: str) -> EvalReport:
    kv: dict[str, float] = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        key, _, value = line.partition("\t")
        try:
            kv[key] = int(value)
        except ValueError:
            kv[key] = float(value)
    low = [c.lower() for c in CLASSES]
    return EvalReport(
        confusion=tuple(
            tuple(int(kv[f"confusion_{a}_{b}"]) for b in low) for a in low
        ),
        precision=tuple(kv[f"precision_{c}"] for c in low),
        recall=tuple(kv[f"recall_{c}"] for c in low),
        f1=tuple(kv[f"f1_{c}"] for c in low),
        support=tuple(int(kv[f"support_{c}"]) for c in low),
        macro_precision=kv["macro_precision"],
        macro_recall=kv["macro_recall"],
        macro_f1=kv["macro_f1"],
        accuracy=kv["accuracy"],
    )
