"""Predictions interchange file: tab-separated `id, gold, predicted, p_ai`.

This is the cross-component contract: produced by `predict` (and by the
neural baselines), consumed by `evaluate` and `compare`. The gold column
may be empty for unlabeled inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .corpus import CLASSES
from .errors import DataError

HEADER = ("id", "gold", "predicted", "p_ai")


@dataclass(frozen=True)
class PredictionRow:
    id: str
    gold: str | None
    predicted: str
    p_ai: float


def write_predictions(path: str | Path, rows: list[PredictionRow]) -> None:
    with Path(path).open("w", encoding="utf-8", newline="\n") as fh:
        fh.write("\t".join(HEADER) + "\n")
        for r in rows:
            fh.write(f"{r.id}\t{r.gold or ''}\t{r.predicted}\t{r.p_ai!r}\n")


def read_predictions(path: str | Path) -> list[PredictionRow]:
    path = Path(path)
    if not path.is_file():
        raise DataError(f"predictions file not found: {path}")
    rows: list[PredictionRow] = []
    with path.open(encoding="utf-8") as fh:
        header = fh.readline().rstrip("\n").split("\t")
        if tuple(header) != HEADER:
            raise DataError(
                f"{path}: bad predictions header {header!r}, expected {list(HEADER)}"
            )
        for lineno, line in enumerate(fh, start=2):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 4:
                raise DataError(f"{path}: expected 4 columns (row {lineno})")
            rid, gold, predicted, p_ai = parts
            if gold and gold not in CLASSES:
                raise DataError(f"{path}: unknown gold label {gold!r} (row {lineno})")
            if predicted not in CLASSES:
                raise DataError(
                    f"{path}: unknown predicted label {predicted!r} (row {lineno})"
                )
            try:
                p = float(p_ai)
            except ValueError:
                raise DataError(f"{path}: bad probability {p_ai!r} (row {lineno})")
            if not 0.0 <= p <= 1.0:
                raise DataError(f"{path}: probability out of [0,1] (row {lineno})")
            rows.append(PredictionRow(rid, gold or None, predicted, p))
    return rows


def predictions_by_id(rows: list[PredictionRow]) -> dict[str, PredictionRow]:
    out: dict[str, PredictionRow] = {}
    for r in rows:
        if r.id in out:
            raise DataError(f"duplicate id {r.id!r} in predictions")
        out[r.id] = r
    return out
