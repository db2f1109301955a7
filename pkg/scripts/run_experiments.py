#!/usr/bin/env python3
"""Run the full classical pipeline on the real dataset and collect the
validation / test macro-F1 numbers for every model, plus the corpus
statistics and cross-model misclassification comparison.

Expects data/{tamil,malayalam}_{train,test}.csv (see fetch_dataset.py).
Results land under results/.
"""

import sys
import time
from pathlib import Path

from dravdetect.cli import main as cli
from dravdetect.metrics import report_from_kv

DATA = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("data")
RESULTS = Path("results")
MODELS = ["svm-grid", "rf", "gb", "ensemble"]
LANGUAGES = ["tamil", "malayalam"]


def run(args):
    rc = cli(args)
    if rc != 0:
        raise SystemExit(f"command failed ({rc}): {args}")


def main() -> int:
    summary = []
    for language in LANGUAGES:
        train = DATA / f"{language}_train.csv"
        test = DATA / f"{language}_test.csv"
        if not train.is_file():
            print(f"skipping {language}: {train} not found")
            continue
        run(["analyze", str(train), "--outdir", str(RESULTS / language / "analysis_train")])
        run(["analyze", str(test), "--outdir", str(RESULTS / language / "analysis_test")])
        prediction_files = []
        for model in MODELS:
            outdir = RESULTS / language / model
            started = time.time()
            run(["train", str(train), "--outdir", str(outdir), "--model", model,
                 "--language", language])
            preds = outdir / "test_predictions.tsv"
            run(["predict", str(outdir / "model.bundle"), str(test),
                 "--output", str(preds)])
            run(["evaluate", str(preds), str(test), "--outdir", str(outdir / "test_eval")])
            val = report_from_kv((outdir / "validation_report.kv").read_text())
            tst = report_from_kv((outdir / "test_eval" / "report.kv").read_text())
            summary.append(
                f"{language:<10} {model:<9} val-F1={val.macro_f1:.3f} "
                f"test-F1={tst.macro_f1:.3f} ({time.time() - started:.0f}s)"
            )
            prediction_files.append(str(preds))
        run(["compare", str(test)] + prediction_files
            + ["--output", str(RESULTS / language / "misclassification_table.tsv")])
    print("\n".join(summary))
    (RESULTS / "summary.txt").write_text("\n".join(summary) + "\n", encoding="utf-8")
    return 0


if __name__ == "__main__":
    sys.exit(main())
