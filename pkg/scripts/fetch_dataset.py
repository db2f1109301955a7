#!/usr/bin/env python3
"""Fetch the public Tamil/Malayalam AI-generated review dataset and
normalize it into the corpus schema expected by the pipeline
(data/{tamil,malayalam}_{train,test}.csv with columns id,text,label).

Needs outbound network access; run on a machine that has it, then copy
the data/ directory next to the repository root (or point
DRAVDETECT_DATA_DIR at it).  The acceptance criteria that depend on
the real dataset are skipped while these files are missing.
"""

import argparse
import csv
import io
import sys
import urllib.request
import zipfile
from pathlib import Path

REPO_ZIP = (
    "https://github.com/somsubhra04/dravlangtech_ai-gen-prod-rev/archive/refs/heads/main.zip"
)
EXPECTED = {
    "tamil_train": ("Tamil", "train"),
    "tamil_test": ("Tamil", "test"),
    "malayalam_train": ("Malayalam", "train"),
    "malayalam_test": ("Malayalam", "test"),
}


def normalize_rows(reader, id_prefix):
    """Map whatever header the source files use onto id,text,label."""
    header = [h.strip().lower() for h in next(reader)]

    def col(*names):
        for n in names:
            if n in header:
                return header.index(n)
        return None

    id_i = col("id")
    text_i = col("text", "review", "data")
    label_i = col("label", "category", "class")
    if text_i is None:
        raise SystemExit(f"could not find a text column in header {header}")
    for i, row in enumerate(reader):
        if not row or not row[text_i].strip():
            continue
        rid = row[id_i].strip() if id_i is not None and row[id_i].strip() else f"{id_prefix}{i:05d}"
        label = row[label_i].strip().upper() if label_i is not None else ""
        yield rid, row[text_i], label


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="data")
    parser.add_argument("--url", default=REPO_ZIP)
    args = parser.parse_args()
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    print(f"downloading {args.url} ...")
    blob = urllib.request.urlopen(args.url, timeout=120).read()
    archive = zipfile.ZipFile(io.BytesIO(blob))
    candidates = [n for n in archive.namelist() if n.lower().endswith(".csv")]
    print(f"archive contains {len(candidates)} csv files")
    for key, (language, split) in EXPECTED.items():
        matches = [
            n for n in candidates
            if language.lower() in n.lower() and split in n.lower()
        ]
        if not matches:
            print(f"warning: no source file matched {language} {split}; "
                  f"place {outdir / (key + '.csv')} manually", file=sys.stderr)
            continue
        src = matches[0]
        print(f"{key}: using {src}")
        with archive.open(src) as fh:
            reader = csv.reader(io.TextIOWrapper(fh, encoding="utf-8-sig"))
            rows = list(normalize_rows(reader, f"{key}_"))
        with (outdir / f"{key}.csv").open("w", encoding="utf-8", newline="") as out:
            writer = csv.writer(out)
            writer.writerow(["id", "text", "label"])
            writer.writerows(rows)
        print(f"  wrote {len(rows)} rows")
    return 0


if __name__ == "__main__":
    sys.exit(main())
