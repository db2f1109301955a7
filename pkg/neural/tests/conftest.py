import csv
import random

import pytest

AI_WORDS = ["excellent", "premium", "experience", "recommend", "quality", "service"]
HUMAN_WORDS = ["good", "okay", "waste", "cheap", "fine", "bought"]


def synthetic_rows(n=40, seed=0):
    rng = random.Random(seed)
    rows = []
    for i in range(n):
        if i % 2 == 0:
            words = rng.choices(AI_WORDS, k=rng.randint(8, 12))
            label = "AI"
        else:
            words = rng.choices(HUMAN_WORDS, k=rng.randint(3, 6))
            label = "HUMAN"
        rows.append((f"n{i:03d}", " ".join(words), label))
    return rows


def write_corpus_csv(path, rows):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["id", "text", "label"])
        writer.writerows(rows)
    return path


@pytest.fixture
def corpus_files(tmp_path):
    train = write_corpus_csv(tmp_path / "train.csv", synthetic_rows(40, seed=0))
    test = write_corpus_csv(tmp_path / "test.csv", synthetic_rows(16, seed=1))
    return train, test
