import csv
import random

import pytest

AI_VOCAB = [
    "மிகவும்", "சிறந்த", "தயாரிப்பு", "உயர்", "தரமான",
    "அனுபவம்", "பரிந்துரை", "செய்கிறேன்", "வாடிக்கையாளர்", "சேவை",
]
HUMAN_VOCAB = [
    "நல்லா", "இருக்கு", "சூப்பர்", "வாங்கினேன்", "ஓகே",
    "பரவாயில்லை", "வேஸ்ட்", "குறைவு", "விலை", "அதிகம்",
]


def synthetic_rows(n=80, seed=0):
    """Balanced two-class corpus with class-specific vocabularies, so
    small models can actually separate it."""
    rng = random.Random(seed)
    rows = []
    for i in range(n):
        if i % 2 == 0:
            words = rng.choices(AI_VOCAB, k=rng.randint(8, 14))
            label = "AI"
        else:
            words = rng.choices(HUMAN_VOCAB, k=rng.randint(3, 7))
            label = "HUMAN"
        rows.append((f"r{i:03d}", " ".join(words) + ".", label))
    return rows


def write_corpus_csv(path, rows):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["id", "text", "label"])
        writer.writerows(rows)
    return path


@pytest.fixture
def corpus_csv(tmp_path):
    return write_corpus_csv(tmp_path / "train.csv", synthetic_rows())


@pytest.fixture
def corpus(corpus_csv):
    from dravdetect.corpus import load_reviews

    return load_reviews(corpus_csv, language="Tamil", split="train")
