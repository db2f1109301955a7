"""Qualitative analyses: per-class corpus statistics, common-word
frequency tables and cross-model misclassification comparison."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .corpus import CLASSES, LabeledCorpus
from .errors import DataError
from .interchange import PredictionRow, predictions_by_id
from .textprep import clean_text, split_sentences, tokenize


@dataclass(frozen=True)
class ClassStats:
    avg_word_count: float
    avg_sentences_per_review: float
    lexical_diversity: float


@dataclass(frozen=True)
class CorpusStats:
    per_class: dict[str, ClassStats]


def corpus_statistics(
    corpus: LabeledCorpus, raw_whitespace_tokens: bool = False
) -> CorpusStats:
    """Word counts and diversity on cleaned tokens (or raw whitespace
    tokens when flagged); sentence counts always on the raw text.
    Reviews with zero tokens are excluded from the diversity mean."""
    if len(corpus) == 0:
        raise DataError("cannot compute statistics of an empty corpus")
    grouped: dict[str, list] = {c: [] for c in CLASSES}
    for r in corpus.reviews:
        if r.label is None:
            raise DataError(f"review {r.id!r} is unlabeled")
        if raw_whitespace_tokens:
            tokens = r.text.split()
        else:
            tokens = tokenize(clean_text(r.text)).tokens
        grouped[r.label].append((tokens, len(split_sentences(r.text))))
    per_class = {}
    for c in CLASSES:
        items = grouped[c]
        if not items:
            per_class[c] = ClassStats(0.0, 0.0, 0.0)
            continue
        word_counts = [len(t) for t, _ in items]
        sent_counts = [s for _, s in items]
        diversities = [len(set(t)) / len(t) for t, _ in items if t]
        per_class[c] = ClassStats(
            avg_word_count=sum(word_counts) / len(items),
            avg_sentences_per_review=sum(sent_counts) / len(items),
            lexical_diversity=(
                sum(diversities) / len(diversities) if diversities else 0.0
            ),
        )
    return CorpusStats(per_class=per_class)


def top_words(corpus: LabeledCorpus, label: str, n: int) -> list[tuple[str, int]]:
    """Top-n tokens in the class by frequency, ties lexicographic."""
    counts = Counter()
    for r in corpus.reviews:
        if r.label == label:
            counts.update(tokenize(clean_text(r.text)).tokens)
    ordered = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return ordered[:n] if n >= 0 else ordered


@dataclass(frozen=True)
class MisclassifiedReview:
    id: str
    text: str
    gold: str
    correct_by_model: dict[str, bool]


def _check_coverage(gold: LabeledCorpus, by_id: dict[str, PredictionRow], name: str):
    for r in gold.reviews:
        if r.id not in by_id:
            raise DataError(f"prediction file {name!r} is missing id {r.id!r}")


def cross_model_misclassifications(
    gold: LabeledCorpus, predictions: dict[str, list[PredictionRow]]
) -> list[MisclassifiedReview]:
    """Reviews misclassified by strictly more than one model, with
    per-model correctness marks; gold corpus order preserved."""
    indexed = {name: predictions_by_id(rows) for name, rows in predictions.items()}
    for name, by_id in indexed.items():
        _check_coverage(gold, by_id, name)
    out = []
    for r in gold.reviews:
        if r.label is None:
            raise DataError(f"gold review {r.id!r} is unlabeled")
        marks = {
            name: by_id[r.id].predicted == r.label for name, by_id in indexed.items()
        }
        if sum(1 for ok in marks.values() if not ok) > 1:
            out.append(MisclassifiedReview(r.id, r.text, r.label, marks))
    return out


def error_listing(
    gold: LabeledCorpus, predictions: list[PredictionRow]
) -> tuple[list[tuple[str, str]], list[tuple[str, str]]]:
    """(false positives, false negatives) with AI as the positive class:
    FP = human-written predicted AI, FN = AI predicted human.  Entries
    are (id, text)."""
    by_id = predictions_by_id(predictions)
    _check_coverage(gold, by_id, "predictions")
    fps, fns = [], []
    for r in gold.reviews:
        if r.label is None:
            raise DataError(f"gold review {r.id!r} is unlabeled")
        pred = by_id[r.id].predicted
        if r.label == "HUMAN" and pred == "AI":
            fps.append((r.id, r.text))
        elif r.label == "AI" and pred == "HUMAN":
            fns.append((r.id, r.text))
    return fps, fns


def render_stats_kv(stats: CorpusStats) -> str:
    lines = []
    for c in CLASSES:
        s = stats.per_class[c]
        low = c.lower()
        lines.append(f"avg_word_count_{low}\t{s.avg_word_count!r}")
        lines.append(f"avg_sentences_per_review_{low}\t{s.avg_sentences_per_review!r}")
        lines.append(f"lexical_diversity_{low}\t{s.lexical_diversity!r}")
    return "\n".join(lines) + "\n"


def render_frequency_table(table: list[tuple[str, int]]) -> str:
    return "".join(f"{token}\t{count}\n" for token, count in table)


def render_misclassification_table(
    rows: list[MisclassifiedReview], model_names: list[str]
) -> str:
    header = "\t".join(["id", "gold", "text"] + list(model_names))
    lines = [header]
    for row in rows:
        marks = [
            "correct" if row.correct_by_model[m] else "incorrect" for m in model_names
        ]
        lines.append("\t".join([row.id, row.gold, row.text.replace("\t", " ")] + marks))
    return "\n".join(lines) + "\n"
