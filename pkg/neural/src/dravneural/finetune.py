"""Transformer fine-tuning for review classification.

Recipe: sequence-classification head, max length 128, batch size 16,
3 epochs, AdamW with learning rate 2e-5 and weight decay 0.01, trained
on 80% of the train file (seed 42); test predictions written in the
interchange format.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np
import torch
from torch import nn

from .data import (
    LABEL_TO_INDEX,
    load_corpus,
    macro_f1,
    split_train_validation,
    write_interchange,
    write_report_kv,
)

# the five pretrained checkpoints supported by name
CHECKPOINTS = {
    "indic-bert": "ai4bharat/indic-bert",
    "indicsbert": "l3cube-pune/indic-sentence-bert-nli",
    "muril": "google/muril-base-cased",
    "xlm-roberta": "xlm-roberta-base",
    "malayalam-bert": "l3cube-pune/malayalam-bert",
}


@dataclass
class FineTuneConfig:
    model: str = "indicsbert"  # alias, hub id, or local checkpoint path
    max_length: int = 128
    batch_size: int = 16
    epochs: int = 3
    learning_rate: float = 2e-5
    weight_decay: float = 0.01
    validation_fraction: float = 0.2
    seed: int = 42


def resolve_checkpoint(name: str) -> str:
    if name in CHECKPOINTS:
        return CHECKPOINTS[name]
    if Path(name).exists() or "/" in name:
        return name
    raise ValueError(
        f"unknown checkpoint {name!r}; known aliases: {sorted(CHECKPOINTS)} "
        "(a local path or hub id also works)"
    )


def _load_model_and_tokenizer(checkpoint: str):
    from transformers import AutoModelForSequenceClassification, AutoTokenizer

    tokenizer = AutoTokenizer.from_pretrained(checkpoint)
    model = AutoModelForSequenceClassification.from_pretrained(checkpoint, num_labels=2)
    return model, tokenizer


def _encode(tokenizer, texts, max_length):
    return tokenizer(
        list(texts),
        padding="max_length",
        truncation=True,
        max_length=max_length,
        return_tensors="pt",
    )


def train_loop(model, batches, config: FineTuneConfig, epochs=None) -> list[float]:
    """Plain fine-tuning loop; returns mean loss per epoch."""
    optimizer = torch.optim.AdamW(
        model.parameters(), lr=config.learning_rate, weight_decay=config.weight_decay
    )
    loss_fn = nn.CrossEntropyLoss()
    losses = []
    model.train()
    for _ in range(epochs or config.epochs):
        total, seen = 0.0, 0
        for batch in batches:
            optimizer.zero_grad()
            labels = batch.pop("labels")
            logits = model(**batch).logits
            batch["labels"] = labels
            loss = loss_fn(logits, labels)
            loss.backward()
            optimizer.step()
            total += float(loss.detach()) * len(labels)
            seen += len(labels)
        losses.append(total / seen)
    return losses


def _make_batches(encodings, labels, batch_size, seed):
    gen = torch.Generator().manual_seed(seed)
    order = torch.randperm(len(labels), generator=gen)
    batches = []
    for start in range(0, len(labels), batch_size):
        idx = order[start : start + batch_size]
        batch = {k: v[idx] for k, v in encodings.items()}
        batch["labels"] = labels[idx]
        batches.append(batch)
    return batches


@torch.no_grad()
def _predict_proba(model, tokenizer, texts, config, batch_size=32) -> np.ndarray:
    model.eval()
    chunks = []
    for start in range(0, len(texts), batch_size):
        enc = _encode(tokenizer, texts[start : start + batch_size], config.max_length)
        logits = model(**enc).logits
        chunks.append(torch.softmax(logits, dim=1).numpy())
    return np.concatenate(chunks) if chunks else np.zeros((0, 2))


def fine_tune(
    config: FineTuneConfig,
    train_file: str | Path,
    test_file: str | Path,
    outdir: str | Path,
) -> dict:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    checkpoint = resolve_checkpoint(config.model)
    torch.manual_seed(config.seed)
    model, tokenizer = _load_model_and_tokenizer(checkpoint)

    examples = load_corpus(train_file)
    train, validation = split_train_validation(
        examples, config.validation_fraction, config.seed
    )
    encodings = _encode(tokenizer, [e.text for e in train], config.max_length)
    labels = torch.tensor([LABEL_TO_INDEX[e.label] for e in train], dtype=torch.long)
    batches = _make_batches(encodings, labels, config.batch_size, config.seed)
    losses = train_loop(model, batches, config)

    metrics = {"train_loss_first": losses[0], "train_loss_last": losses[-1]}
    if validation:
        val_proba = _predict_proba(model, tokenizer, [e.text for e in validation], config)
        metrics["validation_macro_f1"] = macro_f1(
            [LABEL_TO_INDEX[e.label] for e in validation],
            val_proba.argmax(axis=1).tolist(),
        )

    test = load_corpus(test_file)
    proba = _predict_proba(model, tokenizer, [e.text for e in test], config)
    pred = proba.argmax(axis=1)
    write_interchange(
        outdir / "predictions.tsv",
        [e.id for e in test],
        [e.label for e in test],
        pred,
        proba[:, LABEL_TO_INDEX["AI"]],
    )
    if all(e.label is not None for e in test):
        metrics["test_macro_f1"] = macro_f1(
            [LABEL_TO_INDEX[e.label] for e in test], pred.tolist()
        )
    write_report_kv(outdir / "report.kv", metrics)
    model.save_pretrained(outdir / "checkpoint")
    tokenizer.save_pretrained(outdir / "checkpoint")
    return metrics
