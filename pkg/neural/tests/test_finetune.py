"""Fine-tuning is exercised with a tiny randomly-initialized local
checkpoint: the real pretrained checkpoints need hub access, which CI
may not have.  The training loop, data plumbing and outputs are
identical either way."""

import os

import pytest
import torch

os.environ.setdefault("HF_HUB_OFFLINE", "1")
os.environ.setdefault("TRANSFORMERS_OFFLINE", "1")

from dravneural.finetune import CHECKPOINTS, FineTuneConfig, fine_tune, resolve_checkpoint


@pytest.fixture(scope="module")
def tiny_checkpoint(tmp_path_factory):
    from transformers import BertConfig, BertForSequenceClassification, BertTokenizer

    outdir = tmp_path_factory.mktemp("tiny_bert")
    vocab = ["[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"] + [
        "excellent", "premium", "quality", "experience", "recommend", "service",
        "good", "okay", "waste", "cheap", "fine", "bought",
    ]
    tokenizer = BertTokenizer(vocab={w: i for i, w in enumerate(vocab)})
    tokenizer.save_pretrained(outdir)
    config = BertConfig(
        vocab_size=len(vocab),
        hidden_size=32,
        num_hidden_layers=2,
        num_attention_heads=2,
        intermediate_size=64,
        max_position_embeddings=64,
        num_labels=2,
    )
    torch.manual_seed(0)
    BertForSequenceClassification(config).save_pretrained(outdir)
    return str(outdir)


def test_checkpoint_registry_has_all_five():
    assert set(CHECKPOINTS) == {
        "indic-bert", "indicsbert", "muril", "xlm-roberta", "malayalam-bert",
    }
    assert resolve_checkpoint("muril") == "google/muril-base-cased"


def test_unknown_checkpoint_rejected():
    with pytest.raises(ValueError, match="unknown checkpoint"):
        resolve_checkpoint("not-a-model")


def test_config_defaults_match_recipe():
    config = FineTuneConfig()
    assert config.max_length == 128
    assert config.batch_size == 16
    assert config.epochs == 3
    assert config.learning_rate == 2e-5
    assert config.weight_decay == 0.01
    assert config.seed == 42


def test_overfit_smoke_8_samples(tiny_checkpoint, tmp_path):
    import csv

    rows = [(f"s{i}", "excellent premium quality", "AI") for i in range(4)] + [
        (f"s{i + 4}", "waste cheap bought", "HUMAN") for i in range(4)
    ]
    for name in ("train.csv", "test.csv"):
        with open(tmp_path / name, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["id", "text", "label"])
            writer.writerows(rows)
    config = FineTuneConfig(
        model=tiny_checkpoint,
        epochs=30,
        batch_size=8,
        max_length=16,
        learning_rate=2e-3,  # tiny random model, not a pretrained one
        validation_fraction=0.0,
        seed=0,
    )
    metrics = fine_tune(config, tmp_path / "train.csv", tmp_path / "test.csv", tmp_path / "out")
    assert metrics["train_loss_last"] < 0.1
    assert metrics["test_macro_f1"] == 1.0
    lines = (tmp_path / "out" / "predictions.tsv").read_text().strip().splitlines()
    assert lines[0] == "id\tgold\tpredicted\tp_ai"
    assert len(lines) == 9
