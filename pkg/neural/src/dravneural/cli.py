"""CLI for the neural baselines: `finetune` and `cnn-bilstm`."""

from __future__ import annotations

import argparse
import sys

from .cnn_bilstm import CnnBilstmConfig, train_cnn_bilstm
from .finetune import CHECKPOINTS, FineTuneConfig, fine_tune


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dravneural", description="Neural baselines for AI-review detection"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("finetune", help="fine-tune a pretrained transformer")
    p.add_argument("train_file")
    p.add_argument("test_file")
    p.add_argument("--outdir", required=True)
    p.add_argument(
        "--model",
        default="indicsbert",
        help=f"checkpoint alias ({', '.join(sorted(CHECKPOINTS))}), hub id or local path",
    )
    p.add_argument("--epochs", type=int, default=3)
    p.add_argument("--batch-size", type=int, default=16)
    p.add_argument("--max-length", type=int, default=128)
    p.add_argument("--learning-rate", type=float, default=2e-5)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(kind="finetune")

    p = sub.add_parser("cnn-bilstm", help="train the CNN+BiLSTM classifier")
    p.add_argument("train_file")
    p.add_argument("test_file")
    p.add_argument("--outdir", required=True)
    p.add_argument("--epochs", type=int, default=15)
    p.add_argument("--batch-size", type=int, default=32)
    p.add_argument("--max-length", type=int, default=100)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(kind="cnn-bilstm")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.kind == "finetune":
        config = FineTuneConfig(
            model=args.model,
            epochs=args.epochs,
            batch_size=args.batch_size,
            max_length=args.max_length,
            learning_rate=args.learning_rate,
            seed=args.seed,
        )
        metrics = fine_tune(config, args.train_file, args.test_file, args.outdir)
    else:
        config = CnnBilstmConfig(
            epochs=args.epochs,
            batch_size=args.batch_size,
            max_length=args.max_length,
            seed=args.seed,
        )
        metrics = train_cnn_bilstm(config, args.train_file, args.test_file, args.outdir)
    for key, value in metrics.items():
        print(f"{key}\t{value}")
    return 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
