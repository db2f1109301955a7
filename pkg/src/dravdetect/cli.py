"""Command-line surface: train, predict, evaluate, analyze, compare, clean.

Exit codes: 0 success, 1 usage/config error, 2 data error, 3 internal error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import analysis
from .bundle import load_bundle, save_bundle
from .config import MODEL_CHOICES, make_config
from .corpus import CLASSES, ColumnSchema, class_distribution, load_reviews
from .errors import DataError, UsageError
from .interchange import (
    predictions_by_id,
    read_predictions,
    write_predictions,
)
from .metrics import evaluate, render_report, report_to_kv
from .pipeline import predict_pipeline, train_pipeline
from .textprep import clean_text


def _schema_from_args(args) -> ColumnSchema:
    return ColumnSchema(
        id=args.id_column,
        text=args.text_column,
        label=args.label_column,
        delimiter="\t" if args.tsv else ",",
    )


def _add_schema_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--id-column", default="id")
    p.add_argument("--text-column", default="text")
    p.add_argument("--label-column", default="label")
    p.add_argument("--tsv", action="store_true", help="tab-delimited input files")


def _write(path: Path, content: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(content, encoding="utf-8")


def cmd_train(args) -> int:
    config = make_config(
        args.config,
        language=args.language,
        model=args.model,
        seed=args.seed,
        validation_fraction=args.validation_fraction,
        tfidf_max_features=args.max_features,
        embedding_dim=args.embedding_dim,
        n_trees=args.n_trees,
        gb_rounds=args.gb_rounds,
        gb_learning_rate=args.gb_learning_rate,
        gb_max_depth=args.gb_max_depth,
        cv_folds=args.cv_folds,
    )
    corpus = load_reviews(
        args.train_file,
        _schema_from_args(args),
        language=config.language,
        split="train",
        require_labels=True,
    )
    bundle, report = train_pipeline(config, corpus)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    save_bundle(outdir / "model.bundle", bundle)
    _write(outdir / "validation_report.txt", render_report(report))
    _write(outdir / "validation_report.kv", report_to_kv(report))
    print(f"trained {config.model} on {len(corpus)} reviews")
    print(render_report(report), end="")
    print(f"bundle written to {outdir / 'model.bundle'}")
    return 0


def cmd_predict(args) -> int:
    bundle = load_bundle(args.bundle)
    corpus = load_reviews(args.input_file, _schema_from_args(args))
    rows = predict_pipeline(bundle, corpus)
    write_predictions(args.output, rows)
    print(f"wrote {len(rows)} predictions to {args.output}")
    return 0


def cmd_evaluate(args) -> int:
    predictions = read_predictions(args.predictions)
    gold = load_reviews(args.gold, _schema_from_args(args), require_labels=True)
    by_id = predictions_by_id(predictions)
    y_true, y_pred = [], []
    for r in gold.reviews:
        if r.id not in by_id:
            raise DataError(f"predictions are missing id {r.id!r}")
        y_true.append(CLASSES.index(r.label))
        y_pred.append(CLASSES.index(by_id[r.id].predicted))
    report = evaluate(y_true, y_pred)
    rendered = render_report(report)
    print(rendered, end="")
    if args.outdir:
        outdir = Path(args.outdir)
        _write(outdir / "report.txt", rendered)
        _write(outdir / "report.kv", report_to_kv(report))
    return 0


def cmd_analyze(args) -> int:
    corpus = load_reviews(args.corpus, _schema_from_args(args), require_labels=True)
    stats = analysis.corpus_statistics(
        corpus, raw_whitespace_tokens=args.raw_whitespace_tokens
    )
    outdir = Path(args.outdir)
    _write(outdir / "stats.kv", analysis.render_stats_kv(stats))
    for c in CLASSES:
        table = analysis.top_words(corpus, c, args.top)
        _write(
            outdir / f"top_words_{c.lower()}.tsv",
            analysis.render_frequency_table(table),
        )
    dist = class_distribution(corpus)
    print(f"class distribution: {dist}")
    print(analysis.render_stats_kv(stats), end="")
    print(f"analysis written to {outdir}")
    return 0


def cmd_compare(args) -> int:
    gold = load_reviews(args.gold, _schema_from_args(args), require_labels=True)
    if len(args.predictions) < 2:
        raise UsageError("compare needs at least 2 prediction files")
    named = {}
    for path in args.predictions:
        name = Path(path).stem
        if name in named:
            name = f"{name}_{len(named)}"
        named[name] = read_predictions(path)
    rows = analysis.cross_model_misclassifications(gold, named)
    table = analysis.render_misclassification_table(rows, list(named))
    _write(Path(args.output), table)
    print(f"{len(rows)} reviews misclassified by more than one model")
    print(f"table written to {args.output}")
    return 0


def cmd_clean(args) -> int:
    corpus = load_reviews(args.corpus, _schema_from_args(args))
    for r in corpus.reviews:
        print(clean_text(r.text, strip_indic_digits=not args.keep_indic_digits))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dravdetect",
        description="Detect AI-generated product reviews in Tamil and Malayalam",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="fit features and a classifier, write a bundle")
    p.add_argument("train_file")
    p.add_argument("--outdir", required=True)
    p.add_argument("--model", choices=MODEL_CHOICES, default=None)
    p.add_argument("--language", default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--validation-fraction", type=float, default=None)
    p.add_argument("--max-features", type=int, default=None)
    p.add_argument("--embedding-dim", type=int, default=None)
    p.add_argument("--n-trees", type=int, default=None)
    p.add_argument("--gb-rounds", type=int, default=None)
    p.add_argument("--gb-learning-rate", type=float, default=None)
    p.add_argument("--gb-max-depth", type=int, default=None)
    p.add_argument("--cv-folds", type=int, default=None)
    p.add_argument("--config", default=None, help="JSON config file; flags override")
    _add_schema_flags(p)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("predict", help="predict with a trained bundle")
    p.add_argument("bundle")
    p.add_argument("input_file")
    p.add_argument("--output", required=True)
    _add_schema_flags(p)
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("evaluate", help="score a predictions file against gold labels")
    p.add_argument("predictions")
    p.add_argument("gold")
    p.add_argument("--outdir", default=None)
    _add_schema_flags(p)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("analyze", help="corpus statistics and word frequencies")
    p.add_argument("corpus")
    p.add_argument("--outdir", required=True)
    p.add_argument("--top", type=int, default=50)
    p.add_argument("--raw-whitespace-tokens", action="store_true")
    _add_schema_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("compare", help="cross-model misclassification table")
    p.add_argument("gold")
    p.add_argument("predictions", nargs="+")
    p.add_argument("--output", required=True)
    _add_schema_flags(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("clean", help="emit cleaned text, one line per review")
    p.add_argument("corpus")
    p.add_argument("--keep-indic-digits", action="store_true")
    _add_schema_flags(p)
    p.set_defaults(func=cmd_clean)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
