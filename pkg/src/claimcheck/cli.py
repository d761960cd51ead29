"""Command line interface: serve, train, eval, export, fine-tune, make-corpus."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from claimcheck.errors import ClaimCheckError, InvalidInputError


def _add_model_config_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--epochs", type=int, default=None)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--batch-size", type=int, default=None)
    parser.add_argument("--learning-rate", type=float, default=None)
    parser.add_argument("--max-length", type=int, default=None)
    parser.add_argument("--lam", type=float, default=None,
                        help="explanation loss weight in the combined objective")
    parser.add_argument("--evidence-threshold", type=float, default=None)
    parser.add_argument("--vocab-min-count", type=int, default=None)


def _model_config(args: argparse.Namespace, base=None):
    from claimcheck.model.config import ModelConfig

    values = base.to_dict() if base is not None else ModelConfig().to_dict()
    overrides = {
        "epochs": args.epochs,
        "seed": args.seed,
        "batch_size": args.batch_size,
        "learning_rate": args.learning_rate,
        "max_length": args.max_length,
        "lam": args.lam,
        "evidence_threshold": args.evidence_threshold,
        "vocab_min_count": args.vocab_min_count,
    }
    values.update({k: v for k, v in overrides.items() if v is not None})
    return ModelConfig.from_dict(values)


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from claimcheck.api.config import ApiConfig
    from claimcheck.api.runtime import build_app

    config = ApiConfig.from_file(args.config)
    if args.host is not None:
        config.host = args.host
    if args.port is not None:
        config.port = args.port
    app = build_app(config)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
    return 0


def _cmd_train(args: argparse.Namespace) -> int:
    from claimcheck.model.corpus import load_corpus
    from claimcheck.model.pipeline import TwoPhaseModel

    dataset = load_corpus(args.corpus)
    config = _model_config(args)
    model = TwoPhaseModel.train(dataset, config)
    model.save(args.out)
    print(f"trained on {len(dataset)} instances")
    print(f"phase1_final_loss={model.phase1.final_loss:.6f}")
    print(f"phase2_final_loss={model.phase2.final_loss:.6f}")
    print(f"checkpoint written to {args.out}")
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    from claimcheck.model.corpus import load_corpus
    from claimcheck.model.evaluate import evaluate_phase1, evaluate_pipeline
    from claimcheck.model.pipeline import TwoPhaseModel

    model = TwoPhaseModel.load(args.checkpoint)
    dataset = load_corpus(args.corpus)
    if not dataset:
        raise InvalidInputError(f"evaluation corpus {args.corpus} is empty")
    phase1 = evaluate_phase1(model.phase1, dataset, model.config)
    pipeline = evaluate_pipeline(model, dataset)
    print(f"n={phase1['n']}")
    print(f"phase1_label_accuracy={phase1['label_accuracy']:.4f}")
    print(f"phase1_token_precision={phase1['token_precision']:.4f}")
    print(f"phase1_token_recall={phase1['token_recall']:.4f}")
    print(f"phase1_token_f1={phase1['token_f1']:.4f}")
    print(f"pipeline_label_accuracy={pipeline['label_accuracy']:.4f}")
    return 0


def _open_stores(store_dir: str):
    from claimcheck.feedback.store import FeedbackStore
    from claimcheck.service.sessions import SessionStore

    store = Path(store_dir)
    sessions_path = store / "sessions.jsonl"
    sessions = SessionStore(sessions_path if sessions_path.exists() else None)
    return FeedbackStore(store / "feedback.jsonl", sessions)


def _cmd_export(args: argparse.Namespace) -> int:
    from claimcheck.feedback.export import export_rows, write_export

    feedback = _open_stores(args.store)
    categories = None
    if args.categories:
        categories = [c.strip() for c in args.categories.split(",") if c.strip()]
    rows = export_rows(feedback, categories=categories, since=args.since)
    if args.out == "-":
        count = write_export(rows, sys.stdout)
    else:
        count = write_export(rows, args.out)
    print(f"exported {count} rows", file=sys.stderr)
    return 0


def _cmd_fine_tune(args: argparse.Namespace) -> int:
    from claimcheck.feedback.export import load_export
    from claimcheck.feedback.finetune import fine_tune
    from claimcheck.model.corpus import load_corpus
    from claimcheck.model.pipeline import TwoPhaseModel

    base_config = None
    if args.checkpoint:
        base_config = TwoPhaseModel.load(args.checkpoint).config
    config = _model_config(args, base=base_config)
    export = load_export(args.export)
    base_corpus = load_corpus(args.base_corpus)
    model = fine_tune(export, base_corpus, config)
    model.save(args.out)
    print(f"fine-tuned on {len(base_corpus)} base + export rows; checkpoint at {args.out}")
    return 0


def _cmd_make_corpus(args: argparse.Namespace) -> int:
    from claimcheck.model.corpus import keyword_corpus, nationality_corpus, save_corpus

    generator = {"keyword": keyword_corpus, "nationality": nationality_corpus}[args.kind]
    count = save_corpus(generator(args.n, seed=args.seed), args.out)
    print(f"wrote {count} instances to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="claimcheck",
        description="Explainable claim checking with human feedback collection.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    serve = sub.add_parser("serve", help="run the HTTP API")
    serve.add_argument("--config", required=True, help="path to the JSON service config")
    serve.add_argument("--host", default=None)
    serve.add_argument("--port", type=int, default=None)
    serve.set_defaults(fn=_cmd_serve)

    train = sub.add_parser("train", help="train the two-phase model on a corpus")
    train.add_argument("--corpus", required=True)
    train.add_argument("--out", required=True, help="checkpoint output path")
    _add_model_config_flags(train)
    train.set_defaults(fn=_cmd_train)

    evaluate = sub.add_parser("eval", help="report accuracy and rationale token F1")
    evaluate.add_argument("--checkpoint", required=True)
    evaluate.add_argument("--corpus", required=True)
    evaluate.set_defaults(fn=_cmd_eval)

    export = sub.add_parser("export", help="export feedback as training data")
    export.add_argument("--store", required=True, help="directory holding the stores")
    export.add_argument("--out", default="-", help="output path, - for stdout")
    export.add_argument("--since", type=float, default=None)
    export.add_argument("--categories", default=None, help="comma-separated filter")
    export.set_defaults(fn=_cmd_export)

    tune = sub.add_parser("fine-tune", help="retrain on base corpus plus an export")
    tune.add_argument("--export", required=True)
    tune.add_argument("--base-corpus", required=True)
    tune.add_argument("--out", required=True)
    tune.add_argument("--checkpoint", default=None,
                      help="reuse this checkpoint's model configuration")
    _add_model_config_flags(tune)
    tune.set_defaults(fn=_cmd_fine_tune)

    corpus = sub.add_parser("make-corpus", help="generate a synthetic corpus")
    corpus.add_argument("--kind", choices=["keyword", "nationality"], required=True)
    corpus.add_argument("--n", type=int, required=True)
    corpus.add_argument("--seed", type=int, default=0)
    corpus.add_argument("--out", required=True)
    corpus.set_defaults(fn=_cmd_make_corpus)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ClaimCheckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
