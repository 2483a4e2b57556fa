"""Command-line entry points for the whole toolchain."""

from __future__ import annotations

import argparse
import glob
import gzip
import os
import sys
from typing import Iterable, Iterator

from . import __version__


def _open_text(path: str, mode: str = "rt"):
    if path.endswith(".gz"):
        return gzip.open(path, mode, encoding="utf-8")
    return open(path, mode, encoding="utf-8")


def _read_lines(path: str) -> Iterator[str]:
    with _open_text(path) as fh:
        for line in fh:
            yield line.rstrip("\n")


def _cmd_extract(args: argparse.Namespace) -> int:
    from .ingest import run_extract
    from .textnorm import script_by_name

    script = script_by_name(args.script)
    for stats in run_extract(args.input, args.out, script, jobs=args.jobs):
        print(f"{stats.path}\t{stats.records}\t{stats.documents}\t{stats.errors}")
    return 0


def _cmd_dedup(args: argparse.Namespace) -> int:
    from .dedup import DedupStats, dedup_sentences

    paths = sorted(
        glob.glob(os.path.join(args.input, "*.txt.gz"))
        + glob.glob(os.path.join(args.input, "*.txt"))
    )

    def per_domain() -> Iterator[str]:
        # Stage 1: dedup within each domain file, bounded per-domain memory.
        for path in paths:
            unique, _ = dedup_sentences(_read_lines(path))
            yield from unique

    stats = DedupStats()
    unique_global, _ = dedup_sentences(per_domain(), stats)
    with _open_text(args.out, "wt") as fh:
        for line in unique_global:
            fh.write(line)
            fh.write("\n")
    print(f"{stats.total_sentences}\t{stats.unique_sentences}\t{stats.reduction_ratio}")
    return 0


def _cmd_ngrams(args: argparse.Namespace) -> int:
    from .ngrams import count_ngrams, write_ngrams

    sentences = (line.split() for line in _read_lines(args.input))
    table = count_ngrams(sentences, args.n)
    write_ngrams(table, args.out)
    return 0


def _cmd_vocab(args: argparse.Namespace) -> int:
    from .ngrams import build_vocab, read_ngrams, write_vocab

    vocab = build_vocab(read_ngrams(args.unigrams), args.min_count)
    write_vocab(vocab, args.out)
    return 0


_MODE_NAMES = {
    "skipgram": "skipgram_subword",
    "cbow": "cbow_subword",
    "skipgram-nosub": "skipgram_word",
}


def _cmd_train(args: argparse.Namespace) -> int:
    from .trainer import TrainingConfig, train
    from .vectors import save_vectors

    config = TrainingConfig(
        dim=args.dim,
        mode=_MODE_NAMES[args.mode],
        min_count=args.min_count,
        negatives=args.neg,
        window=args.window,
        epochs=args.epochs,
        lr0=args.lr,
        bucket_count=args.bucket,
        nmin=args.minn,
        nmax=args.maxn,
        subsample_t=args.sample,
        threads=args.threads,
        seed=args.seed,
    )
    corpus = [line.split() for line in _read_lines(args.input)]
    model = train(corpus, config)
    save_vectors(model, args.out)
    return 0


def _cmd_query(args: argparse.Namespace) -> int:
    from . import query as q
    from .vectors import load_vectors

    store = load_vectors(args.vectors)
    try:
        if args.query_cmd == "similarity":
            score = q.cosine(store.vector(args.w1), store.vector(args.w2))
            print(f"{score:.6f}")
        elif args.query_cmd == "neighbors":
            for r in q.most_similar(store, args.w, k=args.k):
                print(f"{r.word}\t{r.score:.6f}")
        elif args.query_cmd == "analogy":
            for r in q.analogy(store, args.a, args.b, args.c, k=args.k):
                print(f"{r.word}\t{r.score:.6f}")
        elif args.query_cmd == "spell":
            for r in q.spell_suggest(store, args.token, k=args.k):
                print(f"{r.word}\t{r.score:.6f}")
        elif args.query_cmd == "eval":
            report = q.evaluate_questions(store, args.file)
            print(
                f"answered\t{report.answered}\n"
                f"skipped\t{report.skipped}\n"
                f"malformed\t{report.malformed}\n"
                f"accuracy\t{report.accuracy:.4f}"
            )
    except (q.UnknownWordError, q.ZeroVectorError, q.NoSignalError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def _cmd_map(args: argparse.Namespace) -> int:
    from .tsne import ProjectionConfig
    from .vectors import load_vectors
    from .vizmap import build_map, write_map

    store = load_vectors(args.vectors)
    n = min(args.sample, len(store))
    config = ProjectionConfig(
        sample_size=n,
        perplexity=min(args.perplexity, max(1.0, n / 3.0 - 1.0)),
        seed=args.seed,
    )
    result = build_map(store, min(args.k, n), config)
    write_map(result, args.out)
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    from .service import ServiceConfig, serve

    host, _, port = args.bind.partition(":")
    serve(
        ServiceConfig(
            vectors_path=args.vectors,
            host=host or "127.0.0.1",
            port=int(port or 7000),
            static_dir=args.static,
            seed=args.seed,
        )
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="webembed")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("extract", help="WARC files to per-domain sentence files")
    p.add_argument("--input", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--script", default="greek")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("dedup", help="deduplicate sentences per domain, then globally")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_dedup)

    p = sub.add_parser("ngrams", help="count n-grams of a sentence file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--n", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_ngrams)

    p = sub.add_parser("vocab", help="build a vocabulary from a unigram table")
    p.add_argument("--unigrams", required=True)
    p.add_argument("--min-count", type=int, default=11)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_vocab)

    p = sub.add_parser("train", help="train embeddings on a sentence file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--mode", choices=sorted(_MODE_NAMES), default="skipgram")
    p.add_argument("--dim", type=int, default=300)
    p.add_argument("--min-count", type=int, default=11)
    p.add_argument("--threads", type=int, default=8)
    p.add_argument("--neg", type=int, default=5)
    p.add_argument("--window", type=int, default=5)
    p.add_argument("--epochs", type=int, default=5)
    p.add_argument("--lr", type=float, default=0.05)
    p.add_argument("--bucket", type=int, default=1 << 21)
    p.add_argument("--minn", type=int, default=3)
    p.add_argument("--maxn", type=int, default=6)
    p.add_argument("--sample", type=float, default=1e-4)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_train)

    p = sub.add_parser("query", help="query a vector file")
    p.add_argument("--vectors", required=True)
    qsub = p.add_subparsers(dest="query_cmd", required=True)
    s = qsub.add_parser("similarity")
    s.add_argument("w1")
    s.add_argument("w2")
    s = qsub.add_parser("neighbors")
    s.add_argument("w")
    s.add_argument("--k", type=int, default=10)
    s = qsub.add_parser("analogy")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("c")
    s.add_argument("--k", type=int, default=5)
    s = qsub.add_parser("spell")
    s.add_argument("token")
    s.add_argument("--k", type=int, default=5)
    s = qsub.add_parser("eval")
    s.add_argument("--file", required=True)
    p.set_defaults(func=_cmd_query)

    p = sub.add_parser("map", help="t-SNE + k-means map of a vector sample")
    p.add_argument("--vectors", required=True)
    p.add_argument("--sample", type=int, default=500)
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--perplexity", type=float, default=30.0)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_map)

    p = sub.add_parser("serve", help="serve the explorer HTTP API")
    p.add_argument("--vectors", required=True)
    p.add_argument("--bind", default="127.0.0.1:7000")
    p.add_argument("--static", default=None)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
