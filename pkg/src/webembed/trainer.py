"""Subword-aware skip-gram / CBOW training with negative sampling."""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from ._kernels import train_kernel
from .ngrams import NgramTable, Vocab, build_vocab, count_ngrams
from .subword import char_ngrams, hash_subword

MODES = ("skipgram_subword", "cbow_subword", "skipgram_word")

NEGATIVE_TABLE_SIZE = 1_000_000
LR_FLOOR = 1e-5


class UnknownWordError(KeyError):
    def __init__(self, word: str):
        super().__init__(word)
        self.word = word

    def __str__(self) -> str:
        return f"unknown word: {self.word!r}"


@dataclass
class TrainingConfig:
    dim: int = 300
    mode: str = "skipgram_subword"
    min_count: int = 11
    negatives: int = 5
    window: int = 5
    epochs: int = 5
    lr0: float = 0.05
    bucket_count: int = 1 << 21
    nmin: int = 3
    nmax: int = 6
    subsample_t: float = 1e-4
    threads: int = 8
    seed: int = 1

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        if self.nmin > self.nmax:
            raise ValueError("nmin must be <= nmax")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")

    @property
    def uses_subwords(self) -> bool:
        return self.mode != "skipgram_word"


@dataclass
class Model:
    vocab: Vocab
    input: np.ndarray
    output: np.ndarray
    config: TrainingConfig
    epoch_mean_loss: list[float] = field(default_factory=list)

    @property
    def bucket_count(self) -> int:
        return self.input.shape[0] - len(self.vocab)

    def subword_bucket_rows(self, word: str) -> list[int]:
        """Row indices of the word's n-gram buckets (empty without subwords)."""
        if not self.config.uses_subwords:
            return []
        base = len(self.vocab)
        grams = char_ngrams(word, self.config.nmin, self.config.nmax)
        return [base + hash_subword(g, self.config.bucket_count) for g in grams]


def subsample_keep_prob(count: int, total_tokens: int, t: float) -> float:
    """Keep probability for frequent-word subsampling."""
    if not 1 <= count <= total_tokens:
        raise ValueError("need total_tokens >= count >= 1")
    if t <= 0.0:
        return 0.0
    f = count / total_tokens
    return min(1.0, math.sqrt(t / f) + t / f)


def negative_table(vocab: Vocab, size: int = NEGATIVE_TABLE_SIZE, exponent: float = 0.75) -> np.ndarray:
    """Sampling table where id w occupies a share proportional to count^exponent.

    Shares are apportioned by largest remainder so the table length is exact.
    """
    if len(vocab) == 0:
        raise ValueError("vocab must be nonempty")
    weights = np.array([c**exponent for c in vocab.counts], dtype=np.float64)
    shares = weights / weights.sum() * size
    floors = np.floor(shares).astype(np.int64)
    short = size - int(floors.sum())
    if short > 0:
        order = np.argsort(-(shares - floors), kind="stable")
        floors[order[:short]] += 1
    table = np.empty(size, dtype=np.int32)
    pos = 0
    for wid, n in enumerate(floors):
        table[pos : pos + n] = wid
        pos += n
    return table


def sigmoid(x: np.ndarray | float) -> np.ndarray | float:
    return 1.0 / (1.0 + np.exp(-np.asarray(x, dtype=np.float64)))


def ns_loss_and_grads(
    h: np.ndarray, target: np.ndarray, negatives: Sequence[np.ndarray]
) -> tuple[float, np.ndarray, list[np.ndarray]]:
    """Negative-sampling loss with analytic gradients.

    Returns (loss, grad wrt h, grads for the target row then each negative row).
    """
    h = np.asarray(h, dtype=np.float64)
    target = np.asarray(target, dtype=np.float64)
    negs = [np.asarray(u, dtype=np.float64) for u in negatives]
    for v in (h, target, *negs):
        if not np.all(np.isfinite(v)):
            raise ValueError("non-finite input vector")
    st = float(sigmoid(target @ h))
    loss = -math.log(max(st, 1e-300))
    grad_h = (st - 1.0) * target
    grad_rows = [(st - 1.0) * h]
    for u in negs:
        si = float(sigmoid(u @ h))
        loss -= math.log(max(1.0 - si, 1e-300))
        grad_h = grad_h + si * u
        grad_rows.append(si * h)
    return loss, grad_h, grad_rows


def _word_rows(vocab: Vocab, config: TrainingConfig) -> tuple[np.ndarray, np.ndarray]:
    """Flattened composition-row lists (word row + n-gram buckets) per vocab id."""
    offs = np.zeros(len(vocab) + 1, dtype=np.int64)
    ids: list[int] = []
    base = len(vocab)
    for wid, word in enumerate(vocab.words):
        ids.append(wid)
        if config.uses_subwords:
            for gram in char_ngrams(word, config.nmin, config.nmax):
                ids.append(base + hash_subword(gram, config.bucket_count))
        offs[wid + 1] = len(ids)
    return offs, np.array(ids, dtype=np.int32)


def compose_input(model: Model, word: str) -> np.ndarray:
    """Mean of the word's input rows (word row plus subword buckets).

    OOV words in subword modes compose from bucket rows alone; in
    skipgram_word mode an OOV word is an error.
    """
    wid = model.vocab.id_of(word)
    rows: list[int] = []
    if wid is not None:
        rows.append(wid)
    elif not model.config.uses_subwords:
        raise UnknownWordError(word)
    rows.extend(model.subword_bucket_rows(word))
    if not rows:
        raise UnknownWordError(word)
    return model.input[rows].mean(axis=0)


def _init_model(vocab: Vocab, config: TrainingConfig) -> Model:
    buckets = config.bucket_count if config.uses_subwords else 0
    rng = np.random.default_rng(config.seed)
    bound = 1.0 / config.dim
    inp = rng.uniform(-bound, bound, size=(len(vocab) + buckets, config.dim)).astype(
        np.float32
    )
    out = np.zeros((len(vocab), config.dim), dtype=np.float32)
    return Model(vocab=vocab, input=inp, output=out, config=config)


def train(corpus: Iterable[Sequence[str]], config: TrainingConfig) -> Model:
    """Train a model over tokenized sentences.

    Deterministic for a fixed seed at threads=1; multi-threaded runs share
    the matrices without locks and are not bit-reproducible.
    """
    sentences = [list(s) for s in corpus if s]
    unigrams = count_ngrams(sentences, 1)
    vocab = build_vocab(unigrams, config.min_count)
    if len(vocab) == 0:
        raise ValueError("empty vocabulary: no word reaches min_count")

    model = _init_model(vocab, config)
    if config.epochs == 0:
        return model

    encoded: list[list[int]] = []
    for sent in sentences:
        ids = [i for w in sent if (i := vocab.id_of(w)) is not None]
        if ids:
            encoded.append(ids)
    total_tokens = sum(len(s) for s in encoded)
    if total_tokens == 0:
        return model

    tokens = np.fromiter(
        (i for s in encoded for i in s), dtype=np.int32, count=total_tokens
    )
    sent_offs = np.zeros(len(encoded) + 1, dtype=np.int64)
    np.cumsum([len(s) for s in encoded], out=sent_offs[1:])

    keep = np.array(
        [
            subsample_keep_prob(c, total_tokens, config.subsample_t)
            for c in vocab.counts
        ],
        dtype=np.float64,
    )
    table_size = min(NEGATIVE_TABLE_SIZE, max(len(vocab) * 50, 1000))
    neg_table = negative_table(vocab, table_size)
    sub_offs, sub_ids = _word_rows(vocab, config)

    cbow = 1 if config.mode == "cbow_subword" else 0
    epoch_loss = np.zeros(config.epochs, dtype=np.float64)
    epoch_updates = np.zeros(config.epochs, dtype=np.int64)

    def run(first_sent: int, last_sent: int, seed: int, losses, updates) -> None:
        offs = sent_offs[first_sent : last_sent + 1].copy()
        toks = tokens[offs[0] : offs[-1]]
        offs -= offs[0]
        sched = config.epochs * (offs[-1] - offs[0])
        train_kernel(
            toks,
            offs,
            sub_offs,
            sub_ids,
            keep,
            neg_table,
            model.input,
            model.output,
            cbow,
            config.window,
            config.negatives,
            config.epochs,
            config.lr0,
            LR_FLOOR,
            seed,
            sched,
            losses,
            updates,
        )

    nthreads = max(1, min(config.threads, len(encoded)))
    if nthreads == 1:
        run(0, len(encoded), config.seed, epoch_loss, epoch_updates)
    else:
        bounds = np.linspace(0, len(encoded), nthreads + 1).astype(int)
        parts = [
            (np.zeros(config.epochs), np.zeros(config.epochs, dtype=np.int64))
            for _ in range(nthreads)
        ]
        threads = [
            threading.Thread(
                target=run,
                args=(bounds[t], bounds[t + 1], config.seed + t, *parts[t]),
            )
            for t in range(nthreads)
        ]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        for losses, updates in parts:
            epoch_loss += losses
            epoch_updates += updates

    model.epoch_mean_loss = [
        float(l / u) if u else 0.0 for l, u in zip(epoch_loss, epoch_updates)
    ]
    return model
