"""Query engine: similarity, neighbors, analogy, group comparison, spelling."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .trainer import UnknownWordError, compose_input
from .vectors import EmbeddingStore

SPELL_CANDIDATE_POOL = 50


class ZeroVectorError(ValueError):
    """Similarity is undefined against an all-zero vector."""


class NoSignalError(ValueError):
    """Token yields no subword n-grams, so no vector can be composed."""


@dataclass(frozen=True)
class QueryResult:
    word: str
    score: float


def cosine(a: np.ndarray, b: np.ndarray) -> float:
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    na = np.linalg.norm(a)
    nb = np.linalg.norm(b)
    if na == 0.0 or nb == 0.0:
        raise ZeroVectorError("cosine undefined for zero vector")
    return float(np.clip(a @ b / (na * nb), -1.0, 1.0))


def _unit(v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=np.float64)
    n = np.linalg.norm(v)
    if n == 0.0:
        raise ZeroVectorError("zero vector has no direction")
    return v / n


def resolve_unit(store: EmbeddingStore, word: str) -> np.ndarray:
    """Unit vector for a word, composing subwords for OOV when possible."""
    return _unit(store.vector(word))


def _ranked(
    store: EmbeddingStore, scores: np.ndarray, k: int, exclude_idx: set[int]
) -> list[QueryResult]:
    order = sorted(
        (i for i in range(len(store)) if i not in exclude_idx and not store.zero_rows[i]),
        key=lambda i: (-scores[i], store.words[i]),
    )
    return [QueryResult(store.words[i], float(scores[i])) for i in order[:k]]


def most_similar(
    store: EmbeddingStore,
    query: str | np.ndarray,
    k: int = 10,
    exclude: Sequence[str] = (),
) -> list[QueryResult]:
    """Top-k vocab words by cosine; the query word itself is excluded."""
    if k < 1:
        raise ValueError("k must be >= 1")
    exclude_idx = {store._index[w] for w in exclude if w in store}
    if isinstance(query, str):
        q = resolve_unit(store, query)
        if query in store:
            exclude_idx.add(store.index_of(query))
    else:
        q = _unit(query)
    scores = np.clip(store.unit_matrix.astype(np.float64) @ q, -1.0, 1.0)
    return _ranked(store, scores, k, exclude_idx)


def analogy(
    store: EmbeddingStore, a: str, b: str, c: str, k: int = 10
) -> list[QueryResult]:
    """3CosAdd: rank x not in {a, b, c} by cosine with b - a + c on unit vectors."""
    if k < 1:
        raise ValueError("k must be >= 1")
    vecs = {}
    for w in (a, b, c):
        vecs[w] = resolve_unit(store, w)
    target = vecs[b] - vecs[a] + vecs[c]
    n = np.linalg.norm(target)
    if n == 0.0:
        raise ZeroVectorError("analogy target vector is zero")
    exclude_idx = {store._index[w] for w in (a, b, c) if w in store}
    scores = np.clip(store.unit_matrix.astype(np.float64) @ (target / n), -1.0, 1.0)
    return _ranked(store, scores, k, exclude_idx)


def compare_groups(
    store: EmbeddingStore, group1: Sequence[str], group2: Sequence[str]
) -> float:
    """Cosine between the means of each group's unit vectors."""
    if not group1 or not group2:
        raise ValueError("both groups must be nonempty")
    m1 = np.mean([resolve_unit(store, w) for w in group1], axis=0)
    m2 = np.mean([resolve_unit(store, w) for w in group2], axis=0)
    return cosine(m1, m2)


def levenshtein(a: str, b: str) -> int:
    if len(a) < len(b):
        a, b = b, a
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        cur = [i]
        for j, cb in enumerate(b, start=1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


def spell_suggest(
    store: EmbeddingStore, token: str, k: int = 5, pool: int = SPELL_CANDIDATE_POOL
) -> list[QueryResult]:
    """Subword-cosine candidates re-ranked by edit distance to the token."""
    if not token:
        raise ValueError("token must be nonempty")
    if store.model is None:
        # Text vector files carry no subword rows; only in-vocab tokens
        # have a usable vector then.
        if token not in store:
            raise NoSignalError(
                f"no subword model attached and {token!r} is out of vocabulary"
            )
        vec = store.vector(token)
    else:
        try:
            vec = compose_input(store.model, token)
        except UnknownWordError:
            raise NoSignalError(
                f"no n-grams extractable from {token!r} at the configured lengths"
            ) from None
    q = _unit(vec)
    scores = np.clip(store.unit_matrix.astype(np.float64) @ q, -1.0, 1.0)
    candidates = sorted(
        (i for i in range(len(store)) if not store.zero_rows[i]),
        key=lambda i: (-scores[i], store.words[i]),
    )[:pool]
    reranked = sorted(
        candidates,
        key=lambda i: (levenshtein(store.words[i], token), -scores[i], store.words[i]),
    )
    return [QueryResult(store.words[i], float(scores[i])) for i in reranked[:k]]


@dataclass
class EvaluationReport:
    answered: int = 0
    skipped: int = 0
    malformed: int = 0
    correct: int = 0

    @property
    def accuracy(self) -> float:
        return self.correct / self.answered if self.answered else 0.0


def evaluate_questions(store: EmbeddingStore, path: str) -> EvaluationReport:
    """Batch analogy accuracy over rows `a b c expected`."""
    report = EvaluationReport()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            fields = line.split()
            if not fields:
                continue
            if len(fields) != 4:
                report.malformed += 1
                continue
            a, b, c, expected = fields
            try:
                results = analogy(store, a, b, c, k=1)
            except (UnknownWordError, ZeroVectorError):
                report.skipped += 1
                continue
            if expected not in store:
                report.skipped += 1
                continue
            report.answered += 1
            if results and results[0].word == expected:
                report.correct += 1
    return report
