"""Exact sentence-level deduplication."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Iterable, Iterator


@dataclass
class DedupStats:
    total_sentences: int = 0
    unique_sentences: int = 0

    @property
    def reduction_ratio(self) -> float:
        if self.total_sentences == 0:
            return 0.0
        return 1.0 - self.unique_sentences / self.total_sentences


def _digest(sentence: str) -> bytes:
    return hashlib.blake2b(sentence.encode("utf-8"), digest_size=16).digest()


@dataclass
class SentenceSet:
    """128-bit digest set with collision verification against first occurrences."""

    _seen: dict[bytes, list[str]] = field(default_factory=dict)

    def add(self, sentence: str) -> bool:
        """True when the sentence was not seen before."""
        key = _digest(sentence)
        bucket = self._seen.get(key)
        if bucket is None:
            self._seen[key] = [sentence]
            return True
        if sentence in bucket:
            return False
        bucket.append(sentence)
        return True


def dedup_sentences(
    lines: Iterable[str], stats: DedupStats | None = None
) -> tuple[Iterator[str], DedupStats]:
    """Emit each distinct sentence once, at its first occurrence.

    The stats object is filled in as the returned iterator is consumed.
    """
    if stats is None:
        stats = DedupStats()

    def _generate() -> Iterator[str]:
        seen = SentenceSet()
        for line in lines:
            stats.total_sentences += 1
            if seen.add(line):
                stats.unique_sentences += 1
                yield line

    return _generate(), stats
