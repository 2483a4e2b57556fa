"""Within-sentence n-gram counting, TSV serialization and vocabulary building."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence


@dataclass
class NgramTable:
    n: int
    counts: dict[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.n not in (1, 2, 3):
            raise ValueError(f"n must be 1, 2 or 3, got {self.n}")


def count_ngrams(sentences: Iterable[Sequence[str]], n: int) -> NgramTable:
    """Count contiguous n-grams; n-grams never cross sentence boundaries."""
    table = NgramTable(n)
    counts: Counter[str] = Counter()
    for tokens in sentences:
        if n == 1:
            counts.update(tokens)
        else:
            for i in range(len(tokens) - n + 1):
                counts[" ".join(tokens[i : i + n])] += 1
    table.counts = dict(counts)
    return table


def _sorted_items(counts: dict[str, int]) -> list[tuple[str, int]]:
    return sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))


def write_ngrams(table: NgramTable, out: str) -> None:
    """TSV rows `ngram<TAB>count`, sorted by count descending then key."""
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        for key, count in _sorted_items(table.counts):
            fh.write(f"{key}\t{count}\n")


def read_ngrams(path: str) -> NgramTable:
    counts: dict[str, int] = {}
    n = 0
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if "\t" not in line:
                raise ValueError(f"{path}: line {lineno}: expected tab-separated row")
            key, _, raw = line.rpartition("\t")
            try:
                count = int(raw)
            except ValueError:
                raise ValueError(
                    f"{path}: line {lineno}: count {raw!r} is not an integer"
                ) from None
            if not n:
                n = len(key.split(" "))
            counts[key] = count
    return NgramTable(n or 1, counts)


@dataclass
class Vocab:
    """Frequency-ranked word table with count cutoff and dense ids."""

    entries: list[tuple[str, int, int]]
    min_count: int

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def words(self) -> list[str]:
        return [w for w, _, _ in self.entries]

    @property
    def counts(self) -> list[int]:
        return [c for _, c, _ in self.entries]

    def id_of(self, word: str) -> int | None:
        return self._index.get(word)

    def __contains__(self, word: str) -> bool:
        return word in self._index

    def __post_init__(self) -> None:
        self._index = {w: i for w, _, i in self.entries}


def build_vocab(unigrams: NgramTable, min_count: int) -> Vocab:
    """Words with count >= min_count, sorted by count desc then word asc."""
    if unigrams.n != 1:
        raise ValueError("build_vocab requires a unigram table")
    ranked = _sorted_items({w: c for w, c in unigrams.counts.items() if c >= min_count})
    entries = [(w, c, i) for i, (w, c) in enumerate(ranked)]
    return Vocab(entries=entries, min_count=min_count)


def write_vocab(vocab: Vocab, out: str) -> None:
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        for word, count, _ in vocab.entries:
            fh.write(f"{word}\t{count}\n")


def read_vocab(path: str, min_count: int = 1) -> Vocab:
    table = read_ngrams(path)
    return build_vocab(table, min_count)
