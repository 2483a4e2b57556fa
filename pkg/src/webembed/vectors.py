"""Text vector format and the in-memory embedding store."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .trainer import Model, UnknownWordError, compose_input


def format_value(v: float) -> str:
    """Shortest decimal that round-trips the float32 value."""
    return np.format_float_positional(np.float32(v), unique=True, trim="-")


@dataclass
class EmbeddingStore:
    words: list[str]
    matrix: np.ndarray
    model: Model | None = None
    unit_matrix: np.ndarray = field(init=False)
    zero_rows: np.ndarray = field(init=False)

    def __post_init__(self) -> None:
        if len(self.words) != self.matrix.shape[0]:
            raise ValueError("word count does not match matrix rows")
        if len(set(self.words)) != len(self.words):
            raise ValueError("duplicate words in store")
        self._index = {w: i for i, w in enumerate(self.words)}
        norms = np.linalg.norm(self.matrix.astype(np.float64), axis=1)
        self.zero_rows = norms == 0.0
        safe = np.where(self.zero_rows, 1.0, norms)
        # float64 so ranking scores match full-precision scans
        self.unit_matrix = self.matrix.astype(np.float64) / safe[:, None]
        self.unit_matrix[self.zero_rows] = 0.0

    def __len__(self) -> int:
        return len(self.words)

    @property
    def dim(self) -> int:
        return self.matrix.shape[1]

    def __contains__(self, word: str) -> bool:
        return word in self._index

    def index_of(self, word: str) -> int:
        try:
            return self._index[word]
        except KeyError:
            raise UnknownWordError(word) from None

    def vector(self, word: str) -> np.ndarray:
        """Stored vector for an in-vocab word, subword-composed otherwise."""
        idx = self._index.get(word)
        if idx is not None:
            return self.matrix[idx]
        if self.model is not None:
            return compose_input(self.model, word)
        raise UnknownWordError(word)

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(f"{len(self.words)} {self.dim}\n")
            for word, row in zip(self.words, self.matrix):
                fh.write(word)
                for v in row:
                    fh.write(" " + format_value(v))
                fh.write("\n")


def store_from_model(model: Model) -> EmbeddingStore:
    matrix = np.vstack(
        [compose_input(model, w) for w in model.vocab.words]
    ).astype(np.float32)
    return EmbeddingStore(words=model.vocab.words, matrix=matrix, model=model)


def save_vectors(model: Model, path: str, mode: str = "words_only") -> None:
    """Write composed word vectors: header `V dim`, then one word per line."""
    if mode != "words_only":
        raise ValueError(f"unsupported mode {mode!r}")
    store_from_model(model).save(path)


def load_vectors(path: str) -> EmbeddingStore:
    with open(path, encoding="utf-8") as fh:
        header = fh.readline()
        parts = header.split()
        if len(parts) != 2:
            raise ValueError(f"{path}: line 1: malformed header {header!r}")
        try:
            count, dim = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"{path}: line 1: malformed header {header!r}") from None
        words: list[str] = []
        matrix = np.empty((count, dim), dtype=np.float32)
        for i in range(count):
            lineno = i + 2
            line = fh.readline()
            if not line:
                raise ValueError(
                    f"{path}: line {lineno}: header declares {count} rows, "
                    f"found {i}"
                )
            fields = line.rstrip("\n").split(" ")
            if len(fields) != dim + 1:
                raise ValueError(
                    f"{path}: line {lineno}: expected {dim} values, "
                    f"got {len(fields) - 1}"
                )
            words.append(fields[0])
            try:
                matrix[i] = [np.float32(x) for x in fields[1:]]
            except ValueError:
                raise ValueError(f"{path}: line {lineno}: non-numeric value") from None
    return EmbeddingStore(words=words, matrix=matrix)
