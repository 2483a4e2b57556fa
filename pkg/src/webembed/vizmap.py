"""Build the explorer map: frequency sample, t-SNE projection, k-means labels."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .kmeans import kmeans
from .tsne import ProjectionConfig, tsne
from .vectors import EmbeddingStore


@dataclass
class ProjectedPoint:
    word: str
    x: float
    y: float
    cluster: int


@dataclass
class MapResult:
    points: list[ProjectedPoint]
    kl_trace: list[float]

    @property
    def final_kl(self) -> float:
        return self.kl_trace[-1] if self.kl_trace else 0.0


def sample_words(store: EmbeddingStore, n: int) -> list[str]:
    """The n highest-frequency words; store order is frequency order."""
    if n > len(store):
        warnings.warn(f"sample size {n} exceeds vocabulary {len(store)}; clamping")
        n = len(store)
    return store.words[:n]


def build_map(
    store: EmbeddingStore, k_clusters: int, config: ProjectionConfig
) -> MapResult:
    words = sample_words(store, config.sample_size)
    vectors = store.matrix[: len(words)].astype(np.float64)
    coords, kl_trace = tsne(vectors, config)
    result = kmeans(coords, k_clusters, seed=config.seed)
    points = [
        ProjectedPoint(word=w, x=float(xy[0]), y=float(xy[1]), cluster=int(c))
        for w, xy, c in zip(words, coords, result.assignments)
    ]
    return MapResult(points=points, kl_trace=kl_trace)


def write_map(result: MapResult, out: str) -> None:
    """TSV rows `word<TAB>x<TAB>y<TAB>cluster`."""
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        for p in result.points:
            fh.write(f"{p.word}\t{p.x!r}\t{p.y!r}\t{p.cluster}\n")
