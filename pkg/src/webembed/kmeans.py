"""k-means++ seeding with Lloyd iterations."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

MAX_ITERATIONS = 100


@dataclass
class KMeansResult:
    assignments: np.ndarray
    centroids: np.ndarray
    inertia_trace: list[float] = field(default_factory=list)

    @property
    def inertia(self) -> float:
        return self.inertia_trace[-1] if self.inertia_trace else 0.0

    def __iter__(self):
        return iter((self.assignments, self.centroids))


def _sq_dists_to(points: np.ndarray, centers: np.ndarray) -> np.ndarray:
    diff = points[:, None, :] - centers[None, :, :]
    return np.sum(diff * diff, axis=2)


def _plus_plus_seed(points: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    n = points.shape[0]
    centers = np.empty((k, points.shape[1]), dtype=np.float64)
    centers[0] = points[rng.integers(n)]
    closest = np.sum((points - centers[0]) ** 2, axis=1)
    for j in range(1, k):
        total = closest.sum()
        if total == 0.0:
            idx = rng.integers(n)
        else:
            idx = rng.choice(n, p=closest / total)
        centers[j] = points[idx]
        closest = np.minimum(closest, np.sum((points - centers[j]) ** 2, axis=1))
    return centers


def kmeans(points: np.ndarray, k: int, seed: int = 1) -> KMeansResult:
    """Cluster 2-D points; ties go to the lowest centroid id, empty clusters
    are reseeded to the point farthest from its assigned centroid."""
    points = np.asarray(points, dtype=np.float64)
    n = points.shape[0]
    if not 1 <= k <= n:
        raise ValueError(f"k must be between 1 and {n}, got {k}")
    rng = np.random.default_rng(seed)
    centers = _plus_plus_seed(points, k, rng)
    assignments = np.full(n, -1, dtype=np.int64)
    trace: list[float] = []
    for _ in range(MAX_ITERATIONS):
        d = _sq_dists_to(points, centers)
        new_assign = np.argmin(d, axis=1)
        trace.append(float(d[np.arange(n), new_assign].sum()))
        if np.array_equal(new_assign, assignments):
            break
        assignments = new_assign
        for j in range(k):
            members = points[assignments == j]
            if len(members):
                centers[j] = members.mean(axis=0)
            else:
                farthest = int(np.argmax(d[np.arange(n), assignments]))
                centers[j] = points[farthest]
    return KMeansResult(assignments=assignments, centroids=centers, inertia_trace=trace)
