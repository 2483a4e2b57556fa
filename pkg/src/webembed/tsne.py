"""Exact t-SNE with perplexity-calibrated affinities and PCA initialization."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

EARLY_EXAGGERATION_ITERS = 250
MOMENTUM_SWITCH_ITER = 250
CALIBRATION_STEPS = 50
CALIBRATION_TOL = 1e-5
_EPS = 1e-12


@dataclass
class ProjectionConfig:
    sample_size: int = 500
    perplexity: float = 30.0
    iterations: int = 1000
    early_exaggeration: float = 12.0
    learning_rate: float = 200.0
    seed: int = 1

    def __post_init__(self) -> None:
        if self.iterations < 250:
            raise ValueError("iterations must be >= 250")
        if self.perplexity >= self.sample_size / 3:
            raise ValueError("perplexity must be < sample_size / 3")


def pairwise_sq_dists(x: np.ndarray) -> np.ndarray:
    sq = np.sum(x * x, axis=1)
    d = sq[:, None] + sq[None, :] - 2.0 * (x @ x.T)
    np.maximum(d, 0.0, out=d)
    np.fill_diagonal(d, 0.0)
    return d


def perplexity_calibration(
    sq_distances: np.ndarray, perplexity: float
) -> tuple[np.ndarray, np.ndarray]:
    """Per-point Gaussian bandwidths matching the target perplexity.

    Binary search on precision so the Shannon entropy (bits) of each
    conditional distribution hits log2(perplexity). Returns the row-wise
    conditional probabilities and the bandwidths sigma_i.
    """
    n = sq_distances.shape[0]
    target = np.log2(perplexity)
    p = np.zeros((n, n), dtype=np.float64)
    sigmas = np.zeros(n, dtype=np.float64)
    for i in range(n):
        d = np.delete(sq_distances[i], i)
        if np.all(d == 0.0):
            warnings.warn(f"degenerate distance row {i}: uniform affinities")
            row = np.full(n, 1.0 / (n - 1))
            row[i] = 0.0
            p[i] = row
            sigmas[i] = 0.0
            continue
        beta, beta_min, beta_max = 1.0, 0.0, np.inf
        row = np.zeros(n - 1)
        for _ in range(CALIBRATION_STEPS):
            row = np.exp(-d * beta)
            s = row.sum()
            if s <= 0.0:
                entropy = 0.0
            else:
                row /= s
                nz = row > 0
                entropy = -np.sum(row[nz] * np.log2(row[nz]))
            if abs(entropy - target) < CALIBRATION_TOL:
                break
            if entropy > target:
                beta_min = beta
                beta = beta * 2.0 if beta_max == np.inf else (beta + beta_max) / 2.0
            else:
                beta_max = beta
                beta = (beta + beta_min) / 2.0
        p[i, np.arange(n) != i] = row
        sigmas[i] = np.sqrt(1.0 / (2.0 * beta))
    return p, sigmas


def joint_affinities(x: np.ndarray, perplexity: float) -> np.ndarray:
    cond, _ = perplexity_calibration(pairwise_sq_dists(x), perplexity)
    p = (cond + cond.T) / (2.0 * x.shape[0])
    np.fill_diagonal(p, 0.0)
    return p


def _low_dim_kernel(y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Unnormalized Student-t weights and normalized q_ij."""
    num = 1.0 / (1.0 + pairwise_sq_dists(y))
    np.fill_diagonal(num, 0.0)
    q = num / num.sum()
    return num, np.maximum(q, _EPS)


def kl_divergence_and_grad(
    y: np.ndarray, p: np.ndarray
) -> tuple[float, np.ndarray]:
    """KL(P || Q) of the embedding and its gradient."""
    num, q = _low_dim_kernel(y)
    mask = p > 0
    kl = float(np.sum(p[mask] * np.log(p[mask] / q[mask])))
    pq = (p - q) * num
    grad = 4.0 * ((np.diag(pq.sum(axis=1)) - pq) @ y)
    return kl, grad


def _pca_init(x: np.ndarray) -> np.ndarray:
    centered = x - x.mean(axis=0)
    _, _, vt = np.linalg.svd(centered, full_matrices=False)
    # Deterministic sign: largest-magnitude loading positive per component.
    for row in vt:
        if row[np.argmax(np.abs(row))] < 0:
            row *= -1
    y = centered @ vt[:2].T
    std = y.std()
    if std > 0:
        y = y / std * 1e-4
    return y


def tsne(
    vectors: np.ndarray, config: ProjectionConfig
) -> tuple[np.ndarray, list[float]]:
    """Exact t-SNE to 2-D; returns coordinates and the KL divergence trace."""
    x = np.asarray(vectors, dtype=np.float64)
    if x.ndim != 2 or x.shape[0] < 2:
        raise ValueError("need at least two input vectors")
    if not np.all(np.isfinite(x)):
        raise ValueError("non-finite input")
    n = x.shape[0]
    perplexity = min(config.perplexity, max(1.0, (n - 1) / 3.0))
    p = joint_affinities(x, perplexity)

    y = _pca_init(x)
    velocity = np.zeros_like(y)
    gains = np.ones_like(y)
    # Small point sets diverge at large fixed rates; cap with the usual
    # n / (4 * exaggeration) heuristic, floored at 50.
    lr = min(
        config.learning_rate, max(n / (4.0 * config.early_exaggeration), 50.0)
    )
    trace: list[float] = []
    for it in range(config.iterations):
        exaggerate = it < EARLY_EXAGGERATION_ITERS
        p_eff = p * config.early_exaggeration if exaggerate else p
        kl, grad = kl_divergence_and_grad(y, p_eff)
        if not exaggerate:
            trace.append(kl)
        else:
            # Trace stays comparable across phases: recompute without
            # exaggeration for reporting.
            plain_kl, _ = kl_divergence_and_grad(y, p)
            trace.append(plain_kl)
        momentum = 0.5 if it < MOMENTUM_SWITCH_ITER else 0.8
        # Per-parameter gains as in the reference implementation.
        same_sign = np.sign(grad) == np.sign(velocity)
        gains = np.where(same_sign, gains * 0.8, gains + 0.2)
        np.maximum(gains, 0.01, out=gains)
        velocity = momentum * velocity - lr * gains * grad
        y = y + velocity
        y = y - y.mean(axis=0)
    return y, trace
