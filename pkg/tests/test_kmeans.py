import numpy as np
import pytest

from webembed.kmeans import kmeans


def blobs(rng, centers, n_each, sigma=0.1):
    pts, labels = [], []
    for label, center in enumerate(centers):
        pts.append(rng.normal(scale=sigma, size=(n_each, 2)) + center)
        labels += [label] * n_each
    return np.vstack(pts), np.array(labels)


class TestKmeans:
    def test_k_equals_n(self):
        rng = np.random.default_rng(0)
        pts = rng.normal(size=(8, 2))
        result = kmeans(pts, 8, seed=1)
        assert result.inertia == pytest.approx(0.0, abs=1e-12)
        assert sorted(result.assignments.tolist()) == list(range(8))

    def test_two_blob_recovery(self):
        rng = np.random.default_rng(1)
        pts, labels = blobs(rng, [(10.0, 10.0), (-10.0, -10.0)], 40)
        result = kmeans(pts, 2, seed=5)
        got = result.assignments
        same = np.array_equal(got, labels) or np.array_equal(got, 1 - labels)
        assert same

    def test_inertia_non_increasing(self):
        rng = np.random.default_rng(2)
        pts = rng.normal(size=(200, 2))
        result = kmeans(pts, 7, seed=3)
        trace = result.inertia_trace
        assert all(a >= b - 1e-9 for a, b in zip(trace, trace[1:]))

    def test_every_point_nearest_its_centroid(self):
        rng = np.random.default_rng(3)
        pts = rng.normal(size=(100, 2))
        result = kmeans(pts, 5, seed=9)
        d = np.linalg.norm(pts[:, None, :] - result.centroids[None], axis=2)
        own = d[np.arange(len(pts)), result.assignments]
        assert np.all(own <= d.min(axis=1) + 1e-12)

    def test_k_out_of_range(self):
        pts = np.zeros((3, 2))
        with pytest.raises(ValueError):
            kmeans(pts, 4, seed=0)
        with pytest.raises(ValueError):
            kmeans(pts, 0, seed=0)

    def test_deterministic_for_seed(self):
        rng = np.random.default_rng(4)
        pts = rng.normal(size=(60, 2))
        r1 = kmeans(pts, 4, seed=11)
        r2 = kmeans(pts, 4, seed=11)
        assert np.array_equal(r1.assignments, r2.assignments)
        assert np.array_equal(r1.centroids, r2.centroids)

    def test_tuple_unpacking(self):
        pts = np.array([[0.0, 0.0], [1.0, 1.0]])
        assignments, centroids = kmeans(pts, 1, seed=0)
        assert assignments.tolist() == [0, 0]
        assert centroids.shape == (1, 2)

    def test_duplicate_points_with_max_k(self):
        pts = np.array([[0.0, 0.0], [0.0, 0.0], [1.0, 1.0]])
        result = kmeans(pts, 3, seed=2)
        assert len(result.assignments) == 3
