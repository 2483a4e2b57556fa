import numpy as np
import pytest
from fastapi.testclient import TestClient

from webembed.query import analogy, compare_groups, cosine, most_similar
from webembed.service import ServiceConfig, create_app
from webembed.tsne import ProjectionConfig
from webembed.vizmap import build_map

from conftest import make_store, random_store


@pytest.fixture
def store():
    return make_store(
        ["a", "b", "c"],
        [[1.0, 0.0], [0.9, 0.1], [0.0, 1.0]],
    )


@pytest.fixture
def client(store):
    config = ServiceConfig(vectors_path="", sample_size=3, k_clusters=2, seed=1)
    return TestClient(create_app(store, config))


class TestInfo:
    def test_metadata(self, client):
        body = client.get("/api/info").json()
        assert body["vocab_size"] == 3
        assert body["dim"] == 2

    def test_stable_across_calls(self, client):
        assert client.get("/api/info").json() == client.get("/api/info").json()


class TestSimilarity:
    def test_self_similarity(self, client):
        r = client.get("/api/similarity", params={"w1": "a", "w2": "a"})
        assert r.status_code == 200
        assert r.json()["score"] == 1.0

    def test_matches_library(self, client, store):
        r = client.get("/api/similarity", params={"w1": "a", "w2": "b"})
        expected = round(cosine(store.vector("a"), store.vector("b")), 6)
        assert r.json() == {"w1": "a", "w2": "b", "score": expected}

    def test_unknown_word_404(self, client):
        r = client.get("/api/similarity", params={"w1": "a", "w2": "zzz"})
        assert r.status_code == 404
        assert r.json()["word"] == "zzz"
        assert "error" in r.json()

    def test_missing_param_400(self, client):
        assert client.get("/api/similarity", params={"w1": "a"}).status_code == 400


class TestMostSimilar:
    def test_matches_library(self, client, store):
        r = client.get("/api/most_similar", params={"w": "a", "k": 1})
        expected = most_similar(store, "a", k=1)
        assert r.json()["neighbors"] == [
            {"word": e.word, "score": e.score} for e in expected
        ]

    def test_k_zero_400(self, client):
        assert client.get("/api/most_similar", params={"w": "a", "k": 0}).status_code == 400

    def test_k_above_vocab_clamps(self, client):
        r = client.get("/api/most_similar", params={"w": "a", "k": 50})
        assert r.status_code == 200
        assert len(r.json()["neighbors"]) == 2

    def test_unknown_word_404(self, client):
        assert client.get("/api/most_similar", params={"w": "zz"}).status_code == 404


class TestAnalogy:
    def test_forced_winner(self):
        a = [1.0, 0.0, 0.0]
        b = [0.0, 1.0, 0.0]
        c = [0.0, 0.0, 1.0]
        d = (np.array(b) - np.array(a) + np.array(c)).tolist()
        store = make_store(["a", "b", "c", "d"], [a, b, c, d])
        client = TestClient(create_app(store))
        r = client.get("/api/analogy", params={"a": "a", "b": "b", "c": "c", "k": 1})
        assert r.json()["results"][0]["word"] == "d"

    def test_matches_library(self, client, store):
        r = client.get("/api/analogy", params={"a": "a", "b": "b", "c": "c", "k": 2})
        expected = analogy(store, "a", "b", "c", k=2)
        assert r.json()["results"] == [
            {"word": e.word, "score": e.score} for e in expected
        ]

    def test_missing_c_400(self, client):
        assert client.get("/api/analogy", params={"a": "a", "b": "b"}).status_code == 400

    def test_unknown_word_names_first(self, client):
        r = client.get("/api/analogy", params={"a": "zz", "b": "qq", "c": "c"})
        assert r.status_code == 404
        assert r.json()["word"] == "zz"


class TestCompare:
    def test_matches_library(self, client, store):
        r = client.post(
            "/api/compare", json={"group1": ["a", "b"], "group2": ["c"]}
        )
        assert r.json()["score"] == pytest.approx(
            compare_groups(store, ["a", "b"], ["c"])
        )

    def test_identical_groups(self, client):
        r = client.post("/api/compare", json={"group1": ["a"], "group2": ["a"]})
        assert r.json()["score"] == pytest.approx(1.0)

    def test_malformed_body_400(self, client):
        assert client.post("/api/compare", json={"group1": []}).status_code == 400
        assert (
            client.post(
                "/api/compare", content=b"nope", headers={"content-type": "application/json"}
            ).status_code
            == 400
        )

    def test_unknown_word_404(self, client):
        r = client.post("/api/compare", json={"group1": ["zz"], "group2": ["a"]})
        assert r.status_code == 404


class TestMap:
    @pytest.fixture
    def big(self):
        rng = np.random.default_rng(0)
        store = random_store(rng, 20, 6)
        config = ServiceConfig(vectors_path="", sample_size=10, k_clusters=2, seed=3)
        return store, TestClient(create_app(store, config))

    def test_shape(self, big):
        _, client = big
        body = client.get("/api/map", params={"n": 10, "k": 2}).json()
        assert len(body["points"]) == 10
        assert all(p["cluster"] < 2 for p in body["points"])
        assert isinstance(body["kl"], float)

    def test_cache_byte_identical(self, big):
        _, client = big
        r1 = client.get("/api/map", params={"n": 10, "k": 2})
        r2 = client.get("/api/map", params={"n": 10, "k": 2})
        assert r1.content == r2.content

    def test_matches_direct_build(self, big):
        store, client = big
        body = client.get("/api/map", params={"n": 10, "k": 2}).json()
        proj = ProjectionConfig(
            sample_size=10, perplexity=min(30.0, max(1.0, 10 / 3.0 - 1.0)), seed=3
        )
        direct = build_map(store, 2, proj)
        assert [p["word"] for p in body["points"]] == [p.word for p in direct.points]
        assert body["points"][0]["x"] == pytest.approx(direct.points[0].x)

    def test_out_of_range_400(self, big):
        _, client = big
        assert client.get("/api/map", params={"n": 5000}).status_code == 400
        assert client.get("/api/map", params={"n": 10, "k": 0}).status_code == 400


def test_error_bodies_shape(client):
    r = client.get("/api/most_similar", params={"w": "zz"})
    body = r.json()
    assert set(body) == {"error", "word"}
    r = client.get("/api/similarity")
    assert set(r.json()) == {"error"}


def test_read_only_concurrent_consistency(client):
    serial = [
        client.get("/api/most_similar", params={"w": "a", "k": 2}).json()
        for _ in range(5
        )
    ]
    assert all(s == serial[0] for s in serial)
