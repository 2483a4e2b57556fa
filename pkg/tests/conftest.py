import numpy as np
import pytest

from webembed.vectors import EmbeddingStore


def build_warc_record(
    rectype: str,
    url: str = "http://example.gr/page",
    payload: bytes = b"",
    content_type: str = "application/http; msgtype=response",
    version: str = "WARC/1.0",
    length_override: int | None = None,
) -> bytes:
    """Hand-construct one WARC record following the record grammar."""
    length = len(payload) if length_override is None else length_override
    head = (
        f"{version}\r\n"
        f"WARC-Type: {rectype}\r\n"
        f"WARC-Target-URI: {url}\r\n"
        f"WARC-Record-ID: <urn:uuid:0000>\r\n"
        f"Content-Type: {content_type}\r\n"
        f"Content-Length: {length}\r\n"
        "\r\n"
    ).encode("utf-8")
    return head + payload + b"\r\n\r\n"


def http_response(body: bytes, content_type: str = "text/html") -> bytes:
    return (
        b"HTTP/1.1 200 OK\r\n"
        b"Content-Type: " + content_type.encode() + b"\r\n"
        b"\r\n" + body
    )


def make_store(words: list[str], rows: list[list[float]]) -> EmbeddingStore:
    return EmbeddingStore(words=words, matrix=np.array(rows, dtype=np.float32))


def random_store(rng: np.random.Generator, size: int, dim: int) -> EmbeddingStore:
    words = [f"w{i:04d}" for i in range(size)]
    matrix = rng.normal(size=(size, dim)).astype(np.float32)
    return EmbeddingStore(words=words, matrix=matrix)


@pytest.fixture
def toy_store() -> EmbeddingStore:
    return make_store(
        ["a", "b", "c"],
        [[1.0, 0.0], [0.9, 0.1], [0.0, 1.0]],
    )
