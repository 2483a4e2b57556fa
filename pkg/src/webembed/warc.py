"""Streaming reader for WARC 1.0/1.1 files, optionally gzipped per record."""

from __future__ import annotations

import gzip
import io
import re
from dataclasses import dataclass, field
from typing import BinaryIO, Iterator
from urllib.parse import urlsplit


@dataclass
class RawDocument:
    url: str
    domain: str
    body: bytes
    declared_charset: str | None = None


@dataclass
class WarcCounters:
    """Per-stream accounting: records seen, documents yielded, skips, errors."""

    records: int = 0
    documents: int = 0
    skipped: int = 0
    errors: int = 0


_VERSION_RE = re.compile(rb"^WARC/1\.[01]$")
_CHARSET_RE = re.compile(rb"""charset\s*=\s*["']?([A-Za-z0-9_\-]+)""", re.IGNORECASE)
_META_CHARSET_RE = re.compile(
    rb"""<meta[^>]+charset\s*=\s*["']?([A-Za-z0-9_\-]+)""", re.IGNORECASE
)


def _registrable_host(url: str) -> str:
    host = urlsplit(url).hostname or ""
    return host.lower()


def _read_headers(fh: BinaryIO) -> dict[str, str] | None:
    """Read `Name: value` lines up to the blank line. None on malformed input."""
    headers: dict[str, str] = {}
    while True:
        line = fh.readline()
        if not line:
            return None
        line = line.rstrip(b"\r\n")
        if not line:
            return headers
        if b":" not in line:
            return None
        name, _, value = line.partition(b":")
        try:
            headers[name.strip().decode("utf-8").lower()] = value.strip().decode("utf-8")
        except UnicodeDecodeError:
            return None


def _split_http_payload(payload: bytes) -> tuple[bytes, bytes]:
    """Split an HTTP message into (head, body); no separator means all head."""
    sep = payload.find(b"\r\n\r\n")
    if sep < 0:
        sep = payload.find(b"\n\n")
        if sep < 0:
            return payload, b""
        return payload[:sep], payload[sep + 2 :]
    return payload[:sep], payload[sep + 4 :]


def _http_content_type(head: bytes) -> bytes:
    for line in head.split(b"\n"):
        if line.lower().startswith(b"content-type:"):
            return line.partition(b":")[2].strip()
    return b""


def _declared_charset(content_type: bytes, body: bytes) -> str | None:
    m = _CHARSET_RE.search(content_type)
    if m:
        return m.group(1).decode("ascii").lower()
    m = _META_CHARSET_RE.search(body[:4096])
    if m:
        return m.group(1).decode("ascii").lower()
    return None


def _open_plain(stream: BinaryIO) -> BinaryIO:
    head = stream.read(2)
    rest = stream.read()
    data = head + rest
    if head == b"\x1f\x8b":
        # Per-record gzip members concatenate into one logical stream.
        return gzip.GzipFile(fileobj=io.BytesIO(data))
    return io.BytesIO(data)


def _resync(fh: BinaryIO) -> bytes | None:
    """Scan forward to the next WARC version line after a malformed record."""
    while True:
        line = fh.readline()
        if not line:
            return None
        if _VERSION_RE.match(line.rstrip(b"\r\n")):
            return line
    return None


def read_warc(stream: BinaryIO, counters: WarcCounters | None = None) -> Iterator[RawDocument]:
    """Yield one RawDocument per HTML "response" record.

    Request, metadata and warcinfo records are skipped; malformed records
    bump the error counter and the reader resyncs on the next version line.
    A truncated final record yields nothing and counts as one error.
    """
    if counters is None:
        counters = WarcCounters()
    fh = _open_plain(stream)
    line = fh.readline()
    while line:
        stripped = line.rstrip(b"\r\n")
        if not stripped:
            line = fh.readline()
            continue
        if not _VERSION_RE.match(stripped):
            counters.errors += 1
            line = _resync(fh)
            continue
        counters.records += 1
        headers = _read_headers(fh)
        if headers is None or "content-length" not in headers:
            counters.errors += 1
            line = _resync(fh)
            continue
        try:
            length = int(headers["content-length"])
        except ValueError:
            counters.errors += 1
            line = _resync(fh)
            continue
        payload = fh.read(length)
        if len(payload) < length:
            counters.records -= 1
            counters.errors += 1
            break
        rectype = headers.get("warc-type", "").lower()
        content_type = headers.get("content-type", "").lower()
        if rectype == "response" and content_type.startswith("application/http"):
            head, body = _split_http_payload(payload)
            http_ct = _http_content_type(head)
            if b"html" in http_ct.lower() or not http_ct:
                url = headers.get("warc-target-uri", "")
                yield RawDocument(
                    url=url,
                    domain=_registrable_host(url),
                    body=body,
                    declared_charset=_declared_charset(http_ct, body),
                )
                counters.documents += 1
            else:
                counters.skipped += 1
        else:
            counters.skipped += 1
        line = fh.readline()
