import gzip
import io

from webembed.warc import WarcCounters, read_warc

from conftest import build_warc_record, http_response


def read_all(data: bytes):
    counters = WarcCounters()
    docs = list(read_warc(io.BytesIO(data), counters))
    return docs, counters


def test_empty_file():
    docs, counters = read_all(b"")
    assert docs == []
    assert counters.errors == 0
    assert counters.records == 0


def test_response_and_request_records():
    html = "<p>αβ γδ</p>".encode("utf-8")
    data = build_warc_record("response", payload=http_response(html))
    data += build_warc_record("request", payload=b"GET / HTTP/1.1\r\n\r\n")
    docs, counters = read_all(data)
    assert len(docs) == 1
    assert docs[0].body == html
    assert docs[0].url == "http://example.gr/page"
    assert docs[0].domain == "example.gr"
    assert counters.records == 2
    assert counters.documents == 1
    assert counters.skipped == 1
    assert counters.errors == 0


def test_truncated_final_record():
    payload = http_response(b"<p>hello</p>")
    record = build_warc_record("response", payload=payload)
    docs, counters = read_all(record[: len(record) - len(payload) // 2 - 4])
    assert docs == []
    assert counters.errors == 1
    assert counters.documents == 0


def test_content_length_overrun():
    record = build_warc_record(
        "response", payload=http_response(b"<p>x</p>"), length_override=10_000
    )
    docs, counters = read_all(record)
    assert docs == []
    assert counters.errors == 1


def test_malformed_header_skips_and_resyncs():
    bad = b"WARC/1.0\r\nthis line has no colon\r\n\r\n"
    good = build_warc_record("response", payload=http_response(b"<p>ok</p>"))
    docs, counters = read_all(bad + good)
    assert len(docs) == 1
    assert counters.errors == 1


def test_non_html_response_skipped():
    record = build_warc_record(
        "response", payload=http_response(b"{}", content_type="application/json")
    )
    docs, counters = read_all(record)
    assert docs == []
    assert counters.skipped == 1


def test_per_record_gzip():
    html = "<p>καλημέρα</p>".encode("utf-8")
    raw = build_warc_record("response", payload=http_response(html))
    member1 = gzip.compress(raw)
    member2 = gzip.compress(build_warc_record("metadata", payload=b"meta"))
    docs, counters = read_all(member1 + member2)
    assert len(docs) == 1
    assert docs[0].body == html
    assert counters.records == 2


def test_declared_charset_from_http_header():
    html = "καλό".encode("iso-8859-7")
    record = build_warc_record(
        "response",
        payload=http_response(html, content_type="text/html; charset=ISO-8859-7"),
    )
    docs, _ = read_all(record)
    assert docs[0].declared_charset == "iso-8859-7"


def test_declared_charset_from_meta_tag():
    html = b'<meta charset="utf-8"><p>x</p>'
    record = build_warc_record("response", payload=http_response(html))
    docs, _ = read_all(record)
    assert docs[0].declared_charset == "utf-8"


def test_warc_11_accepted():
    record = build_warc_record(
        "response", payload=http_response(b"<p>v11</p>"), version="WARC/1.1"
    )
    docs, counters = read_all(record)
    assert len(docs) == 1
    assert counters.errors == 0


def test_accounting_invariant():
    data = build_warc_record("warcinfo", payload=b"info")
    data += build_warc_record("response", payload=http_response(b"<p>a</p>"))
    data += b"WARC/1.0\r\nbroken\r\n\r\n"
    data += build_warc_record("request", payload=b"GET /")
    docs, c = read_all(data)
    assert c.documents + c.skipped + c.errors == 4
    assert c.documents == len(docs) == 1
