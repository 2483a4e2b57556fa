import gzip

from webembed.ingest import document_sentences, extract_file, run_extract
from webembed.textnorm import GREEK
from webembed.warc import RawDocument

from conftest import build_warc_record, http_response

PAGE = """
<html><head><title>site</title><script>var x = 1;</script></head>
<body>
<div><a href="/">αρχική</a> <a href="/b">νέα</a></div>
<p>Καλημέρα σας. Αυτό είναι ένα αρκετά μεγάλο κείμενο με πολλές ελληνικές
λέξεις ώστε να κρατηθεί σίγουρα απο τον κανόνα περιεχομένου! Δεύτερη
πρόταση εδώ; Τρίτη πρόταση με 123 αριθμούς και english words.</p>
<div><a href="/f">υποσέλιδο</a></div>
</body></html>
"""


def doc(body: bytes, url="http://example.gr/x", charset=None) -> RawDocument:
    return RawDocument(url=url, domain="example.gr", body=body, declared_charset=charset)


class TestDocumentSentences:
    def test_pipeline_shape(self):
        sentences = document_sentences(doc(PAGE.encode("utf-8")), GREEK)
        assert sentences
        for s in sentences:
            assert s == s.lower()
            for ch in s:
                assert ch == " " or GREEK.allows(ch)

    def test_nav_links_removed(self):
        sentences = document_sentences(doc(PAGE.encode("utf-8")), GREEK)
        joined = " ".join(sentences)
        assert "αρχική" not in joined
        assert "καλημέρα" in joined

    def test_legacy_encoding_decoded(self):
        body = (
            "<p>Καλημέρα σας και πάλι σε όλους τους αγαπητούς αναγνώστες "
            "αυτής της σελίδας εδώ.</p>"
        ).encode("iso-8859-7")
        sentences = document_sentences(doc(body, charset="iso-8859-7"), GREEK)
        assert any("καλημέρα" in s for s in sentences)


def write_warc(path, *records):
    path.write_bytes(b"".join(records))


class TestExtract:
    def test_extract_file_writes_domain_corpus(self, tmp_path):
        warc = tmp_path / "one.warc"
        big = (
            "<p>"
            + "Αυτές είναι αρκετές ελληνικές λέξεις για το φίλτρο περιεχομένου. " * 2
            + "</p>"
        )
        write_warc(
            warc,
            build_warc_record("response", payload=http_response(big.encode("utf-8"))),
            build_warc_record("request", payload=b"GET /"),
        )
        out = tmp_path / "out"
        out.mkdir()
        stats = extract_file(str(warc), str(out), GREEK)
        assert stats.records == 2
        assert stats.documents == 1
        assert stats.errors == 0
        with gzip.open(out / "example.gr.txt.gz", "rt", encoding="utf-8") as fh:
            content = fh.read()
        assert "αυτές είναι αρκετές" in content

    def test_run_extract_parallel_matches_serial(self, tmp_path):
        big = (
            "<p>"
            + "Ακόμη μία πρόταση με πολλά ελληνικά λόγια μέσα της εδώ. " * 2
            + "</p>"
        )
        record = build_warc_record(
            "response", payload=http_response(big.encode("utf-8"))
        )
        for name in ("a.warc", "b.warc", "c.warc"):
            write_warc(tmp_path / name, record)
        out1 = tmp_path / "serial"
        out2 = tmp_path / "parallel"
        s1 = run_extract(str(tmp_path), str(out1), GREEK, jobs=1)
        s2 = run_extract(str(tmp_path), str(out2), GREEK, jobs=3)
        assert len(s1) == len(s2) == 3
        with gzip.open(out1 / "example.gr.txt.gz", "rt", encoding="utf-8") as fh:
            lines1 = sorted(fh.read().splitlines())
        with gzip.open(out2 / "example.gr.txt.gz", "rt", encoding="utf-8") as fh:
            lines2 = sorted(fh.read().splitlines())
        assert lines1 == lines2
