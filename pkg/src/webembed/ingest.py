"""End-to-end extraction: WARC files to per-domain sentence files."""

from __future__ import annotations

import glob
import os
import threading
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .encoding import detect_encoding
from .htmltext import extract_blocks, remove_boilerplate
from .textnorm import (
    ScriptConfig,
    filter_script,
    segment_sentences,
    write_domain_corpus,
)
from .warc import RawDocument, WarcCounters, read_warc


@dataclass
class FileStats:
    path: str
    records: int
    documents: int
    errors: int


def document_sentences(doc: RawDocument, script: ScriptConfig) -> list[str]:
    """Clean one raw document into lowercased, script-only sentences."""
    encoding = detect_encoding(doc.body, doc.declared_charset)
    html = doc.body.decode(encoding, errors="replace")
    blocks = remove_boilerplate(extract_blocks(html))
    text = "\n".join(b.text for b in blocks)
    return [s.lower() for s in segment_sentences(filter_script(text, script))]


def extract_file(
    path: str,
    out_dir: str,
    script: ScriptConfig,
    domain_locks: dict[str, threading.Lock] | None = None,
) -> FileStats:
    counters = WarcCounters()
    with open(path, "rb") as fh:
        for doc in read_warc(fh, counters):
            sentences = document_sentences(doc, script)
            if not sentences:
                continue
            domain = doc.domain or "unknown"
            if domain_locks is not None:
                lock = domain_locks[domain]
                with lock:
                    write_domain_corpus(domain, sentences, out_dir)
            else:
                write_domain_corpus(domain, sentences, out_dir)
    return FileStats(
        path=path,
        records=counters.records,
        documents=counters.documents,
        errors=counters.errors,
    )


def run_extract(
    input_dir: str, out_dir: str, script: ScriptConfig, jobs: int = 1
) -> list[FileStats]:
    """Process every *.warc / *.warc.gz under input_dir with a worker pool.

    Per-domain output files are serialized by a lock per domain.
    """
    paths = sorted(
        glob.glob(os.path.join(input_dir, "*.warc"))
        + glob.glob(os.path.join(input_dir, "*.warc.gz"))
    )
    os.makedirs(out_dir, exist_ok=True)
    locks: dict[str, threading.Lock] = defaultdict(threading.Lock)
    if jobs <= 1:
        return [extract_file(p, out_dir, script, locks) for p in paths]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(extract_file, p, out_dir, script, locks) for p in paths]
        return [f.result() for f in futures]
