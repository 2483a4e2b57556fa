"""Charset detection for crawled pages."""

from __future__ import annotations

import codecs

# High bytes that decode to Greek letters under the legacy single-byte
# Greek code pages (alpha..omega plus accented forms).
_GREEK_HIGH_BYTES = frozenset(range(0xB6, 0xD2)) | frozenset(range(0xD3, 0xFF))


def _decodes(body: bytes, enc: str) -> bool:
    try:
        body.decode(enc)
        return True
    except (UnicodeDecodeError, LookupError):
        return False


def _known_label(label: str) -> str | None:
    try:
        codecs.lookup(label)
    except (LookupError, TypeError):
        return None
    return label.strip().lower()


def detect_encoding(body: bytes, declared: str | None = None) -> str:
    """Pick an encoding label for a raw page body.

    Precedence: UTF-8 BOM, then the declared charset if the body decodes
    cleanly under it, then valid UTF-8, then a legacy single-byte Greek
    code page when the high-byte distribution looks Greek. Always returns
    a label; undecodable bytes are replaced downstream.
    """
    if body.startswith(codecs.BOM_UTF8):
        return "utf-8"
    if declared:
        label = _known_label(declared)
        if label and _decodes(body, label):
            return label
    if _decodes(body, "utf-8"):
        return "utf-8"
    high = [b for b in body if b >= 0x80]
    if high:
        greek = sum(1 for b in high if b in _GREEK_HIGH_BYTES)
        if greek / len(high) >= 0.7:
            for enc in ("iso-8859-7", "windows-1253"):
                if _decodes(body, enc):
                    return enc
    return "utf-8"
