"""Script filtering, sentence segmentation and per-domain corpus files."""

from __future__ import annotations

import gzip
import os
import re
from dataclasses import dataclass, field
from typing import Iterable

SENTENCE_TERMINATORS = {".", "!", ";"}

# Ano teleia marks a pause, not a sentence end; it is dropped even though it
# sits inside the Greek and Coptic block.
_ANO_TELEIA = 0x0387

GREEK_RANGES = ((0x0370, 0x03FF), (0x1F00, 0x1FFF))


@dataclass(frozen=True)
class ScriptConfig:
    """Allowed character ranges for the target script."""

    name: str = "greek"
    ranges: tuple[tuple[int, int], ...] = GREEK_RANGES
    excluded: frozenset[int] = field(default_factory=lambda: frozenset({_ANO_TELEIA}))

    def allows(self, ch: str) -> bool:
        cp = ord(ch)
        if cp in self.excluded:
            return False
        return any(lo <= cp <= hi for lo, hi in self.ranges)


GREEK = ScriptConfig()

_SCRIPTS = {"greek": GREEK}


def script_by_name(name: str) -> ScriptConfig:
    try:
        return _SCRIPTS[name]
    except KeyError:
        raise ValueError(f"unknown script {name!r}; known: {sorted(_SCRIPTS)}") from None


_MULTISPACE = re.compile(r" {2,}")


def filter_script(text: str, script: ScriptConfig = GREEK) -> str:
    """Replace every character outside the allow-set by a space and collapse runs.

    The allow-set is the script ranges plus space plus the sentence
    terminators (including newline). Idempotent.
    """
    out = []
    for ch in text:
        if ch == " " or ch == "\n" or ch in SENTENCE_TERMINATORS or script.allows(ch):
            out.append(ch)
        else:
            out.append(" ")
    collapsed = _MULTISPACE.sub(" ", "".join(out))
    return collapsed.strip(" ")


_SPLIT = re.compile(r"[.!;\n]")


def segment_sentences(text: str) -> list[str]:
    """Split script-filtered text into sentences on terminators and newlines.

    Terminators are removed; each sentence is trimmed; empty pieces dropped.
    """
    sentences = []
    for piece in _SPLIT.split(text):
        piece = piece.strip(" ")
        if piece:
            sentences.append(piece)
    return sentences


_UNSAFE = re.compile(r"[^A-Za-z0-9.\-]")


def safe_domain_filename(domain: str) -> str:
    return _UNSAFE.sub("_", domain) + ".txt.gz"


def write_domain_corpus(domain: str, sentences: Iterable[str], out_dir: str) -> str:
    """Append sentences, one per line, to the domain's gzip-compressed file."""
    if not domain:
        raise ValueError("domain must be non-empty")
    path = os.path.join(out_dir, safe_domain_filename(domain))
    try:
        with gzip.open(path, "ab") as fh:
            for sentence in sentences:
                fh.write(sentence.encode("utf-8"))
                fh.write(b"\n")
    except OSError as exc:
        raise OSError(f"cannot write domain corpus to {path}: {exc}") from exc
    return path
