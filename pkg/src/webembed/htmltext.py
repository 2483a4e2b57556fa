"""Forgiving HTML-to-text extraction with density-based boilerplate removal."""

from __future__ import annotations

from dataclasses import dataclass
from html.parser import HTMLParser

BLOCK_TAGS = frozenset(
    {"p", "div", "li", "h1", "h2", "h3", "h4", "h5", "h6", "td", "br"}
)
_SKIP_TAGS = frozenset({"script", "style"})

LINK_DENSITY_THRESHOLD = 0.33
SHORT_BLOCK_WORDS = 10


@dataclass
class TextBlock:
    text: str
    word_count: int
    link_word_count: int
    is_boilerplate: bool = False


class _BlockParser(HTMLParser):
    def __init__(self) -> None:
        super().__init__(convert_charrefs=True)
        self.blocks: list[TextBlock] = []
        self._pieces: list[tuple[str, bool]] = []
        self._skip_depth = 0
        self._link_depth = 0

    def _flush(self) -> None:
        text = "".join(t for t, _ in self._pieces)
        words = text.split()
        if words:
            link_words = sum(len(t.split()) for t, in_link in self._pieces if in_link)
            self.blocks.append(
                TextBlock(
                    text=" ".join(words),
                    word_count=len(words),
                    link_word_count=min(link_words, len(words)),
                )
            )
        self._pieces = []

    def handle_starttag(self, tag: str, attrs) -> None:
        if tag in _SKIP_TAGS:
            self._skip_depth += 1
        elif tag in BLOCK_TAGS:
            self._flush()
        elif tag == "a":
            self._link_depth += 1

    def handle_endtag(self, tag: str) -> None:
        if tag in _SKIP_TAGS:
            if self._skip_depth:
                self._skip_depth -= 1
        elif tag in BLOCK_TAGS:
            self._flush()
        elif tag == "a":
            if self._link_depth:
                self._link_depth -= 1

    def handle_data(self, data: str) -> None:
        if self._skip_depth:
            return
        if data.strip():
            self._pieces.append((data, self._link_depth > 0))

    def handle_comment(self, data: str) -> None:
        pass


def extract_blocks(html: str) -> list[TextBlock]:
    """Segment decoded HTML into text blocks at block-level tag boundaries.

    Script/style/comment content is discarded; entities are decoded;
    malformed markup never aborts (unknown tags are treated as inline).
    """
    parser = _BlockParser()
    parser.feed(html)
    parser.close()
    parser._flush()
    return parser.blocks


def remove_boilerplate(blocks: list[TextBlock]) -> list[TextBlock]:
    """Keep content blocks per the shallow-feature rule.

    Pass 1 flags blocks with link density above the threshold; pass 2 also
    flags short blocks whose neighbors (list ends included) were flagged in
    pass 1. Relative order is preserved.
    """
    dense = []
    for b in blocks:
        if b.word_count == 0:
            dense.append(True)
        else:
            dense.append(b.link_word_count / b.word_count > LINK_DENSITY_THRESHOLD)
    n = len(blocks)
    kept = []
    for i, b in enumerate(blocks):
        flag = dense[i]
        if not flag and b.word_count < SHORT_BLOCK_WORDS:
            left = dense[i - 1] if i > 0 else True
            right = dense[i + 1] if i + 1 < n else True
            flag = left and right
        b.is_boilerplate = flag
        if not flag:
            kept.append(b)
    return kept
