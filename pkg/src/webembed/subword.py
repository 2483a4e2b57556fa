"""Character n-gram extraction and bucket hashing for subword rows."""

from __future__ import annotations

BOW = "<"
EOW = ">"

FNV_OFFSET_BASIS = 2166136261
FNV_PRIME = 16777619
_MASK32 = 0xFFFFFFFF


def char_ngrams(word: str, nmin: int, nmax: int) -> list[str]:
    """All n-grams of the boundary-padded word, shortest first, left to right.

    The full padded token is excluded (it is represented by the word row).
    """
    padded = BOW + word + EOW
    grams: list[str] = []
    for n in range(nmin, nmax + 1):
        if n > len(padded):
            break
        for i in range(len(padded) - n + 1):
            gram = padded[i : i + n]
            if gram != padded:
                grams.append(gram)
    return grams


def fnv1a_32(data: bytes) -> int:
    h = FNV_OFFSET_BASIS
    for byte in data:
        h = ((h ^ byte) * FNV_PRIME) & _MASK32
    return h


def hash_subword(ngram: str, buckets: int) -> int:
    """FNV-1a 32-bit over the UTF-8 bytes, modulo the bucket count."""
    if buckets < 1:
        raise ValueError("buckets must be >= 1")
    return fnv1a_32(ngram.encode("utf-8")) % buckets
