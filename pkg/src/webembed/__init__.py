"""Toolchain from web-archive crawls to word embeddings and an explorer service."""

__version__ = "0.1.0"
