"""Whitespace tokenizer and sentence splitter shared by all text features."""

from __future__ import annotations

import re

_SENTENCE_END = re.compile(r"[.!?]+")
_URL_PREFIXES = ("http://", "https://", "www.")


def _split_edges(chunk: str) -> tuple[list[str], str, list[str]]:
    """Peel non-alphanumeric characters off both ends of a chunk."""
    start, end = 0, len(chunk)
    while start < end and not chunk[start].isalnum():
        start += 1
    while end > start and not chunk[end - 1].isalnum():
        end -= 1
    lead = list(chunk[:start])
    trail = list(chunk[end:])
    return lead, chunk[start:end], trail


def tokenize(text: str) -> list[str]:
    """Case-preserving whitespace tokenization.

    Leading and trailing punctuation becomes separate one-character tokens;
    interior punctuation (contractions, hyphens) stays attached. URLs keep
    their full form, and @mentions keep the leading "@" (trailing punctuation
    is still peeled off them).
    """
    tokens: list[str] = []
    for chunk in text.split():
        if chunk.lower().startswith(_URL_PREFIXES):
            tokens.append(chunk)
            continue
        if len(chunk) > 1 and chunk[0] == "@" and chunk[1].isalnum():
            body = chunk[1:]
            _, core, trail = _split_edges(body)
            # mention body keeps any interior punctuation it had
            cut = len(body) - len(trail)
            tokens.append("@" + body[:cut] if cut else "@")
            tokens.extend(trail)
            continue
        lead, core, trail = _split_edges(chunk)
        tokens.extend(lead)
        if core:
            tokens.append(core)
        tokens.extend(trail)
    return tokens


def is_word_token(token: str) -> bool:
    """True when the token carries at least one alphanumeric character."""
    return any(ch.isalnum() for ch in token)


def word_tokens(text: str) -> list[str]:
    return [t for t in tokenize(text) if is_word_token(t)]


def sentence_split(text: str) -> list[str]:
    """Split on runs of '.', '!' or '?'; blank segments are dropped.

    Text without any terminator is a single sentence; empty text has none.
    """
    return [seg.strip() for seg in _SENTENCE_END.split(text) if seg.strip()]
