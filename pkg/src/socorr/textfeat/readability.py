"""Automated Readability Index over the shared tokenizer."""

from __future__ import annotations

from .tokens import sentence_split, word_tokens

CHARS_PER_WORD_WEIGHT = 4.71
WORDS_PER_SENTENCE_WEIGHT = 0.5
ARI_INTERCEPT = -21.43


class UndefinedReadability(ValueError):
    """Raised for text with no words or no sentences."""


def ari(text: str) -> float:
    """Automated Readability Index of a text.

    ARI = 4.71 * (characters / words) + 0.5 * (words / sentences) - 21.43,
    where characters are the Unicode alphanumeric code points of the raw
    text and words are tokens containing at least one such character.

    Raises UndefinedReadability when the text has no words or no sentences.
    """
    words = word_tokens(text)
    sentences = sentence_split(text)
    if not words or not sentences:
        raise UndefinedReadability("readability needs at least one word and one sentence")
    chars = sum(1 for ch in text if ch.isalnum())
    return (
        CHARS_PER_WORD_WEIGHT * chars / len(words)
        + WORDS_PER_SENTENCE_WEIGHT * len(words) / len(sentences)
        + ARI_INTERCEPT
    )
