"""Automated Readability Index oracle tests."""

from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from socorr.textfeat import UndefinedReadability, ari


def expected_ari(chars: int, words: int, sentences: int) -> float:
    return 4.71 * chars / words + 0.5 * words / sentences - 21.43


def test_worked_example():
    # 9 alphanumeric chars, 3 words, 1 sentence
    assert ari("The cat sat.") == pytest.approx(-5.80, abs=1e-9)


def test_multi_sentence():
    text = "One two three. Four five six."  # 22 letters, 6 words, 2 sentences
    assert ari(text) == pytest.approx(expected_ari(22, 6, 2), abs=1e-12)


def test_characters_are_alphanumeric_only():
    # punctuation and spaces carry no characters
    assert ari("ab, cd!") == pytest.approx(expected_ari(4, 2, 1), abs=1e-12)


def test_no_terminator_is_one_sentence():
    assert ari("ab cd") == pytest.approx(expected_ari(4, 2, 1), abs=1e-12)


def test_digits_count_as_characters_and_words():
    assert ari("1234 x.") == pytest.approx(expected_ari(5, 2, 1), abs=1e-12)


@pytest.mark.parametrize("text", ["", "   ", "...", "!!! ???"])
def test_undefined_cases(text):
    with pytest.raises(UndefinedReadability):
        ari(text)


@given(st.data())
def test_constructed_text_matches_formula(data):
    rng = random.Random(data.draw(st.integers(0, 10_000)))
    n_sentences = data.draw(st.integers(1, 4))
    sentences = []
    chars = 0
    words = 0
    for _ in range(n_sentences):
        lengths = [rng.randint(1, 9) for _ in range(rng.randint(1, 8))]
        sentences.append(" ".join("x" * n for n in lengths) + ".")
        chars += sum(lengths)
        words += len(lengths)
    text = " ".join(sentences)
    assert ari(text) == pytest.approx(expected_ari(chars, words, n_sentences), abs=1e-9)
